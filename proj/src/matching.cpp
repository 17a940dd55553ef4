#include "graphon/matching.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace graphon {

namespace {

// Contracted-blossom BFS. Blossoms are tracked through base[]: every node
// knows the base vertex of the blossom currently containing it, and
// contracted blossoms are re-scanned as even nodes.
class Blossom {
 public:
  Blossom(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), adj_(n) {
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || a >= n || b >= n) throw std::invalid_argument("matching: endpoint out of range");
      if (a == b) throw std::invalid_argument("matching: self-loop");
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
    mate_.assign(n, -1);
    parent_.assign(n, -1);
    base_.assign(n, 0);
    in_queue_.assign(n, false);
    in_blossom_.assign(n, false);
  }

  Matching run() {
    // Greedy seed matching; the search then only needs the leftover vertices.
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (int to : adj_[v])
        if (mate_[to] == -1) {
          mate_[v] = to;
          mate_[to] = v;
          break;
        }
    }
    for (int v = 0; v < n_; ++v)
      if (mate_[v] == -1) {
        const int finish = find_augmenting_path(v);
        if (finish != -1) augment(finish);
      }

    Matching m;
    m.mate = mate_;
    for (int v = 0; v < n_; ++v)
      if (mate_[v] > v) ++m.size;
    return m;
  }

 private:
  int lca(int a, int b) const {
    std::vector<bool> on_path(n_, false);
    for (;;) {
      a = base_[a];
      on_path[a] = true;
      if (mate_[a] == -1) break;  // reached the tree root
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (on_path[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  // Walks the odd side of a freshly found blossom up to its base, marking
  // members and fixing parent pointers across the bridge (v, child).
  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_augmenting_path(int root) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::fill(in_queue_.begin(), in_queue_.end(), false);
    std::iota(base_.begin(), base_.end(), 0);
    queue_.clear();
    queue_.push_back(root);
    in_queue_[root] = true;

    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const int v = queue_[head];
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          // Even-even edge: contract the blossom at the lowest common base.
          const int cur_base = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n_; ++i)
            if (in_blossom_[base_[i]]) {
              base_[i] = cur_base;
              if (!in_queue_[i]) {
                in_queue_[i] = true;
                queue_.push_back(i);
              }
            }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;  // augmenting path ends here
          if (!in_queue_[mate_[to]]) {
            in_queue_[mate_[to]] = true;
            queue_.push_back(mate_[to]);
          }
        }
      }
    }
    return -1;
  }

  void augment(int v) {
    while (v != -1) {
      const int pv = parent_[v];
      const int next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_, parent_, base_;
  std::vector<bool> in_queue_, in_blossom_;
  std::vector<int> queue_;
};

}  // namespace

Matching max_matching(int n, const std::vector<std::pair<int, int>>& edges) {
  return Blossom(n, edges).run();
}

}  // namespace graphon
