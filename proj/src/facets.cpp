#include "graphon/facets.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace graphon {

namespace {

// Kernel vector of the span of the given columns, or empty if their rank is
// not q-1. Rows of the eliminated matrix are the chosen columns transposed.
std::vector<Rational> hyperplane_normal(const IncidenceMatrix& z, const std::vector<int>& subset) {
  const int q = z.q;
  const int rows_n = static_cast<int>(subset.size());
  std::vector<std::vector<Rational>> m(rows_n, std::vector<Rational>(q));
  for (int r = 0; r < rows_n; ++r)
    for (int c = 0; c < q; ++c) m[r][c] = z.columns[subset[r]][c];

  std::vector<int> pivot_col(rows_n, -1);
  std::vector<bool> is_pivot(q, false);
  int rank = 0;
  for (int col = 0; col < q && rank < rows_n; ++col) {
    int pr = -1;
    for (int r = rank; r < rows_n; ++r)
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[rank], m[pr]);
    const Rational inv = m[rank][col];
    for (int c = col; c < q; ++c) m[rank][c] /= inv;
    for (int r = 0; r < rows_n; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (int c = col; c < q; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_col[rank] = col;
    is_pivot[col] = true;
    ++rank;
  }
  if (rank != q - 1) return {};

  // One free coordinate; set it to 1 and read the pivots off the echelon form.
  int free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rational> v(q, Rational(0));
  v[free_col] = 1;
  for (int r = 0; r < rank; ++r) v[pivot_col[r]] = -m[r][free_col];
  return v;
}

Rational dot(const std::vector<BigInt>& v, const std::vector<Rational>& x) {
  Rational acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) acc += Rational(v[i]) * x[i];
  return acc;
}

}  // namespace

FacetSet facet_hyperplanes(const IncidenceMatrix& z) {
  if (z.q < 2) throw std::invalid_argument("facet enumeration unsupported for q = 1");
  const int q = z.q;
  const int k = z.k();

  FacetSet out;
  out.q = q;
  if (k < q - 1) return out;

  std::set<std::vector<BigInt>> seen;
  std::vector<int> subset(q - 1);
  // Iterate (q-1)-subsets in lexicographic order.
  for (int i = 0; i < q - 1; ++i) subset[i] = i;
  for (;;) {
    std::vector<Rational> v = hyperplane_normal(z, subset);
    if (!v.empty()) {
      std::vector<BigInt> n = primitive_integer_vector(v);
      bool pos_ok = true, neg_ok = true;
      for (const auto& col : z.columns) {
        const Rational d = dot(n, col);
        if (d < 0) pos_ok = false;
        if (d > 0) neg_ok = false;
        if (!pos_ok && !neg_ok) break;
      }
      if (pos_ok && seen.insert(n).second) out.normals.push_back(n);
      if (neg_ok) {
        for (auto& e : n) e = -e;
        if (seen.insert(n).second) out.normals.push_back(n);
      }
    }
    // Next subset.
    int i = q - 2;
    while (i >= 0 && subset[i] == k - (q - 1) + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < q - 1; ++j) subset[j] = subset[j - 1] + 1;
  }
  std::sort(out.normals.begin(), out.normals.end());
  return out;
}

FacetSet active_facets(const FacetSet& f, const IncidenceMatrix& z,
                       const std::vector<Rational>& xstar) {
  if (cone_membership(z, xstar).verdict == Verdict::Outside)
    throw std::invalid_argument("active facets undefined: x* outside edge cone");
  FacetSet out;
  out.q = f.q;
  for (const auto& n : f.normals)
    if (dot(n, xstar) == 0) out.normals.push_back(n);
  out.active.resize(out.normals.size());
  for (std::size_t i = 0; i < out.active.size(); ++i) out.active[i] = i;
  return out;
}

bool in_omega_star(const FacetSet& active_set, std::span<const double> omega) {
  double sum = 0;
  for (double w : omega) sum += w;
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("omega is not on the simplex hyperplane {1'w = 1}");
  for (const auto& normal : active_set.normals) {
    double d = 0;
    for (std::size_t i = 0; i < normal.size(); ++i)
      d += normal[i].convert_to<double>() * omega[i];
    if (d < 0) return false;
  }
  return true;
}

std::vector<double> transform_tn(std::span<const double> x, std::span<const double> xstar,
                                 long long n, TnDirection direction) {
  if (x.size() != xstar.size()) throw std::invalid_argument("transform_tn: dimension mismatch");
  if (n < 1) throw std::invalid_argument("transform_tn: n must be positive");
  const double root = std::sqrt(static_cast<double>(n));
  const double scale = direction == TnDirection::Forward ? root : 1.0 / root;
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = scale * (x[i] - xstar[i]) + xstar[i];
  return out;
}

}  // namespace graphon
