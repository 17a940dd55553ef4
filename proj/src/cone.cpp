#include "graphon/cone.hpp"

#include <cstdint>
#include <stdexcept>

#include "graphon/simplex.hpp"

namespace graphon {

IncidenceMatrix incidence_matrix(const SkeletonGraph& s) {
  IncidenceMatrix z;
  z.q = s.q;
  z.edges = s.edges;
  z.columns.reserve(s.edges.size());
  const Rational half(1, 2);
  for (auto [a, b] : s.edges) {
    std::vector<Rational> col(s.q, Rational(0));
    if (a == b)
      col[a] = 1;
    else
      col[a] = col[b] = half;
    z.columns.push_back(std::move(col));
  }
  return z;
}

int cone_dimension(const IncidenceMatrix& z) {
  // Doubled columns are integer vectors; fraction-free elimination keeps the
  // arithmetic in int64 (entries stay determinant-sized, tiny for q <= 10).
  const int q = z.q;
  const int k = z.k();
  std::vector<std::vector<std::int64_t>> m(k, std::vector<std::int64_t>(q, 0));
  for (int j = 0; j < k; ++j) {
    auto [a, b] = z.edges[j];
    if (a == b)
      m[j][a] = 2;
    else
      m[j][a] = m[j][b] = 1;
  }
  int rank = 0;
  std::int64_t prev = 1;
  for (int col = 0; col < q && rank < k; ++col) {
    int pivot = -1;
    for (int r = rank; r < k; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < k; ++r) {
      for (int c = col + 1; c < q; ++c)
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Outside: return "Outside";
    case Verdict::Boundary: return "Boundary";
    case Verdict::Interior: return "Interior";
  }
  return "?";
}

std::vector<BigInt> primitive_integer_vector(const std::vector<Rational>& v) {
  BigInt common_den = 1;
  for (const auto& r : v) common_den = lcm(common_den, denominator(r));
  std::vector<BigInt> out;
  out.reserve(v.size());
  BigInt g = 0;
  for (const auto& r : v) {
    BigInt scaled = numerator(r) * (common_den / denominator(r));
    g = gcd(g, scaled);
    out.push_back(std::move(scaled));
  }
  if (g > 1)
    for (auto& e : out) e /= g;
  return out;
}

ConeMembership cone_membership(const IncidenceMatrix& z, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != z.q) throw std::invalid_argument("cone membership: dimension mismatch");
  const int q = z.q;
  const int k = z.k();

  ConeMembership result;
  if (k == 0) {
    // Empty generator set: the cone is {0}.
    for (int i = 0; i < q; ++i)
      if (x[i] != 0) {
        result.verdict = Verdict::Outside;
        std::vector<Rational> v(q, Rational(0));
        v[i] = x[i] > 0 ? -1 : 1;
        result.separating_normal = primitive_integer_vector(v);
        return result;
      }
    result.verdict = Verdict::Boundary;
    return result;
  }

  // max t  s.t.  Z d + (Z 1) t = x, d >= 0, written with t = tp - tm. The
  // objective is bounded because every column sums to 1.
  std::vector<std::vector<Rational>> a(q, std::vector<Rational>(k + 2, Rational(0)));
  for (int i = 0; i < q; ++i) {
    Rational srow = 0;
    for (int j = 0; j < k; ++j) {
      a[i][j] = z.columns[j][i];
      srow += z.columns[j][i];
    }
    a[i][k] = srow;
    a[i][k + 1] = -srow;
  }
  std::vector<Rational> c(k + 2, Rational(0));
  c[k] = -1;
  c[k + 1] = 1;
  std::vector<Rational> b(x.begin(), x.end());

  LpResult lp = solve_lp(std::move(a), std::move(b), std::move(c));
  if (lp.status == LpStatus::Unbounded) throw std::logic_error("cone membership LP cannot be unbounded");

  const auto separating_from = [&](const std::vector<Rational>& dual) {
    std::vector<Rational> v(dual.size());
    for (std::size_t i = 0; i < dual.size(); ++i) v[i] = -dual[i];
    return primitive_integer_vector(v);
  };

  if (lp.status == LpStatus::Infeasible) {
    // x is not even in the column span; the Farkas row is a separator.
    result.verdict = Verdict::Outside;
    result.separating_normal = separating_from(lp.farkas);
    return result;
  }

  const Rational t_star = -lp.objective;
  if (t_star < 0) {
    result.verdict = Verdict::Outside;
    result.separating_normal = separating_from(lp.dual);
    return result;
  }
  result.verdict = t_star > 0 ? Verdict::Interior : Verdict::Boundary;
  result.coefficients.reserve(k);
  for (int j = 0; j < k; ++j) result.coefficients.push_back(lp.x[j] + t_star);
  return result;
}

}  // namespace graphon
