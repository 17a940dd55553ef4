#include "graphon/catalog.hpp"

#include <stdexcept>

namespace graphon {

namespace {

std::vector<Rational> sigma_from_widths(const std::vector<Rational>& widths) {
  std::vector<Rational> sigma{0};
  for (const auto& w : widths) sigma.push_back(sigma.back() + w);
  return sigma;
}

std::vector<std::vector<Rational>> values_from_edges(int q, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<Rational>> v(q, std::vector<Rational>(q, Rational(0)));
  for (auto [a, b] : edges) v[a][b] = v[b][a] = 1;
  return v;
}

// Loop at community 0 plus the triangle; shared by a..f.
StepGraphon fig2_family(const std::string& name, const std::vector<Rational>& widths) {
  return make_step_graphon(name, sigma_from_widths(widths),
                           values_from_edges(3, {{0, 0}, {0, 1}, {0, 2}, {1, 2}}));
}

StepGraphon two_block(const std::string& name, const Rational& split) {
  return make_step_graphon(name, {Rational(0), split, Rational(1)}, values_from_edges(2, {{0, 1}}));
}

}  // namespace

StepGraphon catalog(const std::string& name) {
  const Rational half(1, 2), quarter(1, 4), eighth(1, 8);
  if (name == "fig1")
    return make_step_graphon(name, {Rational(0), Rational(3, 10), Rational(3, 5), Rational(1)},
                             values_from_edges(3, {{0, 0}, {0, 1}, {1, 2}, {2, 2}}));
  if (name == "a") return fig2_family(name, {half, quarter, quarter});
  if (name == "b") return fig2_family(name, {quarter, Rational(3, 8), Rational(3, 8)});
  if (name == "c") return fig2_family(name, {eighth, Rational(7, 16), Rational(7, 16)});
  if (name == "d") return fig2_family(name, {eighth, Rational(3, 4), eighth});
  if (name == "e") return fig2_family(name, {Rational(3, 16), Rational(5, 8), Rational(3, 16)});
  if (name == "f") return fig2_family(name, {Rational(7, 32), Rational(18, 32), Rational(7, 32)});
  if (name == "g") return two_block(name, Rational(7, 16));
  if (name == "h") return two_block(name, Rational(3, 8));
  if (name == "i") return two_block(name, quarter);
  if (name == "j") return two_block(name, half);
  if (name == "k")
    return make_step_graphon(
        name, sigma_from_widths({quarter, quarter, eighth, eighth, eighth, eighth}),
        values_from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {2, 5}}));
  throw std::invalid_argument("unknown catalog graphon '" + name + "'");
}

bool is_catalog_name(const std::string& name) {
  for (const auto& n : catalog_names())
    if (n == name) return true;
  return false;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"fig1", "a", "b", "c", "d", "e",
                                              "f",    "g", "h", "i", "j", "k"};
  return names;
}

}  // namespace graphon
