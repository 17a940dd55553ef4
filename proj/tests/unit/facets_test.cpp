#include <doctest.h>

#include <algorithm>

#include "graphon/catalog.hpp"
#include "graphon/facets.hpp"
#include "graphon/pstar.hpp"
#include "graphon/rng.hpp"
#include "graphon/step_graphon.hpp"

using namespace graphon;

namespace {

std::vector<BigInt> iv(std::initializer_list<int> entries) {
  std::vector<BigInt> out;
  for (int e : entries) out.emplace_back(e);
  return out;
}

}  // namespace

TEST_CASE("facets of the triangle-with-loop cone") {
  const IncidenceMatrix z = incidence_matrix(skeleton_graph(catalog("a")));
  const FacetSet f = facet_hyperplanes(z);
  std::vector<std::vector<BigInt>> expected{iv({0, 0, 1}), iv({0, 1, 0}), iv({1, -1, 1}),
                                            iv({1, 1, -1})};
  std::sort(expected.begin(), expected.end());
  CHECK(f.normals == expected);
}

TEST_CASE("degenerate single-edge cone keeps both orientations") {
  const IncidenceMatrix z = incidence_matrix(make_skeleton(2, {{0, 1}}));
  const FacetSet f = facet_hyperplanes(z);
  std::vector<std::vector<BigInt>> expected{iv({-1, 1}), iv({1, -1})};
  CHECK(f.normals == expected);
}

TEST_CASE("facet enumeration rejects q = 1") {
  const IncidenceMatrix z = incidence_matrix(make_skeleton(1, {{0, 0}}));
  CHECK_THROWS_AS(facet_hyperplanes(z), std::invalid_argument);
}

TEST_CASE("facet sign condition holds exactly across the catalog") {
  for (const auto& name : catalog_names()) {
    const IncidenceMatrix z = incidence_matrix(skeleton_graph(catalog(name)));
    if (z.q < 2) continue;
    const FacetSet f = facet_hyperplanes(z);
    for (const auto& v : f.normals) {
      BigInt g = 0;
      for (const auto& e : v) g = gcd(g, e);
      CHECK(g == 1);
      for (const auto& col : z.columns) {
        Rational d = 0;
        for (std::size_t i = 0; i < v.size(); ++i) d += Rational(v[i]) * col[i];
        CHECK(d >= 0);
      }
    }
  }
}

TEST_CASE("every facet contains q-1 independent incidence columns") {
  // The zero set of each normal must span the hyperplane: rank q-1 among
  // the columns orthogonal to it.
  for (const auto& name : {"a", "k", "fig1"}) {
    const IncidenceMatrix z = incidence_matrix(skeleton_graph(catalog(name)));
    const FacetSet f = facet_hyperplanes(z);
    for (const auto& v : f.normals) {
      std::vector<std::pair<int, int>> zero_edges;
      for (int j = 0; j < z.k(); ++j) {
        Rational d = 0;
        for (int i = 0; i < z.q; ++i) d += Rational(v[i]) * z.columns[j][i];
        if (d == 0) zero_edges.push_back(z.edges[j]);
      }
      const IncidenceMatrix sub = incidence_matrix(make_skeleton(z.q, zero_edges));
      CHECK(cone_dimension(sub) == z.q - 1);
    }
  }
}

TEST_CASE("active facets") {
  const IncidenceMatrix fam = incidence_matrix(skeleton_graph(catalog("a")));
  const FacetSet fam_f = facet_hyperplanes(fam);
  CHECK(active_facets(fam_f, fam, concentration_vector(catalog("a"))).normals.empty());

  const IncidenceMatrix ray = incidence_matrix(make_skeleton(2, {{0, 1}}));
  const FacetSet ray_f = facet_hyperplanes(ray);
  const FacetSet ray_active = active_facets(ray_f, ray, {Rational(1, 2), Rational(1, 2)});
  CHECK(ray_active.normals.size() == 2);

  const StepGraphon k = catalog("k");
  const IncidenceMatrix kz = incidence_matrix(skeleton_graph(k));
  const FacetSet k_f = facet_hyperplanes(kz);
  const FacetSet k_active = active_facets(k_f, kz, concentration_vector(k));
  CHECK(!k_active.normals.empty());
  CHECK(k_active.normals.size() < k_f.normals.size());
  // The two active facets, hand-derived from the zero-coefficient pattern.
  std::vector<std::vector<BigInt>> expected{iv({-1, 1, 1, 1, -1, -1}), iv({1, -1, 1, -1, 1, -1})};
  CHECK(k_active.normals == expected);

  CHECK_THROWS_AS(active_facets(fam_f, fam, {Rational(1, 8), Rational(3, 4), Rational(1, 8)}),
                  std::invalid_argument);
}

TEST_CASE("outside points of full-dimensional cones are cut by some facet") {
  for (const char* name : {"fig1", "a", "k"}) {
    const IncidenceMatrix z = incidence_matrix(skeleton_graph(catalog(name)));
    REQUIRE(cone_dimension(z) == z.q);
    const FacetSet f = facet_hyperplanes(z);

    RngStream rng(graphon_label(name));
    int outside_seen = 0;
    while (outside_seen < 50) {
      // Random rational probability vector; keep the Outside ones.
      std::vector<Rational> x;
      Rational total = 0;
      for (int i = 0; i < z.q; ++i) {
        x.emplace_back(1 + static_cast<std::int64_t>(rng.next_u64() % 64));
        total += x.back();
      }
      for (auto& v : x) v /= total;
      if (cone_membership(z, x).verdict != Verdict::Outside) continue;
      ++outside_seen;
      bool separated = false;
      for (const auto& v : f.normals) {
        Rational d = 0;
        for (int i = 0; i < z.q; ++i) d += Rational(v[i]) * x[i];
        if (d < 0) separated = true;
      }
      REQUIRE(separated);
    }
  }
}

TEST_CASE("in_omega_star over the active set") {
  const FacetSet empty_active{3, {}, {}};
  CHECK(in_omega_star(empty_active, std::vector<double>{0.2, 0.3, 0.5}));

  FacetSet ray_active;
  ray_active.q = 2;
  ray_active.normals = {iv({-1, 1}), iv({1, -1})};
  CHECK(!in_omega_star(ray_active, std::vector<double>{0.6, 0.4}));
  CHECK(in_omega_star(ray_active, std::vector<double>{0.5, 0.5}));

  CHECK_THROWS_AS(in_omega_star(empty_active, std::vector<double>{0.5, 0.4, 0.5}),
                  std::invalid_argument);
}

TEST_CASE("T_n rescaling") {
  const std::vector<double> xstar{0.5, 0.5};
  CHECK(transform_tn(xstar, xstar, 77, TnDirection::Forward) == xstar);

  const std::vector<double> x{0.4, 0.6};
  CHECK(transform_tn(x, xstar, 1, TnDirection::Forward) == x);

  const std::vector<double> fwd = transform_tn(x, xstar, 4, TnDirection::Forward);
  CHECK(fwd[0] == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(fwd[1] == doctest::Approx(0.7).epsilon(1e-12));

  const std::vector<double> back = transform_tn(fwd, xstar, 4, TnDirection::Inverse);
  CHECK(back[0] == doctest::Approx(x[0]).epsilon(1e-12));
  CHECK(back[1] == doctest::Approx(x[1]).epsilon(1e-12));
}
