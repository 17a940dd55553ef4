#pragma once

#include <span>
#include <vector>

#include "graphon/cone.hpp"
#include "graphon/rational.hpp"

namespace graphon {

// Facet-defining hyperplanes of the edge cone: primitive integer normals v
// with v'z_j >= 0 for every incidence column, each spanned by q-1 linearly
// independent columns. For cones that are not full-dimensional both
// orientations of a supporting normal qualify and both are kept.
struct FacetSet {
  int q = 0;
  std::vector<std::vector<BigInt>> normals;
  std::vector<std::size_t> active;  // indices with v'x* = 0, set by active_facets
};

// Enumerates all (q-1)-subsets of the columns; q = 1 is unsupported (the
// construction has no hyperplanes in R^1).
FacetSet facet_hyperplanes(const IncidenceMatrix& z);

// Subset of facets through x*, exact test v'x* = 0. Requires
// cone_membership(z, xstar) != Outside.
FacetSet active_facets(const FacetSet& f, const IncidenceMatrix& z,
                       const std::vector<Rational>& xstar);

// Tests omega against every normal of the given (active) set: true iff
// v'omega >= 0 for all of them, evaluated in floating point with no epsilon.
// omega must lie on the hyperplane {1'w = 1} within 1e-9.
bool in_omega_star(const FacetSet& active_set, std::span<const double> omega);

enum class TnDirection { Forward, Inverse };

// T_n(x) = sqrt(n) (x - x*) + x* and its inverse.
std::vector<double> transform_tn(std::span<const double> x, std::span<const double> xstar,
                                 long long n, TnDirection direction);

}  // namespace graphon
