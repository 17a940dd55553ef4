#pragma once

#include <vector>

#include "graphon/rational.hpp"
#include "graphon/skeleton.hpp"

namespace graphon {

// One column per skeleton edge, in the skeleton's canonical edge order:
// (e_i + e_j)/2 for an edge, e_i for a self-loop. Every column sums to 1.
struct IncidenceMatrix {
  int q = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<Rational>> columns;

  int k() const { return static_cast<int>(columns.size()); }
};

IncidenceMatrix incidence_matrix(const SkeletonGraph& s);

// Exact rank of the incidence matrix over the rationals. For a connected
// skeleton this is q with an odd cycle present and q-1 without.
int cone_dimension(const IncidenceMatrix& z);

enum class Verdict { Outside, Boundary, Interior };

const char* to_string(Verdict v);

// Verdict plus certificate. Interior/Boundary carry coefficients c >= 0 with
// Z c = x (all strictly positive for Interior). Outside carries a primitive
// integer vector v with v'z_j >= 0 for every column and v'x < 0.
struct ConeMembership {
  Verdict verdict = Verdict::Outside;
  std::vector<Rational> coefficients;
  std::vector<BigInt> separating_normal;
};

// Relative-interior test via the exact program  max t  s.t.  Z c = x,
// c_j >= t: infeasible -> Outside, t* = 0 -> Boundary, t* > 0 -> Interior.
ConeMembership cone_membership(const IncidenceMatrix& z, const std::vector<Rational>& x);

// Scales a rational vector to a collinear integer vector whose entries have
// gcd 1; the zero vector maps to itself.
std::vector<BigInt> primitive_integer_vector(const std::vector<Rational>& v);

}  // namespace graphon
