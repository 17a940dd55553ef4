#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graphon/rational.hpp"
#include "graphon/skeleton.hpp"

namespace graphon {

// Symmetric function on [0,1]^2 that is constant on the rectangles of a
// partition 0 = sigma_0 < ... < sigma_q = 1. Immutable after construction;
// all entries exact rationals in [0,1].
struct StepGraphon {
  std::string name;
  std::vector<Rational> sigma;                // q + 1 breakpoints
  std::vector<std::vector<Rational>> values;  // q x q block values, symmetric

  int q() const { return static_cast<int>(values.size()); }
};

// Validates every invariant (monotone sigma spanning [0,1], symmetry, value
// range) and throws std::invalid_argument with the offending location.
StepGraphon make_step_graphon(std::string name, std::vector<Rational> sigma,
                              std::vector<std::vector<Rational>> values);

// Interval lengths x*_i = sigma_i - sigma_{i-1}; positive, sums to 1 exactly.
std::vector<Rational> concentration_vector(const StepGraphon& w);

// Node per community, edge (i, j) iff the block value is nonzero.
SkeletonGraph skeleton_graph(const StepGraphon& w);

// Smallest nonzero block value over the support (0 if the support is empty).
Rational min_edge_value(const StepGraphon& w);

// Replaces every community carrying a self-loop by two half-width communities
// whose diagonal sub-blocks are 0 and whose off-diagonal sub-blocks keep the
// old diagonal value; all other blocks are inherited by both halves. The
// result has a loop-free skeleton and is pointwise <= the input. Communities
// without a loop pass through untouched, preserving order.
StepGraphon split_self_loops(const StepGraphon& w);

// JSON document: {"name": ..., "sigma": [rational strings],
// "values": [[rational strings]]} with fields in that order.
StepGraphon parse_graphon(std::string_view json_text);
std::string serialize_graphon(const StepGraphon& w);

// Reads a graphon either from the bundled catalog (by name) or a JSON file.
StepGraphon load_graphon(const std::string& name_or_path);

}  // namespace graphon
