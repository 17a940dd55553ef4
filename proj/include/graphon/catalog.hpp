#pragma once

#include <string>
#include <vector>

#include "graphon/step_graphon.hpp"

namespace graphon {

// The bundled experiment graphons. All block values are 1 on the support.
//
//   fig1     q = 3, loops at communities 1 and 3, path 1-2-3,
//            sigma = (0, 3/10, 3/5, 1). Only the support pattern is pinned
//            down for this entry; all nonzero blocks are fixed to 1 like the
//            rest of the catalog.
//   a..f     q = 3, loop at community 1 plus the triangle 1-2-3;
//            x* = (2a, 1-a, 1-a)/2 for a, b, c with a = 1/2, 1/4, 1/8 and
//            x* = (1-b, 2b, 1-b)/2 for d, e, f with b = 3/4, 5/8, 18/32.
//   g..j     q = 2, single off-diagonal block, sigma_1 = 7/16, 3/8, 1/4, 1/2.
//   k        q = 6, x* = (1/4, 1/4, 1/8, 1/8, 1/8, 1/8), edges
//            {1-2, 1-3, 1-4, 2-3, 2-5, 3-6}.
StepGraphon catalog(const std::string& name);

bool is_catalog_name(const std::string& name);
const std::vector<std::string>& catalog_names();

}  // namespace graphon
