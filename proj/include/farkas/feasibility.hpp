#pragma once

#include <optional>

#include "farkas/types.hpp"

namespace farkas {

// Exact feasibility of { Σ x_i v_i = w, lower ≤ x ≤ upper } over the
// rationals. Phase-one simplex with Bland's rule on an mpq tableau; the
// returned point is a basic feasible solution (a vertex of the polytope).
std::optional<RationalCoeffs> find_box_point(const VectorFamily& family, const Box& box,
                                             const IntVector& w);

}  // namespace farkas
