#pragma once

#include <optional>
#include <string_view>

#include "farkas/types.hpp"

namespace farkas {

// A dual direction u ∈ Q^n. Any nonzero u may be supplied; the check it
// drives is sound for every u.
struct Certificate {
    RationalVector u;

    explicit Certificate(RationalVector direction);
};

enum class DecisionReason { LatticeFail, RationalInfeasible, Found };

std::string_view to_string(DecisionReason reason);

struct Decision {
    bool representable = false;
    std::optional<IntegerCoeffs> solution;
    DecisionReason reason = DecisionReason::RationalInfeasible;
};

struct DecideOptions {
    bool check_class = true;
    Limits limits{};
};

std::optional<RationalCoeffs> rational_feasible(const VectorFamily& family, const Box& box,
                                                const IntVector& w);

// Exhaustive search of the integer box in lexicographic order (last index
// varies fastest). Throws LimitExceeded when the box holds more points than
// limits.enumeration.
std::optional<IntegerCoeffs> integer_solve(const VectorFamily& family, const Box& box,
                                           const IntVector& w, const Limits& limits = {});

// Number of integer points in the box.
Integer box_point_count(const Box& box);

// Decision rule for almost Farkas-related families: coset membership over
// the fixed coordinates plus rational feasibility.
Decision decide_afr(const VectorFamily& family, const Box& box, const IntVector& w,
                    const DecideOptions& options = {});

// Decision rule for weakly Farkas-related families on strict boxes:
// lattice membership plus rational feasibility.
Decision decide_wfr(const VectorFamily& family, const Box& box, const IntVector& w,
                    const DecideOptions& options = {});

// Σ a_i (c_i − |c_i|)/2 + Σ b_i (c_i + |c_i|)/2 with c_i = ⟨u, v_i⟩, i.e. the
// maximum of ⟨u, Σ x_i v_i⟩ over the box.
Rational certificate_rhs(const Certificate& cert, const VectorFamily& family, const Box& box);

// ⟨u, w⟩ > rhs proves no rational box point reaches w.
bool verify_certificate(const Certificate& cert, const VectorFamily& family, const Box& box,
                        const IntVector& w);

}  // namespace farkas
