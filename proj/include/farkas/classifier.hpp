#pragma once

#include <optional>
#include <vector>

#include "farkas/relations.hpp"
#include "farkas/types.hpp"

namespace farkas {

struct AfrVerdict {
    bool is_afr = true;
    std::optional<Circuit> violating_circuit;
};

// Entries in {−1, 0, +1} with exactly one +1, at special_index.
struct SignPattern {
    std::vector<int> values;
    std::size_t special_index = 0;

    // Throws InvalidArgument when the single-+1 shape is violated.
    static SignPattern from_values(std::vector<int> values);
};

struct WfrCounterexample {
    SignPattern pattern;
    RationalCoeffs x;
};

struct WfrVerdict {
    bool is_wfr = true;
    std::optional<WfrCounterexample> counterexample;
};

// {a_i ≤ x_i ≤ a_i + 1} for an integer pattern a.
Box pattern_box(const std::vector<int>& pattern);

// If Σ x_i v_i = 0 has a rational solution in the pattern box but no
// integer one, returns that rational solution.
std::optional<RationalCoeffs> pattern_violation(const VectorFamily& family,
                                                const std::vector<int>& pattern,
                                                const Limits& limits = {});

// Circuit bound: every circuit has |coeff| ≤ 2 with at most one |coeff| = 2.
AfrVerdict is_afr(const VectorFamily& family, const Limits& limits = {});

// Zero-one rounding check over every nonempty index subset, by lattice-point
// enumeration in each zonotope. Requires m ≤ limits.afr_oracle_max_m.
bool is_afr_oracle(const VectorFamily& family, const Limits& limits = {});

// One instance of the defining implication: w in the coset and rationally
// reachable in the box implies an integer point in the box reaches w.
bool is_afr_oracle_boxed(const VectorFamily& family, const Box& box, const IntVector& w,
                         const Limits& limits = {});

// Sign patterns with a single +1, in canonical order (special index
// ascending, then the remaining entries lexicographically with −1 < 0).
WfrVerdict is_wfr(const VectorFamily& family, const Limits& limits = {});

// Same check over every pattern in {−1, 0, 1}^m.
bool is_wfr_oracle(const VectorFamily& family, const Limits& limits = {});

bool afr_implies_wfr_check(const VectorFamily& family, const Limits& limits = {});

}  // namespace farkas
