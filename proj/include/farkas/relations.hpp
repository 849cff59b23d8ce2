#pragma once

#include <vector>

#include "farkas/types.hpp"

namespace farkas {

// An elementary integral relation Σ coeffs[k]·v_{support[k]} = 0 with
// minimal support, coprime coefficients, and a positive coefficient on the
// smallest support index.
struct Circuit {
    std::vector<std::size_t> support;  // ascending
    IntegerCoeffs coeffs;              // parallel to support, all nonzero

    // Dense coefficient vector of length m.
    IntegerCoeffs dense(std::size_t m) const;

    friend bool operator==(const Circuit&, const Circuit&) = default;
    friend auto operator<=>(const Circuit& a, const Circuit& b) {
        if (auto c = a.support.size() <=> b.support.size(); c != 0) return c;
        if (auto c = a.support <=> b.support; c != 0) return c;
        return a.coeffs.size() <=> b.coeffs.size();
    }
};

struct CircuitStats {
    Integer max_abs;
    std::size_t count_ge2 = 0;
};

// All circuits of the family, ordered by support size, then support
// lexicographically. Throws LimitExceeded when m > limits.circuit_max_m.
std::vector<Circuit> enumerate_circuits(const VectorFamily& family, const Limits& limits = {});

CircuitStats circuit_stats(const Circuit& circuit);

// True when every |coeff| ≤ 2 and at most one |coeff| equals 2.
bool within_afr_bound(const Circuit& circuit);

}  // namespace farkas
