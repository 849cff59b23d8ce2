#include "farkas/relations.hpp"

#include <algorithm>
#include <bit>

#include "farkas/lattice.hpp"

namespace farkas {

IntegerCoeffs Circuit::dense(std::size_t m) const {
    IntegerCoeffs out(m, Integer(0));
    for (std::size_t k = 0; k < support.size(); ++k) out.at(support[k]) = coeffs[k];
    return out;
}

std::vector<Circuit> enumerate_circuits(const VectorFamily& family, const Limits& limits) {
    const std::size_t m = family.size();
    if (m > limits.circuit_max_m || m >= 63)
        throw Error(ErrorKind::LimitExceeded,
                    "circuit enumeration limited to m <= " + std::to_string(limits.circuit_max_m));

    const std::size_t r = rank(family);
    std::vector<std::uint64_t> found_masks;
    std::vector<Circuit> circuits;
    std::vector<std::size_t> idx;

    // A subset of size k with no circuit inside has all proper subsets
    // independent, so it is a circuit exactly when it is dependent.
    for (std::size_t k = 1; k <= std::min(m, r + 1); ++k) {
        const std::uint64_t top = std::uint64_t{1} << m;
        for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < top;) {
            const bool pruned = std::any_of(found_masks.begin(), found_masks.end(),
                                            [s](std::uint64_t c) { return (s & c) == c; });
            if (!pruned) {
                idx.clear();
                for (std::size_t i = 0; i < m; ++i)
                    if (s >> i & 1) idx.push_back(i);
                if (rank(family, idx) < k) {
                    Circuit c;
                    c.support = idx;
                    c.coeffs = primitive_kernel(family.subfamily(idx));
                    circuits.push_back(std::move(c));
                    found_masks.push_back(s);
                }
            }
            // Gosper's hack: next subset with the same popcount.
            const std::uint64_t lo = s & (~s + 1);
            const std::uint64_t ripple = s + lo;
            s = (((ripple ^ s) >> 2) / lo) | ripple;
        }
    }
    std::sort(circuits.begin(), circuits.end());
    return circuits;
}

CircuitStats circuit_stats(const Circuit& circuit) {
    CircuitStats st;
    st.max_abs = 0;
    for (const auto& a : circuit.coeffs) {
        const Integer mag = abs(a);
        if (mag > st.max_abs) st.max_abs = mag;
        if (mag >= 2) ++st.count_ge2;
    }
    return st;
}

bool within_afr_bound(const Circuit& circuit) {
    const auto st = circuit_stats(circuit);
    return st.max_abs <= 2 && st.count_ge2 <= 1;
}

}  // namespace farkas
