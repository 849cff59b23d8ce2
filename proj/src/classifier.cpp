#include "farkas/classifier.hpp"

#include <map>
#include <set>

#include "farkas/box_solver.hpp"
#include "farkas/feasibility.hpp"
#include "farkas/lattice.hpp"

namespace farkas {

SignPattern SignPattern::from_values(std::vector<int> values) {
    SignPattern p;
    std::size_t plus = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 1) {
            ++plus;
            p.special_index = i;
        } else if (values[i] != 0 && values[i] != -1) {
            throw Error(ErrorKind::InvalidArgument, "sign pattern entries must lie in {-1,0,1}");
        }
    }
    if (plus != 1) throw Error(ErrorKind::InvalidArgument, "sign pattern needs exactly one +1");
    p.values = std::move(values);
    return p;
}

Box pattern_box(const std::vector<int>& pattern) {
    Box box;
    for (int a : pattern) {
        box.lower.emplace_back(a);
        box.upper.emplace_back(a + 1);
    }
    return box;
}

std::optional<RationalCoeffs> pattern_violation(const VectorFamily& family,
                                                const std::vector<int>& pattern,
                                                const Limits& limits) {
    const Box box = pattern_box(pattern);
    const IntVector zero(family.dim(), Integer(0));
    auto x = rational_feasible(family, box, zero);
    if (!x) return std::nullopt;
    if (integer_solve(family, box, zero, limits)) return std::nullopt;
    return x;
}

AfrVerdict is_afr(const VectorFamily& family, const Limits& limits) {
    AfrVerdict v;
    for (auto& c : enumerate_circuits(family, limits)) {
        if (!within_afr_bound(c)) {
            v.is_afr = false;
            v.violating_circuit = std::move(c);
            return v;
        }
    }
    return v;
}

namespace {

// Necessary condition for w to lie in the zonotope Σ [0, v_i]: for each
// direction u, ⟨u,w⟩ lies between the sums of negative and positive parts of ⟨u,v_i⟩.
struct SlabFilter {
    std::vector<IntVector> directions;
    std::vector<Integer> lo, hi;

    explicit SlabFilter(const VectorFamily& sub) {
        const std::size_t n = sub.dim();
        for (const auto& v : sub.vectors()) {
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t l = k + 1; l < n; ++l) {
                    if (v[k] == 0 && v[l] == 0) continue;
                    IntVector u(n, Integer(0));
                    u[k] = -v[l];
                    u[l] = v[k];
                    add(sub, std::move(u));
                }
            }
        }
    }

    void add(const VectorFamily& sub, IntVector u) {
        Integer l = 0, h = 0;
        for (const auto& v : sub.vectors()) {
            Integer d = 0;
            for (std::size_t k = 0; k < u.size(); ++k) d += u[k] * v[k];
            (d < 0 ? l : h) += d;
        }
        directions.push_back(std::move(u));
        lo.push_back(std::move(l));
        hi.push_back(std::move(h));
    }

    bool admits(const IntVector& w) const {
        Integer d;
        for (std::size_t j = 0; j < directions.size(); ++j) {
            d = 0;
            for (std::size_t k = 0; k < w.size(); ++k) d += directions[j][k] * w[k];
            if (d < lo[j] || d > hi[j]) return false;
        }
        return true;
    }
};

bool zero_one_rounding_holds(const VectorFamily& sub, const Limits& limits) {
    const std::size_t r = sub.size();
    const std::size_t n = sub.dim();

    std::set<IntVector> reachable;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << r); ++t) {
        IntVector s(n, Integer(0));
        for (std::size_t i = 0; i < r; ++i)
            if (t >> i & 1)
                for (std::size_t k = 0; k < n; ++k) s[k] += sub[i][k];
        reachable.insert(std::move(s));
    }

    IntVector lo(n, Integer(0)), hi(n, Integer(0));
    Integer points = 1;
    for (std::size_t k = 0; k < n; ++k) {
        for (const auto& v : sub.vectors()) (v[k] < 0 ? lo[k] : hi[k]) += v[k];
        points *= hi[k] - lo[k] + 1;
    }
    if (points > Integer(std::to_string(limits.enumeration)))
        throw Error(ErrorKind::LimitExceeded, "zonotope bounding box exceeds enumeration limit");

    const SlabFilter filter(sub);
    const LatticeSolver lattice(sub);
    const Box unit = Box::uniform(r, 0, 1);

    IntVector w = lo;
    for (;;) {
        if (!reachable.contains(w) && filter.admits(w) && lattice.solve(w) &&
            find_box_point(sub, unit, w))
            return false;
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (w[k] < hi[k]) {
                ++w[k];
                break;
            }
            w[k] = lo[k];
            if (k == 0) return true;
        }
    }
}

}  // namespace

bool is_afr_oracle(const VectorFamily& family, const Limits& limits) {
    const std::size_t m = family.size();
    if (m > limits.afr_oracle_max_m)
        throw Error(ErrorKind::LimitExceeded,
                    "afr oracle limited to m <= " + std::to_string(limits.afr_oracle_max_m));
    std::vector<std::size_t> idx;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        idx.clear();
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) idx.push_back(i);
        if (!zero_one_rounding_holds(family.subfamily(idx), limits)) return false;
    }
    return true;
}

bool is_afr_oracle_boxed(const VectorFamily& family, const Box& box, const IntVector& w,
                         const Limits& limits) {
    require_dim(family, w);
    box.validate(family.size());
    std::map<std::size_t, Integer> fixed;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (box.lower[i] == box.upper[i])
            fixed.emplace(i, box.lower[i]);
        else
            free.push_back(i);
    }
    if (!shifted_member(family, fixed, free, w)) return true;
    if (!rational_feasible(family, box, w)) return true;
    return integer_solve(family, box, w, limits).has_value();
}

WfrVerdict is_wfr(const VectorFamily& family, const Limits& limits) {
    const std::size_t m = family.size();
    if (m > limits.wfr_max_m)
        throw Error(ErrorKind::LimitExceeded,
                    "wfr decider limited to m <= " + std::to_string(limits.wfr_max_m));
    WfrVerdict verdict;
    std::vector<int> pattern(m);
    for (std::size_t s = 0; s < m; ++s) {
        // Bits of t, most significant first over the non-special indices:
        // 0 → −1, 1 → 0, so t counting upward is lexicographic with −1 < 0.
        for (std::uint64_t t = 0; t < (std::uint64_t{1} << (m - 1)); ++t) {
            std::size_t bit = m - 1;
            for (std::size_t i = 0; i < m; ++i) {
                if (i == s) {
                    pattern[i] = 1;
                    continue;
                }
                --bit;
                pattern[i] = (t >> bit & 1) ? 0 : -1;
            }
            if (auto x = pattern_violation(family, pattern, limits)) {
                verdict.is_wfr = false;
                verdict.counterexample = WfrCounterexample{SignPattern::from_values(pattern), std::move(*x)};
                return verdict;
            }
        }
    }
    return verdict;
}

bool is_wfr_oracle(const VectorFamily& family, const Limits& limits) {
    const std::size_t m = family.size();
    if (m > limits.wfr_oracle_max_m)
        throw Error(ErrorKind::LimitExceeded,
                    "wfr oracle limited to m <= " + std::to_string(limits.wfr_oracle_max_m));
    std::vector<int> pattern(m, -1);
    for (;;) {
        if (pattern_violation(family, pattern, limits)) return false;
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (pattern[i] < 1) {
                ++pattern[i];
                break;
            }
            pattern[i] = -1;
            if (i == 0) return true;
        }
    }
}

bool afr_implies_wfr_check(const VectorFamily& family, const Limits& limits) {
    return !is_afr(family, limits).is_afr || is_wfr(family, limits).is_wfr;
}

}  // namespace farkas
