#include "farkas/box_solver.hpp"

#include <map>

#include "farkas/classifier.hpp"
#include "farkas/feasibility.hpp"
#include "farkas/lattice.hpp"

namespace farkas {

Certificate::Certificate(RationalVector direction) : u(std::move(direction)) {
    bool nonzero = false;
    for (const auto& q : u) nonzero = nonzero || q != 0;
    if (!nonzero) throw Error(ErrorKind::InvalidArgument, "certificate direction u must be nonzero");
}

std::string_view to_string(DecisionReason reason) {
    switch (reason) {
        case DecisionReason::LatticeFail: return "lattice_fail";
        case DecisionReason::RationalInfeasible: return "rational_infeasible";
        case DecisionReason::Found: return "found";
    }
    return "unknown";
}

std::optional<RationalCoeffs> rational_feasible(const VectorFamily& family, const Box& box,
                                                const IntVector& w) {
    auto x = find_box_point(family, box, w);
    if (x) {
        const auto reached = family.combine(std::span<const Rational>(*x));
        for (std::size_t k = 0; k < w.size(); ++k)
            if (reached[k] != w[k] || !box.contains(std::span<const Rational>(*x)))
                throw Error(ErrorKind::Internal, "feasibility witness failed verification");
    }
    return x;
}

Integer box_point_count(const Box& box) {
    Integer count = 1;
    for (std::size_t i = 0; i < box.size(); ++i) count *= box.upper[i] - box.lower[i] + 1;
    return count;
}

std::optional<IntegerCoeffs> integer_solve(const VectorFamily& family, const Box& box,
                                           const IntVector& w, const Limits& limits) {
    require_dim(family, w);
    box.validate(family.size());
    if (box_point_count(box) > Integer(std::to_string(limits.enumeration)))
        throw Error(ErrorKind::LimitExceeded,
                    "integer box holds more than " + std::to_string(limits.enumeration) + " points");

    const std::size_t m = family.size();
    const std::size_t n = family.dim();
    IntegerCoeffs y = box.lower;
    IntVector sum = family.combine(std::span<const Integer>(y));

    for (;;) {
        if (sum == w) return y;
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (y[i] < box.upper[i]) {
                ++y[i];
                for (std::size_t k = 0; k < n; ++k) sum[k] += family[i][k];
                break;
            }
            const Integer span = y[i] - box.lower[i];
            for (std::size_t k = 0; k < n; ++k) sum[k] -= span * family[i][k];
            y[i] = box.lower[i];
            if (i == 0) return std::nullopt;
        }
    }
}

namespace {

Decision finish_decision(const VectorFamily& family, const Box& box, const IntVector& w,
                         const Limits& limits, const char* rule) {
    Decision d;
    d.solution = integer_solve(family, box, w, limits);
    if (!d.solution)
        throw Error(ErrorKind::NotInClass,
                    std::string("rule ") + rule +
                        " predicted an integer solution that does not exist; the family is "
                        "outside the rule's class");
    if (!box.contains(std::span<const Integer>(*d.solution)) ||
        family.combine(std::span<const Integer>(*d.solution)) != w)
        throw Error(ErrorKind::Internal, "integer witness failed verification");
    d.representable = true;
    d.reason = DecisionReason::Found;
    return d;
}

}  // namespace

Decision decide_afr(const VectorFamily& family, const Box& box, const IntVector& w,
                    const DecideOptions& options) {
    require_dim(family, w);
    box.validate(family.size());
    if (options.check_class && !is_afr(family, options.limits).is_afr)
        throw Error(ErrorKind::NotInClass, "family is not almost Farkas-related");

    std::map<std::size_t, Integer> fixed;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (box.lower[i] == box.upper[i])
            fixed.emplace(i, box.lower[i]);
        else
            free.push_back(i);
    }
    Decision d;
    if (!shifted_member(family, fixed, free, w)) {
        d.reason = DecisionReason::LatticeFail;
        return d;
    }
    if (!rational_feasible(family, box, w)) {
        d.reason = DecisionReason::RationalInfeasible;
        return d;
    }
    return finish_decision(family, box, w, options.limits, "afr");
}

Decision decide_wfr(const VectorFamily& family, const Box& box, const IntVector& w,
                    const DecideOptions& options) {
    require_dim(family, w);
    box.validate(family.size());
    if (!box.is_strict())
        throw Error(ErrorKind::InvalidArgument, "wfr rule requires lower < upper at every index");
    if (options.check_class && !is_wfr(family, options.limits).is_wfr)
        throw Error(ErrorKind::NotInClass, "family is not weakly Farkas-related");

    Decision d;
    if (!lattice_member(family, w)) {
        d.reason = DecisionReason::LatticeFail;
        return d;
    }
    if (!rational_feasible(family, box, w)) {
        d.reason = DecisionReason::RationalInfeasible;
        return d;
    }
    return finish_decision(family, box, w, options.limits, "wfr");
}

Rational certificate_rhs(const Certificate& cert, const VectorFamily& family, const Box& box) {
    if (cert.u.size() != family.dim())
        throw Error(ErrorKind::DimensionMismatch, "certificate dimension does not match family");
    box.validate(family.size());
    Rational rhs = 0;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const Rational c = dot(cert.u, family[i]);
        const Rational mag = abs(c);
        rhs += box.lower[i] * (c - mag) / 2 + box.upper[i] * (c + mag) / 2;
    }
    return rhs;
}

bool verify_certificate(const Certificate& cert, const VectorFamily& family, const Box& box,
                        const IntVector& w) {
    require_dim(family, w);
    return dot(cert.u, w) > certificate_rhs(cert, family, box);
}

}  // namespace farkas
