#include "farkas/types.hpp"

namespace farkas {

Limits Limits::uniform(std::uint64_t n) {
    Limits l;
    l.circuit_max_m = n;
    l.afr_oracle_max_m = n;
    l.wfr_max_m = n;
    l.wfr_oracle_max_m = n;
    l.graph_max_vertices = n;
    l.enumeration = n;
    return l;
}

VectorFamily::VectorFamily(std::vector<IntVector> vectors) : vectors_(std::move(vectors)) {
    if (vectors_.empty())
        throw Error(ErrorKind::InvalidArgument, "vector family must contain at least one vector");
    dim_ = vectors_.front().size();
    if (dim_ == 0)
        throw Error(ErrorKind::InvalidArgument, "ambient dimension must be positive");
    for (const auto& v : vectors_) {
        if (v.size() != dim_)
            throw Error(ErrorKind::DimensionMismatch, "family vectors have different dimensions");
    }
}

VectorFamily VectorFamily::subfamily(std::span<const std::size_t> indices) const {
    std::vector<IntVector> out;
    out.reserve(indices.size());
    for (auto i : indices) out.push_back(vectors_.at(i));
    return VectorFamily(std::move(out));
}

VectorFamily VectorFamily::negated() const {
    auto out = vectors_;
    for (auto& v : out)
        for (auto& x : v) x = -x;
    return VectorFamily(std::move(out));
}

VectorFamily VectorFamily::permuted(std::span<const std::size_t> order) const {
    if (order.size() != size())
        throw Error(ErrorKind::InvalidArgument, "permutation has wrong length");
    return subfamily(order);
}

IntVector VectorFamily::combine(std::span<const Integer> coeffs) const {
    if (coeffs.size() != size())
        throw Error(ErrorKind::DimensionMismatch, "coefficient count does not match family size");
    IntVector out(dim_, Integer(0));
    for (std::size_t i = 0; i < size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (std::size_t k = 0; k < dim_; ++k) out[k] += coeffs[i] * vectors_[i][k];
    }
    return out;
}

RationalVector VectorFamily::combine(std::span<const Rational> coeffs) const {
    if (coeffs.size() != size())
        throw Error(ErrorKind::DimensionMismatch, "coefficient count does not match family size");
    RationalVector out(dim_, Rational(0));
    for (std::size_t i = 0; i < size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (std::size_t k = 0; k < dim_; ++k) out[k] += coeffs[i] * vectors_[i][k];
    }
    return out;
}

bool Box::is_strict() const {
    for (std::size_t i = 0; i < size(); ++i)
        if (!(lower[i] < upper[i])) return false;
    return true;
}

bool Box::contains(std::span<const Integer> y) const {
    if (y.size() != size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
        if (y[i] < lower[i] || y[i] > upper[i]) return false;
    return true;
}

bool Box::contains(std::span<const Rational> x) const {
    if (x.size() != size()) return false;
    for (std::size_t i = 0; i < size(); ++i)
        if (x[i] < lower[i] || x[i] > upper[i]) return false;
    return true;
}

void Box::validate(std::size_t m) const {
    if (lower.size() != m || upper.size() != m)
        throw Error(ErrorKind::DimensionMismatch,
                    "box has " + std::to_string(lower.size()) + "/" + std::to_string(upper.size()) +
                        " bounds, family has " + std::to_string(m) + " vectors");
    for (std::size_t i = 0; i < m; ++i)
        if (lower[i] > upper[i])
            throw Error(ErrorKind::InvalidArgument,
                        "box lower bound exceeds upper bound at index " + std::to_string(i + 1));
}

Box Box::uniform(std::size_t m, long lo, long hi) {
    return Box{IntegerCoeffs(m, Integer(lo)), IntegerCoeffs(m, Integer(hi))};
}

VectorFamily make_family(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<IntVector> vs;
    for (const auto& r : rows) vs.push_back(make_vector(r));
    return VectorFamily(std::move(vs));
}

IntVector make_vector(std::initializer_list<long> entries) {
    IntVector v;
    v.reserve(entries.size());
    for (long x : entries) v.emplace_back(x);
    return v;
}

Integer gcd_of(std::span<const Integer> values) {
    Integer g = 0;
    for (const auto& x : values) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

Rational dot(std::span<const Rational> u, std::span<const Integer> v) {
    if (u.size() != v.size())
        throw Error(ErrorKind::DimensionMismatch, "dot product of vectors with different dimensions");
    Rational s = 0;
    for (std::size_t k = 0; k < u.size(); ++k) s += u[k] * v[k];
    return s;
}

void require_dim(const VectorFamily& family, const IntVector& w) {
    if (w.size() != family.dim())
        throw Error(ErrorKind::DimensionMismatch,
                    "target has dimension " + std::to_string(w.size()) + ", family has " +
                        std::to_string(family.dim()));
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
    // mpq_class keeps canonical form; integers print without "/1".
    return value.get_str();
}

}  // namespace farkas
