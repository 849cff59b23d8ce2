#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace farkas {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using IntegerCoeffs = std::vector<Integer>;
using RationalCoeffs = std::vector<Rational>;
using RationalVector = std::vector<Rational>;

enum class ErrorKind {
    Parse,
    DimensionMismatch,
    InvalidArgument,
    LimitExceeded,
    NotInClass,
    Disconnected,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Enumeration limits. Every exponential routine checks its own entry and
// throws ErrorKind::LimitExceeded instead of running unbounded.
struct Limits {
    std::size_t circuit_max_m = 20;
    std::size_t afr_oracle_max_m = 8;
    std::size_t wfr_max_m = 16;
    std::size_t wfr_oracle_max_m = 10;
    std::size_t graph_max_vertices = 12;
    std::uint64_t enumeration = 10'000'000;

    static Limits uniform(std::uint64_t n);
};

// Ordered list v_1..v_m of integer vectors sharing one ambient dimension.
class VectorFamily {
public:
    VectorFamily() = default;
    explicit VectorFamily(std::vector<IntVector> vectors);

    std::size_t size() const noexcept { return vectors_.size(); }
    std::size_t dim() const noexcept { return dim_; }
    bool empty() const noexcept { return vectors_.empty(); }

    const IntVector& operator[](std::size_t i) const { return vectors_[i]; }
    const std::vector<IntVector>& vectors() const noexcept { return vectors_; }

    VectorFamily subfamily(std::span<const std::size_t> indices) const;
    VectorFamily negated() const;
    VectorFamily permuted(std::span<const std::size_t> order) const;

    // Σ c_i v_i. Sizes must match.
    IntVector combine(std::span<const Integer> coeffs) const;
    RationalVector combine(std::span<const Rational> coeffs) const;

    friend bool operator==(const VectorFamily&, const VectorFamily&) = default;

private:
    std::vector<IntVector> vectors_;
    std::size_t dim_ = 0;
};

// Per-index integer bounds lower[i] ≤ x_i ≤ upper[i].
struct Box {
    IntegerCoeffs lower;
    IntegerCoeffs upper;

    std::size_t size() const noexcept { return lower.size(); }
    bool is_strict() const;
    bool contains(std::span<const Integer> y) const;
    bool contains(std::span<const Rational> x) const;
    // Throws on length mismatch or lower > upper.
    void validate(std::size_t m) const;

    static Box uniform(std::size_t m, long lo, long hi);
};

VectorFamily make_family(std::initializer_list<std::initializer_list<long>> rows);
IntVector make_vector(std::initializer_list<long> entries);

Integer gcd_of(std::span<const Integer> values);
Rational dot(std::span<const Rational> u, std::span<const Integer> v);

void require_dim(const VectorFamily& family, const IntVector& w);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

}  // namespace farkas
