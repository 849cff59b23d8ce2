#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "farkas/types.hpp"

namespace farkas {

// Column-style Hermite reduction of the n×m matrix whose columns are the
// family vectors: transform is unimodular (m×m) and reduced = A·transform.
// Columns [0, rank) of reduced are in echelon form with positive pivots,
// columns [rank, m) are zero, and the matching columns of transform are a
// basis of the integer kernel.
struct HermiteReduction {
    std::vector<IntVector> reduced;    // m columns of length n
    std::vector<IntVector> transform;  // m columns of length m
    std::vector<std::size_t> pivot_rows;
    std::size_t rank() const noexcept { return pivot_rows.size(); }
};

HermiteReduction hermite_reduce(const VectorFamily& family);

// Rank over the rationals (fraction-free elimination).
std::size_t rank(const VectorFamily& family);
std::size_t rank(const VectorFamily& family, std::span<const std::size_t> indices);

// Reusable membership solver for one family; the reduction is computed once.
class LatticeSolver {
public:
    explicit LatticeSolver(const VectorFamily& family);
    std::optional<IntegerCoeffs> solve(const IntVector& w) const;
    std::size_t rank() const noexcept { return reduction_.rank(); }

private:
    std::size_t m_;
    std::size_t n_;
    HermiteReduction reduction_;
};

std::vector<IntVector> lattice_basis(const VectorFamily& family);

std::optional<IntegerCoeffs> lattice_member(const VectorFamily& family, const IntVector& w);

// Membership of w in Σ_{fixed} c_i v_i + Σ_{free} Z v_i. The returned
// coefficients cover all m indices, with the fixed entries copied through.
std::optional<IntegerCoeffs> shifted_member(const VectorFamily& family,
                                            const std::map<std::size_t, Integer>& fixed,
                                            std::span<const std::size_t> free,
                                            const IntVector& w);

// Primitive generator of a rank-one integer kernel, first nonzero entry
// positive. Throws InvalidArgument if the kernel rank is not one.
IntegerCoeffs primitive_kernel(const VectorFamily& subfamily);

// Scales to the primitive representative with positive leading entry.
void normalize_primitive(IntegerCoeffs& k);

}  // namespace farkas
