#include "farkas/lattice.hpp"

#include <numeric>

namespace farkas {

namespace {

// Fraction-free Gaussian elimination on the n×k matrix given column-wise.
std::size_t bareiss_rank(std::vector<IntVector> cols) {
    const std::size_t k = cols.size();
    if (k == 0) return 0;
    const std::size_t n = cols.front().size();
    // Work row-major on the transpose: rows = vectors. Rank is the same.
    std::vector<IntVector>& m = cols;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < k; ++c) {
        std::size_t piv = r;
        while (piv < k && m[piv][c] == 0) ++piv;
        if (piv == k) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = r + 1; i < k; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

void column_axpy(IntVector& dst, const Integer& a, const IntVector& x, const Integer& b,
                 const IntVector& y) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = a * x[i] + b * y[i];
}

}  // namespace

HermiteReduction hermite_reduce(const VectorFamily& family) {
    const std::size_t m = family.size();
    const std::size_t n = family.dim();
    HermiteReduction h;
    h.reduced = family.vectors();
    h.transform.assign(m, IntVector(m, Integer(0)));
    for (std::size_t j = 0; j < m; ++j) h.transform[j][j] = 1;

    auto& H = h.reduced;
    auto& U = h.transform;
    std::size_t col = 0;
    for (std::size_t row = 0; row < n && col < m; ++row) {
        for (std::size_t j = col + 1; j < m; ++j) {
            if (H[j][row] == 0) continue;
            if (H[col][row] == 0) {
                std::swap(H[col], H[j]);
                std::swap(U[col], U[j]);
                continue;
            }
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), H[col][row].get_mpz_t(),
                       H[j][row].get_mpz_t());
            const Integer a = H[col][row] / g;
            const Integer b = H[j][row] / g;
            IntVector hp(n), hj(n), up(m), uj(m);
            column_axpy(hp, s, H[col], t, H[j]);
            column_axpy(hj, -b, H[col], a, H[j]);
            column_axpy(up, s, U[col], t, U[j]);
            column_axpy(uj, -b, U[col], a, U[j]);
            H[col] = std::move(hp);
            H[j] = std::move(hj);
            U[col] = std::move(up);
            U[j] = std::move(uj);
        }
        if (H[col][row] == 0) continue;
        if (H[col][row] < 0) {
            for (auto& x : H[col]) x = -x;
            for (auto& x : U[col]) x = -x;
        }
        // Reduce earlier pivot columns modulo this pivot to keep entries small.
        for (std::size_t j = 0; j < col; ++j) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), H[j][row].get_mpz_t(), H[col][row].get_mpz_t());
            if (q == 0) continue;
            for (std::size_t i = 0; i < n; ++i) H[j][i] -= q * H[col][i];
            for (std::size_t i = 0; i < m; ++i) U[j][i] -= q * U[col][i];
        }
        h.pivot_rows.push_back(row);
        ++col;
    }
    return h;
}

std::size_t rank(const VectorFamily& family) { return bareiss_rank(family.vectors()); }

std::size_t rank(const VectorFamily& family, std::span<const std::size_t> indices) {
    std::vector<IntVector> cols;
    cols.reserve(indices.size());
    for (auto i : indices) cols.push_back(family[i]);
    return bareiss_rank(std::move(cols));
}

std::vector<IntVector> lattice_basis(const VectorFamily& family) {
    auto h = hermite_reduce(family);
    h.reduced.resize(h.rank());
    return std::move(h.reduced);
}

LatticeSolver::LatticeSolver(const VectorFamily& family)
    : m_(family.size()), n_(family.dim()), reduction_(hermite_reduce(family)) {}

std::optional<IntegerCoeffs> LatticeSolver::solve(const IntVector& w) const {
    if (w.size() != n_)
        throw Error(ErrorKind::DimensionMismatch, "target dimension does not match family");
    const std::size_t r = reduction_.rank();
    IntVector residual = w;
    IntegerCoeffs z(r);
    for (std::size_t k = 0; k < r; ++k) {
        const std::size_t row = reduction_.pivot_rows[k];
        const Integer& pivot = reduction_.reduced[k][row];
        if (!mpz_divisible_p(residual[row].get_mpz_t(), pivot.get_mpz_t())) return std::nullopt;
        z[k] = residual[row] / pivot;
        for (std::size_t i = row; i < n_; ++i) residual[i] -= z[k] * reduction_.reduced[k][i];
    }
    for (const auto& x : residual)
        if (x != 0) return std::nullopt;

    IntegerCoeffs c(m_, Integer(0));
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t i = 0; i < m_; ++i) c[i] += z[k] * reduction_.transform[k][i];
    return c;
}

std::optional<IntegerCoeffs> lattice_member(const VectorFamily& family, const IntVector& w) {
    require_dim(family, w);
    return LatticeSolver(family).solve(w);
}

std::optional<IntegerCoeffs> shifted_member(const VectorFamily& family,
                                            const std::map<std::size_t, Integer>& fixed,
                                            std::span<const std::size_t> free,
                                            const IntVector& w) {
    require_dim(family, w);
    const std::size_t m = family.size();
    std::vector<int> seen(m, 0);
    for (const auto& [i, value] : fixed) {
        if (i >= m) throw Error(ErrorKind::InvalidArgument, "fixed index out of range");
        seen[i] = 1;
    }
    for (auto i : free) {
        if (i >= m) throw Error(ErrorKind::InvalidArgument, "free index out of range");
        if (seen[i]) throw Error(ErrorKind::InvalidArgument, "fixed and free index sets overlap");
        seen[i] = 1;
    }
    for (std::size_t i = 0; i < m; ++i)
        if (!seen[i])
            throw Error(ErrorKind::InvalidArgument, "fixed and free sets do not cover all indices");

    IntVector target = w;
    for (const auto& [i, value] : fixed)
        for (std::size_t k = 0; k < target.size(); ++k) target[k] -= value * family[i][k];

    IntegerCoeffs c(m, Integer(0));
    for (const auto& [i, value] : fixed) c[i] = value;
    if (free.empty()) {
        for (const auto& x : target)
            if (x != 0) return std::nullopt;
        return c;
    }
    const auto sub = lattice_member(family.subfamily(free), target);
    if (!sub) return std::nullopt;
    for (std::size_t k = 0; k < free.size(); ++k) c[free[k]] = (*sub)[k];
    return c;
}

void normalize_primitive(IntegerCoeffs& k) {
    const Integer g = gcd_of(k);
    if (g == 0) return;
    for (auto& x : k) x /= g;
    for (const auto& x : k) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : k) y = -y;
        break;
    }
}

IntegerCoeffs primitive_kernel(const VectorFamily& subfamily) {
    const auto h = hermite_reduce(subfamily);
    const std::size_t m = subfamily.size();
    if (h.rank() + 1 != m)
        throw Error(ErrorKind::InvalidArgument,
                    "kernel rank is " + std::to_string(m - h.rank()) + ", expected 1");
    IntegerCoeffs k = h.transform[m - 1];
    normalize_primitive(k);
    return k;
}

}  // namespace farkas
