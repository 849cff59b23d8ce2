#include "farkas/feasibility.hpp"

#include <vector>

namespace farkas {

namespace {

class PhaseOneTableau {
public:
    // rows: equality rows then upper-bound rows; columns: z (q), t (q), art (n), rhs.
    PhaseOneTableau(std::size_t n, std::size_t q)
        : n_(n), q_(q), cols_(2 * q + n), rows_(n + q),
          t_(rows_, std::vector<Rational>(cols_ + 1, Rational(0))), cost_(cols_ + 1, Rational(0)),
          basis_(rows_) {}

    Rational& at(std::size_t r, std::size_t c) { return t_[r][c]; }
    Rational& rhs(std::size_t r) { return t_[r][cols_]; }
    std::size_t z_col(std::size_t j) const { return j; }
    std::size_t slack_col(std::size_t j) const { return q_ + j; }
    std::size_t art_col(std::size_t k) const { return 2 * q_ + k; }

    void finish_setup() {
        for (std::size_t k = 0; k < n_; ++k) basis_[k] = art_col(k);
        for (std::size_t j = 0; j < q_; ++j) basis_[n_ + j] = slack_col(j);
        // Reduced costs of the phase-one objective Σ art.
        for (std::size_t c = 0; c <= cols_; ++c) {
            if (c >= 2 * q_ && c < cols_) continue;
            Rational s = 0;
            for (std::size_t k = 0; k < n_; ++k) s += t_[k][c];
            cost_[c] = -s;
        }
    }

    // Returns true when the optimum of Σ art is zero.
    bool solve() {
        for (;;) {
            std::size_t enter = cols_;
            for (std::size_t c = 0; c < cols_; ++c) {
                if (cost_[c] < 0) {
                    enter = c;
                    break;
                }
            }
            if (enter == cols_) break;

            std::size_t leave = rows_;
            Rational best;
            for (std::size_t r = 0; r < rows_; ++r) {
                if (t_[r][enter] <= 0) continue;
                Rational ratio = t_[r][cols_] / t_[r][enter];
                if (leave == rows_ || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
                    best = std::move(ratio);
                    leave = r;
                }
            }
            // Phase one is bounded below by zero, so some row always limits the step.
            if (leave == rows_) throw Error(ErrorKind::Internal, "unbounded phase-one simplex");
            pivot(leave, enter);
        }
        return cost_[cols_] == 0;
    }

    Rational value_of(std::size_t col) const {
        for (std::size_t r = 0; r < rows_; ++r)
            if (basis_[r] == col) return t_[r][cols_];
        return Rational(0);
    }

private:
    void pivot(std::size_t pr, std::size_t pc) {
        const Rational p = t_[pr][pc];
        for (auto& x : t_[pr]) x /= p;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr || t_[r][pc] == 0) continue;
            const Rational f = t_[r][pc];
            for (std::size_t c = 0; c <= cols_; ++c)
                if (t_[pr][c] != 0) t_[r][c] -= f * t_[pr][c];
        }
        if (cost_[pc] != 0) {
            const Rational f = cost_[pc];
            for (std::size_t c = 0; c <= cols_; ++c)
                if (t_[pr][c] != 0) cost_[c] -= f * t_[pr][c];
        }
        basis_[pr] = pc;
    }

    std::size_t n_, q_, cols_, rows_;
    std::vector<std::vector<Rational>> t_;
    std::vector<Rational> cost_;  // last entry holds minus the objective value
    std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<RationalCoeffs> find_box_point(const VectorFamily& family, const Box& box,
                                             const IntVector& w) {
    require_dim(family, w);
    box.validate(family.size());
    const std::size_t m = family.size();
    const std::size_t n = family.dim();

    // Shift to z = x - lower, 0 ≤ z ≤ width; fixed coordinates drop out.
    IntVector target = w;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < n; ++k) target[k] -= box.lower[i] * family[i][k];

    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < m; ++i)
        if (box.lower[i] < box.upper[i]) open.push_back(i);

    // Row-wise interval bound: a cheap exact rejection before any pivoting.
    for (std::size_t k = 0; k < n; ++k) {
        Integer lo = 0, hi = 0;
        for (auto i : open) {
            const Integer span = family[i][k] * (box.upper[i] - box.lower[i]);
            (span < 0 ? lo : hi) += span;
        }
        if (target[k] < lo || target[k] > hi) return std::nullopt;
    }

    RationalCoeffs x(m);
    for (std::size_t i = 0; i < m; ++i) x[i] = box.lower[i];
    if (open.empty()) return x;  // interval check already forced target == 0

    const std::size_t q = open.size();
    PhaseOneTableau tab(n, q);
    for (std::size_t k = 0; k < n; ++k) {
        const int sign = target[k] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < q; ++j) tab.at(k, tab.z_col(j)) = sign * family[open[j]][k];
        tab.at(k, tab.art_col(k)) = 1;
        tab.rhs(k) = sign * target[k];
    }
    for (std::size_t j = 0; j < q; ++j) {
        tab.at(n + j, tab.z_col(j)) = 1;
        tab.at(n + j, tab.slack_col(j)) = 1;
        tab.rhs(n + j) = box.upper[open[j]] - box.lower[open[j]];
    }
    tab.finish_setup();
    if (!tab.solve()) return std::nullopt;

    for (std::size_t j = 0; j < q; ++j) x[open[j]] += tab.value_of(tab.z_col(j));
    return x;
}

}  // namespace farkas
