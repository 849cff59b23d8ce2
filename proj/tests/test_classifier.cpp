#include <doctest.h>

#include <numeric>
#include <random>

#include "farkas/classifier.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace farkas;
using farkas::testing::ints;

namespace {

void check_wfr_witness(const VectorFamily& f, const WfrCounterexample& cx) {
    const auto& a = cx.pattern.values;
    REQUIRE(a.size() == f.size());
    CHECK(std::count(a.begin(), a.end(), 1) == 1);
    CHECK(a[cx.pattern.special_index] == 1);
    const Box box = pattern_box(a);
    CHECK(box.contains(std::span<const Rational>(cx.x)));
    for (const auto& s : f.combine(std::span<const Rational>(cx.x))) CHECK(s == 0);
    CHECK(oracle::all_integer_solutions(f, box, IntVector(f.dim(), Integer(0))).empty());
}

void check_afr_witness(const VectorFamily& f, const Circuit& c) {
    CHECK_FALSE(within_afr_bound(c));
    IntVector sum(f.dim(), Integer(0));
    for (std::size_t k = 0; k < c.support.size(); ++k)
        for (std::size_t d = 0; d < f.dim(); ++d) sum[d] += c.coeffs[k] * f[c.support[k]][d];
    CHECK(sum == IntVector(f.dim(), Integer(0)));
}

}  // namespace

TEST_CASE("is_afr examples") {
    CHECK(is_afr(make_family({{1, 0}})).is_afr);
    CHECK(is_afr(make_family({{1, 0}, {2, 0}})).is_afr);

    const auto bad = make_family({{1, 0}, {3, 0}});
    const auto v = is_afr(bad);
    CHECK_FALSE(v.is_afr);
    REQUIRE(v.violating_circuit);
    CHECK(v.violating_circuit->coeffs == ints({3, -1}));
    check_afr_witness(bad, *v.violating_circuit);

    const auto swapped = is_afr(make_family({{3, 0}, {1, 0}}));
    REQUIRE(swapped.violating_circuit);
    CHECK(swapped.violating_circuit->coeffs == ints({1, -3}));

}

TEST_CASE("is_afr on two triangles joined by a bridge") {
    const auto f = make_family({
        {1, 1, 0, 0, 0, 0},
        {1, 0, 1, 0, 0, 0},
        {0, 1, 1, 0, 0, 0},
        {0, 0, 1, 1, 0, 0},
        {0, 0, 0, 1, 1, 0},
        {0, 0, 0, 1, 0, 1},
        {0, 0, 0, 0, 1, 1},
    });
    CHECK(is_afr(f).is_afr);
    CHECK(is_afr_oracle(f));
}

TEST_CASE("is_afr_oracle examples") {
    CHECK_FALSE(is_afr_oracle(make_family({{1, 0}, {3, 0}})));
    CHECK(is_afr_oracle(make_family({{1, 0}, {2, 0}})));
    CHECK(is_afr_oracle(make_family({{0, 1}})));
    CHECK(is_afr_oracle(make_family({{0, 0}, {1, 0}})));

    Limits small;
    small.afr_oracle_max_m = 2;
    CHECK_THROWS_AS(is_afr_oracle(make_family({{1}, {1}, {1}}), small), Error);
}

TEST_CASE("is_afr_oracle_boxed") {
    const Box unit = Box::uniform(2, 0, 1);
    CHECK(is_afr_oracle_boxed(make_family({{1, 0}, {2, 0}}), unit, ints({3, 0})));
    CHECK_FALSE(is_afr_oracle_boxed(make_family({{1, 0}, {3, 0}}), unit, ints({2, 0})));
    const auto f = make_family({{1, 4}, {-3, 2}, {5, 5}});
    const Box forced{ints({1, -2, 0}), ints({1, -2, 0})};
    CHECK(is_afr_oracle_boxed(f, forced, f.combine(std::span<const Integer>(forced.lower))));
    // Off the coset: the implication holds vacuously.
    CHECK(is_afr_oracle_boxed(make_family({{2, 0}, {2, 0}}), unit, ints({1, 0})));
}

TEST_CASE("is_wfr examples") {
    CHECK(is_wfr(make_family({{1, 0}, {2, 0}})).is_wfr);
    CHECK(is_wfr(make_family({{1, 0}})).is_wfr);

    const auto bad = make_family({{1, 0}, {3, 0}});
    const auto v = is_wfr(bad);
    CHECK_FALSE(v.is_wfr);
    REQUIRE(v.counterexample);
    CHECK(v.counterexample->pattern.values == std::vector<int>{1, -1});
    CHECK(v.counterexample->pattern.special_index == 0);
    check_wfr_witness(bad, *v.counterexample);

    CHECK(is_wfr_oracle(make_family({{1, 0}, {2, 0}})));
    CHECK_FALSE(is_wfr_oracle(bad));
    CHECK(is_wfr_oracle(make_family({{0, 0}})));
}

TEST_CASE("pattern helpers") {
    const auto box = pattern_box({1, -1, 0});
    CHECK(box.lower == ints({1, -1, 0}));
    CHECK(box.upper == ints({2, 0, 1}));

    CHECK(SignPattern::from_values({-1, 1, 0}).special_index == 1);
    CHECK_THROWS_AS(SignPattern::from_values({1, 1}), Error);
    CHECK_THROWS_AS(SignPattern::from_values({0, -1}), Error);
    CHECK_THROWS_AS(SignPattern::from_values({2, 0}), Error);

    const auto f = make_family({{1, 0}, {3, 0}});
    CHECK(pattern_violation(f, {1, -1}));
    CHECK_FALSE(pattern_violation(f, {1, 0}));
    CHECK_FALSE(pattern_violation(make_family({{1, 0}, {2, 0}}), {1, -1}));
}

TEST_CASE("first counterexample follows canonical pattern order") {
    // Two independent bad pairs; the special index 0 patterns come first.
    const auto f = make_family({{1, 0}, {3, 0}, {0, 1}, {0, 3}});
    const auto v = is_wfr(f);
    REQUIRE(v.counterexample);
    CHECK(v.counterexample->pattern.values == std::vector<int>{1, -1, -1, -1});
}

TEST_CASE("afr implies wfr") {
    CHECK(afr_implies_wfr_check(make_family({{1, 0}, {2, 0}})));
    CHECK(afr_implies_wfr_check(make_family({{1, 0}, {3, 0}})));
    CHECK(afr_implies_wfr_check(make_family({{1, 0}})));
}

TEST_CASE("classifiers agree with oracles on random families") {
    std::mt19937_64 rng(31337);
    int afr_false = 0, wfr_false = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = 1 + trial % 4;
        const std::size_t n = 1 + trial % 3;
        const auto f = oracle::random_family(rng, m, n, -3, 3);

        const auto afr = is_afr(f);
        CHECK(afr.is_afr == is_afr_oracle(f));
        if (!afr.is_afr) {
            ++afr_false;
            REQUIRE(afr.violating_circuit);
            check_afr_witness(f, *afr.violating_circuit);
        }

        const auto wfr = is_wfr(f);
        CHECK(wfr.is_wfr == is_wfr_oracle(f));
        if (!wfr.is_wfr) {
            ++wfr_false;
            REQUIRE(wfr.counterexample);
            check_wfr_witness(f, *wfr.counterexample);
        }
        CHECK((!afr.is_afr || wfr.is_wfr));

        std::vector<std::size_t> order(m);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        const auto p = f.permuted(order);
        CHECK(is_afr(p).is_afr == afr.is_afr);
        CHECK(is_wfr(p).is_wfr == wfr.is_wfr);
        CHECK(is_afr(f.negated()).is_afr == afr.is_afr);
        CHECK(is_wfr(f.negated()).is_wfr == wfr.is_wfr);
    }
    CHECK(afr_false > 20);
    CHECK(wfr_false > 5);
}
