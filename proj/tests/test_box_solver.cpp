#include <doctest.h>

#include <random>

#include "farkas/box_solver.hpp"
#include "farkas/classifier.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace farkas;
using farkas::testing::ints;
using farkas::testing::rats;

namespace {

const Box kUnit = Box::uniform(2, 0, 1);

ErrorKind kind_of(auto&& call) {
    try {
        call();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::Internal;
}

RationalVector random_direction(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
    for (;;) {
        RationalVector u;
        bool nonzero = false;
        for (std::size_t k = 0; k < n; ++k) {
            Rational q(num(rng), den(rng));
            q.canonicalize();
            nonzero = nonzero || q != 0;
            u.push_back(q);
        }
        if (nonzero) return u;
    }
}

}  // namespace

TEST_CASE("rational_feasible") {
    const auto f = make_family({{1, 0}, {2, 0}});
    const auto x = rational_feasible(f, kUnit, ints({3, 0}));
    REQUIRE(x);
    CHECK(*x == rats({{1, 1}, {1, 1}}));
    CHECK_FALSE(rational_feasible(f, kUnit, ints({4, 0})));

    const auto g = make_family({{1, 0}, {3, 0}});
    const auto h = rational_feasible(g, kUnit, ints({2, 0}));
    REQUIRE(h);
    CHECK((*h)[0] + 3 * (*h)[1] == 2);
    CHECK(kUnit.contains(std::span<const Rational>(*h)));
}

TEST_CASE("integer_solve") {
    CHECK(integer_solve(make_family({{1, 0}, {2, 0}}), kUnit, ints({3, 0})) == ints({1, 1}));
    CHECK_FALSE(integer_solve(make_family({{1, 0}, {3, 0}}), kUnit, ints({2, 0})));

    const auto f = make_family({{1, -1}, {2, 5}, {0, 3}});
    const Box forced{ints({2, -1, 1}), ints({2, -1, 1})};
    CHECK(integer_solve(f, forced, f.combine(std::span<const Integer>(forced.lower))) == forced.lower);

    // Lexicographically first solution: x1 + x2 = 0 over [-1,1]^2.
    CHECK(integer_solve(make_family({{1}, {1}}), Box::uniform(2, -1, 1), ints({0})) == ints({-1, 1}));

    Limits tight;
    tight.enumeration = 7;
    CHECK(kind_of([&] { integer_solve(f, Box::uniform(3, 0, 1), ints({0, 0}), tight); }) ==
          ErrorKind::LimitExceeded);
    CHECK(box_point_count(Box::uniform(3, -1, 1)) == 27);
}

TEST_CASE("decide_afr") {
    const auto f = make_family({{1, 0}, {2, 0}});
    auto d = decide_afr(f, kUnit, ints({3, 0}));
    CHECK(d.representable);
    CHECK(d.reason == DecisionReason::Found);
    CHECK(d.solution == ints({1, 1}));

    d = decide_afr(f, kUnit, ints({4, 0}));
    CHECK_FALSE(d.representable);
    CHECK(d.reason == DecisionReason::RationalInfeasible);
    CHECK(to_string(d.reason) == "rational_infeasible");

    d = decide_afr(make_family({{2, 0}, {2, 0}}), kUnit, ints({1, 0}));
    CHECK_FALSE(d.representable);
    CHECK(d.reason == DecisionReason::LatticeFail);
    CHECK(to_string(d.reason) == "lattice_fail");

    // Fixed coordinates shift the coset: x1 = 1 forces w - v1 into 2Z.
    const Box mixed{ints({1, 0}), ints({1, 3})};
    d = decide_afr(make_family({{1}, {2}}), mixed, ints({4}));
    CHECK_FALSE(d.representable);
    CHECK(d.reason == DecisionReason::LatticeFail);
    CHECK(decide_afr(make_family({{1}, {2}}), mixed, ints({5})).solution == ints({1, 2}));

    CHECK(kind_of([] { decide_afr(make_family({{1, 0}, {3, 0}}), kUnit, ints({2, 0})); }) ==
          ErrorKind::NotInClass);
    DecideOptions skip;
    skip.check_class = false;
    CHECK(kind_of([&] { decide_afr(make_family({{1, 0}, {3, 0}}), kUnit, ints({2, 0}), skip); }) ==
          ErrorKind::NotInClass);
    CHECK(kind_of([] { decide_afr(make_family({{1, 0}}), kUnit, ints({1, 0})); }) ==
          ErrorKind::DimensionMismatch);
}

TEST_CASE("decide_wfr") {
    const auto f = make_family({{1, 0}, {2, 0}});
    const Box box{ints({0, -1}), ints({2, 1})};
    auto d = decide_wfr(f, box, ints({0, 0}));
    CHECK(d.representable);
    REQUIRE(d.solution);
    CHECK(f.combine(std::span<const Integer>(*d.solution)) == ints({0, 0}));

    d = decide_wfr(f, box, ints({-3, 0}));
    CHECK_FALSE(d.representable);
    CHECK(d.reason == DecisionReason::RationalInfeasible);

    d = decide_wfr(make_family({{2, 0}, {4, 0}}), kUnit, ints({3, 0}));
    CHECK_FALSE(d.representable);
    CHECK(d.reason == DecisionReason::LatticeFail);

    CHECK(kind_of([&] { decide_wfr(f, Box{ints({0, 0}), ints({0, 1})}, ints({0, 0})); }) ==
          ErrorKind::InvalidArgument);
    CHECK(kind_of([] { decide_wfr(make_family({{1, 0}, {3, 0}}), kUnit, ints({1, 0})); }) ==
          ErrorKind::NotInClass);
}

TEST_CASE("certificates") {
    const auto f = make_family({{1, 0}, {2, 0}});
    const Certificate ux(rats({{1, 1}, {0, 1}}));
    const Certificate uy(rats({{0, 1}, {1, 1}}));

    CHECK(certificate_rhs(ux, f, kUnit) == 3);
    CHECK(certificate_rhs(uy, f, kUnit) == 0);
    const auto neg = Box::uniform(2, -1, 0);
    CHECK(certificate_rhs(ux, f, neg) == 0);
    CHECK(certificate_rhs(ux, f, neg) == oracle::box_max(ux.u, f, neg));

    CHECK(verify_certificate(ux, f, kUnit, ints({4, 0})));
    CHECK_FALSE(verify_certificate(ux, f, kUnit, ints({3, 0})));
    CHECK_FALSE(verify_certificate(uy, f, kUnit, ints({3, 0})));

    CHECK(kind_of([] { Certificate c(rats({{0, 1}, {0, 1}})); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("certificate soundness and box maximum") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t m = 1 + trial % 4;
        const std::size_t n = 1 + trial % 3;
        const auto f = oracle::random_family(rng, m, n, -2, 2);
        const auto box = oracle::random_box(rng, m, -2, 2, false);
        std::uniform_int_distribution<long> d(-6, 6);
        IntVector w(n);
        for (auto& x : w) x = d(rng);
        const Certificate cert(random_direction(rng, n));
        CHECK(certificate_rhs(cert, f, box) == oracle::box_max(cert.u, f, box));
        if (verify_certificate(cert, f, box, w)) CHECK_FALSE(oracle::fm_feasible(f, box, w));
    }
}

TEST_CASE("decisions match exhaustive search on small families") {
    std::mt19937_64 rng(2024);
    int afr_checked = 0, wfr_checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t m = 1 + trial % 3;
        const std::size_t n = 1 + trial % 2;
        const auto f = oracle::random_family(rng, m, n, -2, 2);
        std::uniform_int_distribution<long> d(-4, 4);
        IntVector w(n);
        for (auto& x : w) x = d(rng);

        if (is_afr(f).is_afr) {
            const auto box = oracle::random_box(rng, m, -2, 2, false);
            const auto dec = decide_afr(f, box, w);
            const bool exists = !oracle::all_integer_solutions(f, box, w).empty();
            CHECK(dec.representable == exists);
            if (dec.solution) {
                CHECK(box.contains(std::span<const Integer>(*dec.solution)));
                CHECK(f.combine(std::span<const Integer>(*dec.solution)) == w);
            }
            ++afr_checked;
        }
        if (is_wfr(f).is_wfr) {
            const auto box = oracle::random_box(rng, m, -2, 2, true);
            const auto dec = decide_wfr(f, box, w);
            CHECK(dec.representable == !oracle::all_integer_solutions(f, box, w).empty());
            ++wfr_checked;
        }
    }
    CHECK(afr_checked > 100);
    CHECK(wfr_checked > 100);
}
