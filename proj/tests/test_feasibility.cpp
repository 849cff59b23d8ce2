#include <doctest.h>

#include <random>

#include "farkas/feasibility.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace farkas;
using farkas::testing::ints;
using farkas::testing::rats;

namespace {

bool valid_point(const VectorFamily& f, const Box& box, const IntVector& w, const RationalCoeffs& x) {
    if (!box.contains(std::span<const Rational>(x))) return false;
    const auto sum = f.combine(std::span<const Rational>(x));
    for (std::size_t k = 0; k < w.size(); ++k)
        if (sum[k] != w[k]) return false;
    return true;
}

}  // namespace

TEST_CASE("find_box_point examples") {
    const auto f = make_family({{1, 0}, {2, 0}});
    const auto unit = Box::uniform(2, 0, 1);

    const auto x = find_box_point(f, unit, ints({3, 0}));
    REQUIRE(x);
    CHECK(*x == rats({{1, 1}, {1, 1}}));

    CHECK_FALSE(find_box_point(f, unit, ints({4, 0})));
    CHECK_FALSE(find_box_point(f, unit, ints({1, 1})));

    const auto g = make_family({{1, 0}, {3, 0}});
    const auto half = find_box_point(g, unit, ints({2, 0}));
    REQUIRE(half);
    CHECK(valid_point(g, unit, ints({2, 0}), *half));
}

TEST_CASE("degenerate boxes") {
    const auto f = make_family({{1, 1}, {0, 1}});
    Box fixed{ints({2, -1}), ints({2, -1})};
    const auto x = find_box_point(f, fixed, ints({2, 1}));
    REQUIRE(x);
    CHECK(*x == rats({{2, 1}, {-1, 1}}));
    CHECK_FALSE(find_box_point(f, fixed, ints({2, 2})));
}

TEST_CASE("zero target and zero vectors") {
    const auto f = make_family({{0, 0}, {0, 0}});
    CHECK(find_box_point(f, Box::uniform(2, -1, 1), ints({0, 0})));
    CHECK_FALSE(find_box_point(f, Box::uniform(2, -1, 1), ints({0, 1})));
    CHECK_FALSE(find_box_point(make_family({{1}}), Box::uniform(1, 1, 2), ints({0})));
}

TEST_CASE("simplex agrees with Fourier-Motzkin") {
    std::mt19937_64 rng(4242);
    int feasible = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const std::size_t m = 1 + trial % 5;
        const std::size_t n = 1 + trial % 3;
        const auto f = oracle::random_family(rng, m, n, -3, 3);
        const auto box = oracle::random_box(rng, m, -2, 2, false);
        std::uniform_int_distribution<long> d(-5, 5);
        IntVector w(n);
        for (auto& x : w) x = d(rng);

        const auto x = find_box_point(f, box, w);
        CHECK(x.has_value() == oracle::fm_feasible(f, box, w));
        if (x) {
            ++feasible;
            CHECK(valid_point(f, box, w, *x));
        }
    }
    CHECK(feasible > 50);
}
