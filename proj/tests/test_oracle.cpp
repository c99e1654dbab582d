#include "doctest.h"

#include <random>

#include "normform/cubic_ring.hpp"
#include "normform/errors.hpp"
#include "normform/oracle.hpp"

using namespace normform;

namespace {

struct XY {
    long x, y;
    int delta;
};

void check_found(std::vector<SolutionRecord> const & found, std::vector<XY> const & expected)
{
    REQUIRE(found.size() == expected.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
        CHECK(found[i].x == expected[i].x);
        CHECK(found[i].y == expected[i].y);
        CHECK(found[i].delta == expected[i].delta);
    }
}

} // namespace

TEST_CASE("norm_value")
{
    CHECK(norm_value(2, 4, 4) == 1);
    CHECK(norm_value(2, 4, -2) == 1);
    CHECK(norm_value(2, 0, 0) == 49);
    CHECK(norm_value(3, 9, 6) == 1);
}

TEST_CASE("norm_value equals the ring norm of x - s y + s^2")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> coord(-1000, 1000);
    std::uniform_int_distribution<long> param(2, 25);
    for (int i = 0; i < 100000; ++i) {
        long const t = param(rng);
        long const x = coord(rng);
        long const y = coord(rng);
        RingContext const ctx(t);
        REQUIRE(norm_value(t, x, y) == norm(RingElement{x, -y, 1}, ctx));
    }
}

TEST_CASE("search window")
{
    CHECK_THROWS_AS(SearchWindow(2, 3), InvalidWindow);
    CHECK_THROWS_AS(SearchWindow(1, 100), InvalidWindow);
    CHECK_NOTHROW(SearchWindow(2, 8));
    CHECK_THROWS_AS(SearchWindow(4096, std::int64_t(1) << 30), InvalidWindow);
    CHECK(SearchWindow::with_default_bound(5).bound() == 1000);
    CHECK(SearchWindow::with_default_bound(30).bound() == 1800);
}

TEST_CASE("brute_force")
{
    check_found(brute_force(SearchWindow(2, 50)), {{4, -2, 0}, {4, 4, 0}});
    check_found(brute_force(SearchWindow(3, 100)), {{9, -3, 0}, {9, 6, 0}});
    check_found(brute_force(SearchWindow(2, 8)), {{4, -2, 0}, {4, 4, 0}});
}

TEST_CASE("bracketing search agrees with the naive scan")
{
    for (std::int64_t t = 2; t <= 6; ++t) {
        SearchWindow const w(t, std::max<std::int64_t>(2 * t * t, 120));
        auto const fast = brute_force(w);
        auto const slow = reference::brute_force(w);
        REQUIRE(fast == slow);
    }
}

TEST_CASE("bracketing search agrees with the naive scan on a wider window")
{
    /* for y < 0 the cubic in x has three monotone runs inside the window */
    SearchWindow const w(2, 300);
    REQUIRE(brute_force(w) == reference::brute_force(w));
}

TEST_CASE("cross_check")
{
    auto const a = cross_check(2, 10, 1000);
    CHECK(a.ok);
    CHECK(a.entries.size() == 9);
    for (auto const & e : a.entries) {
        REQUIRE(e.found.size() == 2);
        CHECK(e.found[0].m == -1);
        CHECK(e.found[1].m == 2);
    }

    CHECK(cross_check(2, 2, 8).ok);
    CHECK_THROWS_AS(cross_check(2, 30, 1000), InvalidWindow);
    CHECK_THROWS_AS(cross_check(1, 3, 1000), InvalidRange);
}
