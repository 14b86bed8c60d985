#include <doctest.h>

#include <cmath>
#include <numeric>
#include <set>

#include "wpv/exactalg.hpp"
#include "wpv/kernel.hpp"
#include "wpv/mcshane.hpp"

using namespace wpv;

namespace {

constexpr double kStep = 1e-5;

template <typename F>
double central(F f, double x)
{
    return (f(x + kStep) - f(x - kStep)) / (2 * kStep);
}

// Traces of the integer Markoff tree over (a,b,c), depth <= d, by the same
// Vieta move done in exact integers.
void markoff_tree(Integer a, Integer b, Integer c, int d, std::multiset<Integer>& out)
{
    if (d == 0) return;
    const Integer t = a * b - c;
    out.insert(t);
    markoff_tree(a, t, b, d - 1, out);
    markoff_tree(t, b, a, d - 1, out);
}

}  // namespace

TEST_CASE("gap functions: limits and symmetries")
{
    for (double b1 : {0.5, 1.0, 2.0}) {
        for (double l : {0.5, 1.0, 2.0}) CHECK(sid(b1, 0.0, l) == doctest::Approx(0.0));
        CHECK(sid(b1, 1.0, 80.0) < 1e-15);
        CHECK(sid(b1, 1.0, 1.0) > sid(b1, 1.0, 2.0));
        CHECK(sid(b1, 1.0, 1.0) > 0);
        CHECK(mid(0.0, b1, 1.0) == doctest::Approx(0.0));
        CHECK(mid(b1, 0.7, 1.9) > 0);
        CHECK(mid(b1, 0.7, 1.9) == doctest::Approx(mid(b1, 1.9, 0.7)));
        CHECK(mid(b1, 0.7, 1.9) == doctest::Approx(mid(b1, 2.6 - 1.3, 1.3)));
        CHECK(half_mid_equals_innergap(b1, 0.7, 1.9) == doctest::Approx(mid(b1, 0.7, 1.9) / 2));
    }
    // l -> 0 against the direct formula
    const double direct = std::log((1 + std::cosh(1.5)) / (1 + std::cosh(0.5)));
    CHECK(sid(2.0, 1.0, 1e-9) == doctest::Approx(direct));
}

TEST_CASE("derivative identities on the 27-point grid")
{
    const double grid[] = {0.5, 1.0, 2.0};
    for (double b1 : grid) {
        for (double bi : grid) {
            for (double x : grid) {
                CAPTURE(b1);
                CAPTURE(bi);
                CAPTURE(x);
                const double lhs = central([&](double t) { return sid(t, bi, x) + mid(t, bi, x); }, b1);
                const double rhs = (H_num(x, b1 + bi) + H_num(x, b1 - bi)) / 2;
                CHECK(std::abs(lhs - rhs) <= 1e-7);
                const double dmid = central([&](double t) { return mid(t, bi, x); }, b1);
                CHECK(std::abs(dmid - H_num(bi + x, b1)) <= 1e-7);
            }
        }
    }
}

TEST_CASE("torus points")
{
    CHECK_NOTHROW(TorusPoint(3, 3, 3));
    CHECK_THROWS_AS(TorusPoint(3, 3, 4), Error);
    CHECK_THROWS_AS(TorusPoint(2, 2, 2), Error);
    CHECK_THROWS_AS(TorusPoint::from_xy(2.1, 2.1), Error);
    for (const auto& [x, y] : {std::pair{3.0, 3.0}, std::pair{3.5, 4.0}, std::pair{10.0, 3.0}}) {
        const TorusPoint p = TorusPoint::from_xy(x, y);
        CHECK(markoff_residual(p.x(), p.y(), p.z()) <= 1e-12);
    }
    CHECK(TorusPoint::from_xy(3, 3).z() == doctest::Approx(6.0));
    CHECK(TorusPoint::from_xy(3, 3, false).z() == doctest::Approx(3.0));
}

TEST_CASE("enumeration by slope")
{
    const TorusPoint modular(3, 3, 3);
    auto depth0 = enumerate_torus_geodesics(modular, 0);
    REQUIRE(depth0.size() == 3);
    for (const auto& g : depth0) CHECK(g.length == doctest::Approx(2 * std::acosh(1.5)));
    CHECK(depth0[0].length == doctest::Approx(1.9248).epsilon(1e-4));

    for (int d = 0; d <= 12; ++d) {
        EnumerationStats stats;
        const auto gs = enumerate_torus_geodesics(modular, d, &stats);
        CHECK(gs.size() == static_cast<std::size_t>(3 + 3 * ((1 << d) - 1)));
        CHECK(stats.max_markoff_residual <= 1e-9);
        std::set<std::pair<std::int64_t, std::int64_t>> slopes;
        for (const auto& g : gs) {
            CHECK(std::gcd(g.p, g.q) == 1);
            CHECK(g.q >= 0);
            slopes.insert({g.p, g.q});
        }
        CHECK(slopes.size() == gs.size());
    }
    CHECK_THROWS_AS(enumerate_torus_geodesics(modular, -1), Error);
}

TEST_CASE("enumerated traces follow the integer Markoff tree")
{
    std::multiset<Integer> exact{3, 3, 3};
    markoff_tree(3, 3, 3, 6, exact);
    markoff_tree(3, 3, 3, 6, exact);
    markoff_tree(3, 3, 3, 6, exact);
    std::multiset<Integer> numeric;
    for (const auto& g : enumerate_torus_geodesics(TorusPoint(3, 3, 3), 6))
        numeric.insert(Integer(static_cast<long>(std::llround(std::exp(g.log_trace)))));
    CHECK(numeric == exact);
}

TEST_CASE("McShane partial sums on the modular torus")
{
    const auto r0 = verify_torus_identity(TorusPoint(3, 3, 3), 0, 1e-6);
    CHECK(r0.partial_sums.at(0) == doctest::Approx(0.7639).epsilon(1e-4));
    CHECK(r0.sum < 1);

    const auto r = verify_torus_identity(TorusPoint(3, 3, 3), 25, 1e-6);
    CHECK(r.partial_sums.size() == 26);
    CHECK(r.monotone);
    CHECK(r.bounded);
    CHECK(r.converged);
    CHECK(r.gap < 1e-6);
    CHECK(r.pruned_bound < 1e-15);
    for (std::size_t d = 1; d < r.partial_sums.size(); ++d) CHECK(r.partial_sums[d] >= r.partial_sums[d - 1]);
}

TEST_CASE("McShane identity at other points of the Markoff variety")
{
    for (const TorusPoint& p : {TorusPoint::from_xy(3.5, 4.0), TorusPoint::from_xy(2.5, 5.0, false),
                                TorusPoint::from_xy(6.0, 2.2, false)}) {
        const auto r = verify_torus_identity(p, 30, 1e-6);
        CAPTURE(p.z());
        CHECK(r.pass());
        CHECK(r.max_markoff_residual <= 1e-9);
    }
}
