#include <catch2/catch_amalgamated.hpp>

#include <sieve/curve.hpp>

#include <random>

using namespace sieve;

namespace {
std::vector<Int> iv(std::initializer_list<long> xs) {
    std::vector<Int> v;
    for (long x : xs) v.emplace_back(x);
    return v;
}
}  // namespace

TEST_CASE("curve invariants are enforced at construction", "[curve]") {
    CHECK_NOTHROW(PulledTightCurve::make(2, 2, 1, iv({1, 3, 1})));
    CHECK_THROWS_AS(PulledTightCurve::make(2, 2, 1, iv({1, 3, 2})), std::domain_error);   // asymmetric
    CHECK_NOTHROW(PulledTightCurve::make(2, 0, 0, iv({1, 0, 1})));  // tau=0 puts no floor on n_0
    CHECK_NOTHROW(PulledTightCurve::make(2, 0, 0, iv({1, 2, 1})));
    CHECK_THROWS_AS(PulledTightCurve::make(1, 1, 0, iv({1})), std::domain_error);         // eps=0 forces tau=0
    CHECK_THROWS_AS(PulledTightCurve::make(1, 2, 1, iv({1})), std::domain_error);         // |tau| > g
    CHECK_THROWS_AS(PulledTightCurve::make(1, 1, 1, iv({0})), std::domain_error);         // tau>0 needs n_0>=1
    CHECK_THROWS_AS(PulledTightCurve::make(2, 1, 1, iv({1, 1})), std::invalid_argument);  // wrong band size
    CHECK_THROWS_AS(PulledTightCurve::make(1, 1, 2, iv({1})), std::domain_error);         // bad eps

    auto c = PulledTightCurve::make(2, 2, 1, iv({1, 3, 1}));
    CHECK(c.V() == 5);
    CHECK(c.n(0) == 3);
    CHECK(c.n(1) == 1);
    CHECK(c.n(2) == 0);
    CHECK(c.n(-7) == 0);
    CHECK(c.max_n() == 3);
    CHECK(c.slope_s() == 3);
    CHECK(c.diag_D() == Rat(3, 2));
}

TEST_CASE("curve_from_thin realizes staircase plus figure-eights", "[curve]") {
    auto trefoil = curve_from_thin(3, 1);
    CHECK(trefoil.V() == 1);
    CHECK(trefoil.n(0) == 1);
    CHECK(trefoil.genus() == 1);
    CHECK(trefoil.eps() == 1);

    auto fig8 = curve_from_thin(5, 0);
    CHECK(fig8.V() == 2);
    CHECK(fig8.n(0) == 2);
    CHECK(fig8.tau() == 0);
    CHECK(fig8.eps() == 0);

    auto k52 = curve_from_thin(7, 1);
    CHECK(k52.V() == 3);
    CHECK(k52.n(0) == 3);

    SECTION("mirror is normalized to tau >= 0") {
        auto m = curve_from_thin(7, -1);
        CHECK(m.tau() == 1);
        CHECK(m.eps() == 1);
        CHECK(m.V() == 3);
    }

    SECTION("inconsistent pairs are rejected") {
        CHECK_THROWS_AS(curve_from_thin(4, 1), std::domain_error);   // even det
        CHECK_THROWS_AS(curve_from_thin(5, 1), std::domain_error);   // F = 1/2
        CHECK_THROWS_AS(curve_from_thin(3, 0), std::domain_error);   // F = 1/2
        CHECK_THROWS_AS(curve_from_thin(1, 2), std::domain_error);   // det < 2|tau|+1
        CHECK_THROWS_AS(curve_from_thin(-3, 1), std::domain_error);
    }

    SECTION("caller layout spreads figure-eights symmetrically") {
        // det 11, tau 1: staircase 1 vertical + 2 figure-eights (e.g. 6_2).
        auto spread = curve_from_thin(11, 1, Fig8Layout{{-1, 1}, {1, 1}});
        CHECK(spread.genus() == 2);
        CHECK(spread.V() == 5);
        CHECK(spread.n(1) == 2);
        CHECK(spread.n(0) == 1);
        CHECK_THROWS_AS(curve_from_thin(11, 1, Fig8Layout{{1, 2}}), std::domain_error);  // asymmetric
        CHECK_THROWS_AS(curve_from_thin(11, 1, Fig8Layout{{0, 1}}), std::domain_error);  // wrong total
        auto dflt = curve_from_thin(11, 1);
        CHECK(dflt.n(0) == 5);
        CHECK(dflt.V() == spread.V());
    }

    SECTION("unknot edge case") {
        auto u = curve_from_thin(1, 0);
        CHECK(u.V() == 0);
        CHECK(u.genus() == 0);
    }
}

TEST_CASE("curve_lspace has one vertical per level", "[curve]") {
    auto g1 = curve_lspace(1);
    CHECK(g1.V() == 1);
    CHECK(g1.n(0) == 1);
    auto g2 = curve_lspace(2);
    CHECK(g2.V() == 3);
    CHECK(g2.n(-1) == 1);
    CHECK(g2.n(0) == 1);
    CHECK(g2.n(1) == 1);
    CHECK(curve_lspace(4).V() == 7);
    for (long g = 1; g <= 6; ++g) CHECK(curve_lspace(g).max_n() == 1);
    CHECK_THROWS_AS(curve_lspace(0), std::domain_error);
}

TEST_CASE("curve_from_pretzel matches the thin formula", "[curve]") {
    auto tref = curve_from_pretzel(iv({0, 0, 0}));
    CHECK(tref.genus() == 1);
    CHECK(tref.V() == 1);
    auto k52 = curve_from_pretzel(iv({1, 0, 0}));
    CHECK(k52.genus() == 1);
    CHECK(k52.V() == 3);
    auto j38 = curve_from_pretzel(iv({1, 0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(j38.genus() == 4);
    CHECK(j38.tau() == 4);
    CHECK(j38.V() == 15);

    std::mt19937 rng(41);
    std::uniform_int_distribution<int> dg(1, 3), dk(0, 3);
    for (int t = 0; t < 150; ++t) {
        std::vector<Int> ks;
        int g = dg(rng);
        for (int i = 0; i < 2 * g + 1; ++i) ks.emplace_back(dk(rng));
        auto c = curve_from_pretzel(ks);
        auto via_thin = curve_from_thin(det_pretzel(ks), g);
        CHECK(c.V() == via_thin.V());
        CHECK(c.tau() == g);
        CHECK(c.eps() == 1);
        // symmetry and V bookkeeping
        Int total = 0;
        for (long i = -(c.genus() - 1); i <= c.genus() - 1; ++i) {
            total += c.n(i);
            CHECK(c.n(i) == c.n(-i));
        }
        CHECK(total == c.V());
    }
}

TEST_CASE("realize_pl lays out verticals and the closing component", "[curve]") {
    auto r1 = realize_pl(curve_lspace(1), Rat(1, 100));
    REQUIRE(r1.verticals.size() == 1);
    CHECK(r1.verticals[0].level == 0);
    REQUIRE(r1.diagonal.has_value());
    CHECK(r1.diagonal->slope_s == 1);

    auto r2 = realize_pl(curve_from_thin(5, 0), Rat(1, 100));
    REQUIRE(r2.verticals.size() == 2);
    CHECK(r2.verticals[0].level == 0);
    CHECK(r2.verticals[1].level == 0);
    CHECK(!r2.diagonal.has_value());
    REQUIRE(r2.horizontal_height.has_value());
    CHECK(*r2.horizontal_height == 0);

    auto r3 = realize_pl(curve_lspace(2), Rat(1, 100));
    REQUIRE(r3.verticals.size() == 3);
    REQUIRE(r3.diagonal.has_value());
    CHECK(r3.diagonal->slope_s == 3);
    CHECK(r3.diagonal->y_start == Rat(-3, 2));
    CHECK(r3.diagonal->y_end == Rat(3, 2));

    SECTION("x-coordinates are distinct and inside (3/4, 1)") {
        auto r = realize_pl(curve_from_pretzel(iv({2, 1, 2})), Rat(1, 50));
        for (std::size_t i = 0; i < r.verticals.size(); ++i) {
            CHECK(r.verticals[i].x > Rat(3, 4));
            CHECK(r.verticals[i].x < 1);
            for (std::size_t j = i + 1; j < r.verticals.size(); ++j)
                CHECK(r.verticals[i].x != r.verticals[j].x);
        }
        CHECK(r.verticals.front().y_lo == Rat(-1, 2) + Rat(1, 50));
        CHECK(r.verticals.front().y_hi == Rat(1, 2) - Rat(1, 50));
    }

    CHECK_THROWS_AS(realize_pl(curve_lspace(1), Rat(0)), std::domain_error);
    CHECK_THROWS_AS(realize_pl(curve_lspace(1), Rat(-1, 4)), std::domain_error);
    CHECK_THROWS_AS(realize_pl(curve_lspace(1), Rat(1, 2)), std::domain_error);
}
