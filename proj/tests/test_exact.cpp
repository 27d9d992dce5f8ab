#include <catch2/catch_amalgamated.hpp>

#include <sieve/exact.hpp>

#include <random>

using namespace sieve;

TEST_CASE("floor_div and ceil_div match mathematical floor/ceil", "[exact]") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(7, -2) == -4);
    CHECK(floor_div(-7, -2) == 3);
    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(floor_div(6, 3) == 2);
    CHECK(ceil_div(6, 3) == 2);
    CHECK_THROWS_AS(floor_div(1, 0), std::domain_error);

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-50, 50);
    for (int t = 0; t < 500; ++t) {
        int n = d(rng), m = d(rng);
        if (m == 0) continue;
        Int f = floor_div(n, m), c = ceil_div(n, m);
        // f <= n/m < f+1 and c-1 < n/m <= c, multiplied through by m.
        if (m > 0) {
            CHECK(f * m <= n);
            CHECK((f + 1) * m > n);
            CHECK(c * m >= n);
            CHECK((c - 1) * m < n);
        } else {
            CHECK(f * m >= n);
            CHECK((f + 1) * m < n);
            CHECK(c * m <= n);
            CHECK((c - 1) * m > n);
        }
    }
}

TEST_CASE("EpsRat ordering is lexicographic in (value, eps)", "[exact]") {
    EpsRat below(Rat(1, 2), -1), on(Rat(1, 2), 0), above(Rat(1, 2), 1);
    CHECK(below < on);
    CHECK(on < above);
    CHECK(below < above);
    CHECK(EpsRat(Rat(1, 3), 5) < EpsRat(Rat(1, 2), -5));

    // Order agrees with v + e*c for small real e > 0, on random triples.
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dv(-12, 12), de(-3, 3);
    const double e = 1e-9;
    for (int t = 0; t < 400; ++t) {
        EpsRat a(Rat(dv(rng), 1 + std::abs(dv(rng))), de(rng));
        EpsRat b(Rat(dv(rng), 1 + std::abs(dv(rng))), de(rng));
        double da = a.value.convert_to<double>() + e * a.eps_coeff.convert_to<double>();
        double db = b.value.convert_to<double>() + e * b.eps_coeff.convert_to<double>();
        if (std::abs(da - db) > 1e-12) {
            CHECK((a < b) == (da < db));
        }
        CHECK(((a < b) || (b < a) || a == b));  // total
    }
}

TEST_CASE("level_of picks the band of a perturbed height", "[exact]") {
    CHECK(level_of(EpsRat(Rat(0))) == 0);
    CHECK(level_of(EpsRat(Rat(1, 3))) == 0);
    CHECK(level_of(EpsRat(Rat(2, 3))) == 1);
    CHECK(level_of(EpsRat(Rat(1, 2), 1)) == 1);
    CHECK(level_of(EpsRat(Rat(1, 2), -1)) == 0);
    CHECK(level_of(EpsRat(Rat(3, 2), -1)) == 1);
    CHECK(level_of(EpsRat(Rat(-5, 2), 1)) == -2);
    CHECK_THROWS_AS(level_of(EpsRat(Rat(1, 2), 0)), std::domain_error);
    CHECK_THROWS_AS(level_of(EpsRat(Rat(-7, 2), 0)), std::domain_error);

    // Shift invariance: level_of(h + k) == level_of(h) + k for integers k.
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> dn(-40, 40), dd(1, 9), dk(-6, 6), de(-1, 1);
    for (int t = 0; t < 400; ++t) {
        EpsRat h(Rat(dn(rng), dd(rng)), de(rng));
        Int k = dk(rng);
        bool boundary = (den(h.value + Rat(1, 2)) == 1) && h.eps_coeff == 0;
        if (boundary) continue;
        CHECK(level_of(h + EpsRat(Rat(k))) == level_of(h) + k);
    }
}

TEST_CASE("reduce_slope canonicalizes sign and gcd", "[exact]") {
    CHECK(reduce_slope(-6, -4) == Slope{3, 2});
    CHECK(reduce_slope(18, -4) == Slope{9, -2});
    CHECK(reduce_slope(0, 5) == Slope{0, 1});
    CHECK(reduce_slope(0, -5) == Slope{0, 1});
    CHECK(reduce_slope(-3, 0) == Slope{1, 0});
    CHECK(reduce_slope(7, 0) == Slope{1, 0});
    CHECK_THROWS_AS(reduce_slope(0, 0), std::domain_error);

    SECTION("idempotent and value-preserving") {
        std::mt19937 rng(17);
        std::uniform_int_distribution<int> d(-60, 60);
        for (int t = 0; t < 500; ++t) {
            Int p = d(rng), q = d(rng);
            if (p == 0 && q == 0) continue;
            Slope s = reduce_slope(p, q);
            CHECK(reduce_slope(s.p, s.q) == s);
            CHECK(gcd_int(s.p, s.q) == 1);
            if (q != 0) {
                CHECK(!s.is_infinite());
                CHECK(s.value() == Rat(p) / Rat(q));
            } else {
                CHECK(s.is_infinite());
            }
        }
    }
}

TEST_CASE("Slope rendering", "[exact]") {
    CHECK(Slope{9, -2}.str() == "9/-2");
    CHECK(Slope{1, 0}.str() == "inf");
    CHECK(Slope{0, 1}.str() == "0/1");
}
