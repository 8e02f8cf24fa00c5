#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hb/exactmath.hpp"

#include <set>

using namespace hb;

namespace {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace

TEST_CASE("factorize small cases") {
    Factorization f = factorize(12);
    CHECK(f.factors == std::vector<std::pair<long long, int>>{{2, 2}, {3, 1}});
    CHECK(factorize(1).factors.empty());
    CHECK(factorize(360).factors ==
          std::vector<std::pair<long long, int>>{{2, 3}, {3, 2}, {5, 1}});
    CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("factorize rebuild-and-compare up to 1e5") {
    for (long long n = 1; n <= 100000; ++n) {
        const Factorization f = factorize(n);
        CHECK(f.value() == n);
        long long prev = 1;
        for (const auto& [p, e] : f.factors) {
            CHECK(p > prev);
            prev = p;
            CHECK(e >= 1);
        }
    }
    // primality of the listed primes, spot-checked where trial division is cheap
    for (long long n : {2LL, 97LL, 360LL, 1024LL, 99991LL, 65536LL, 30030LL}) {
        for (const auto& [p, e] : factorize(n).factors) CHECK(is_prime(p));
    }
}

TEST_CASE("angle addition examples") {
    const RationalAngle half = RationalAngle::make(1, 2);
    CHECK((half + half).is_zero());
    CHECK(angle_add(RationalAngle::make(1, 3), RationalAngle::make(1, 4)) ==
          RationalAngle::make(7, 12));
    CHECK(RationalAngle::make(3, 4) + RationalAngle::make(3, 4) == half);
}

TEST_CASE("angles with denominator <= 24 form a group under addition") {
    std::set<Rational> turns;
    for (long long den = 1; den <= 24; ++den)
        for (long long num = 0; num < den; ++num) turns.insert(mod_one(Rational(num, den)));
    std::vector<RationalAngle> angles;
    for (const Rational& t : turns) angles.emplace_back(t);

    const RationalAngle zero;
    for (const RationalAngle& a : angles) {
        CHECK(a + zero == a);
        CHECK(a + a.inverse() == zero);
        CHECK(a.inverse() + a == zero);
    }
    for (std::size_t i = 0; i < angles.size(); i += 7) {
        for (std::size_t j = 0; j < angles.size(); j += 11) {
            CHECK(angles[i] + angles[j] == angles[j] + angles[i]);
            for (std::size_t k = 0; k < angles.size(); k += 53)
                CHECK((angles[i] + angles[j]) + angles[k] ==
                      angles[i] + (angles[j] + angles[k]));
        }
    }
}

TEST_CASE("sin_sign by quadrant") {
    CHECK(sin_sign(Rational(1, 4)) == 1);
    CHECK(sin_sign(Rational(0)) == 0);
    CHECK(sin_sign(Rational(3, 4)) == -1);
    CHECK(sin_sign(Rational(1, 2)) == 0);
    CHECK(sin_sign(Rational(7, 8)) == -1);
    CHECK(sin_sign(Rational(5, 3)) == -1); // reduced mod 1 -> 2/3
}

TEST_CASE("sin_sign reflection: sign(a) = -sign(1-a) away from the zero locus") {
    for (long long den = 1; den <= 40; ++den) {
        for (long long num = 0; num < den; ++num) {
            const Rational a(num, den);
            if (a == 0 || a == Rational(1, 2)) continue;
            CHECK(sin_sign(a) == -sin_sign(1 - a));
        }
    }
}

TEST_CASE("angle normalization keeps turns in [0,1)") {
    CHECK(RationalAngle(Rational(-1, 3)).turns() == Rational(2, 3));
    CHECK(RationalAngle(Rational(9, 4)).turns() == Rational(1, 4));
    CHECK(RationalAngle::make(5, 5).turns() == 0);
    CHECK(RationalAngle::make(1, 6).order() == 6);
}
