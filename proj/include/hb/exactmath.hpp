#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace hb {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

BigInt rational_floor(const Rational& q);

// Reduce q modulo 1 into [0, 1).
Rational mod_one(const Rational& q);

std::string to_string(const Rational& q);

double to_double(const Rational& q);

// A rotation angle stored as an exact fraction of a full turn, reduced mod 1.
class RationalAngle {
  public:
    RationalAngle() = default;
    explicit RationalAngle(Rational turns) : turns_(mod_one(std::move(turns))) {}
    static RationalAngle make(long long num, long long den) {
        return RationalAngle(Rational(num, den));
    }

    const Rational& turns() const { return turns_; }
    bool is_zero() const { return turns_ == 0; }

    RationalAngle inverse() const { return RationalAngle(-turns_); }
    RationalAngle times(const BigInt& k) const { return RationalAngle(turns_ * Rational(k, 1)); }

    // Smallest k >= 1 with k * angle == 0 mod 1.
    BigInt order() const { return denominator(turns_); }

    friend RationalAngle operator+(const RationalAngle& a, const RationalAngle& b) {
        return RationalAngle(a.turns_ + b.turns_);
    }
    friend bool operator==(const RationalAngle& a, const RationalAngle& b) {
        return a.turns_ == b.turns_;
    }
    friend bool operator<(const RationalAngle& a, const RationalAngle& b) {
        return a.turns_ < b.turns_;
    }

  private:
    Rational turns_; // in [0, 1)
};

inline RationalAngle angle_add(const RationalAngle& a, const RationalAngle& b) { return a + b; }

// Sign of sin(2*pi*turns), decided by rational comparison alone:
// +1 on (0, 1/2), 0 at 0 and 1/2, -1 on (1/2, 1).
int sin_sign(const Rational& turns);
int sin_sign(const RationalAngle& a);

struct Factorization {
    // (prime, exponent) with primes strictly increasing; empty for n = 1.
    std::vector<std::pair<long long, int>> factors;

    long long value() const;
    // Exponent of p in the factored integer (0 if p does not occur).
    int exponent_of(long long p) const;
};

Factorization factorize(long long n);

long long ipow(long long base, int exp);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

} // namespace hb
