#include "hb/exactmath.hpp"

#include <sstream>
#include <stdexcept>

namespace hb {

BigInt rational_floor(const Rational& q) {
    BigInt num = numerator(q);
    BigInt den = denominator(q);
    if (num >= 0) return num / den;
    return -((-num + den - 1) / den);
}

Rational mod_one(const Rational& q) { return q - Rational(rational_floor(q), 1); }

std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << numerator(q);
    if (denominator(q) != 1) os << "/" << denominator(q);
    return os.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

int sin_sign(const Rational& turns) {
    Rational t = mod_one(turns);
    if (t == 0 || t == Rational(1, 2)) return 0;
    return t < Rational(1, 2) ? 1 : -1;
}

int sin_sign(const RationalAngle& a) { return sin_sign(a.turns()); }

long long Factorization::value() const {
    long long v = 1;
    for (const auto& [p, e] : factors) v *= ipow(p, e);
    return v;
}

int Factorization::exponent_of(long long p) const {
    for (const auto& [q, e] : factors)
        if (q == p) return e;
    return 0;
}

Factorization factorize(long long n) {
    if (n < 1) throw std::domain_error("factorize: argument must be >= 1");
    Factorization f;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

long long ipow(long long base, int exp) {
    long long r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

long long gcd_ll(long long a, long long b) {
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_ll(a, b) * b;
}

} // namespace hb
