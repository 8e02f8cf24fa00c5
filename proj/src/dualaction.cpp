#include "hb/dualaction.hpp"

#include "hb/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace hb {

Sl2Element Sl2Element::make_rotation(const RationalAngle& angle) {
    const double rad = 2.0 * M_PI * to_double(angle.turns());
    Sl2Element g;
    g.a = std::cos(rad);
    g.b = std::sin(rad);
    g.c = -std::sin(rad);
    g.d = std::cos(rad);
    g.rotation = angle;
    return g;
}

Sl2Element Sl2Element::from_entries(double a, double b, double c, double d) {
    if (std::abs(a * d - b * c - 1.0) > 1e-12)
        throw std::invalid_argument("SL(2,R) entries must have determinant 1");
    Sl2Element g;
    g.a = a;
    g.b = b;
    g.c = c;
    g.d = d;
    return g;
}

double mobius(const Sl2Element& g, double x) {
    if (std::isinf(x)) {
        if (g.b == 0.0) return x > 0 ? (g.a > 0 ? INFINITY : -INFINITY)
                                     : (g.a > 0 ? -INFINITY : INFINITY);
        return g.a / g.b;
    }
    const double den = x * g.b + g.d;
    if (den == 0.0) return (x * g.a + g.c) > 0 ? INFINITY : -INFINITY;
    return (x * g.a + g.c) / den;
}

double k_factor(const Sl2Element& g, double x) {
    if (std::isinf(x)) return std::sqrt(g.b * g.b + g.a * g.a);
    const double num = (x * g.b + g.d) * (x * g.b + g.d) + (x * g.a + g.c) * (x * g.a + g.c);
    return std::sqrt(num / (1.0 + x * x));
}

int s_factor(const Sl2Element& g, double x) {
    if (std::isinf(x)) {
        if (g.b == 0.0) throw std::domain_error("s factor undefined at the pole");
        return (x > 0) == (g.b > 0) ? 1 : -1;
    }
    const double v = x * g.b + g.d;
    if (v == 0.0) throw std::domain_error("s factor undefined where x*b + d = 0");
    return v > 0 ? 1 : -1;
}

int s_factor_exact(const RationalAngle& angle, const Rational& rho_turns) {
    const Rational half = mod_one(rho_turns) / 2;
    const int base = sin_sign(half);
    const int shifted = sin_sign(half + angle.turns());
    if (base == 0 || shifted == 0)
        throw grid_error("sign factor hit a boundary point; use a half-offset grid");
    return base * shifted;
}

Rational gamma(const GroupElement& g, const Rational& rho_turns, const Rational& sigma_turns) {
    return Rational(s_factor_exact(g.theta, rho_turns) * s_factor_exact(g.phi, sigma_turns));
}

double gamma(const Sl2Element& g, const Sl2Element& h, double x, double y) {
    const double kg = k_factor(g, x);
    const double kh = k_factor(h, y);
    return s_factor(g, x) * s_factor(h, y) / (kg * kg * kg * kh * kh * kh);
}

namespace {

// index shift of the doubled angle on an N-point row, or nullopt
std::optional<long long> grid_shift(const RationalAngle& angle, long long n) {
    const Rational step = 2 * angle.turns() * n;
    if (denominator(step) != 1) return std::nullopt;
    BigInt num = numerator(step) % n;
    if (num < 0) num += n;
    return num.convert_to<long long>();
}

} // namespace

bool GridSpec::commensurate(const GroupElement& g) const {
    return grid_shift(g.theta, n1).has_value() && grid_shift(g.phi, n2).has_value();
}

Rational GridFunction::norm_sq() const {
    Rational s(0);
    for (const Rational& v : values) s += v * v;
    return s / Rational(spec.points());
}

GridFunction dual_apply(const GroupElement& g, const GridFunction& f) {
    const auto s1 = grid_shift(g.theta, f.spec.n1);
    const auto s2 = grid_shift(g.phi, f.spec.n2);
    if (!s1 || !s2)
        throw grid_error("group element is not commensurate with the grid");
    // row/column signs: gamma factorises as s(rho) * s(sigma)
    std::vector<int> sx(static_cast<std::size_t>(f.spec.n1));
    std::vector<int> sy(static_cast<std::size_t>(f.spec.n2));
    for (long long i = 0; i < f.spec.n1; ++i)
        sx[static_cast<std::size_t>(i)] = s_factor_exact(g.theta, f.spec.x_of(i));
    for (long long j = 0; j < f.spec.n2; ++j)
        sy[static_cast<std::size_t>(j)] = s_factor_exact(g.phi, f.spec.y_of(j));

    GridFunction out = GridFunction::zero(f.spec);
    for (long long i = 0; i < f.spec.n1; ++i) {
        const long long si = (i + *s1) % f.spec.n1;
        for (long long j = 0; j < f.spec.n2; ++j) {
            const long long sj = (j + *s2) % f.spec.n2;
            const Rational& v = f.at(si, sj);
            out.at(i, j) = sx[static_cast<std::size_t>(i)] * sy[static_cast<std::size_t>(j)] < 0
                               ? -v
                               : v;
        }
    }
    return out;
}

GridSpec natural_grid(const FiniteSubgroup& F, const RectUnion* avoid_edges) {
    long long n1 = 1, n2 = 1;
    for (const GroupElement& g : F.elements) {
        n1 = lcm_ll(n1, denominator(mod_one(2 * g.theta.turns())).convert_to<long long>());
        n2 = lcm_ll(n2, denominator(mod_one(2 * g.phi.turns())).convert_to<long long>());
    }
    if (avoid_edges != nullptr) {
        for (const Rect& r : avoid_edges->pieces) {
            n1 = lcm_ll(n1, denominator(r.x.lo).convert_to<long long>());
            n1 = lcm_ll(n1, denominator(r.x.hi).convert_to<long long>());
            n2 = lcm_ll(n2, denominator(r.y.lo).convert_to<long long>());
            n2 = lcm_ll(n2, denominator(r.y.hi).convert_to<long long>());
        }
    }
    return GridSpec{n1, n2};
}

GridFunction indicator(const RectUnion& u, const GridSpec& spec) {
    GridFunction f = GridFunction::zero(spec);
    for (long long i = 0; i < spec.n1; ++i)
        for (long long j = 0; j < spec.n2; ++j)
            if (u.contains_open(spec.x_of(i), spec.y_of(j))) f.at(i, j) = 1;
    return f;
}

} // namespace hb
