#pragma once

#include "hb/domains.hpp"
#include "hb/exactmath.hpp"
#include "hb/groups.hpp"

#include <optional>
#include <vector>

namespace hb {

// Element of SL(2,R). Rotations carry an exact angle tag; only the floating
// entries exist for general elements, which never act on grids.
struct Sl2Element {
    double a = 1, b = 0, c = 0, d = 1;
    std::optional<RationalAngle> rotation;

    static Sl2Element identity() { return {}; }
    static Sl2Element make_rotation(const RationalAngle& angle);
    // Validates det = 1 within 1e-12.
    static Sl2Element from_entries(double a, double b, double c, double d);
};

// x -> (x*a + c)/(x*b + d) on the extended real line; +/-inf is the point at
// infinity of P_1(R).
double mobius(const Sl2Element& g, double x);

// k_g(x) = sqrt(((xb+d)^2 + (xa+c)^2) / (1+x^2)); identically 1 for rotations.
double k_factor(const Sl2Element& g, double x);

// s_g(x) = sign(xb + d). Throws std::domain_error at the zero locus.
int s_factor(const Sl2Element& g, double x);

// Exact sign of s for the rotation by `angle` at the torus coordinate rho
// (turns), via x = cot(pi * rho): sign = sin_sign(rho/2 + angle) * sin_sign(rho/2).
// Throws grid_error when either sine vanishes (boundary point).
int s_factor_exact(const RationalAngle& angle, const Rational& rho_turns);

// Multiplier of the dual action for a rotation pair at a torus point, exact:
// gamma = s_g(rho) * s_h(sigma) (the k factors are 1). Always +1 or -1.
Rational gamma(const GroupElement& g, const Rational& rho_turns, const Rational& sigma_turns);

// Floating multiplier k_g^-3 s_g k_h^-3 s_h for a general SL(2,R) pair.
double gamma(const Sl2Element& g, const Sl2Element& h, double x, double y);

// Half-offset N1 x N2 grid over the torus: points ((i+1/2)/N1, (j+1/2)/N2)
// turns. The half offset keeps every sign factor away from its zero locus.
struct GridSpec {
    long long n1 = 1;
    long long n2 = 1;

    long long points() const { return n1 * n2; }
    Rational x_of(long long i) const { return Rational(2 * i + 1, 2 * n1); }
    Rational y_of(long long j) const { return Rational(2 * j + 1, 2 * n2); }
    // True when the doubled-angle shift of g moves grid points to grid points.
    bool commensurate(const GroupElement& g) const;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// Exact rational values on a half-offset grid.
struct GridFunction {
    GridSpec spec;
    std::vector<Rational> values; // row-major: index i*n2 + j

    static GridFunction zero(const GridSpec& s) {
        return {s, std::vector<Rational>(static_cast<std::size_t>(s.points()))};
    }

    Rational& at(long long i, long long j) {
        return values[static_cast<std::size_t>(i * spec.n2 + j)];
    }
    const Rational& at(long long i, long long j) const {
        return values[static_cast<std::size_t>(i * spec.n2 + j)];
    }

    // Exact L^2 norm squared: sum of squares / (N1*N2).
    Rational norm_sq() const;

    friend bool operator==(const GridFunction&, const GridFunction&) = default;
};

// (T'(g) f)(x) = gamma(x, g) * f(x g): an exact signed permutation of grid
// values. Throws grid_error when g is not commensurate with the grid.
GridFunction dual_apply(const GroupElement& g, const GridFunction& f);

// Smallest grid commensurate with every element of F whose points also avoid
// the edges of the optional rectangle union (corner denominators divide N).
GridSpec natural_grid(const FiniteSubgroup& F, const RectUnion* avoid_edges = nullptr);

// Indicator of a rectangle union sampled on a grid (open containment).
GridFunction indicator(const RectUnion& u, const GridSpec& spec);

} // namespace hb
