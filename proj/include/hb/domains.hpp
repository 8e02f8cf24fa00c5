#pragma once

#include "hb/exactmath.hpp"
#include "hb/groups.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hb {

// Open interval (lo, hi) on the unit circle, in turns: 0 <= lo < hi <= 1.
// Intervals wrapping past 1 are stored split.
struct Interval {
    Rational lo;
    Rational hi;

    Rational length() const { return hi - lo; }
    bool contains_open(const Rational& t) const { return lo < t && t < hi; }
    bool contains_closed(const Rational& t) const { return lo <= t && t <= hi; }
};

// Open axis-aligned rectangle on the torus with rational corners (turns).
struct Rect {
    Interval x;
    Interval y;

    Rational area() const { return x.length() * y.length(); }
    bool contains_open(const Rational& px, const Rational& py) const {
        return x.contains_open(px) && y.contains_open(py);
    }
};

// Finite union of open rectangles, pairwise disjoint as open sets.
struct RectUnion {
    std::vector<Rect> pieces;

    static RectUnion single(Rational x_lo, Rational x_hi, Rational y_lo, Rational y_hi);

    Rational area() const;
    bool contains_open(const Rational& px, const Rational& py) const;
    bool empty() const { return pieces.empty(); }
};

bool open_rects_disjoint(const Rect& a, const Rect& b);

// Throws std::invalid_argument when two pieces overlap as open sets.
void check_disjoint(const RectUnion& u);

// The torus translate of r by the group element g: the action of (theta,
// phi) shifts a point by (2*theta, 2*phi) turns. Wrapping pieces are split.
std::vector<Rect> translate(const Rect& r, const GroupElement& g);
RectUnion translate(const RectUnion& u, const GroupElement& g);

// E_n = (0, 2/n) turns, elementary for the shift action of C_n on the circle.
Interval circle_domain(long long n);

// F_nm = E_n x E_m, elementary for the C_n x C_m action on the torus.
RectUnion torus_domain(long long n, long long m);

// A distinguished choice of coset representatives of G/H: omega = |K|/|K^H|
// representatives per round, theta = [G:H]/omega rounds. Every free choice is
// resolved deterministically (kernel transversal in canonical kernel order,
// next base element lexicographically least among those not yet covered).
struct CosetSelection {
    long long index = 1; // [G : H]
    long long omega = 1; // |K| / |K intersect H|
    long long theta = 1; // index / omega
    std::vector<GroupElement> transversal;     // of K / (K intersect H)
    std::vector<GroupElement> representatives; // theta * omega elements
};

// Requires H <= G and K <= G (G is normally the ambient C_n x C_m).
CosetSelection coset_representatives(const FiniteSubgroup& G, const FiniteSubgroup& H);

// E = F_nm * S for the selection S above: an elementary domain for H.
// Coinciding torus translates (representatives differing by kernel elements)
// are merged, leaving theta disjoint rectangles.
RectUnion subgroup_domain(const FiniteSubgroup& G, const FiniteSubgroup& H);

struct ElementaryReport {
    bool condition_a = false; // translates meet only along the kernel
    bool condition_b = false; // closed translates cover the torus
    std::optional<std::pair<GroupElement, GroupElement>> violating_pair; // (A) witness
    std::optional<std::pair<Rational, Rational>> uncovered_point;        // (B) witness
    Rational area;

    bool pass() const { return condition_a && condition_b; }
};

// Exact check of the two elementary-domain conditions for the H-action:
//  (A) E*h1 and closure(E)*h2 are disjoint whenever h1 != h2*k, k in K^H;
//  (B) the closed translates closure(E)*h, h in H, cover the torus.
// (B) is decided on the full rational arrangement spanned by all translate
// corners, not by sampling.
ElementaryReport verify_elementary(const RectUnion& E, const FiniteSubgroup& H);

} // namespace hb
