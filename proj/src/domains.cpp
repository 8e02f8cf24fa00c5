#include "hb/domains.hpp"

#include "hb/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hb {

namespace {

const Rational kOne(1);

// Open-interval vs closed-interval overlap on the circle chart [0, 1].
bool open_closed_overlap(const Interval& open, const Interval& closed) {
    return open.lo < closed.hi && closed.lo < open.hi;
}

bool open_open_overlap(const Interval& a, const Interval& b) {
    return a.lo < b.hi && b.lo < a.hi;
}

std::vector<Interval> shift_interval(const Interval& iv, const Rational& delta) {
    Rational lo = iv.lo + delta;
    Rational hi = iv.hi + delta;
    if (hi <= kOne) return {{lo, hi}};
    if (lo >= kOne) return {{lo - kOne, hi - kOne}};
    std::vector<Interval> parts{{lo, kOne}};
    if (hi - kOne > 0) parts.push_back({Rational(0), hi - kOne});
    return parts;
}

} // namespace

RectUnion RectUnion::single(Rational x_lo, Rational x_hi, Rational y_lo, Rational y_hi) {
    RectUnion u;
    u.pieces.push_back(Rect{{std::move(x_lo), std::move(x_hi)}, {std::move(y_lo), std::move(y_hi)}});
    return u;
}

Rational RectUnion::area() const {
    Rational a(0);
    for (const Rect& r : pieces) a += r.area();
    return a;
}

bool RectUnion::contains_open(const Rational& px, const Rational& py) const {
    for (const Rect& r : pieces)
        if (r.contains_open(px, py)) return true;
    return false;
}

bool open_rects_disjoint(const Rect& a, const Rect& b) {
    return !(open_open_overlap(a.x, b.x) && open_open_overlap(a.y, b.y));
}

void check_disjoint(const RectUnion& u) {
    for (std::size_t i = 0; i < u.pieces.size(); ++i)
        for (std::size_t j = i + 1; j < u.pieces.size(); ++j)
            if (!open_rects_disjoint(u.pieces[i], u.pieces[j]))
                throw std::invalid_argument("rectangle union has overlapping pieces");
}

std::vector<Rect> translate(const Rect& r, const GroupElement& g) {
    const Rational dx = mod_one(2 * g.theta.turns());
    const Rational dy = mod_one(2 * g.phi.turns());
    std::vector<Rect> out;
    for (const Interval& ix : shift_interval(r.x, dx))
        for (const Interval& iy : shift_interval(r.y, dy)) out.push_back(Rect{ix, iy});
    return out;
}

RectUnion translate(const RectUnion& u, const GroupElement& g) {
    RectUnion out;
    for (const Rect& r : u.pieces) {
        std::vector<Rect> parts = translate(r, g);
        out.pieces.insert(out.pieces.end(), parts.begin(), parts.end());
    }
    return out;
}

Interval circle_domain(long long n) {
    if (n < 2 || n % 2 != 0) throw std::domain_error("circle_domain requires even n >= 2");
    return {Rational(0), Rational(2, n)};
}

RectUnion torus_domain(long long n, long long m) {
    const Interval ex = circle_domain(n);
    const Interval ey = circle_domain(m);
    return RectUnion::single(ex.lo, ex.hi, ey.lo, ey.hi);
}

CosetSelection coset_representatives(const FiniteSubgroup& G, const FiniteSubgroup& H) {
    if (!H.subset_of(G)) throw std::invalid_argument("coset_representatives: H is not contained in G");
    const std::vector<GroupElement> K = kernel(G.ambient_n, G.ambient_m);
    for (const GroupElement& k : K)
        if (!G.contains(k))
            throw std::invalid_argument("coset_representatives: G must contain the kernel");

    std::vector<GroupElement> k_in_h;
    for (const GroupElement& k : K)
        if (H.contains(k)) k_in_h.push_back(k);

    // transversal of K/(K^H), greedy in the canonical kernel order
    std::vector<GroupElement> transversal;
    std::set<GroupElement> covered_kernel;
    for (const GroupElement& k : K) {
        if (covered_kernel.count(k)) continue;
        transversal.push_back(k);
        for (const GroupElement& kh : k_in_h) covered_kernel.insert(k * kh);
    }

    CosetSelection sel;
    sel.index = G.order / H.order;
    sel.omega = static_cast<long long>(transversal.size());
    sel.theta = sel.index / sel.omega;
    sel.transversal = transversal;

    std::set<GroupElement> covered;
    for (const GroupElement& g : G.elements) {
        if (covered.count(g)) continue;
        for (const GroupElement& s : transversal) {
            const GroupElement rep = g * s;
            sel.representatives.push_back(rep);
            for (const GroupElement& h : H.elements) covered.insert(rep * h);
        }
    }
    if (static_cast<long long>(sel.representatives.size()) != sel.index ||
        covered.size() != G.elements.size())
        throw std::logic_error("coset representative construction failed to tile G");
    return sel;
}

RectUnion subgroup_domain(const FiniteSubgroup& G, const FiniteSubgroup& H) {
    const RectUnion base = torus_domain(G.ambient_n, G.ambient_m);
    const CosetSelection sel = coset_representatives(G, H);
    // representatives differing by a kernel element shift the torus identically
    std::set<std::pair<Rational, Rational>> shifts;
    RectUnion out;
    for (const GroupElement& s : sel.representatives) {
        const Rational dx = mod_one(2 * s.theta.turns());
        const Rational dy = mod_one(2 * s.phi.turns());
        if (!shifts.insert({dx, dy}).second) continue;
        const RectUnion moved = translate(base, s);
        out.pieces.insert(out.pieces.end(), moved.pieces.begin(), moved.pieces.end());
    }
    check_disjoint(out);
    return out;
}

ElementaryReport verify_elementary(const RectUnion& E, const FiniteSubgroup& H) {
    ElementaryReport report;
    report.area = E.area();

    std::vector<GroupElement> k_in_h;
    for (const GroupElement& k : kernel(H.ambient_n, H.ambient_m))
        if (H.contains(k)) k_in_h.push_back(k);

    std::vector<RectUnion> translates;
    translates.reserve(H.elements.size());
    for (const GroupElement& h : H.elements) translates.push_back(translate(E, h));

    // (A): open translate vs closed translate for pairs not related by K^H
    report.condition_a = true;
    for (std::size_t i = 0; i < H.elements.size() && report.condition_a; ++i) {
        for (std::size_t j = 0; j < H.elements.size() && report.condition_a; ++j) {
            bool kernel_related = false;
            for (const GroupElement& k : k_in_h)
                if (H.elements[i] == H.elements[j] * k) kernel_related = true;
            if (kernel_related) continue;
            for (const Rect& a : translates[i].pieces) {
                for (const Rect& b : translates[j].pieces) {
                    if (open_closed_overlap(a.x, b.x) && open_closed_overlap(a.y, b.y)) {
                        report.condition_a = false;
                        report.violating_pair = {H.elements[i], H.elements[j]};
                        break;
                    }
                }
                if (!report.condition_a) break;
            }
        }
    }

    // (B): every open cell of the corner arrangement lies in a closed translate
    std::set<Rational> xs{Rational(0), kOne};
    std::set<Rational> ys{Rational(0), kOne};
    for (const RectUnion& t : translates) {
        for (const Rect& r : t.pieces) {
            xs.insert(r.x.lo);
            xs.insert(r.x.hi);
            ys.insert(r.y.lo);
            ys.insert(r.y.hi);
        }
    }
    const std::vector<Rational> xcuts(xs.begin(), xs.end());
    const std::vector<Rational> ycuts(ys.begin(), ys.end());
    report.condition_b = true;
    for (std::size_t i = 0; i + 1 < xcuts.size() && report.condition_b; ++i) {
        for (std::size_t j = 0; j + 1 < ycuts.size(); ++j) {
            bool covered = false;
            for (const RectUnion& t : translates) {
                for (const Rect& r : t.pieces) {
                    if (r.x.lo <= xcuts[i] && xcuts[i + 1] <= r.x.hi && r.y.lo <= ycuts[j] &&
                        ycuts[j + 1] <= r.y.hi) {
                        covered = true;
                        break;
                    }
                }
                if (covered) break;
            }
            if (!covered) {
                report.condition_b = false;
                report.uncovered_point = {(xcuts[i] + xcuts[i + 1]) / 2,
                                          (ycuts[j] + ycuts[j + 1]) / 2};
                break;
            }
        }
    }
    return report;
}

} // namespace hb
