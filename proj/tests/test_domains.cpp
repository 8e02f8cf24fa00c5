#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hb/domains.hpp"
#include "hb/groups.hpp"

#include <set>

using namespace hb;

namespace {

GroupElement el(long long pn, long long pd, long long qn, long long qd) {
    return {RationalAngle::make(pn, pd), RationalAngle::make(qn, qd)};
}

long long kernel_order_in(const FiniteSubgroup& H) {
    long long c = 0;
    for (const GroupElement& k : kernel(H.ambient_n, H.ambient_m))
        if (H.contains(k)) ++c;
    return c;
}

} // namespace

TEST_CASE("circle_domain") {
    CHECK(circle_domain(2).lo == 0);
    CHECK(circle_domain(2).hi == 1);
    CHECK(circle_domain(4).hi == Rational(1, 2));
    CHECK(circle_domain(6).hi == Rational(1, 3));
    CHECK_THROWS_AS(circle_domain(3), std::domain_error);
}

TEST_CASE("torus_domain") {
    const RectUnion f22 = torus_domain(2, 2);
    REQUIRE(f22.pieces.size() == 1);
    CHECK(f22.pieces[0].x.hi == 1);
    CHECK(f22.pieces[0].y.hi == 1);
    CHECK(torus_domain(4, 4).pieces[0].x.hi == Rational(1, 2));
    const RectUnion f42 = torus_domain(4, 2);
    CHECK(f42.pieces[0].x.hi == Rational(1, 2));
    CHECK(f42.pieces[0].y.hi == 1);
}

TEST_CASE("translate splits across the wrap") {
    const Rect r{{Rational(1, 4), Rational(3, 4)}, {Rational(0), Rational(1, 2)}};
    // shift by (1/2, 0) in torus coordinates: element with theta = 1/4 turn
    const std::vector<Rect> parts = translate(r, el(1, 4, 0, 1));
    REQUIRE(parts.size() == 2);
    Rational area(0);
    for (const Rect& p : parts) area += p.area();
    CHECK(area == r.area());
    // a shift landing exactly on the seam needs no split
    const std::vector<Rect> whole = translate(r, el(1, 8, 0, 1));
    REQUIRE(whole.size() == 1);
    CHECK(whole[0].x.lo == Rational(1, 2));
    CHECK(whole[0].x.hi == 1);
}

TEST_CASE("coset representatives for A inside C2 x C2") {
    const FiniteSubgroup G = make_ambient(2, 2);
    const FiniteSubgroup A = subgroup_from_generators(2, 2, {el(1, 2, 1, 2)});
    const CosetSelection s = coset_representatives(G, A);
    CHECK(s.index == 2);
    CHECK(s.omega == 2);
    CHECK(s.theta == 1);
    CHECK(s.representatives == std::vector<GroupElement>{el(0, 1, 0, 1), el(1, 2, 0, 1)});
}

TEST_CASE("coset representatives when H = G") {
    const FiniteSubgroup G = make_ambient(4, 4);
    const CosetSelection s = coset_representatives(G, G);
    CHECK(s.index == 1);
    CHECK(s.omega == 1);
    CHECK(s.representatives == std::vector<GroupElement>{GroupElement::identity()});
}

TEST_CASE("coset representatives tile G exactly once") {
    const FiniteSubgroup G = make_ambient(4, 4);
    const FiniteSubgroup H = subgroup_from_generators(4, 4, {el(1, 4, 1, 4)});
    const CosetSelection s = coset_representatives(G, H);
    CHECK(s.index == 4);
    CHECK(static_cast<long long>(s.representatives.size()) == 4);
    // every element of G is rep * h for exactly one pair
    std::set<GroupElement> covered;
    for (const GroupElement& rep : s.representatives)
        for (const GroupElement& h : H.elements) CHECK(covered.insert(rep * h).second);
    CHECK(covered.size() == G.elements.size());

    const FiniteSubgroup bigger = make_ambient(2, 2);
    CHECK_THROWS_AS(coset_representatives(bigger, H), std::invalid_argument);
}

TEST_CASE("subgroup_domain examples") {
    SUBCASE("A inside C2 x C2 gives the full square") {
        const FiniteSubgroup G = make_ambient(2, 2);
        const FiniteSubgroup A = subgroup_from_generators(2, 2, {el(1, 2, 1, 2)});
        const RectUnion E = subgroup_domain(G, A);
        REQUIRE(E.pieces.size() == 1);
        CHECK(E.area() == 1);
    }
    SUBCASE("diagonal order-4 subgroup of C4 x C4") {
        const FiniteSubgroup G = make_ambient(4, 4);
        const FiniteSubgroup H = subgroup_from_generators(4, 4, {el(1, 4, 1, 4)});
        const RectUnion E = subgroup_domain(G, H);
        CHECK(E.area() == Rational(1, 2));
        CHECK(E.area() == Rational(kernel_order_in(H), H.order));
    }
    SUBCASE("H equal to the ambient keeps the base rectangle") {
        const FiniteSubgroup G = make_ambient(4, 4);
        const RectUnion E = subgroup_domain(G, G);
        REQUIRE(E.pieces.size() == 1);
        CHECK(E.pieces[0].x.hi == Rational(1, 2));
        CHECK(E.pieces[0].y.hi == Rational(1, 2));
    }
}

TEST_CASE("verify_elementary accepts the ambient tiling and rejects a half torus") {
    const FiniteSubgroup G = make_ambient(4, 4);
    CHECK(verify_elementary(torus_domain(4, 4), G).pass());

    const FiniteSubgroup trivial = subgroup_from_generators(2, 2, {});
    const RectUnion half = RectUnion::single(Rational(0), Rational(1, 2), Rational(0), Rational(1));
    const ElementaryReport r = verify_elementary(half, trivial);
    CHECK(r.condition_a);
    CHECK(!r.condition_b);
    CHECK(r.uncovered_point.has_value());
}

TEST_CASE("every subgroup domain of small ambients passes both conditions exactly") {
    for (long long n : {2, 4, 6}) {
        for (long long m : {2, 4, 6}) {
            const FiniteSubgroup G = make_ambient(n, m);
            for (const FiniteSubgroup& H : enumerate_subgroups(n, m)) {
                CAPTURE(n);
                CAPTURE(m);
                CAPTURE(H.order);
                const RectUnion E = subgroup_domain(G, H);
                const ElementaryReport r = verify_elementary(E, H);
                CHECK(r.condition_a);
                CHECK(r.condition_b);
                CHECK(E.area() == Rational(kernel_order_in(H), H.order));
            }
        }
    }
}

TEST_CASE("the weaker set-stabilizer check does not certify elementarity") {
    // The full square maps to itself under every torus shift, yet it is an
    // elementary domain only when the effective action is trivial; the
    // set-stabilizer property is a diagnostic, never a proof.
    const RectUnion full = torus_domain(2, 2);
    const FiniteSubgroup H = subgroup_from_generators(4, 4, {el(1, 4, 1, 4)});
    bool maps_to_itself = true;
    for (const GroupElement& h : H.elements) {
        Rational area(0);
        for (const Rect& piece : translate(full, h).pieces) {
            for (const Rect& base : full.pieces) {
                const Rational xl = std::max(piece.x.lo, base.x.lo);
                const Rational xh = std::min(piece.x.hi, base.x.hi);
                const Rational yl = std::max(piece.y.lo, base.y.lo);
                const Rational yh = std::min(piece.y.hi, base.y.hi);
                if (xl < xh && yl < yh) area += (xh - xl) * (yh - yl);
            }
        }
        if (area != full.area()) maps_to_itself = false;
    }
    CHECK(maps_to_itself);
    CHECK(!verify_elementary(full, H).pass());
}
