#pragma once

#include "hb/exactmath.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hb {

// Partition of the subgroups of C_n x C_m by parity of the order and by
// containment of the order-2 groups
//   A = <(1/2, 1/2)>,  B = <(1/2, 0)>,  C = <(0, 1/2)>,  D = A u B u C.
// O: odd order. E1/E2/E3: even order, contain A/B/C respectively but not D.
// E4: contain D. Class E1 members are exactly the finite actual little groups.
enum class SubgroupClass { O, E1, E2, E3, E4 };

const char* to_string(SubgroupClass c);
std::optional<SubgroupClass> subgroup_class_from_string(const std::string& s);

// An element (R(theta), R(phi)) of SO(2) x SO(2), both angles in turns.
// Elements of C_n x C_m have theta with denominator dividing n and phi with
// denominator dividing m. The element (-I, -I) is (1/2, 1/2).
struct GroupElement {
    RationalAngle theta;
    RationalAngle phi;

    static GroupElement identity() { return {}; }
    static GroupElement from_indices(long long i, long long j, long long n, long long m) {
        return {RationalAngle(Rational(i, n)), RationalAngle(Rational(j, m))};
    }

    GroupElement inverse() const { return {theta.inverse(), phi.inverse()}; }
    GroupElement pow(const BigInt& k) const { return {theta.times(k), phi.times(k)}; }
    BigInt order() const { return lcm(theta.order(), phi.order()); }
    bool is_identity() const { return theta.is_zero() && phi.is_zero(); }

    friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
        return {a.theta + b.theta, a.phi + b.phi};
    }
    friend bool operator==(const GroupElement& a, const GroupElement& b) {
        return a.theta == b.theta && a.phi == b.phi;
    }
    friend bool operator<(const GroupElement& a, const GroupElement& b) {
        if (a.theta < b.theta) return true;
        if (b.theta < a.theta) return false;
        return a.phi < b.phi;
    }
};

std::string to_string(const GroupElement& g);

// A finite subgroup of C_n x C_m realised inside SO(2) x SO(2).
struct FiniteSubgroup {
    long long ambient_n = 2;
    long long ambient_m = 2;
    std::vector<GroupElement> generators; // one or two elements
    std::vector<GroupElement> elements;   // sorted; closed under * and inverse
    long long order = 1;
    SubgroupClass class_tag = SubgroupClass::O;

    bool contains(const GroupElement& g) const;
    bool subset_of(const FiniteSubgroup& other) const;
    bool is_cyclic() const { return generators.size() == 1; }
};

// Lexicographic order on sorted element lists; the canonical subgroup order.
bool element_set_less(const FiniteSubgroup& a, const FiniteSubgroup& b);
bool same_element_set(const FiniteSubgroup& a, const FiniteSubgroup& b);

// Which factor of C_{p^a} x C_{p^b} holds the exact-order-p^k component of a
// local generator; the other factor carries a free residue.
enum class Anchor { First, Second };

// The contribution of one prime to a cyclic subgroup: a cyclic subgroup of
// C_{p^a} x C_{p^b} of order p^k (a, b are the exponents of p in n and m).
// The local generator, written additively in Z_{p^a} x Z_{p^b}:
//   anchor Second, not tall: (r * p^(a-k), p^(b-k)),   1 <= k <= min(a,b), 0 <= r < p^k
//   anchor First,  not tall: (p^(a-k), r * p^(b-k+1)), 1 <= k <= min(a,b), 0 <= r < p^(k-1)
//   anchor Second, tall:     (r, p^(b-k)),             a < k <= b,         0 <= r < p^a
//   anchor First,  tall:     (p^(a-k), r),             b < k <= a,         0 <= r < p^b
struct CyclicPrimePart {
    long long prime = 2;
    int exp_n = 0; // exponent of prime in n
    int exp_m = 0; // exponent of prime in m
    int k = 1;     // local order is prime^k
    Anchor anchor = Anchor::Second;
    bool tall = false;
    long long residue = 0;
};

// The contribution of one prime to a two-generator subgroup: a rank-2
// subgroup of C_{p^a} x C_{p^b} of order p^(k+l). The first local generator
// has the same four shapes as CyclicPrimePart; the second is an exact
// order-p^l element in the slot opposite the anchor. Ranges:
//   anchor Second, not tall: 1 <= l <= k <= min(a,b),  0 <= r < p^(k-l)
//   anchor First,  not tall: 1 <= l <  k <= min(a,b),  0 <= r < p^(k-l-1)
//   anchor Second, tall:     1 <= l <= a < k <= b,     0 <= r < p^(a-l)
//   anchor First,  tall:     1 <= l <= b < k <= a,     0 <= r < p^(b-l)
struct TwoGenPrimePart {
    long long prime = 2;
    int exp_n = 0;
    int exp_m = 0;
    int k = 1;
    int l = 1;
    Anchor anchor = Anchor::Second;
    bool tall = false;
    long long residue = 0;
};

struct SubgroupParameters {
    long long n = 2;
    long long m = 2;
    std::vector<CyclicPrimePart> cyclic_parts;
    std::vector<TwoGenPrimePart> two_gen_parts;
};

// C_n x C_m itself. Throws std::domain_error unless n, m are even and >= 2.
FiniteSubgroup make_ambient(long long n, long long m);

// The four elements acting trivially on the torus, in canonical order
// (0,0), (1/2,0), (0,1/2), (1/2,1/2).
std::vector<GroupElement> kernel(long long n, long long m);

// Closure of a generating set inside C_n x C_m.
FiniteSubgroup subgroup_from_generators(long long n, long long m,
                                        std::vector<GroupElement> gens);

// Build the cyclic subgroup described by p.cyclic_parts (two_gen_parts must
// be empty). Validates every residue and exponent range and checks the
// computed order against the per-prime product formula. With e1_restricted
// the prime-2 part must be an anchor-Second part with odd residue, which is
// exactly the class-E1 condition for cyclic subgroups.
FiniteSubgroup cyclic_from_parameters(const SubgroupParameters& p, bool e1_restricted = false);

// Build the two-generator subgroup described by p (at least one entry in
// two_gen_parts). The two generators span an internal direct product whose
// factor orders multiply to the subgroup order.
FiniteSubgroup two_generator_from_parameters(const SubgroupParameters& p,
                                             bool e1_restricted = false);

// All cyclic subgroups of C_n x C_m, each exactly once, sorted by element
// set. With a class filter only subgroups of that class are returned; the E1
// filter is applied structurally (prime-2 part restricted to odd residues).
std::vector<FiniteSubgroup> enumerate_cyclic(long long n, long long m,
                                             std::optional<SubgroupClass> class_filter = {});

// All non-cyclic subgroups of C_n x C_m, each exactly once, sorted.
std::vector<FiniteSubgroup> enumerate_two_generator(long long n, long long m,
                                                    std::optional<SubgroupClass> class_filter = {});

// Cyclic subgroups followed by two-generator subgroups, each block sorted by
// element set; the CLI indexes subgroups by position in this list.
std::vector<FiniteSubgroup> enumerate_subgroups(long long n, long long m,
                                                std::optional<SubgroupClass> class_filter = {});

// Class of a subgroup from its element set alone. Throws std::logic_error
// for an even-order set containing none of the order-2 elements (impossible
// for a genuine subgroup; signals a corrupted element set).
SubgroupClass classify(long long ambient_n, long long ambient_m,
                       const std::vector<GroupElement>& elements);
inline SubgroupClass classify(const FiniteSubgroup& f) {
    return classify(f.ambient_n, f.ambient_m, f.elements);
}

// Oracle: every subgroup of C_n x C_m by closing all element pairs and
// deduplicating. Guarded by n*m <= 10^4.
std::vector<FiniteSubgroup> brute_force_subgroups(long long n, long long m);

} // namespace hb
