#pragma once

#include "hb/exactmath.hpp"
#include "hb/groups.hpp"

#include <string>
#include <vector>

namespace hb {

// A one-dimensional character of a finite abelian group, stored as exact
// phases: the value at an element is exp(2*pi*i*phase). Labels are nu for a
// cyclic group and (nu1, nu2) for a direct product of two cyclics.
struct Character {
    std::vector<long long> label;  // size 1 or 2
    std::vector<Rational> phases;  // aligned with the table's element order

    friend bool operator==(const Character&, const Character&) = default;
};

struct CharacterTable {
    FiniteSubgroup group;
    std::vector<GroupElement> element_order; // sorted ascending
    std::vector<long long> factor_orders;    // N, or (N1, N2)
    std::vector<Character> rows;             // |group| characters

    const Rational& phase(std::size_t row, const GroupElement& g) const;
};

// All |F| characters. A cyclic group uses its stored generator with
// phase(g^j) = nu*j/N; a two-generator group uses the stored direct-product
// pair with phase = nu1*j1/N1 + nu2*j2/N2. Throws std::invalid_argument when
// the stored generators do not span F as a direct product.
CharacterTable character_table(const FiniteSubgroup& F);

// Floating-point orthogonality check of a complete table within 1e-9.
bool verify_orthogonality(const CharacterTable& table);

struct InductionResult {
    CharacterTable g_table;
    std::vector<long long> multiplicities; // aligned with g_table.rows
    long long index = 0;                   // [G : F]

    long long total() const;
};

// Multiplicities of Ind_F^G chi in the characters of G, computed exactly.
// In the abelian case each multiplicity is 0 or 1 and exactly [G:F]
// characters extend chi.
InductionResult induce_finite(const FiniteSubgroup& F, const FiniteSubgroup& G,
                              const Character& chi);

// Exact <Res_F psi, chi>_F for characters psi of G and chi of F.
long long restriction_inner_product(const CharacterTable& f_table, const Character& chi,
                                    const CharacterTable& g_table, const Character& psi);

struct InducedRepDescriptor {
    FiniteSubgroup little_group;
    std::vector<long long> irrep_label;
    std::string orbit_note;
    std::string measure_note;
    std::string carrier_note;
};

// Inducing data for a finite little group and one of its characters.
// Requires class E1 and an in-range label.
InducedRepDescriptor induced_descriptor(const FiniteSubgroup& G_little,
                                        const std::vector<long long>& label);

} // namespace hb
