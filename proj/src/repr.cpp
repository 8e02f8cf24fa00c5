#include "hb/repr.hpp"

#include "hb/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>

namespace hb {

const Rational& CharacterTable::phase(std::size_t row, const GroupElement& g) const {
    const auto it = std::lower_bound(element_order.begin(), element_order.end(), g);
    if (it == element_order.end() || !(*it == g))
        throw std::invalid_argument("element is not in the character table's group");
    return rows[row].phases[static_cast<std::size_t>(it - element_order.begin())];
}

CharacterTable character_table(const FiniteSubgroup& F) {
    CharacterTable table;
    table.group = F;
    table.element_order = F.elements;

    // decompose every element over the stored generators
    std::vector<long long> orders;
    for (const GroupElement& g : F.generators)
        orders.push_back(g.order().convert_to<long long>());
    long long span = 1;
    for (long long o : orders) span *= o;
    if (F.generators.empty() || F.generators.size() > 2 || span != F.order)
        throw std::invalid_argument("character_table: stored generators do not give a "
                                    "direct-product decomposition");
    table.factor_orders = orders;

    std::map<GroupElement, std::vector<long long>> exponents;
    if (F.generators.size() == 1) {
        GroupElement cur = GroupElement::identity();
        for (long long j = 0; j < orders[0]; ++j) {
            exponents[cur] = {j};
            cur = cur * F.generators[0];
        }
    } else {
        GroupElement g1 = GroupElement::identity();
        for (long long j1 = 0; j1 < orders[0]; ++j1) {
            GroupElement cur = g1;
            for (long long j2 = 0; j2 < orders[1]; ++j2) {
                if (!exponents.emplace(cur, std::vector<long long>{j1, j2}).second)
                    throw std::invalid_argument("character_table: generators do not span a "
                                                "direct product");
                cur = cur * F.generators[1];
            }
            g1 = g1 * F.generators[0];
        }
    }
    if (static_cast<long long>(exponents.size()) != F.order)
        throw std::invalid_argument("character_table: generators do not span the group");

    auto emit = [&](const std::vector<long long>& label) {
        Character chi;
        chi.label = label;
        chi.phases.reserve(table.element_order.size());
        for (const GroupElement& g : table.element_order) {
            const std::vector<long long>& js = exponents.at(g);
            Rational phase(0);
            for (std::size_t f = 0; f < js.size(); ++f)
                phase += Rational(label[f] * js[f], orders[f]);
            chi.phases.push_back(mod_one(phase));
        }
        table.rows.push_back(std::move(chi));
    };
    if (orders.size() == 1) {
        for (long long nu = 0; nu < orders[0]; ++nu) emit({nu});
    } else {
        for (long long nu1 = 0; nu1 < orders[0]; ++nu1)
            for (long long nu2 = 0; nu2 < orders[1]; ++nu2) emit({nu1, nu2});
    }
    return table;
}

bool verify_orthogonality(const CharacterTable& table) {
    const std::size_t n = table.rows.size();
    if (n != table.element_order.size())
        throw std::invalid_argument("orthogonality check needs a complete table");
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) {
            std::complex<double> sum = 0;
            for (std::size_t e = 0; e < n; ++e) {
                const double d = 2.0 * M_PI *
                                 to_double(table.rows[r].phases[e] - table.rows[s].phases[e]);
                sum += std::complex<double>(std::cos(d), std::sin(d));
            }
            sum /= static_cast<double>(n);
            const double expected = r == s ? 1.0 : 0.0;
            if (std::abs(sum - expected) > 1e-9) return false;
        }
    }
    return true;
}

long long InductionResult::total() const {
    long long t = 0;
    for (long long m : multiplicities) t += m;
    return t;
}

long long restriction_inner_product(const CharacterTable& f_table, const Character& chi,
                                    const CharacterTable& g_table, const Character& psi) {
    // The difference chi - Res psi is itself a character of F, so the sum of
    // its values over F is |F| when it is trivial and 0 otherwise. Checking
    // that every phase difference vanishes therefore computes the inner
    // product exactly.
    const auto psi_it = std::find(g_table.rows.begin(), g_table.rows.end(), psi);
    if (psi_it == g_table.rows.end())
        throw std::invalid_argument("psi is not a row of the ambient table");
    const std::size_t psi_row = static_cast<std::size_t>(psi_it - g_table.rows.begin());
    for (std::size_t e = 0; e < f_table.element_order.size(); ++e) {
        const Rational delta =
            mod_one(chi.phases[e] - g_table.phase(psi_row, f_table.element_order[e]));
        if (delta != 0) return 0;
    }
    return 1;
}

InductionResult induce_finite(const FiniteSubgroup& F, const FiniteSubgroup& G,
                              const Character& chi) {
    if (!F.subset_of(G)) throw std::invalid_argument("induce_finite: F is not contained in G");
    CharacterTable f_table = character_table(F);
    if (std::find(f_table.rows.begin(), f_table.rows.end(), chi) == f_table.rows.end())
        throw std::invalid_argument("induce_finite: chi is not a character of F");

    InductionResult result;
    result.g_table = character_table(G);
    result.index = G.order / F.order;
    result.multiplicities.reserve(result.g_table.rows.size());
    // Frobenius reciprocity in the abelian case: <Ind chi, psi>_G = <chi, Res psi>_F
    for (const Character& psi : result.g_table.rows)
        result.multiplicities.push_back(restriction_inner_product(f_table, chi,
                                                                  result.g_table, psi));
    if (result.total() != result.index)
        throw std::logic_error("induced character multiplicities do not sum to [G:F]");
    return result;
}

InducedRepDescriptor induced_descriptor(const FiniteSubgroup& G_little,
                                        const std::vector<long long>& label) {
    if (G_little.class_tag != SubgroupClass::E1)
        throw class_error("induced representations are built over class E1 little groups only");
    const CharacterTable table = character_table(G_little);
    if (label.size() != table.factor_orders.size())
        throw std::out_of_range("character label has the wrong arity for this little group");
    for (std::size_t i = 0; i < label.size(); ++i)
        if (label[i] < 0 || label[i] >= table.factor_orders[i])
            throw std::out_of_range("character label out of range 0..N-1");

    std::string label_text = "(";
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (i) label_text += ",";
        label_text += std::to_string(label[i]);
    }
    label_text += ")";

    InducedRepDescriptor d;
    d.little_group = G_little;
    d.irrep_label = label;
    d.orbit_note = "orbit ~ (SL(2,R) x SL(2,R)) / C with C the little group; conjugate "
                   "base points give the same descriptor";
    d.measure_note = "the finite C-action on SL(2,R) x SL(2,R) is fixed point free, so the "
                     "coset space inherits the invariant measure of the ambient group";
    d.carrier_note = "square-integrable functions on the coset space with values in D ~ C, "
                     "twisted by the character " + label_text;
    return d;
}

} // namespace hb
