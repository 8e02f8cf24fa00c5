// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every check is exact rational arithmetic unless a tolerance is stated.

#include "hb/domains.hpp"
#include "hb/dualaction.hpp"
#include "hb/exactmath.hpp"
#include "hb/groups.hpp"
#include "hb/invariantspace.hpp"
#include "hb/json_io.hpp"
#include "hb/repr.hpp"
#include "hb/witness.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace hb;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool pass, double seconds,
            const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s (%.1fs%s%s)\n", pass ? "PASS" : "FAIL", criterion,
                what.c_str(), seconds, detail.empty() ? "" : "; ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

class Timer {
  public:
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<long long> even_values(long long max) {
    std::vector<long long> v;
    for (long long x = 2; x <= max; x += 2) v.push_back(x);
    return v;
}

long long kernel_order_in(const FiniteSubgroup& H) {
    long long c = 0;
    for (const GroupElement& k : kernel(H.ambient_n, H.ambient_m))
        if (H.contains(k)) ++c;
    return c;
}

// ---- criterion 1 & 2: enumeration against the closure oracle, exact orders

void criterion_1_and_2() {
    Timer t;
    bool agree = true, unique_sets = true;
    bool orders = true;
    long long total = 0;
    for (long long n : even_values(16)) {
        for (long long m : even_values(16)) {
            const auto enumerated = enumerate_subgroups(n, m);
            const auto oracle = brute_force_subgroups(n, m);
            std::set<std::vector<GroupElement>> a, b;
            for (const auto& f : enumerated) a.insert(f.elements);
            for (const auto& f : oracle) b.insert(f.elements);
            if (a != b) agree = false;
            if (a.size() != enumerated.size()) unique_sets = false;
            total += static_cast<long long>(enumerated.size());
            for (const auto& f : enumerated) {
                // the product formula order is the product of the generator
                // orders of the stored direct decomposition
                long long formula = 1;
                for (const GroupElement& g : f.generators)
                    formula *= g.order().convert_to<long long>();
                if (f.order != static_cast<long long>(f.elements.size())) orders = false;
                if (formula != f.order) orders = false;
            }
        }
    }
    report(1, "parameterized enumeration equals brute force for all even n,m <= 16",
           agree && unique_sets, t.elapsed(), std::to_string(total) + " subgroups, 0 duplicates");
    report(2, "product-formula orders equal element counts exactly", orders, t.elapsed());
}

// ---- criterion 3: class partition, annihilation, odd-order coincidence

void criterion_3() {
    Timer t;
    bool partition = true;
    for (long long n : even_values(16)) {
        for (long long m : even_values(16)) {
            for (const auto& f : enumerate_subgroups(n, m)) {
                const bool odd = f.order % 2 == 1;
                const bool has_a = f.contains({RationalAngle::make(1, 2), RationalAngle::make(1, 2)});
                const bool has_b = f.contains({RationalAngle::make(1, 2), RationalAngle()});
                const bool has_c = f.contains({RationalAngle(), RationalAngle::make(1, 2)});
                SubgroupClass expected;
                if (odd)
                    expected = SubgroupClass::O;
                else if (has_b && has_c)
                    expected = SubgroupClass::E4;
                else if (has_a)
                    expected = SubgroupClass::E1;
                else if (has_b)
                    expected = SubgroupClass::E2;
                else
                    expected = SubgroupClass::E3;
                if (f.class_tag != expected) partition = false;
                if (!odd && !(has_a || has_b || has_c)) partition = false;
            }
        }
    }

    bool annihilated = true;
    bool odd_coincide = true;
    for (long long n : even_values(6)) {
        for (long long m : even_values(6)) {
            for (const auto& f : enumerate_subgroups(n, m)) {
                if (f.class_tag == SubgroupClass::E2 || f.class_tag == SubgroupClass::E3 ||
                    f.class_tag == SubgroupClass::E4) {
                    if (!verify_projection_identities(f, 50).annihilated) annihilated = false;
                }
                if (f.class_tag == SubgroupClass::O) {
                    std::vector<GroupElement> gens = f.generators;
                    gens.push_back({RationalAngle::make(1, 2), RationalAngle::make(1, 2)});
                    const FiniteSubgroup with_a = subgroup_from_generators(n, m, gens);
                    const GridSpec spec = natural_grid(with_a, nullptr);
                    for (std::uint64_t s = 0; s < 50; ++s) {
                        const GridFunction fn = random_grid_function(spec, 9000 + s);
                        if (sigma_project(f, fn) != sigma_project(with_a, fn))
                            odd_coincide = false;
                    }
                }
            }
        }
    }
    report(3, "classes partition every list; E2/E3/E4 annihilated; O matches O x A",
           partition && annihilated && odd_coincide, t.elapsed());
}

// ---- criterion 4: the two projection identities, exactly

void criterion_4() {
    Timer t;
    bool pass = true;
    long long checked = 0;
    for (long long n : even_values(6)) {
        for (long long m : even_values(6)) {
            for (const auto& f : enumerate_subgroups(n, m)) {
                if (f.class_tag != SubgroupClass::O && f.class_tag != SubgroupClass::E1) continue;
                const InvariantReport r = verify_projection_identities(f, 50);
                if (!r.rho_sigma_identity || !r.sigma_rho_identity) pass = false;
                ++checked;
            }
        }
    }
    report(4, "rho.sigma and sigma.rho are exact identities for every O/E1 subgroup", pass,
           t.elapsed(), std::to_string(checked) + " subgroups x 50 trials, limit 120s");
}

// ---- criterion 5: elementary domains and the area identity

void criterion_5() {
    Timer t;
    bool pass = true;
    for (long long n : even_values(6)) {
        for (long long m : even_values(6)) {
            const FiniteSubgroup G = make_ambient(n, m);
            for (const auto& H : enumerate_subgroups(n, m)) {
                const RectUnion E = subgroup_domain(G, H);
                const ElementaryReport r = verify_elementary(E, H);
                if (!r.condition_a || !r.condition_b) pass = false;
                if (E.area() != Rational(kernel_order_in(H), H.order)) pass = false;
            }
        }
    }
    report(5, "every subgroup domain tiles exactly and area(E) = |K^H|/|H|", pass, t.elapsed());
}

// ---- criterion 6: witness stabilizers over the refined ambient

void criterion_6() {
    Timer t;
    bool pass = true;
    long long instances = 0;
    for (long long n : even_values(8)) {
        for (long long m : even_values(8)) {
            for (const auto& G : enumerate_subgroups(n, m, SubgroupClass::E1)) {
                const WitnessReport r = run_witness(G, 2);
                if (!r.match || r.stabilizer != G.elements) pass = false;
                ++instances;
            }
        }
    }
    report(6, "zeta3 stabilizer over the doubled ambient is exactly G for all E1, n,m <= 8",
           pass, t.elapsed(), std::to_string(instances) + " instances, limit 300s");
}

// ---- criterion 7: dual-action algebra on random triples

void criterion_7() {
    Timer t;
    bool pass = true;
    const long long n = 12, m = 12;
    const GridSpec spec{n, m};
    std::mt19937_64 rng(424242);
    auto rand_el = [&] {
        return GroupElement::from_indices(static_cast<long long>(rng() % n),
                                          static_cast<long long>(rng() % m), n, m);
    };
    GridFunction f = random_grid_function(spec, 31337);
    for (int trial = 0; trial < 10000; ++trial) {
        const GroupElement g1 = rand_el(), g2 = rand_el();
        const Rational rho = spec.x_of(static_cast<long long>(rng() % n));
        const Rational sig = spec.y_of(static_cast<long long>(rng() % m));
        const Rational moved_rho = mod_one(rho + 2 * g1.theta.turns());
        const Rational moved_sig = mod_one(sig + 2 * g1.phi.turns());
        if (gamma(g1 * g2, rho, sig) != gamma(g1, rho, sig) * gamma(g2, moved_rho, moved_sig))
            pass = false;
        if (gamma(g1, rho, sig) * gamma(g1, rho, sig) != 1) pass = false;
        if (trial % 50 == 0) {
            if (dual_apply(g1, dual_apply(g2, f)) != dual_apply(g1 * g2, f)) pass = false;
            if (dual_apply(g1, f).norm_sq() != f.norm_sq()) pass = false;
            f = random_grid_function(spec, 31337 + static_cast<std::uint64_t>(trial));
        }
    }
    report(7, "cocycle, group law, gamma^2 = 1 and norm preservation on 10^4 random triples",
           pass, t.elapsed());
}

// ---- criterion 8: character properties over all ambients <= 8

// exact induced-character inner product: the phase differences of a character
// of F take each value of a cyclic group of d-th roots equally often, so the
// sum is |F| when d = 1 and 0 otherwise; any other multiset fails loudly
long long induced_multiplicity_exact(const CharacterTable& f_table, std::size_t chi_row,
                                     const CharacterTable& g_table, std::size_t psi_row,
                                     bool* ok) {
    std::map<Rational, long long> counts;
    for (std::size_t e = 0; e < f_table.element_order.size(); ++e) {
        const Rational delta = mod_one(f_table.rows[chi_row].phases[e] -
                                       g_table.phase(psi_row, f_table.element_order[e]));
        counts[delta] += 1;
    }
    if (counts.size() == 1 && counts.begin()->first == 0) return 1;
    long long d = 1;
    for (const auto& [phase, count] : counts)
        d = lcm_ll(d, denominator(phase).convert_to<long long>());
    const long long per_class = static_cast<long long>(f_table.element_order.size()) / d;
    if (static_cast<long long>(counts.size()) != d) {
        *ok = false;
        return -1;
    }
    for (long long k = 0; k < d; ++k) {
        const auto it = counts.find(mod_one(Rational(k, d)));
        if (it == counts.end() || it->second != per_class) {
            *ok = false;
            return -1;
        }
    }
    return 0;
}

void criterion_8() {
    Timer t;
    bool multiplicative = true, orthogonal = true, frobenius = true, dimensions = true;
    for (long long n : even_values(8)) {
        for (long long m : even_values(8)) {
            const auto subgroups = enumerate_subgroups(n, m);
            std::vector<CharacterTable> tables;
            tables.reserve(subgroups.size());
            for (const auto& f : subgroups) tables.push_back(character_table(f));

            for (std::size_t i = 0; i < subgroups.size(); ++i) {
                if (!verify_orthogonality(tables[i])) orthogonal = false;
                for (const Character& chi : tables[i].rows) {
                    for (std::size_t a = 0; a < subgroups[i].elements.size(); ++a) {
                        for (std::size_t b = a; b < subgroups[i].elements.size(); ++b) {
                            const GroupElement prod =
                                subgroups[i].elements[a] * subgroups[i].elements[b];
                            const auto it = std::lower_bound(tables[i].element_order.begin(),
                                                             tables[i].element_order.end(), prod);
                            const std::size_t p =
                                static_cast<std::size_t>(it - tables[i].element_order.begin());
                            if (mod_one(chi.phases[a] + chi.phases[b]) != chi.phases[p])
                                multiplicative = false;
                        }
                    }
                }
            }

            for (std::size_t fi = 0; fi < subgroups.size(); ++fi) {
                for (std::size_t gi = 0; gi < subgroups.size(); ++gi) {
                    if (!subgroups[fi].subset_of(subgroups[gi])) continue;
                    const long long index = subgroups[gi].order / subgroups[fi].order;
                    for (std::size_t chi = 0; chi < tables[fi].rows.size(); ++chi) {
                        long long total = 0;
                        for (std::size_t psi = 0; psi < tables[gi].rows.size(); ++psi) {
                            bool ok = true;
                            const long long lhs = induced_multiplicity_exact(
                                tables[fi], chi, tables[gi], psi, &ok);
                            const long long rhs = restriction_inner_product(
                                tables[fi], tables[fi].rows[chi], tables[gi],
                                tables[gi].rows[psi]);
                            if (!ok || lhs != rhs) frobenius = false;
                            total += rhs;
                        }
                        if (total != index) dimensions = false;
                    }
                }
            }
        }
    }
    report(8, "characters multiplicative; orthogonal within 1e-9; Frobenius exact; "
              "induced dimensions add up",
           multiplicative && orthogonal && frobenius && dimensions, t.elapsed());
}

// ---- criterion 9: byte-identical verify-all runs

std::string run_cli(const std::string& cli, const std::string& args, int* exit_code) {
    const std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        *exit_code = -1;
        return "";
    }
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

void criterion_9() {
    Timer t;
    const char* cli = std::getenv("HB_CLI");
    if (cli == nullptr) {
        report(9, "two verify-all 6 6 runs are byte-identical", false, t.elapsed(),
               "HB_CLI not set");
        return;
    }
    int code_a = 0, code_b = 0;
    const std::string a = run_cli(cli, "verify-all 6 6", &code_a);
    const std::string b = run_cli(cli, "verify-all 6 6", &code_b);
    const bool pass = code_a == 0 && code_b == 0 && !a.empty() && a == b;
    report(9, "two verify-all 6 6 runs are byte-identical and pass", pass, t.elapsed());
}

} // namespace

int main() {
    criterion_1_and_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
