// Command-line front end: subgroup enumeration and classification, elementary
// domains, witness runs, character tables and a one-shot verification suite,
// all with deterministic JSON output on stdout.

#include "hb/errors.hpp"
#include "hb/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

namespace {

using hb::Json;

constexpr long long kDefaultGuard = 16;

long long guard_max() {
    if (const char* env = std::getenv("HB_GUARD_MAX")) {
        const long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return kDefaultGuard;
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_ambient_args(long long n, long long m) {
    if (n < 2 || m < 2 || n % 2 != 0 || m % 2 != 0)
        throw UsageError("n and m must be even and >= 2");
    if (n > guard_max() || m > guard_max())
        throw UsageError("n and m must be <= " + std::to_string(guard_max()) +
                         " (override with HB_GUARD_MAX)");
}

void print(const Json& j, bool pretty) {
    if (pretty)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

hb::FiniteSubgroup subgroup_at(long long n, long long m, long long index) {
    const std::vector<hb::FiniteSubgroup> all = hb::enumerate_subgroups(n, m);
    if (index < 0 || index >= static_cast<long long>(all.size()))
        throw UsageError("subgroup index out of range; " + std::to_string(all.size()) +
                         " subgroups exist for this ambient");
    return all[static_cast<std::size_t>(index)];
}

// set-of-element-sets comparison: the two lists use different orders
bool enumeration_agrees(const std::vector<hb::FiniteSubgroup>& enumerated,
                        const std::vector<hb::FiniteSubgroup>& oracle) {
    if (enumerated.size() != oracle.size()) return false;
    std::set<std::vector<hb::GroupElement>> a, b;
    for (const auto& f : enumerated) a.insert(f.elements);
    for (const auto& f : oracle) b.insert(f.elements);
    return a == b && a.size() == enumerated.size();
}

int cmd_subgroups(long long n, long long m, bool cyclic_only, bool two_gen_only,
                  const std::string& class_name, bool oracle, bool pretty) {
    check_ambient_args(n, m);
    std::optional<hb::SubgroupClass> filter;
    if (!class_name.empty()) {
        filter = hb::subgroup_class_from_string(class_name);
        if (!filter) throw UsageError("unknown class tag " + class_name);
    }
    if (oracle) {
        const auto enumerated = hb::enumerate_subgroups(n, m);
        const auto oracle_list = hb::brute_force_subgroups(n, m);
        const bool agree = enumeration_agrees(enumerated, oracle_list);
        long long cyclic = 0;
        for (const auto& f : enumerated)
            if (f.is_cyclic()) ++cyclic;
        print(Json{{"agree", agree},
                   {"counts",
                    Json{{"cyclic", cyclic},
                         {"two_generator", static_cast<long long>(enumerated.size()) - cyclic},
                         {"total", enumerated.size()},
                         {"oracle", oracle_list.size()}}}},
              pretty);
        return agree ? 0 : 4;
    }
    std::vector<hb::FiniteSubgroup> list;
    if (cyclic_only)
        list = hb::enumerate_cyclic(n, m, filter);
    else if (two_gen_only)
        list = hb::enumerate_two_generator(n, m, filter);
    else
        list = hb::enumerate_subgroups(n, m, filter);
    Json out = Json::array();
    for (const auto& f : list) out.push_back(hb::to_json(f));
    print(out, pretty);
    return 0;
}

int cmd_domain(long long n, long long m, long long index, bool verify, bool pretty) {
    check_ambient_args(n, m);
    const hb::FiniteSubgroup H = subgroup_at(n, m, index);
    const hb::FiniteSubgroup G = hb::make_ambient(n, m);
    const hb::RectUnion E = hb::subgroup_domain(G, H);
    if (!verify) {
        print(hb::to_json(E), pretty);
        return 0;
    }
    const hb::ElementaryReport report = hb::verify_elementary(E, H);
    Json out = hb::to_json(report);
    out["pieces"] = hb::to_json(E)["pieces"];
    print(out, pretty);
    return report.pass() ? 0 : 4;
}

int cmd_witness(long long n, long long m, long long index, long long scale, bool pretty) {
    check_ambient_args(n, m);
    if (scale < 1 || scale > 8) throw UsageError("--ambient-scale must be in 1..8");
    const hb::FiniteSubgroup H = subgroup_at(n, m, index);
    if (H.class_tag != hb::SubgroupClass::E1)
        throw hb::class_error("subgroup " + std::to_string(index) + " has class " +
                              std::string(hb::to_string(H.class_tag)) +
                              "; witness functions exist for class E1 only");
    const hb::WitnessReport report = hb::run_witness(H, scale);
    print(hb::to_json(report), pretty);
    return report.match ? 0 : 4;
}

int cmd_characters(long long n, long long m, long long index, bool pretty) {
    check_ambient_args(n, m);
    const hb::FiniteSubgroup F = subgroup_at(n, m, index);
    const hb::CharacterTable table = hb::character_table(F);
    Json out = hb::to_json(table);
    out["orthogonal"] = hb::verify_orthogonality(table);
    print(out, pretty);
    return 0;
}

int cmd_verify_all(long long max_n, long long max_m, bool pretty) {
    if (max_n < 2 || max_m < 2) throw UsageError("bounds must be >= 2");
    if (max_n > guard_max() || max_m > guard_max())
        throw UsageError("bounds exceed the size guard " + std::to_string(guard_max()) +
                         " (override with HB_GUARD_MAX)");
    constexpr long long kTrials = 10;
    bool all_pass = true;
    Json ambients = Json::array();
    for (long long n = 2; n <= max_n; n += 2) {
        for (long long m = 2; m <= max_m; m += 2) {
            Json entry{{"n", n}, {"m", m}};
            const auto enumerated = hb::enumerate_subgroups(n, m);
            const auto oracle_list = hb::brute_force_subgroups(n, m);
            const bool agree = enumeration_agrees(enumerated, oracle_list);
            entry["enumeration_oracle_agree"] = agree;
            entry["subgroup_count"] = enumerated.size();

            // classes partition the list by construction; count them
            long long counts[5] = {0, 0, 0, 0, 0};
            for (const auto& f : enumerated) counts[static_cast<int>(f.class_tag)] += 1;
            entry["class_counts"] = Json{{"O", counts[0]},
                                         {"E1", counts[1]},
                                         {"E2", counts[2]},
                                         {"E3", counts[3]},
                                         {"E4", counts[4]}};

            const hb::FiniteSubgroup G = hb::make_ambient(n, m);
            bool domains_pass = true;
            bool projections_pass = true;
            bool witness_pass = true;
            bool characters_pass = true;
            for (const auto& H : enumerated) {
                const hb::RectUnion E = hb::subgroup_domain(G, H);
                const hb::ElementaryReport rep = hb::verify_elementary(E, H);
                long long kernel_in_h = 0;
                for (const auto& k : hb::kernel(n, m))
                    if (H.contains(k)) ++kernel_in_h;
                if (!rep.pass() || rep.area != hb::Rational(kernel_in_h, H.order))
                    domains_pass = false;

                if (!hb::verify_projection_identities(H, kTrials).pass())
                    projections_pass = false;

                if (H.class_tag == hb::SubgroupClass::E1 && !hb::run_witness(H).match)
                    witness_pass = false;

                const hb::CharacterTable table = hb::character_table(H);
                if (!hb::verify_orthogonality(table)) characters_pass = false;
                // induction up to the ambient: dimensions must add to the index
                const hb::InductionResult ind = hb::induce_finite(H, G, table.rows[0]);
                if (ind.total() != ind.index) characters_pass = false;
            }
            entry["domains_pass"] = domains_pass;
            entry["projection_identities_pass"] = projections_pass;
            entry["witness_matches"] = witness_pass;
            entry["characters_pass"] = characters_pass;
            if (!(agree && domains_pass && projections_pass && witness_pass && characters_pass))
                all_pass = false;
            ambients.push_back(std::move(entry));
        }
    }
    print(Json{{"max_n", max_n}, {"max_m", max_m}, {"ambients", std::move(ambients)},
               {"pass", all_pass}},
          pretty);
    return all_pass ? 0 : 4;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for the finite little groups of the ultrahyperbolic BMS "
                 "group: enumeration, elementary domains, witness functions and induced-"
                 "representation data. Subgroup indices refer to the deterministic order "
                 "(cyclic subgroups first, then two-generator, each sorted by element set)."};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent JSON output");

    long long n = 2, m = 2, index = 0, scale = 2, max_n = 6, max_m = 6;
    bool cyclic_only = false, two_gen_only = false, oracle = false, verify = false;
    std::string class_name;

    CLI::App* sub = app.add_subcommand("subgroups", "enumerate subgroups of C_n x C_m");
    sub->add_option("n", n, "first ambient order (even)")->required();
    sub->add_option("m", m, "second ambient order (even)")->required();
    sub->add_flag("--cyclic", cyclic_only, "cyclic subgroups only");
    sub->add_flag("--two-gen", two_gen_only, "two-generator subgroups only");
    sub->add_option("--class", class_name, "restrict to a class tag (O, E1..E4)");
    sub->add_flag("--oracle", oracle, "cross-check against brute-force closure enumeration");

    CLI::App* dom = app.add_subcommand("domain", "elementary domain of a subgroup");
    dom->add_option("n", n, "first ambient order (even)")->required();
    dom->add_option("m", m, "second ambient order (even)")->required();
    dom->add_option("index", index, "subgroup index in the deterministic order")->required();
    dom->add_flag("--verify", verify, "run the exact tiling checks");

    CLI::App* wit = app.add_subcommand("witness", "stabilizer witness run for an E1 subgroup");
    wit->add_option("n", n, "first ambient order (even)")->required();
    wit->add_option("m", m, "second ambient order (even)")->required();
    wit->add_option("index", index, "subgroup index in the deterministic order")->required();
    wit->add_option("--ambient-scale", scale, "detection ambient is C_{s*n} x C_{s*m}");

    CLI::App* chars = app.add_subcommand("characters", "character table of a subgroup");
    chars->add_option("n", n, "first ambient order (even)")->required();
    chars->add_option("m", m, "second ambient order (even)")->required();
    chars->add_option("index", index, "subgroup index in the deterministic order")->required();

    CLI::App* ver = app.add_subcommand("verify-all", "run the full verification suite");
    ver->add_option("max_n", max_n, "largest first ambient order")->required();
    ver->add_option("max_m", max_m, "largest second ambient order")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sub->parsed())
            return cmd_subgroups(n, m, cyclic_only, two_gen_only, class_name, oracle, pretty);
        if (dom->parsed()) return cmd_domain(n, m, index, verify, pretty);
        if (wit->parsed()) return cmd_witness(n, m, index, scale, pretty);
        if (chars->parsed()) return cmd_characters(n, m, index, pretty);
        if (ver->parsed()) return cmd_verify_all(max_n, max_m, pretty);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hb::size_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hb::class_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
