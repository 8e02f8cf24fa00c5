#include "hb/invariantspace.hpp"

#include <random>

namespace hb {

GridFunction extend_by_zero(const GridFunction& f, const RectUnion& E) {
    GridFunction out = GridFunction::zero(f.spec);
    for (long long i = 0; i < f.spec.n1; ++i)
        for (long long j = 0; j < f.spec.n2; ++j)
            if (E.contains_open(f.spec.x_of(i), f.spec.y_of(j))) out.at(i, j) = f.at(i, j);
    return out;
}

GridFunction sigma_project(const FiniteSubgroup& F, const GridFunction& f) {
    GridFunction sum = GridFunction::zero(f.spec);
    for (const GroupElement& g : F.elements) {
        const GridFunction term = dual_apply(g, f);
        for (std::size_t i = 0; i < sum.values.size(); ++i) sum.values[i] += term.values[i];
    }
    long long kernel_order = 0;
    for (const GroupElement& k : kernel(F.ambient_n, F.ambient_m))
        if (F.contains(k)) ++kernel_order;
    for (Rational& v : sum.values) v /= kernel_order;
    return sum;
}

GridFunction rho_restrict(const FiniteSubgroup&, const GridFunction& f, const RectUnion& E) {
    return extend_by_zero(f, E);
}

bool InvariantReport::pass() const {
    if (class_tag == SubgroupClass::O || class_tag == SubgroupClass::E1)
        return rho_sigma_identity && sigma_rho_identity;
    return annihilated && invariant_dimension == 0;
}

GridFunction random_grid_function(const GridSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    GridFunction f = GridFunction::zero(spec);
    for (Rational& v : f.values) {
        const long long num = static_cast<long long>(rng() % 19) - 9;
        const long long den = static_cast<long long>(rng() % 4) + 1;
        v = Rational(num, den);
    }
    return f;
}

InvariantReport verify_projection_identities(const FiniteSubgroup& F, long long trials,
                                             std::uint64_t seed) {
    InvariantReport report;
    report.ambient_n = F.ambient_n;
    report.ambient_m = F.ambient_m;
    report.generators = F.generators;
    report.class_tag = F.class_tag;
    report.trials = trials;

    const FiniteSubgroup ambient = make_ambient(F.ambient_n, F.ambient_m);
    const RectUnion E = subgroup_domain(ambient, F);
    const GridSpec spec = natural_grid(F, &E);

    const bool invariant_classes =
        F.class_tag == SubgroupClass::O || F.class_tag == SubgroupClass::E1;

    if (invariant_classes) {
        long long inside = 0;
        for (long long i = 0; i < spec.n1; ++i)
            for (long long j = 0; j < spec.n2; ++j)
                if (E.contains_open(spec.x_of(i), spec.y_of(j))) ++inside;
        report.invariant_dimension = inside;

        report.rho_sigma_identity = true;
        report.sigma_rho_identity = true;
        for (long long t = 0; t < trials; ++t) {
            const GridFunction raw = random_grid_function(spec, seed + static_cast<std::uint64_t>(t));
            const GridFunction f = extend_by_zero(raw, E); // in H_E
            if (rho_restrict(F, sigma_project(F, f), E) != f) report.rho_sigma_identity = false;
            const GridFunction inv = sigma_project(F, raw); // invariant
            if (sigma_project(F, rho_restrict(F, inv, E)) != inv) report.sigma_rho_identity = false;
        }
    } else {
        report.annihilated = true;
        const GridFunction zero = GridFunction::zero(spec);
        for (long long t = 0; t < trials; ++t) {
            const GridFunction f = random_grid_function(spec, seed + static_cast<std::uint64_t>(t));
            if (sigma_project(F, f) != zero) report.annihilated = false;
        }
        report.invariant_dimension = 0;
    }
    return report;
}

} // namespace hb
