#include "hb/witness.hpp"

#include "hb/errors.hpp"

#include <stdexcept>

namespace hb {

RectUnion build_rectangle(long long n, long long m) {
    if (n < 2 || m < 2 || n % 2 != 0 || m % 2 != 0)
        throw std::domain_error("build_rectangle requires even n, m >= 2");
    const Rational cx(1, n), cy(1, m);
    const Rational hx(1, 4 * n), hy(1, 4 * m);
    return RectUnion::single(cx - hx, cx + hx, cy - hy, cy + hy);
}

GridSpec witness_grid(long long n, long long m, long long scale) {
    if (scale < 1) throw std::domain_error("witness_grid requires scale >= 1");
    return GridSpec{lcm_ll(4 * n, 4 * scale * n), lcm_ll(4 * m, 4 * scale * m)};
}

GridFunction build_zeta3(const FiniteSubgroup& G, const GridSpec& spec) {
    if (G.class_tag != SubgroupClass::E1)
        throw class_error("zeta3 witness exists only for class E1 subgroups");
    const GridFunction chi = indicator(build_rectangle(G.ambient_n, G.ambient_m), spec);
    GridFunction sum = GridFunction::zero(spec);
    for (const GroupElement& g : G.elements) {
        if (!spec.commensurate(g))
            throw grid_error("witness grid is not commensurate with the subgroup");
        const GridFunction term = dual_apply(g.inverse(), chi);
        for (std::size_t i = 0; i < sum.values.size(); ++i) sum.values[i] += term.values[i];
    }
    // |K^G| = 2 for class E1 (the kernel intersection is exactly <(1/2,1/2)>)
    for (Rational& v : sum.values) v /= 2;
    return sum;
}

std::vector<GroupElement> detect_little_group(const GridFunction& f,
                                              const FiniteSubgroup& test_set) {
    std::vector<GroupElement> stab;
    for (const GroupElement& h : test_set.elements) {
        if (!f.spec.commensurate(h))
            throw grid_error("test element is not commensurate with the grid");
        if (dual_apply(h, f) == f) stab.push_back(h);
    }
    return stab;
}

WitnessReport run_witness(const FiniteSubgroup& G, long long scale) {
    WitnessReport report;
    report.ambient_n = G.ambient_n;
    report.ambient_m = G.ambient_m;
    report.generators = G.generators;
    report.grid = witness_grid(G.ambient_n, G.ambient_m, scale);

    const GridFunction zeta = build_zeta3(G, report.grid);
    const FiniteSubgroup refined = make_ambient(scale * G.ambient_n, scale * G.ambient_m);
    report.stabilizer = detect_little_group(zeta, refined);
    report.match = report.stabilizer == G.elements;
    return report;
}

} // namespace hb
