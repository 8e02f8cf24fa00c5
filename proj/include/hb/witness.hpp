#pragma once

#include "hb/domains.hpp"
#include "hb/dualaction.hpp"
#include "hb/groups.hpp"

#include <vector>

namespace hb {

// The open rectangle with center (1/n, 1/m) turns and half-sides 1/(4n),
// 1/(4m): its translates under distinct torus shifts of C_n x C_m never
// overlap, which is what makes it a stabilizer witness.
RectUnion build_rectangle(long long n, long long m);

// Grid sized for a witness run over the scale-refined ambient
// C_{scale*n} x C_{scale*m}: N1 = lcm(4n, 4*scale*n), N2 likewise.
GridSpec witness_grid(long long n, long long m, long long scale);

// zeta3 = (1/|K^G|) sum_{g in G} T'(g^-1) chi_R, an exact G-invariant grid
// function whose stabilizer is G and nothing more. Requires class E1.
GridFunction build_zeta3(const FiniteSubgroup& G, const GridSpec& spec);

// {h in test_set : T'(h) f == f exactly}. The result is closed under
// multiplication by (1/2, 1/2), the one rotation pair acting trivially.
std::vector<GroupElement> detect_little_group(const GridFunction& f,
                                              const FiniteSubgroup& test_set);

struct WitnessReport {
    long long ambient_n = 0;
    long long ambient_m = 0;
    std::vector<GroupElement> generators;
    GridSpec grid;
    std::vector<GroupElement> stabilizer;
    bool match = false; // stabilizer over the refined ambient equals G
};

// Full run: build zeta3 for G on the witness grid and scan the stabilizer
// over C_{scale*n} x C_{scale*m}.
WitnessReport run_witness(const FiniteSubgroup& G, long long scale = 2);

} // namespace hb
