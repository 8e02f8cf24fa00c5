#pragma once

#include "hb/domains.hpp"
#include "hb/dualaction.hpp"
#include "hb/groups.hpp"

#include <cstdint>

namespace hb {

// Copy the values of f at grid points inside E and set everything else to 0.
GridFunction extend_by_zero(const GridFunction& f, const RectUnion& E);

// sigma(f) = (1/|K^F|) sum_{g in F} T'(g) f. The result is F-invariant; for
// subgroups of class E2, E3 and E4 the terms cancel exactly and the result is
// the zero function.
GridFunction sigma_project(const FiniteSubgroup& F, const GridFunction& f);

// rho(f) = chi_E * f, pointwise on the grid.
GridFunction rho_restrict(const FiniteSubgroup& F, const GridFunction& f, const RectUnion& E);

struct InvariantReport {
    long long ambient_n = 0;
    long long ambient_m = 0;
    std::vector<GroupElement> generators;
    SubgroupClass class_tag = SubgroupClass::O;
    long long trials = 0;
    bool rho_sigma_identity = false; // rho(sigma(f)) == f on E-supported functions
    bool sigma_rho_identity = false; // sigma(rho(f)) == f on invariant functions
    bool annihilated = false;        // sigma(f) == 0 for every trial (E2/E3/E4)
    long long invariant_dimension = 0;

    bool pass() const;
};

// Random grid function with small integer values, reproducible by seed.
GridFunction random_grid_function(const GridSpec& spec, std::uint64_t seed);

// For class O/E1: checks rho.sigma = id on random E-supported functions and
// sigma.rho = id on random invariant functions, exactly. For E2/E3/E4: checks
// sigma annihilates every trial. The elementary domain E and the grid are
// built from the subgroup itself.
InvariantReport verify_projection_identities(const FiniteSubgroup& F, long long trials,
                                             std::uint64_t seed = 12345);

} // namespace hb
