#pragma once

// Dual-group bookkeeping: the character group of the dual center and the
// character groups X*(Z(M-hat)^I_Phi) that index weakly unramified
// characters, computed as (coinvariants under inertia) then (invariants
// under Frobenius) of the ambient lattice modulo Levi roots.

#include <vector>

#include "parahoric/abelian.hpp"
#include "parahoric/folding.hpp"
#include "parahoric/rootdata.hpp"

namespace parahoric::dualdata {

using abelian::FinAbGroup;

struct DualGroupDatum {
    rootdata::BasedRootDatum datum;  // the dual group's based root datum
    folding::GaloisAction action;    // pinned action: preserves the simple set
};

void validate(const DualGroupDatum& d);

// X*(T-hat) modulo the Z-span of the roots.
FinAbGroup center_char_group(const rootdata::BasedRootDatum& datum);

// The quotient-then-subgroup tower, kept so characters and classes can be
// moved between the ambient lattice and the minimized presentation.
struct KottwitzGroup {
    std::size_t lattice_rank = 0;
    FinAbGroup coinv;                   // X / (levi roots + inertia coinvariant relations)
    abelian::SubgroupPresentation sub;  // frobenius invariants of coinv
    abelian::MinimizedPresentation min;
    FinAbGroup group;                   // = min.group, diagonal presentation
    IntMat gens_in_ambient;             // lattice representative of each minimized generator

    // Minimized coordinates of the class of an ambient vector; throws when
    // the class is not frobenius-invariant.
    IntVec coords_of(const IntVec& x) const;
    // Ambient representative of minimized coordinates.
    IntVec ambient_of(const IntVec& y) const;
};

// Throws unless every Galois generator permutes the levi's simple roots
// among themselves.
void check_levi_stable(const DualGroupDatum& d, const std::vector<std::size_t>& levi);

// levi indexes into datum.simple and must be stable under every Galois
// generator.
KottwitzGroup kottwitz_group(const DualGroupDatum& d, const std::vector<std::size_t>& levi);

// Rank of the maximal split central torus on the group side: invariants of
// the coroot-perp lattice under all Galois generators.
std::size_t split_central_rank(const DualGroupDatum& d);

}  // namespace parahoric::dualdata
