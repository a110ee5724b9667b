#pragma once

// Folding a based root datum under a finite group of diagram automorphisms:
// orbit-averaged root systems (possibly non-reduced), the block partition of
// the positive roots by projection ray, fixed Weyl subgroups, and the
// component group of the fixed points of the dual torus.

#include <vector>

#include "parahoric/abelian.hpp"
#include "parahoric/rootdata.hpp"

namespace parahoric::folding {

// Inertia generators plus a Frobenius, all lattice automorphisms that must
// preserve the root set and the simple set.  frobenius = identity for pure
// inner twists.
struct GaloisAction {
    abelian::LatticeAction inertia;
    IntMat frobenius;

    static GaloisAction trivial(std::size_t rank);
    // All generators (inertia and Frobenius) in one list.
    std::vector<IntMat> all_generators() const;
};

void validate_action(const rootdata::BasedRootDatum& d, const GaloisAction& a);

struct OrbitBlock {
    std::vector<std::size_t> members;  // indices into the datum's root list, positive roots only
    std::size_t representative;        // member minimal by (height, lex)
    int type = 1;                      // 2 when the block carries two projection lengths
    RatVec projection;                 // the shorter folded value on the block's ray
};

struct FoldedSystem {
    std::vector<RatVec> psi;        // all folded roots, sorted
    std::vector<RatVec> delta;      // folded simple roots, sorted
    std::vector<RatVec> reduced_long;  // psi minus the longer member of each multiple pair
    std::vector<RatVec> reduced_short;  // psi minus the shorter member of each multiple pair
    std::vector<OrbitBlock> blocks;
    std::size_t inertia_order = 1;
};

// Orbit-average the root system under the inertia generators.  Validates
// that the folded set satisfies the root-system axioms for the canonical
// Weyl-invariant form, that every two-length block has the three-member
// shape supported on an even A-type diagram component, and that an odd
// inertia order yields a reduced folded system.
FoldedSystem fold(const rootdata::BasedRootDatum& d, const abelian::LatticeAction& inertia);

// Gram matrix of the canonical Weyl-invariant form sum_{b in coroots} <x,b><y,b>.
IntMat invariant_form(const rootdata::BasedRootDatum& d);

// Elements of W commuting with every given automorphism (as root permutations).
rootdata::WeylGroup fixed_weyl(const rootdata::BasedRootDatum& d,
                               const std::vector<IntMat>& automorphisms,
                               std::size_t bound = 1000000);

// Order of the Weyl group of the folded system (generated by reflections in
// the folded simple roots, acting on the folded root list).
std::size_t folded_weyl_order(const rootdata::BasedRootDatum& d, const FoldedSystem& f,
                              std::size_t bound = 1000000);

// Component group of the fixed points of the dual torus: torsion of the
// coinvariants of the (co)character lattice, as a diagonal presentation.
abelian::FinAbGroup pi0_fixed_torus(std::size_t rank, const abelian::LatticeAction& a);

// Greedy search for a permutation basis of the lattice (union of orbits of
// +-e_i that stays independent).  true certifies the module is induced;
// false only reports that the search failed.
bool induced_lattice_check(std::size_t rank, const abelian::LatticeAction& a);

}  // namespace parahoric::folding
