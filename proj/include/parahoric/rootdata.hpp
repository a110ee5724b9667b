#pragma once

// Based root data over an explicit character lattice Z^rank.  Roots and
// coroots are stored as paired lists of integer vectors (root i pairs with
// coroot i); the canonical pairing is the dot product of the two coordinate
// vectors.  Weyl groups are represented as permutations of the root list,
// which stays cheap even at |W| ~ 5*10^4.

#include <cstdint>
#include <vector>

#include "parahoric/abelian.hpp"
#include "parahoric/linalg.hpp"

namespace parahoric::rootdata {

using Perm = std::vector<std::uint32_t>;

struct BasedRootDatum {
    std::size_t rank = 0;
    std::vector<IntVec> roots;
    std::vector<IntVec> coroots;
    std::vector<std::size_t> simple;  // indices into roots
};

// Structural checks: pairing values, negation closure with matching coroots,
// stability under simple reflections, reducedness, roots in Z-span of the
// simple roots.  Throws invariant_error.
void validate(const BasedRootDatum& d);

std::size_t root_index(const BasedRootDatum& d, const IntVec& v);

// Coordinates of every root over the simple roots (integral for a valid datum).
std::vector<IntVec> simple_coordinates(const BasedRootDatum& d);

// Indices of the positive roots, in listing order.
std::vector<std::size_t> positive_roots(const BasedRootDatum& d);

BasedRootDatum dual(const BasedRootDatum& d);

// Half-sums of positive roots / positive coroots.
RatVec rho(const BasedRootDatum& d);
RatVec rho_check(const BasedRootDatum& d);

// Sub-datum on the roots supported on the given subset of simple roots
// (`positions` indexes into d.simple).  The lattice is unchanged.
BasedRootDatum levi_subdatum(const BasedRootDatum& d, const std::vector<std::size_t>& positions);

// --- permutations ----------------------------------------------------------

Perm perm_identity(std::size_t n);
Perm perm_compose(const Perm& a, const Perm& b);  // (a after b)[i] = a[b[i]]
Perm perm_inverse(const Perm& a);

// Permutation of the root list induced by a lattice automorphism g; checks
// that g permutes the roots compatibly with coroots (g^{-T} on coroots).
Perm root_permutation(const BasedRootDatum& d, const IntMat& g);

// Reflection in root i as a permutation of the root list / lattice matrix.
Perm reflection_perm(const BasedRootDatum& d, std::size_t i);
IntMat reflection_matrix(const BasedRootDatum& d, std::size_t i);

struct WeylGroup {
    std::vector<Perm> elements;  // identity first, BFS order from simple reflections
    std::size_t order() const { return elements.size(); }
};

WeylGroup weyl_group(const BasedRootDatum& d, std::size_t bound = 1000000);

// Subgroup generated by the reflections in the given simple positions,
// still acting on the full root list.
WeylGroup weyl_subgroup(const BasedRootDatum& d, const std::vector<std::size_t>& positions,
                        std::size_t bound = 1000000);

// Lattice matrix of a Weyl element given as a root permutation: acts as the
// permutation on the root span and as the identity on the coroot-perp.
IntMat weyl_matrix(const BasedRootDatum& d, const Perm& w);

// Same, for many elements: the basis inversion is shared.
std::vector<IntMat> weyl_matrices(const BasedRootDatum& d, const std::vector<Perm>& ws);

// --- builders ---------------------------------------------------------------

// Simply connected datum in the fundamental-weight basis: simple root j is
// column j of the Cartan matrix, simple coroot i is e_i.
BasedRootDatum datum_from_cartan(const IntMat& cartan);

// Adjoint datum in the simple-root basis: simple root j is e_j, simple
// coroot i is row i of the Cartan matrix.
BasedRootDatum adjoint_datum_from_cartan(const IntMat& cartan);

// Generic closure from given simple (root, coroot) pairs.
BasedRootDatum datum_from_simple(std::size_t rank, const std::vector<IntVec>& simple_roots,
                                 const std::vector<IntVec>& simple_coroots);

BasedRootDatum gl_datum(std::size_t n);   // Z^n, roots e_i - e_j
BasedRootDatum sl_datum(std::size_t n);   // weight basis, rank n-1
BasedRootDatum pgl_datum(std::size_t n);  // root basis, rank n-1
BasedRootDatum sp4_datum();               // Z^2, long roots ±2e_i
BasedRootDatum spin8_datum();             // weight basis D4
BasedRootDatum e6_datum();                // weight basis E6
BasedRootDatum torus_datum(std::size_t n);

IntMat cartan_A(std::size_t n);
IntMat cartan_D4();
IntMat cartan_E6();
IntMat cartan_G2();

}  // namespace parahoric::rootdata
