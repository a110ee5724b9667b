#pragma once

// Satake parameters for inner forms: the parameter lattice (Frobenius
// invariants of the inertia coinvariants of the dual character lattice), the
// normalized transfer from weakly unramified characters of the minimal Levi,
// Weyl-orbit normal forms, membership in the transfer image, the principal
// eigenvalue criterion, and invariant-ring plumbing (orbit sums, center
// evaluation, constant-term expansion).

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "parahoric/dualdata.hpp"
#include "parahoric/folding.hpp"
#include "parahoric/rootdata.hpp"
#include "parahoric/values.hpp"

namespace parahoric::satake {

using dualdata::DualGroupDatum;
using dualdata::KottwitzGroup;
using values::FormalSum;
using values::FormalValue;
using values::TorusCharacter;

struct GroupSpec {
    DualGroupDatum quasisplit_dual;
    std::vector<std::size_t> minimal_levi;  // positions into the simple list; empty = quasi-split
    rootdata::WeylGroup relative_weyl;      // Weyl elements commuting with the Galois action

    bool quasi_split() const { return minimal_levi.empty(); }
};

// Validates the datum, the action, and the levi's Galois stability, and
// computes the fixed Weyl group.
GroupSpec make_group_spec(DualGroupDatum d, std::vector<std::size_t> minimal_levi);

// Everything derived from a GroupSpec that the operations share: the
// parameter group P (levi = empty), the Kottwitz group K of the minimal
// levi, the surjection p: P -> K with its kernel, and cached Weyl actions.
struct SpecContext {
    GroupSpec spec;
    KottwitzGroup params;    // P
    KottwitzGroup kottwitz;  // K
    IntMat proj;             // K-min x P-min, induced by the identity on the ambient lattice
    IntMat kernel_gens;      // P-min coordinates, columns generate ker(P -> K)
    bool sym_standard;       // W acts as all coordinate permutations of a free P

    explicit SpecContext(GroupSpec s);

    // Lattice matrices of the relative Weyl elements (computed on first use).
    const std::vector<IntMat>& weyl_lattice() const;
    // Their induced matrices on P-min coordinates.
    const std::vector<IntMat>& weyl_on_params() const;
    // Indices of Weyl elements preserving the span of the minimal levi's roots.
    const std::vector<std::size_t>& levi_normalizer() const;
    // Induced K-min matrices, aligned with levi_normalizer().
    const std::vector<IntMat>& normalizer_on_kottwitz() const;
    // Distinct induced K-automorphisms: the relative Weyl group of the inner form.
    const std::vector<IntMat>& kottwitz_weyl() const;
    // Order of the levi's own fixed Weyl group (Galois-fixed elements inside
    // the levi's reflection subgroup).
    std::size_t levi_fixed_order() const;

private:
    mutable std::vector<IntMat> weyl_lattice_, weyl_on_params_, norm_on_k_, k_weyl_;
    mutable std::vector<std::size_t> normalizer_;
    mutable std::optional<std::size_t> levi_fixed_order_;
};

struct SatakeParameter {
    TorusCharacter chr;                    // on P's minimized presentation
    std::vector<FormalValue> normal_form;  // minimum of the Weyl orbit of value tuples
};

struct SupercuspidalSupport {
    TorusCharacter chi;  // on K's minimized presentation
};

// Build a parameter from generator values (normal form computed here).
SatakeParameter make_parameter(const SpecContext& ctx, std::vector<FormalValue> values);
SupercuspidalSupport make_support(const SpecContext& ctx, std::vector<FormalValue> values);

// lambda -> q^{-sign * <lambda, rho_check(levi)>}, descended to P.
TorusCharacter delta_half(const SpecContext& ctx, const std::vector<std::size_t>& levi, int sign);

// t(chi) = delta_half(minimal levi, -1) * (chi pulled back along p).
SatakeParameter transfer(const SpecContext& ctx, const SupercuspidalSupport& chi);

// The same composite built from the two parabolic modulus factors (full
// Borel times unipotent-radical complement) instead of the levi's own
// half-sum; only for trivial Galois action.  Cross-check route.
SatakeParameter transfer_unnormalized(const SpecContext& ctx, const SupercuspidalSupport& chi);

bool param_equal(const SpecContext& ctx, const SatakeParameter& s, const SatakeParameter& t);

struct MemberResult {
    bool member = false;
    std::optional<std::size_t> witness_weyl;        // index into relative_weyl
    std::optional<SupercuspidalSupport> witness;    // transfer(witness) ~ s
    // one entry per Weyl element on failure: (kernel generator column, its
    // delta-corrected value != 1)
    std::vector<std::pair<std::size_t, FormalValue>> refutation;
};

// s lies in the transfer image iff some Weyl translate of s * delta^{+1/2}
// kills every kernel generator of p.
MemberResult member_S_G(const SpecContext& ctx, const SatakeParameter& s);

// Principal eigenvalue criterion: some Weyl translate gives every
// Frobenius-orbit O of folded levi-simple roots the value q^{|O|}.
bool admissible_pair_check(const SpecContext& ctx, const SatakeParameter& s);

// One folded-levi evaluation point: P-min coordinates of the sum of one
// representative root per folded simple in a Frobenius orbit, with the orbit
// size.
struct LeviOrbitVector {
    IntVec coords;
    std::size_t orbit_size;
};
std::vector<LeviOrbitVector> levi_orbit_vectors(const SpecContext& ctx,
                                                const std::vector<std::size_t>& levi);

struct OrbitSumImage {
    Int coefficient;                  // order of the levi's fixed Weyl group
    std::map<IntVec, Int> orbit_sum;  // group sum over the induced K-Weyl group, canon coords
    std::map<IntVec, Int> raw_image;  // pushforward over the levi normalizer
};

// Pushes the orbit sum over a preimage of m through p; certified equal to
// coefficient * orbit_sum.
OrbitSumImage orbit_sum_transfer(const SpecContext& ctx, const IntVec& m);

// f: integer combination of Weyl-orbit-sum basis elements, keyed by P-min
// coordinates.  Value of the sum at s, extended linearly.
FormalSum evaluate_center(const SpecContext& ctx, const std::map<IntVec, Int>& f,
                          const SatakeParameter& s);

// Re-express a combination of full-Weyl orbit sums (keys: K-min canon
// coordinates) as a combination of L-Weyl orbit sums (keys: orbit-minimal
// canon coordinates).  minimal_levi <= L <= all simples, Galois-stable.
std::map<IntVec, Int> constant_term_include(const SpecContext& ctx,
                                            const std::vector<std::size_t>& levi,
                                            const std::map<IntVec, Int>& f);

// Reinterpret an inner-form parameter on the quasi-split spec sharing the
// same dual datum.
SatakeParameter pi_star(const SpecContext& inner, const SpecContext& quasi,
                        const SatakeParameter& s);

// Block formula for GL_m(D): block i carries eta_i * (q^{(n_i-1)/2}, ...,
// q^{-(n_i-1)/2}) with n_i = m_i * d; cross-checked against transfer().
SatakeParameter gl_inner_form_parameter(const SpecContext& ctx, std::size_t n, std::size_t d,
                                        const std::vector<std::size_t>& partition,
                                        const std::vector<FormalValue>& twists);

}  // namespace parahoric::satake
