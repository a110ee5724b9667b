#pragma once

// Desk-scale exact-matrix checks of the fixed-group structure theory in type
// A over the rationals: the order-two outer automorphism fixing the standard
// splitting, Steinberg's folded root-group formulas (both orbit shapes), the
// triangular normal form of semisimple twisted-coset elements, the unipotent
// reduction of (g, e) pairs along the centralizer of a principal nilpotent,
// and monomial lifts of the fixed Weyl group.  Everything is verified with
// exact equality; q and the reduction scalar are specialized to rationals.

#include <cstdint>
#include <string>
#include <vector>

#include "parahoric/linalg.hpp"

namespace parahoric::matrixmodels {

// g -> J (g^T)^{-1} J^{-1} with J the alternating-sign antidiagonal, or the
// identity map.  The outer form has order two and fixes the diagonal torus,
// the upper-triangular Borel, and the normalized principal nilpotent; the
// constructor verifies all three.
struct OuterAuto {
    std::size_t n = 0;
    bool outer = false;
    RatMat twist;      // J (identity when outer == false)
    RatMat twist_inv;

    static OuterAuto identity(std::size_t n);
    static OuterAuto standard(std::size_t n);

    RatMat apply(const RatMat& g) const;      // group level
    RatMat apply_lie(const RatMat& x) const;  // -J x^T J^{-1}
    bool fixes(const RatMat& g) const { return apply(g) == g; }
};

RatMat elementary(std::size_t n, std::size_t i, std::size_t j, const Rat& y);  // I + y E_ij

// Signs s_1..s_{n-1} with e = sum s_i E_{i,i+1} satisfying dtau(e) = e,
// solved from the computed action of tau on the superdiagonal.
std::vector<Rat> principal_signs(const OuterAuto& tau);
RatMat principal_nilpotent(const OuterAuto& tau);

// b^{-1} h tau(b)
RatMat twisted_transport(const RatMat& b, const RatMat& h, const OuterAuto& tau);

// Folded one-parameter groups for the orbit {alpha_1, alpha_{n-1}} (disjoint
// pair): y -> x_{a1}(y) x_{a{n-1}}(y) is tau-fixed and additive.  Checks the
// identities at the sampled values; n >= 4.
bool verify_type1_formula(std::size_t n, const std::vector<Rat>& ys);

// The adjacent-pair shape in SL_3: y -> x_a(y) x_{ta}(y) x_b(-y^2/2) with
// x_b normalized by [x_a(y), x_{ta}(y')] = x_b(y y').  Throws on a
// normalization mismatch (wrong antidiagonal convention).
bool verify_type2_formula(const std::vector<Rat>& ys);

// Upper-triangular b with b^{-1} h tau(b) diagonal, solved strip by strip.
// h must be invertible upper triangular with h tau(h) semisimple (squarefree
// minimal polynomial); an unsolvable strip throws: the coset element was not
// semisimple.
RatMat semisimple_to_torus(const RatMat& h, const OuterAuto& tau);

struct NilpotentReport {
    std::size_t n = 0;
    Rat lambda;
    std::size_t trials = 0;
    std::size_t successes = 0;
    std::vector<std::string> failures;

    bool pass() const { return trials > 0 && successes == trials; }
};

// For random v in the unipotent centralizer of e and a planted central
// rational z0, reduces (v d z0, e) along U_e to (d z, e) with z central, and
// checks z == z0 and Ad(u) e = e.  Failures are recorded, never swallowed.
NilpotentReport verify_nilpotent_lemma(std::size_t n, const Rat& lambda, std::size_t trials,
                                       std::uint64_t seed = 1);

struct FixedGroupReport {
    std::size_t n = 0;
    bool special = false;
    bool outer = false;
    std::size_t fixed_weyl_order = 0;  // permutations commuting with the torus action
    std::size_t lifted = 0;            // those admitting a tau-fixed monomial lift
    Int pi0_matrix;                    // component count of the fixed diagonal torus
    Int pi0_lattice;                   // prediction from the character lattice

    bool pass() const { return lifted == fixed_weyl_order && pi0_matrix == pi0_lattice; }
};

// Monomial lifts of every tau-fixed permutation through the folded root
// groups, plus the two-sided component count of the fixed torus.
FixedGroupReport verify_fixed_group_facts(std::size_t n, bool special, bool outer);

}  // namespace parahoric::matrixmodels
