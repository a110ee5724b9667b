#pragma once

// Finitely generated abelian groups presented as Z^n / (column span of a
// relation matrix), plus the integer-matrix toolkit (Smith normal form,
// kernels, integral solving) that the presentations are built from.

#include <cstdint>
#include <optional>
#include <vector>

#include "parahoric/linalg.hpp"

namespace parahoric::abelian {

// U * A * V = diag(divisors), with U, V unimodular.  divisors has length
// min(rows, cols); each nonzero entry is positive and divides the next,
// zeros come last.
struct SmithResult {
    IntMat U, V;
    std::vector<Int> divisors;

    IntMat diagonal(std::size_t rows, std::size_t cols) const;
};

SmithResult smith_normal_form(const IntMat& a);

// Basis of {x : a*x = 0} as columns (canonicalized; may have zero columns
// count).  Always saturated: a primitive basis of the kernel lattice.
IntMat kernel_basis(const IntMat& a);

// An integral solution x of a*x = b, if one exists.
std::optional<IntVec> int_solve(const IntMat& a, const IntVec& b);

// Column-style Hermite normal form of the lattice spanned by the columns:
// unique canonical basis, echelon with positive pivots and reduced entries
// to the left of each pivot row.  Zero columns are dropped.
IntMat column_lattice_basis(const IntMat& a);

// Does the column span of `a` contain x?
bool in_column_span(const IntMat& a, const IntVec& x);

// ---------------------------------------------------------------------------

// Z^ambient_rank modulo the column span of `relations`.
struct FinAbGroup {
    std::size_t ambient_rank = 0;
    IntMat relations;  // ambient_rank x (#relators); may have zero columns

    FinAbGroup() : relations(0, 0) {}
    FinAbGroup(std::size_t rank, IntMat rel);

    std::size_t free_rank() const;
    // Invariant factors > 1, each dividing the next.
    std::vector<Int> torsion() const;
    bool is_trivial() const { return free_rank() == 0 && torsion().empty(); }
    Int order() const;  // 0 means infinite

    // Canonical representative of the class of x: coordinates in the Smith
    // basis, torsion coordinates reduced mod their divisor.  Two vectors are
    // congruent mod relations iff their canonical forms agree.
    IntVec canon(const IntVec& x) const;
    bool same_class(const IntVec& x, const IntVec& y) const;
    bool is_zero_class(const IntVec& x) const;

    bool operator==(const FinAbGroup& o) const {
        return ambient_rank == o.ambient_rank && relations == o.relations;
    }

private:
    // Cached SNF of relations (computed in constructor).
    SmithResult snf_;
    friend struct MinimizedPresentation;
    const SmithResult& snf() const { return snf_; }
};

// A presentation with no redundant generators: ambient = #(divisors > 1) +
// free rank, relations diagonal.  `to_min` maps old ambient coordinates to
// new ones (classes are preserved), `from_min` picks representatives.
struct MinimizedPresentation {
    FinAbGroup group;
    IntMat to_min;    // new_ambient x old_ambient
    IntMat from_min;  // old_ambient x new_ambient

    static MinimizedPresentation of(const FinAbGroup& g);
};

// ---------------------------------------------------------------------------

// A finite subgroup of GL_n(Z) given by generators; closure enumerates the
// whole group (bounded).
struct LatticeAction {
    std::size_t rank = 0;
    std::vector<IntMat> generators;

    // The full group, identity first; throws limit_error past `bound`.
    std::vector<IntMat> closure(std::size_t bound = 1000000) const;
};

// Presentation of the coinvariants L_A = L / <g*x - x>: same ambient rank,
// relations extended by (g - 1)e_j for each generator g.
FinAbGroup coinvariants(const FinAbGroup& g, const LatticeAction& a);

// Basis (as columns, canonical) of the invariant sublattice {x : g*x = x}
// of the free lattice Z^rank.
IntMat invariant_lattice(const LatticeAction& a);

// ---------------------------------------------------------------------------

// A subgroup of Z^n/R_dom presented on its own generators, remembering how
// those generators sit in the ambient lattice.
struct SubgroupPresentation {
    IntMat gens;       // n x r: columns are ambient representatives of the generators
    FinAbGroup group;  // ambient_rank = r, relations in generator coordinates
};

// Kernel of the morphism Z^n/R_dom -> Z^m/R_cod induced by H (m x n).
// Requires H * R_dom <= column span of R_cod.
SubgroupPresentation morphism_kernel(const IntMat& H, const IntMat& R_dom, const IntMat& R_cod);

// Is the induced morphism surjective?
bool is_surjective(const IntMat& H, const IntMat& R_dom, const IntMat& R_cod);

// A preimage under the induced morphism of the class of b, if one exists.
std::optional<IntVec> preimage(const IntMat& H, const IntMat& R_cod, const IntVec& b);

// Invariants of a FinAbGroup under an action (matrices must preserve the
// relation span): the subgroup {x : g*x = x for all generators g}.
SubgroupPresentation invariants(const FinAbGroup& g, const LatticeAction& a);

}  // namespace parahoric::abelian
