#include "parahoric/dualdata.hpp"

#include <algorithm>
#include <set>

#include "parahoric/error.hpp"

namespace parahoric::dualdata {

using abelian::FinAbGroup;
using abelian::LatticeAction;

void validate(const DualGroupDatum& d) {
    rootdata::validate(d.datum);
    folding::validate_action(d.datum, d.action);
}

FinAbGroup center_char_group(const rootdata::BasedRootDatum& datum) {
    IntMat rel(datum.rank, datum.simple.size());
    for (std::size_t j = 0; j < datum.simple.size(); ++j)
        rel.set_col(j, datum.roots[datum.simple[j]]);
    return FinAbGroup(datum.rank, rel);
}

IntVec KottwitzGroup::coords_of(const IntVec& x) const {
    if (x.size() != lattice_rank) throw invariant_error("wrong ambient coordinate length");
    // solve gens * y = x modulo the coinvariant relations
    IntMat sys = sub.gens.hstack(coinv.relations);
    auto sol = abelian::int_solve(sys, x);
    if (!sol) throw invariant_error("class is not frobenius-invariant");
    IntVec y(sub.gens.cols());
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = (*sol)[i];
    return group.canon(min.to_min * y);
}

IntVec KottwitzGroup::ambient_of(const IntVec& y) const {
    if (y.size() != group.ambient_rank) throw invariant_error("wrong minimized coordinate length");
    return gens_in_ambient * y;
}

void check_levi_stable(const DualGroupDatum& d, const std::vector<std::size_t>& levi) {
    std::set<std::size_t> positions(levi.begin(), levi.end());
    for (std::size_t p : positions)
        if (p >= d.datum.simple.size()) throw invariant_error("levi position out of range");
    std::set<std::size_t> levi_roots;
    for (std::size_t p : positions) levi_roots.insert(d.datum.simple[p]);
    for (const IntMat& g : d.action.all_generators()) {
        rootdata::Perm perm = rootdata::root_permutation(d.datum, g);
        for (std::size_t r : levi_roots)
            if (!levi_roots.count(perm[r])) throw invariant_error("levi subset is not Galois-stable");
    }
}

KottwitzGroup kottwitz_group(const DualGroupDatum& d, const std::vector<std::size_t>& levi) {
    validate(d);
    check_levi_stable(d, levi);
    std::set<std::size_t> positions(levi.begin(), levi.end());

    std::vector<std::size_t> sorted(positions.begin(), positions.end());
    rootdata::BasedRootDatum sub_datum = rootdata::levi_subdatum(d.datum, sorted);

    KottwitzGroup k;
    k.lattice_rank = d.datum.rank;
    FinAbGroup levi_center = center_char_group(sub_datum);
    k.coinv = abelian::coinvariants(levi_center, d.action.inertia);
    LatticeAction frob{d.datum.rank, {}};
    if (!d.action.frobenius.is_identity()) frob.generators.push_back(d.action.frobenius);
    k.sub = abelian::invariants(k.coinv, frob);
    k.min = abelian::MinimizedPresentation::of(k.sub.group);
    k.group = k.min.group;
    k.gens_in_ambient = k.sub.gens * k.min.from_min;
    return k;
}

std::size_t split_central_rank(const DualGroupDatum& d) {
    // {x : <x, coroot> = 0 for all coroots, g x = x for all Galois generators}
    std::size_t n = d.datum.rank;
    std::vector<IntMat> stack;
    IntMat pair_rows(d.datum.coroots.size(), n);
    for (std::size_t i = 0; i < d.datum.coroots.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) pair_rows(i, j) = d.datum.coroots[i][j];
    stack.push_back(pair_rows);
    for (const IntMat& g : d.action.all_generators()) stack.push_back(g - IntMat::identity(n));
    IntMat sys = stack[0];
    for (std::size_t i = 1; i < stack.size(); ++i) sys = sys.vstack(stack[i]);
    return abelian::kernel_basis(sys).cols();
}

}  // namespace parahoric::dualdata
