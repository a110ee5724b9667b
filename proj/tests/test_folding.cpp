#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "parahoric/folding.hpp"
#include "parahoric/rootdata.hpp"

using namespace parahoric;
using namespace parahoric::folding;
using rootdata::BasedRootDatum;

namespace {

IntMat weight_perm(const std::vector<std::size_t>& image) {
    IntMat p(image.size(), image.size());
    for (std::size_t i = 0; i < image.size(); ++i) p(image[i], i) = 1;
    return p;
}

abelian::LatticeAction inertia(std::size_t rank, std::vector<IntMat> gens) {
    return abelian::LatticeAction{rank, std::move(gens)};
}

std::set<RatVec> vec_set(const std::vector<RatVec>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("folding a2 by the swap gives bc1") {
    BasedRootDatum d = rootdata::sl_datum(3);
    auto a = inertia(2, {weight_perm({1, 0})});
    FoldedSystem f = fold(d, a);

    CHECK(f.psi.size() == 4);  // {±a, ±2a}
    CHECK(f.inertia_order == 2);
    REQUIRE(f.blocks.size() == 1);  // positive blocks: one, of type 2
    CHECK(f.blocks[0].type == 2);
    CHECK(f.blocks[0].members.size() == 3);  // {alpha, tau alpha, their sum}
    // non-reduced: doubling a short root lands back in the system
    std::set<RatVec> psi = vec_set(f.psi);
    for (const auto& v : f.reduced_long) {
        RatVec twice = v;
        for (auto& e : twice) e *= 2;
        CHECK(psi.count(twice) == 1);
    }
    CHECK(f.reduced_long.size() == 2);
    CHECK(f.reduced_short.size() == 2);
}

TEST_CASE("folding a3 by the swap gives c2") {
    BasedRootDatum d = rootdata::sl_datum(4);
    auto a = inertia(3, {weight_perm({2, 1, 0})});
    FoldedSystem f = fold(d, a);
    CHECK(f.psi.size() == 8);   // C2 has 8 roots
    CHECK(f.delta.size() == 2);
    for (const auto& b : f.blocks) CHECK(b.type == 1);
    // reduced already: both reductions are the whole system
    CHECK(f.reduced_long.size() == 8);
    CHECK(f.reduced_short.size() == 8);
    CHECK(folded_weyl_order(d, f) == 8);
}

TEST_CASE("trivial inertia folds to the system itself") {
    BasedRootDatum d = rootdata::sp4_datum();
    FoldedSystem f = fold(d, inertia(2, {}));
    CHECK(f.psi.size() == d.roots.size());
    for (const auto& b : f.blocks) {
        CHECK(b.type == 1);
        CHECK(b.members.size() == 1);
    }
    CHECK(f.inertia_order == 1);
}

TEST_CASE("folding d4 by full triality gives g2 with z3 blocks") {
    BasedRootDatum d = rootdata::spin8_datum();
    IntMat rot = weight_perm({2, 1, 3, 0});   // 3-cycle on the outer nodes
    IntMat swap = weight_perm({0, 1, 3, 2});  // one transposition
    FoldedSystem s3 = fold(d, inertia(4, {rot, swap}));
    FoldedSystem z3 = fold(d, inertia(4, {rot}));

    CHECK(s3.psi.size() == 12);  // G2
    CHECK(s3.inertia_order == 6);
    CHECK(z3.inertia_order == 3);
    CHECK(vec_set(s3.psi) == vec_set(z3.psi));
    // blocks coincide with those of the Z/3 subgroup
    REQUIRE(s3.blocks.size() == z3.blocks.size());
    auto key = [](const OrbitBlock& b) { return b.members; };
    std::vector<std::vector<std::size_t>> sm, zm;
    for (const auto& b : s3.blocks) sm.push_back(key(b));
    for (const auto& b : z3.blocks) zm.push_back(key(b));
    std::sort(sm.begin(), sm.end());
    std::sort(zm.begin(), zm.end());
    CHECK(sm == zm);
    CHECK(folded_weyl_order(d, s3) == 12);
}

TEST_CASE("odd-order folding stays reduced") {
    BasedRootDatum d = rootdata::spin8_datum();
    FoldedSystem f = fold(d, inertia(4, {weight_perm({2, 1, 3, 0})}));
    CHECK(f.psi.size() == f.reduced_long.size());
    CHECK(f.psi.size() == f.reduced_short.size());
}

TEST_CASE("fixed weyl subgroup orders") {
    BasedRootDatum a3 = rootdata::sl_datum(4);
    IntMat flip3 = weight_perm({2, 1, 0});
    CHECK(fixed_weyl(a3, {flip3}).order() == 8);  // W(C2)

    BasedRootDatum a2 = rootdata::sl_datum(3);
    IntMat flip2 = weight_perm({1, 0});
    CHECK(fixed_weyl(a2, {flip2}).order() == 2);

    CHECK(fixed_weyl(a2, {}).order() == 6);
}

TEST_CASE("component group of the fixed torus") {
    // swap on Z^2: coinvariants are free
    CHECK(pi0_fixed_torus(2, inertia(2, {weight_perm({1, 0})})).is_trivial());
    // negation on Z: Z/2
    IntMat neg(1, 1);
    neg(0, 0) = -1;
    abelian::FinAbGroup p = pi0_fixed_torus(1, inertia(1, {neg}));
    CHECK(p.order() == 2);
    CHECK(pi0_fixed_torus(2, inertia(2, {})).is_trivial());
}

TEST_CASE("induced lattices have connected fixed tori") {
    auto swap = inertia(2, {weight_perm({1, 0})});
    CHECK(induced_lattice_check(2, swap));
    IntMat neg(1, 1);
    neg(0, 0) = -1;
    CHECK_FALSE(induced_lattice_check(1, inertia(1, {neg})));
    CHECK(induced_lattice_check(0, inertia(0, {})));
}

TEST_CASE("folded reflections preserve the folded system") {
    BasedRootDatum d = rootdata::sl_datum(4);
    FoldedSystem f = fold(d, inertia(3, {weight_perm({2, 1, 0})}));
    IntMat form = invariant_form(d);
    std::set<RatVec> psi = vec_set(f.psi);
    for (const auto& alpha : f.psi) {
        // s_alpha(beta) = beta - <beta, alpha>_B * 2/|alpha|^2 * alpha
        Rat norm(0);
        RatVec fa(alpha.size(), Rat(0));
        for (std::size_t i = 0; i < alpha.size(); ++i)
            for (std::size_t j = 0; j < alpha.size(); ++j) fa[i] += Rat(form(i, j)) * alpha[j];
        for (std::size_t i = 0; i < alpha.size(); ++i) norm += fa[i] * alpha[i];
        for (const auto& beta : f.psi) {
            Rat pair(0);
            for (std::size_t i = 0; i < beta.size(); ++i) pair += fa[i] * beta[i];
            RatVec img = beta;
            Rat c = Rat(2) * pair / norm;
            for (std::size_t i = 0; i < img.size(); ++i) img[i] -= c * alpha[i];
            CHECK(psi.count(img) == 1);
        }
    }
}
