#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "parahoric/error.hpp"
#include "parahoric/rootdata.hpp"

using namespace parahoric;
using namespace parahoric::rootdata;

TEST_CASE("built-in data validate") {
    for (std::size_t n = 2; n <= 5; ++n) validate(gl_datum(n));
    for (std::size_t n = 2; n <= 4; ++n) validate(sl_datum(n));
    validate(pgl_datum(2));
    validate(pgl_datum(3));
    validate(sp4_datum());
    validate(spin8_datum());
    validate(e6_datum());
    validate(torus_datum(3));
}

TEST_CASE("gl datum is self dual") {
    BasedRootDatum d = gl_datum(3);
    BasedRootDatum dd = dual(d);
    CHECK(dd.rank == d.rank);
    CHECK(dd.roots == d.coroots);
    CHECK(dd.coroots == d.roots);
    CHECK(dd.simple == d.simple);
    // roots of gl_3 are e_i - e_j, same set on both sides
    std::set<IntVec> a(d.roots.begin(), d.roots.end());
    std::set<IntVec> b(dd.roots.begin(), dd.roots.end());
    CHECK(a == b);
}

TEST_CASE("dual of sl2 is pgl2") {
    BasedRootDatum d = dual(sl_datum(2));
    BasedRootDatum p = pgl_datum(2);
    CHECK(d.rank == p.rank);
    REQUIRE(d.roots.size() == p.roots.size());
    // sl_2 in the weight basis: root = 2*omega, coroot = e; dual flips them
    std::set<IntVec> got(d.roots.begin(), d.roots.end());
    std::set<IntVec> want(p.roots.begin(), p.roots.end());
    CHECK(got == want);

    BasedRootDatum t = torus_datum(2);
    CHECK(dual(t).rank == 2);
    CHECK(dual(t).roots.empty());
}

TEST_CASE("weyl group orders") {
    CHECK(weyl_group(sl_datum(3)).order() == 6);   // A2
    CHECK(weyl_group(sl_datum(2)).order() == 2);   // A1
    CHECK(weyl_group(torus_datum(2)).order() == 1);
    CHECK(weyl_group(gl_datum(4)).order() == 24);  // 4!
    CHECK(weyl_group(sp4_datum()).order() == 8);   // C2
    CHECK(weyl_group(spin8_datum()).order() == 192);
}

TEST_CASE("rho half sums") {
    RatVec r2 = rho(gl_datum(2));
    CHECK(r2 == RatVec{Rat(1, 2), Rat(-1, 2)});
    RatVec r3 = rho(gl_datum(3));
    CHECK(r3 == RatVec{Rat(1), Rat(0), Rat(-1)});
    CHECK(rho(torus_datum(2)) == RatVec{Rat(0), Rat(0)});
    // self-dual data have matching rho and rho_check
    CHECK(rho_check(gl_datum(3)) == r3);
}

TEST_CASE("levi subdatum of gl4") {
    BasedRootDatum d = gl_datum(4);
    BasedRootDatum l = levi_subdatum(d, {0, 2});  // GL_2 x GL_2
    validate(l);
    CHECK(l.rank == 4);
    CHECK(l.roots.size() == 4);
    CHECK(weyl_group(l).order() == 4);

    BasedRootDatum all = levi_subdatum(d, {0, 1, 2});
    CHECK(all.roots.size() == d.roots.size());
    BasedRootDatum none = levi_subdatum(d, {});
    CHECK(none.roots.empty());
}

TEST_CASE("weyl elements permute roots isometrically") {
    BasedRootDatum d = sp4_datum();
    WeylGroup w = weyl_group(d);
    auto mats = weyl_matrices(d, w.elements);
    for (std::size_t k = 0; k < w.elements.size(); ++k) {
        for (std::size_t i = 0; i < d.roots.size(); ++i) {
            IntVec img = mats[k] * d.roots[i];
            std::size_t j = root_index(d, img);
            CHECK(j == w.elements[k][i]);
            CHECK(dot(d.roots[j], d.coroots[j]) == 2);
        }
    }
}

TEST_CASE("levi weyl group embeds") {
    BasedRootDatum d = gl_datum(4);
    WeylGroup big = weyl_group(d);
    WeylGroup sub = weyl_subgroup(d, {0, 2});
    CHECK(sub.order() == 4);
    std::set<Perm> all(big.elements.begin(), big.elements.end());
    for (const auto& p : sub.elements) CHECK(all.count(p) == 1);
}

TEST_CASE("datum from cartan matrices") {
    BasedRootDatum g2 = datum_from_cartan(cartan_G2());
    validate(g2);
    CHECK(g2.roots.size() == 12);
    CHECK(weyl_group(g2).order() == 12);

    BasedRootDatum e6 = e6_datum();
    CHECK(e6.roots.size() == 72);
    CHECK(positive_roots(e6).size() == 36);

    BasedRootDatum a2ad = adjoint_datum_from_cartan(cartan_A(2));
    validate(a2ad);
    CHECK(a2ad.roots.size() == 6);
}

TEST_CASE("root permutation rejects non-symmetries") {
    BasedRootDatum d = gl_datum(2);
    IntMat bad(2, 2);
    bad(0, 0) = 1;
    bad(1, 1) = 2;
    CHECK_THROWS_AS(root_permutation(d, bad), invariant_error);
}

TEST_CASE("simple coordinates express all roots") {
    BasedRootDatum d = spin8_datum();
    auto coords = simple_coordinates(d);
    REQUIRE(coords.size() == d.roots.size());
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        IntVec acc(d.rank, Int(0));
        for (std::size_t j = 0; j < d.simple.size(); ++j)
            acc = vec_add(acc, vec_scale(coords[i][j], d.roots[d.simple[j]]));
        CHECK(acc == d.roots[i]);
    }
}
