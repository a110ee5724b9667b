#include "parahoric/rootdata.hpp"

#include <map>
#include <set>

#include "parahoric/error.hpp"

namespace parahoric::rootdata {

namespace {

std::map<IntVec, std::size_t> index_map(const std::vector<IntVec>& vecs) {
    std::map<IntVec, std::size_t> m;
    for (std::size_t i = 0; i < vecs.size(); ++i)
        if (!m.emplace(vecs[i], i).second) throw invariant_error("duplicate root in datum");
    return m;
}

IntVec reflect(const IntVec& x, const IntVec& root, const IntVec& coroot) {
    return vec_sub(x, vec_scale(dot(x, coroot), root));
}

}  // namespace

std::size_t root_index(const BasedRootDatum& d, const IntVec& v) {
    for (std::size_t i = 0; i < d.roots.size(); ++i)
        if (d.roots[i] == v) return i;
    throw invariant_error("vector is not a root of the datum");
}

void validate(const BasedRootDatum& d) {
    if (d.roots.size() != d.coroots.size()) throw invariant_error("roots/coroots length mismatch");
    for (const auto& r : d.roots)
        if (r.size() != d.rank) throw invariant_error("root has wrong rank");
    for (const auto& c : d.coroots)
        if (c.size() != d.rank) throw invariant_error("coroot has wrong rank");
    for (std::size_t s : d.simple)
        if (s >= d.roots.size()) throw invariant_error("simple index out of range");

    auto rmap = index_map(d.roots);
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        if (dot(d.roots[i], d.coroots[i]) != 2) throw invariant_error("<a, a^vee> != 2");
        auto neg = rmap.find(vec_neg(d.roots[i]));
        if (neg == rmap.end()) throw invariant_error("root set not closed under negation");
        if (d.coroots[neg->second] != vec_neg(d.coroots[i]))
            throw invariant_error("coroot of -a is not -a^vee");
        if (rmap.count(vec_scale(Int(2), d.roots[i]))) throw invariant_error("datum is not reduced");
    }
    for (std::size_t s : d.simple)
        for (std::size_t i = 0; i < d.roots.size(); ++i) {
            IntVec img = reflect(d.roots[i], d.roots[s], d.coroots[s]);
            auto it = rmap.find(img);
            if (it == rmap.end()) throw invariant_error("root set not stable under simple reflection");
            IntVec cimg = reflect(d.coroots[i], d.coroots[s], d.roots[s]);
            if (d.coroots[it->second] != cimg)
                throw invariant_error("coroots not compatible with simple reflection");
        }
    simple_coordinates(d);  // throws if some root leaves the Z-span of the simples
}

std::vector<IntVec> simple_coordinates(const BasedRootDatum& d) {
    RatMat s(d.rank, d.simple.size());
    for (std::size_t j = 0; j < d.simple.size(); ++j)
        for (std::size_t i = 0; i < d.rank; ++i) s(i, j) = Rat(d.roots[d.simple[j]][i]);
    std::vector<IntVec> out;
    out.reserve(d.roots.size());
    for (const auto& r : d.roots) {
        auto x = rat_solve(s, to_rat(r));
        if (!x) throw invariant_error("root is not in the span of the simple roots");
        IntVec c(x->size());
        for (std::size_t i = 0; i < x->size(); ++i) {
            if (denominator((*x)[i]) != 1)
                throw invariant_error("root has non-integral simple coordinates");
            c[i] = numerator((*x)[i]);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<std::size_t> positive_roots(const BasedRootDatum& d) {
    auto coords = simple_coordinates(d);
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        bool nonneg = true;
        for (const Int& c : coords[i])
            if (c < 0) nonneg = false;
        if (nonneg) pos.push_back(i);
    }
    if (2 * pos.size() != d.roots.size())
        throw invariant_error("positive roots are not half of the root set");
    return pos;
}

BasedRootDatum dual(const BasedRootDatum& d) {
    BasedRootDatum r;
    r.rank = d.rank;
    r.roots = d.coroots;
    r.coroots = d.roots;
    r.simple = d.simple;
    return r;
}

RatVec rho(const BasedRootDatum& d) {
    RatVec r(d.rank, Rat(0));
    for (std::size_t i : positive_roots(d))
        for (std::size_t k = 0; k < d.rank; ++k) r[k] += Rat(d.roots[i][k], 2);
    return r;
}

RatVec rho_check(const BasedRootDatum& d) { return rho(dual(d)); }

BasedRootDatum levi_subdatum(const BasedRootDatum& d, const std::vector<std::size_t>& positions) {
    for (std::size_t p : positions)
        if (p >= d.simple.size()) throw invariant_error("levi position out of range");
    auto coords = simple_coordinates(d);
    std::vector<bool> keep(d.simple.size(), false);
    for (std::size_t p : positions) keep[p] = true;

    BasedRootDatum l;
    l.rank = d.rank;
    std::vector<std::size_t> orig;
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        bool supported = true;
        for (std::size_t j = 0; j < coords[i].size(); ++j)
            if (coords[i][j] != 0 && !keep[j]) supported = false;
        if (supported) {
            orig.push_back(i);
            l.roots.push_back(d.roots[i]);
            l.coroots.push_back(d.coroots[i]);
        }
    }
    for (std::size_t p : positions) {
        std::size_t ri = d.simple[p];
        for (std::size_t k = 0; k < orig.size(); ++k)
            if (orig[k] == ri) l.simple.push_back(k);
    }
    return l;
}

// --- permutations ------------------------------------------------------------

Perm perm_identity(std::size_t n) {
    Perm p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
    return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint32_t>(i);
    return r;
}

Perm root_permutation(const BasedRootDatum& d, const IntMat& g) {
    IntMat ginvt = int_inverse(g).transpose();
    auto rmap = index_map(d.roots);
    Perm p(d.roots.size());
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        auto it = rmap.find(g * d.roots[i]);
        if (it == rmap.end()) throw invariant_error("matrix does not preserve the root set");
        if (d.coroots[it->second] != ginvt * d.coroots[i])
            throw invariant_error("matrix does not act compatibly on coroots");
        p[i] = static_cast<std::uint32_t>(it->second);
    }
    return p;
}

Perm reflection_perm(const BasedRootDatum& d, std::size_t i) {
    auto rmap = index_map(d.roots);
    Perm p(d.roots.size());
    for (std::size_t j = 0; j < d.roots.size(); ++j) {
        auto it = rmap.find(reflect(d.roots[j], d.roots[i], d.coroots[i]));
        if (it == rmap.end()) throw invariant_error("reflection does not preserve the root set");
        p[j] = static_cast<std::uint32_t>(it->second);
    }
    return p;
}

IntMat reflection_matrix(const BasedRootDatum& d, std::size_t i) {
    IntMat m = IntMat::identity(d.rank);
    for (std::size_t r = 0; r < d.rank; ++r)
        for (std::size_t c = 0; c < d.rank; ++c) m(r, c) -= d.roots[i][r] * d.coroots[i][c];
    return m;
}

namespace {

WeylGroup closure_from(const std::vector<Perm>& gens, std::size_t npoints, std::size_t bound) {
    WeylGroup w;
    Perm id = perm_identity(npoints);
    w.elements.push_back(id);
    std::set<Perm> seen{id};
    for (std::size_t head = 0; head < w.elements.size(); ++head)
        for (const Perm& g : gens) {
            Perm next = perm_compose(g, w.elements[head]);
            if (seen.insert(next).second) {
                w.elements.push_back(std::move(next));
                if (w.elements.size() > bound) throw limit_error("Weyl closure exceeded bound");
            }
        }
    return w;
}

}  // namespace

WeylGroup weyl_group(const BasedRootDatum& d, std::size_t bound) {
    std::vector<std::size_t> all(d.simple.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return weyl_subgroup(d, all, bound);
}

WeylGroup weyl_subgroup(const BasedRootDatum& d, const std::vector<std::size_t>& positions,
                        std::size_t bound) {
    std::vector<Perm> gens;
    for (std::size_t p : positions) gens.push_back(reflection_perm(d, d.simple[p]));
    return closure_from(gens, d.roots.size(), bound);
}

std::vector<IntMat> weyl_matrices(const BasedRootDatum& d, const std::vector<Perm>& ws) {
    // Basis: a maximal independent set of roots, extended by the coroot-perp.
    std::vector<std::size_t> picked;
    RatMat probe(d.rank, 0);
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        RatMat trial = probe.hstack(RatMat::from_cols(d.rank, {to_rat(d.roots[i])}));
        if (rank(trial) > picked.size()) {
            probe = trial;
            picked.push_back(i);
        }
    }
    IntMat crows(d.coroots.size(), d.rank);
    for (std::size_t i = 0; i < d.coroots.size(); ++i)
        for (std::size_t j = 0; j < d.rank; ++j) crows(i, j) = d.coroots[i][j];
    IntMat perp = d.coroots.empty() ? IntMat::identity(d.rank) : abelian::kernel_basis(crows);

    RatMat basis(d.rank, 0);
    for (std::size_t i : picked)
        basis = basis.hstack(RatMat::from_cols(d.rank, {to_rat(d.roots[i])}));
    for (std::size_t j = 0; j < perp.cols(); ++j)
        basis = basis.hstack(RatMat::from_cols(d.rank, {to_rat(perp.col(j))}));
    if (basis.cols() != d.rank) throw invariant_error("weyl_matrix: basis construction failed");
    RatMat basis_inv = rat_inverse(basis);

    std::vector<IntMat> out;
    out.reserve(ws.size());
    for (const Perm& w : ws) {
        RatMat image(d.rank, 0);
        for (std::size_t i : picked)
            image = image.hstack(RatMat::from_cols(d.rank, {to_rat(d.roots[w[i]])}));
        for (std::size_t j = 0; j < perp.cols(); ++j)
            image = image.hstack(RatMat::from_cols(d.rank, {to_rat(perp.col(j))}));
        out.push_back(to_int(image * basis_inv));
    }
    return out;
}

IntMat weyl_matrix(const BasedRootDatum& d, const Perm& w) { return weyl_matrices(d, {w})[0]; }

// --- builders -----------------------------------------------------------------

BasedRootDatum datum_from_simple(std::size_t rank, const std::vector<IntVec>& simple_roots,
                                 const std::vector<IntVec>& simple_coroots) {
    if (simple_roots.size() != simple_coroots.size())
        throw invariant_error("simple roots/coroots length mismatch");
    BasedRootDatum d;
    d.rank = rank;

    std::vector<std::pair<IntVec, IntVec>> pairs;
    std::set<IntVec> seen;
    for (std::size_t i = 0; i < simple_roots.size(); ++i) {
        pairs.emplace_back(simple_roots[i], simple_coroots[i]);
        seen.insert(simple_roots[i]);
    }
    for (std::size_t head = 0; head < pairs.size(); ++head) {
        auto cur = pairs[head];
        for (std::size_t s = 0; s < simple_roots.size(); ++s) {
            IntVec nr = reflect(cur.first, simple_roots[s], simple_coroots[s]);
            if (seen.insert(nr).second) {
                IntVec nc = reflect(cur.second, simple_coroots[s], simple_roots[s]);
                pairs.emplace_back(std::move(nr), std::move(nc));
                if (pairs.size() > 10000) throw limit_error("root closure exceeded bound");
            }
        }
    }
    for (auto& [r, c] : pairs) {
        d.roots.push_back(r);
        d.coroots.push_back(c);
    }
    for (std::size_t i = 0; i < simple_roots.size(); ++i) d.simple.push_back(i);
    validate(d);
    return d;
}

BasedRootDatum datum_from_cartan(const IntMat& cartan) {
    std::size_t n = cartan.rows();
    std::vector<IntVec> sr, sc;
    for (std::size_t j = 0; j < n; ++j) {
        sr.push_back(cartan.col(j));
        IntVec e(n, Int(0));
        e[j] = 1;
        sc.push_back(e);
    }
    return datum_from_simple(n, sr, sc);
}

BasedRootDatum adjoint_datum_from_cartan(const IntMat& cartan) {
    std::size_t n = cartan.rows();
    std::vector<IntVec> sr, sc;
    for (std::size_t j = 0; j < n; ++j) {
        IntVec e(n, Int(0));
        e[j] = 1;
        sr.push_back(e);
        sc.push_back(cartan.row(j));
    }
    return datum_from_simple(n, sr, sc);
}

BasedRootDatum gl_datum(std::size_t n) {
    BasedRootDatum d;
    d.rank = n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            IntVec v(n, Int(0));
            v[i] = 1;
            v[j] = -1;
            d.roots.push_back(v);
            d.coroots.push_back(v);
            if (j == i + 1) d.simple.push_back(d.roots.size() - 1);
        }
    validate(d);
    return d;
}

BasedRootDatum sl_datum(std::size_t n) { return datum_from_cartan(cartan_A(n - 1)); }

BasedRootDatum pgl_datum(std::size_t n) { return adjoint_datum_from_cartan(cartan_A(n - 1)); }

BasedRootDatum sp4_datum() {
    return datum_from_simple(2, {{Int(1), Int(-1)}, {Int(0), Int(2)}},
                             {{Int(1), Int(-1)}, {Int(0), Int(1)}});
}

BasedRootDatum spin8_datum() { return datum_from_cartan(cartan_D4()); }

BasedRootDatum e6_datum() { return datum_from_cartan(cartan_E6()); }

BasedRootDatum torus_datum(std::size_t n) {
    BasedRootDatum d;
    d.rank = n;
    return d;
}

IntMat cartan_A(std::size_t n) {
    IntMat c(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        c(i, i) = 2;
        if (i + 1 < n) {
            c(i, i + 1) = -1;
            c(i + 1, i) = -1;
        }
    }
    return c;
}

IntMat cartan_D4() {
    return IntMat{{Int(2), Int(-1), Int(0), Int(0)},
                  {Int(-1), Int(2), Int(-1), Int(-1)},
                  {Int(0), Int(-1), Int(2), Int(0)},
                  {Int(0), Int(-1), Int(0), Int(2)}};
}

IntMat cartan_E6() {
    return IntMat{{Int(2), Int(0), Int(-1), Int(0), Int(0), Int(0)},
                  {Int(0), Int(2), Int(0), Int(-1), Int(0), Int(0)},
                  {Int(-1), Int(0), Int(2), Int(-1), Int(0), Int(0)},
                  {Int(0), Int(-1), Int(-1), Int(2), Int(-1), Int(0)},
                  {Int(0), Int(0), Int(0), Int(-1), Int(2), Int(-1)},
                  {Int(0), Int(0), Int(0), Int(0), Int(-1), Int(2)}};
}

IntMat cartan_G2() { return IntMat{{Int(2), Int(-1)}, {Int(-3), Int(2)}}; }

}  // namespace parahoric::rootdata
