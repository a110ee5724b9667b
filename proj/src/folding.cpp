#include "parahoric/folding.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "parahoric/error.hpp"

namespace parahoric::folding {

using rootdata::BasedRootDatum;
using rootdata::Perm;

GaloisAction GaloisAction::trivial(std::size_t rank) {
    GaloisAction a;
    a.inertia.rank = rank;
    a.frobenius = IntMat::identity(rank);
    return a;
}

std::vector<IntMat> GaloisAction::all_generators() const {
    std::vector<IntMat> g = inertia.generators;
    if (!frobenius.is_identity()) g.push_back(frobenius);
    return g;
}

namespace {

void check_automorphism(const BasedRootDatum& d, const IntMat& g) {
    Perm p = rootdata::root_permutation(d, g);  // validates roots and coroots
    std::set<std::size_t> simples(d.simple.begin(), d.simple.end());
    for (std::size_t s : d.simple)
        if (!simples.count(p[s])) throw invariant_error("automorphism does not preserve the simple set");
}

// Scale a rational vector to the primitive integer vector on its ray.
IntVec primitive_ray(const RatVec& v) {
    Int lcm(1);
    for (const Rat& x : v) {
        Int den = denominator(x);
        lcm = lcm / gcd(lcm, den) * den;
    }
    IntVec w(v.size());
    Int g(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        w[i] = numerator(v[i]) * (lcm / denominator(v[i]));
        g = gcd(g, w[i]);
    }
    if (g == 0) throw invariant_error("zero vector has no ray");
    for (auto& x : w) x /= g;
    for (const auto& x : w) {
        if (x > 0) break;
        if (x < 0) {
            for (auto& y : w) y = -y;
            break;
        }
    }
    return w;
}

Rat bform_eval(const IntMat& b, const RatVec& x, const RatVec& y) {
    Rat s(0);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b(i, j) != 0) s += x[i] * y[j] * Rat(b(i, j));
    return s;
}

// Two-length blocks must live on an even A-type (simply laced path) diagram
// component; anything else means the input is outside the classified shapes.
void check_two_length_component(const BasedRootDatum& d, const IntVec& rep_coords,
                                const IntMat& bf) {
    std::size_t k = d.simple.size();
    std::vector<std::vector<std::size_t>> adj(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            if (dot(d.roots[d.simple[i]], d.coroots[d.simple[j]]) != 0) adj[i].push_back(j);
        }
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < k; ++i)
        if (rep_coords[i] != 0) support.push_back(i);
    if (support.empty()) throw invariant_error("block representative has empty support");

    std::set<std::size_t> comp{support[0]};
    std::vector<std::size_t> queue{support[0]};
    while (!queue.empty()) {
        std::size_t cur = queue.back();
        queue.pop_back();
        for (std::size_t nb : adj[cur])
            if (comp.insert(nb).second) queue.push_back(nb);
    }
    if (comp.size() % 2 != 0)
        throw invariant_error("two-length block on an odd diagram component");
    Rat len;
    bool first = true;
    for (std::size_t i : comp) {
        if (adj[i].size() > 2) throw invariant_error("two-length block on a branched component");
        RatVec ri = to_rat(d.roots[d.simple[i]]);
        Rat l = bform_eval(bf, ri, ri);
        if (first) {
            len = l;
            first = false;
        } else if (l != len) {
            throw invariant_error("two-length block on a multiply-laced component");
        }
    }
}

}  // namespace

void validate_action(const BasedRootDatum& d, const GaloisAction& a) {
    if (a.inertia.rank != d.rank) throw invariant_error("action rank does not match datum");
    if (a.frobenius.rows() != d.rank || a.frobenius.cols() != d.rank)
        throw invariant_error("frobenius has wrong shape");
    for (const IntMat& g : a.inertia.generators) check_automorphism(d, g);
    if (!a.frobenius.is_identity()) {
        check_automorphism(d, a.frobenius);
        // frobenius must normalize the inertia subgroup
        if (!a.inertia.generators.empty()) {
            std::vector<IntMat> closure = a.inertia.closure();
            std::set<IntMat> members(closure.begin(), closure.end());
            IntMat finv = int_inverse(a.frobenius);
            for (const IntMat& g : a.inertia.generators)
                if (!members.count(a.frobenius * g * finv))
                    throw invariant_error("frobenius does not normalize inertia");
        }
    }
}

IntMat invariant_form(const BasedRootDatum& d) {
    IntMat b(d.rank, d.rank);
    for (const IntVec& c : d.coroots)
        for (std::size_t i = 0; i < d.rank; ++i)
            for (std::size_t j = 0; j < d.rank; ++j) b(i, j) += c[i] * c[j];
    return b;
}

FoldedSystem fold(const BasedRootDatum& d, const abelian::LatticeAction& inertia) {
    GaloisAction probe;
    probe.inertia = inertia;
    probe.frobenius = IntMat::identity(d.rank);
    validate_action(d, probe);

    std::vector<IntMat> group = inertia.closure();
    FoldedSystem f;
    f.inertia_order = group.size();

    // Orbit averages via the projection (1/|I|) sum_g g.
    RatMat proj(d.rank, d.rank);
    for (const IntMat& g : group)
        for (std::size_t i = 0; i < d.rank; ++i)
            for (std::size_t j = 0; j < d.rank; ++j)
                proj(i, j) += Rat(g(i, j), static_cast<Int>(group.size()));

    auto project = [&](const IntVec& v) { return proj * to_rat(v); };

    std::set<RatVec> psi_set, delta_set;
    for (const IntVec& r : d.roots) psi_set.insert(project(r));
    for (std::size_t s : d.simple) delta_set.insert(project(d.roots[s]));
    f.psi.assign(psi_set.begin(), psi_set.end());
    f.delta.assign(delta_set.begin(), delta_set.end());

    // Reduced variants: in a root system multiples only come in ratio 2.
    auto has = [&](const RatVec& v) { return psi_set.count(v) != 0; };
    for (const RatVec& v : f.psi) {
        if (!has(vec_scale(Rat(1, 2), v))) f.reduced_long.push_back(v);
        if (!has(vec_scale(Rat(2), v))) f.reduced_short.push_back(v);
    }
    if (group.size() % 2 == 1 && f.reduced_long.size() != f.psi.size())
        throw invariant_error("odd inertia order produced a non-reduced folded system");

    // Root-system axioms for the folded set, with the canonical invariant form.
    IntMat bf = invariant_form(d);
    for (const RatVec& beta : f.psi)
        for (const RatVec& gamma : f.psi) {
            Rat n = Rat(2) * bform_eval(bf, beta, gamma) / bform_eval(bf, gamma, gamma);
            if (denominator(n) != 1)
                throw invariant_error("folded Cartan number is not an integer");
            RatVec refl = vec_sub(beta, vec_scale(n, gamma));
            if (!has(refl)) throw invariant_error("folded set not closed under reflections");
        }

    // Blocks: positive roots grouped by the ray of their projection.
    auto coords = rootdata::simple_coordinates(d);
    auto pos = rootdata::positive_roots(d);
    std::map<IntVec, std::vector<std::size_t>> by_ray;
    for (std::size_t i : pos) by_ray[primitive_ray(project(d.roots[i]))].push_back(i);

    for (auto& [ray, members] : by_ray) {
        OrbitBlock blk;
        blk.members = members;

        auto height = [&](std::size_t i) {
            Int h(0);
            for (const Int& c : coords[i]) h += c;
            return h;
        };
        std::size_t best = members[0];
        for (std::size_t i : members) {
            Int hi = height(i), hb = height(best);
            if (hi < hb || (hi == hb && d.roots[i] < d.roots[best])) best = i;
        }
        blk.representative = best;

        std::set<RatVec> values;
        for (std::size_t i : members) values.insert(project(d.roots[i]));
        if (values.size() == 1) {
            blk.type = 1;
            blk.projection = *values.begin();
        } else if (values.size() == 2) {
            blk.type = 2;
            RatVec shorter = *values.begin();
            RatVec longer = *std::next(values.begin());
            if (vec_scale(Rat(2), shorter) != longer &&
                vec_scale(Rat(2), longer) != shorter)
                throw invariant_error("two-length block values are not in ratio 2");
            if (vec_scale(Rat(2), longer) == shorter) std::swap(shorter, longer);
            blk.projection = shorter;
            if (members.size() != 3)
                throw invariant_error("two-length block does not have three members");
            check_two_length_component(d, coords[blk.representative], bf);
        } else {
            throw invariant_error("block carries more than two projection lengths");
        }
        f.blocks.push_back(std::move(blk));
    }
    return f;
}

rootdata::WeylGroup fixed_weyl(const BasedRootDatum& d, const std::vector<IntMat>& automorphisms,
                               std::size_t bound) {
    std::vector<Perm> aperms;
    for (const IntMat& g : automorphisms) aperms.push_back(rootdata::root_permutation(d, g));
    rootdata::WeylGroup w = rootdata::weyl_group(d, bound);
    rootdata::WeylGroup out;
    for (const Perm& e : w.elements) {
        bool commutes = true;
        for (const Perm& a : aperms)
            if (rootdata::perm_compose(a, e) != rootdata::perm_compose(e, a)) {
                commutes = false;
                break;
            }
        if (commutes) out.elements.push_back(e);
    }
    return out;
}

std::size_t folded_weyl_order(const BasedRootDatum& d, const FoldedSystem& f, std::size_t bound) {
    if (f.delta.empty()) return 1;
    IntMat bf = invariant_form(d);
    std::map<RatVec, std::uint32_t> index;
    for (std::size_t i = 0; i < f.psi.size(); ++i)
        index[f.psi[i]] = static_cast<std::uint32_t>(i);

    std::vector<Perm> gens;
    for (const RatVec& delta : f.delta) {
        Perm p(f.psi.size());
        for (std::size_t i = 0; i < f.psi.size(); ++i) {
            Rat n = Rat(2) * bform_eval(bf, f.psi[i], delta) / bform_eval(bf, delta, delta);
            RatVec img = vec_sub(f.psi[i], vec_scale(n, delta));
            auto it = index.find(img);
            if (it == index.end()) throw invariant_error("folded reflection leaves the folded set");
            p[i] = it->second;
        }
        gens.push_back(std::move(p));
    }
    std::set<Perm> seen;
    std::vector<Perm> elems{rootdata::perm_identity(f.psi.size())};
    seen.insert(elems[0]);
    for (std::size_t head = 0; head < elems.size(); ++head)
        for (const Perm& g : gens) {
            Perm next = rootdata::perm_compose(g, elems[head]);
            if (seen.insert(next).second) {
                elems.push_back(std::move(next));
                if (elems.size() > bound) throw limit_error("folded Weyl closure exceeded bound");
            }
        }
    return elems.size();
}

abelian::FinAbGroup pi0_fixed_torus(std::size_t rank, const abelian::LatticeAction& a) {
    abelian::FinAbGroup free(rank, IntMat(rank, 0));
    abelian::FinAbGroup co = abelian::coinvariants(free, a);
    std::vector<Int> tor = co.torsion();
    IntMat rel(tor.size(), tor.size());
    for (std::size_t i = 0; i < tor.size(); ++i) rel(i, i) = tor[i];
    return abelian::FinAbGroup(tor.size(), rel);
}

bool induced_lattice_check(std::size_t rank, const abelian::LatticeAction& a) {
    std::vector<IntMat> group = a.closure();
    std::vector<std::vector<IntVec>> orbits;
    std::set<std::set<IntVec>> seen_orbits;
    for (std::size_t i = 0; i < rank; ++i) {
        for (int sign : {1, -1}) {
            IntVec e(rank, Int(0));
            e[i] = sign;
            std::set<IntVec> orb;
            for (const IntMat& g : group) orb.insert(g * e);
            if (seen_orbits.insert(orb).second) orbits.emplace_back(orb.begin(), orb.end());
        }
    }
    std::vector<IntVec> selected;
    for (const auto& orb : orbits) {
        if (selected.size() + orb.size() > rank) continue;
        std::vector<IntVec> trial = selected;
        trial.insert(trial.end(), orb.begin(), orb.end());
        RatMat m(rank, trial.size());
        for (std::size_t j = 0; j < trial.size(); ++j)
            for (std::size_t i = 0; i < rank; ++i) m(i, j) = Rat(trial[j][i]);
        if (rank == 0 || parahoric::rank(m) == trial.size()) selected = std::move(trial);
    }
    if (selected.size() != rank) return false;
    IntMat m(rank, rank);
    for (std::size_t j = 0; j < rank; ++j)
        for (std::size_t i = 0; i < rank; ++i) m(i, j) = selected[j][i];
    Int dm = det(m);
    return dm == 1 || dm == -1;
}

}  // namespace parahoric::folding
