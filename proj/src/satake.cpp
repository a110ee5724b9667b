#include "parahoric/satake.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "parahoric/error.hpp"

namespace parahoric::satake {

using abelian::FinAbGroup;
using rootdata::Perm;

namespace {

Int factorial(std::size_t n) {
    Int f(1);
    for (std::size_t i = 2; i <= n; ++i) f *= Int(i);
    return f;
}

Rat pair_rat(const IntVec& x, const RatVec& y) {
    if (x.size() != y.size()) throw invariant_error("pairing length mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) s += Rat(x[i]) * y[i];
    return s;
}

// Columns canonicalized, so two matrices agree iff they induce the same map.
IntMat canon_matrix(const FinAbGroup& g, const IntMat& m) {
    IntMat out(m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) out.set_col(j, g.canon(m.col(j)));
    return out;
}

// Values of x -> s(w x): the w-translate of the parameter as a value tuple.
std::vector<FormalValue> translate_values(const SatakeParameter& s, const IntMat& wp) {
    std::vector<FormalValue> out(wp.cols());
    for (std::size_t j = 0; j < wp.cols(); ++j) out[j] = s.chr.evaluate(wp.col(j));
    return out;
}

bool is_coordinate_swap_root(const IntVec& v) {
    int pos = 0, neg = 0;
    for (const Int& x : v) {
        if (x == 1)
            ++pos;
        else if (x == -1)
            ++neg;
        else if (x != 0)
            return false;
    }
    return pos == 1 && neg == 1;
}

}  // namespace

GroupSpec make_group_spec(DualGroupDatum d, std::vector<std::size_t> minimal_levi) {
    dualdata::validate(d);
    std::sort(minimal_levi.begin(), minimal_levi.end());
    minimal_levi.erase(std::unique(minimal_levi.begin(), minimal_levi.end()), minimal_levi.end());
    dualdata::check_levi_stable(d, minimal_levi);
    GroupSpec spec;
    spec.relative_weyl = folding::fixed_weyl(d.datum, d.action.all_generators());
    spec.quasisplit_dual = std::move(d);
    spec.minimal_levi = std::move(minimal_levi);
    return spec;
}

SpecContext::SpecContext(GroupSpec s)
    : spec(std::move(s)),
      params(dualdata::kottwitz_group(spec.quasisplit_dual, {})),
      kottwitz(dualdata::kottwitz_group(spec.quasisplit_dual, spec.minimal_levi)),
      proj(0, 0),
      kernel_gens(0, 0) {
    // the surjection P -> K induced by the identity on the ambient lattice
    std::size_t np = params.group.ambient_rank;
    proj = IntMat(kottwitz.group.ambient_rank, np);
    for (std::size_t j = 0; j < np; ++j)
        proj.set_col(j, kottwitz.coords_of(params.gens_in_ambient.col(j)));

    // well-defined on classes
    const IntMat& prel = params.group.relations;
    for (std::size_t j = 0; j < prel.cols(); ++j)
        if (!kottwitz.group.is_zero_class(proj * prel.col(j)))
            throw invariant_error("projection not well-defined on parameter classes");
    if (!abelian::is_surjective(proj, params.group.relations, kottwitz.group.relations))
        throw invariant_error("parameter lattice does not surject onto the Kottwitz group");
    kernel_gens = abelian::morphism_kernel(proj, params.group.relations, kottwitz.group.relations).gens;

    // full symmetric coordinate action: free identity-embedded P over a
    // coordinate-swap root system with trivial Galois action
    const auto& d = spec.quasisplit_dual;
    sym_standard = d.action.inertia.generators.empty() && d.action.frobenius.is_identity() &&
                   params.group.relations.cols() == 0 &&
                   params.gens_in_ambient == IntMat::identity(d.datum.rank);
    if (sym_standard) {
        std::size_t n = d.datum.rank;
        if (d.datum.roots.size() != n * (n - 1) ||
            Int(spec.relative_weyl.order()) != factorial(n))
            sym_standard = false;
        else
            for (const IntVec& r : d.datum.roots)
                if (!is_coordinate_swap_root(r)) {
                    sym_standard = false;
                    break;
                }
    }
}

const std::vector<IntMat>& SpecContext::weyl_lattice() const {
    if (weyl_lattice_.empty() && spec.relative_weyl.order() > 0)
        weyl_lattice_ = rootdata::weyl_matrices(spec.quasisplit_dual.datum, spec.relative_weyl.elements);
    return weyl_lattice_;
}

const std::vector<IntMat>& SpecContext::weyl_on_params() const {
    if (weyl_on_params_.empty()) {
        const auto& lat = weyl_lattice();
        weyl_on_params_.reserve(lat.size());
        std::size_t np = params.group.ambient_rank;
        for (const IntMat& m : lat) {
            IntMat ind(np, np);
            for (std::size_t j = 0; j < np; ++j)
                ind.set_col(j, params.coords_of(m * params.gens_in_ambient.col(j)));
            weyl_on_params_.push_back(std::move(ind));
        }
    }
    return weyl_on_params_;
}

const std::vector<std::size_t>& SpecContext::levi_normalizer() const {
    if (normalizer_.empty()) {
        const auto& d = spec.quasisplit_dual.datum;
        rootdata::BasedRootDatum sub = rootdata::levi_subdatum(d, spec.minimal_levi);
        std::set<std::size_t> levi_idx;
        for (const IntVec& r : sub.roots) levi_idx.insert(rootdata::root_index(d, r));
        for (std::size_t i = 0; i < spec.relative_weyl.order(); ++i) {
            const Perm& w = spec.relative_weyl.elements[i];
            bool ok = true;
            for (std::size_t r : levi_idx)
                if (!levi_idx.count(w[r])) {
                    ok = false;
                    break;
                }
            if (ok) normalizer_.push_back(i);
        }
    }
    return normalizer_;
}

const std::vector<IntMat>& SpecContext::normalizer_on_kottwitz() const {
    if (norm_on_k_.empty()) {
        const auto& lat = weyl_lattice();
        std::size_t nk = kottwitz.group.ambient_rank;
        for (std::size_t i : levi_normalizer()) {
            IntMat ind(nk, nk);
            for (std::size_t j = 0; j < nk; ++j)
                ind.set_col(j, kottwitz.coords_of(lat[i] * kottwitz.gens_in_ambient.col(j)));
            norm_on_k_.push_back(canon_matrix(kottwitz.group, ind));
        }
    }
    return norm_on_k_;
}

const std::vector<IntMat>& SpecContext::kottwitz_weyl() const {
    if (k_weyl_.empty()) {
        std::set<IntMat> seen;
        for (const IntMat& m : normalizer_on_kottwitz())
            if (seen.insert(m).second) k_weyl_.push_back(m);
        if (k_weyl_.empty()) k_weyl_.push_back(IntMat::identity(kottwitz.group.ambient_rank));
    }
    return k_weyl_;
}

std::size_t SpecContext::levi_fixed_order() const {
    if (!levi_fixed_order_) {
        rootdata::WeylGroup sub =
            rootdata::weyl_subgroup(spec.quasisplit_dual.datum, spec.minimal_levi);
        std::set<Perm> members(sub.elements.begin(), sub.elements.end());
        std::size_t count = 0;
        for (const Perm& w : spec.relative_weyl.elements)
            if (members.count(w)) ++count;
        levi_fixed_order_ = count;
    }
    return *levi_fixed_order_;
}

SatakeParameter make_parameter(const SpecContext& ctx, std::vector<FormalValue> vals) {
    SatakeParameter s{TorusCharacter(ctx.params.group, std::move(vals)), {}};
    if (ctx.sym_standard) {
        s.normal_form = s.chr.values;
        std::sort(s.normal_form.begin(), s.normal_form.end());
        return s;
    }
    const auto& mats = ctx.weyl_on_params();
    s.normal_form = s.chr.values;
    for (const IntMat& wp : mats) {
        std::vector<FormalValue> t = translate_values(s, wp);
        if (t < s.normal_form) s.normal_form = std::move(t);
    }
    return s;
}

SupercuspidalSupport make_support(const SpecContext& ctx, std::vector<FormalValue> vals) {
    return SupercuspidalSupport{TorusCharacter(ctx.kottwitz.group, std::move(vals))};
}

TorusCharacter delta_half(const SpecContext& ctx, const std::vector<std::size_t>& levi, int sign) {
    if (sign != 1 && sign != -1) throw invariant_error("sign must be +1 or -1");
    dualdata::check_levi_stable(ctx.spec.quasisplit_dual, levi);
    std::vector<std::size_t> sorted(levi);
    std::sort(sorted.begin(), sorted.end());
    RatVec rho = rootdata::rho_check(rootdata::levi_subdatum(ctx.spec.quasisplit_dual.datum, sorted));
    std::size_t np = ctx.params.group.ambient_rank;
    std::vector<FormalValue> vals(np);
    for (std::size_t j = 0; j < np; ++j)
        vals[j] =
            FormalValue::q_power(Rat(-sign) * pair_rat(ctx.params.gens_in_ambient.col(j), rho));
    // the constructor check is the descent assertion
    return TorusCharacter(ctx.params.group, std::move(vals));
}

SatakeParameter transfer(const SpecContext& ctx, const SupercuspidalSupport& chi) {
    if (!(chi.chi.domain == ctx.kottwitz.group))
        throw invariant_error("support lives on a different Kottwitz group");
    TorusCharacter half = delta_half(ctx, ctx.spec.minimal_levi, -1);
    std::size_t np = ctx.params.group.ambient_rank;
    std::vector<FormalValue> vals(np);
    for (std::size_t j = 0; j < np; ++j)
        vals[j] = half.values[j].mul(chi.chi.evaluate(ctx.proj.col(j)));
    return make_parameter(ctx, std::move(vals));
}

SatakeParameter transfer_unnormalized(const SpecContext& ctx, const SupercuspidalSupport& chi) {
    const auto& d = ctx.spec.quasisplit_dual;
    if (!d.action.inertia.generators.empty() || !d.action.frobenius.is_identity())
        throw invariant_error("parabolic-route transfer requires trivial Galois action");
    if (!(chi.chi.domain == ctx.kottwitz.group))
        throw invariant_error("support lives on a different Kottwitz group");

    RatVec rho_full = rootdata::rho_check(d.datum);
    rootdata::BasedRootDatum sub = rootdata::levi_subdatum(d.datum, ctx.spec.minimal_levi);
    std::set<IntVec> levi_roots(sub.roots.begin(), sub.roots.end());
    // half-sum of the positive coroots outside the levi
    RatVec comp(d.datum.rank, Rat(0));
    for (std::size_t i : rootdata::positive_roots(d.datum))
        if (!levi_roots.count(d.datum.roots[i]))
            for (std::size_t j = 0; j < d.datum.rank; ++j)
                comp[j] += Rat(d.datum.coroots[i][j], 2);

    std::size_t np = ctx.params.group.ambient_rank;
    std::vector<FormalValue> vals(np);
    for (std::size_t j = 0; j < np; ++j) {
        IntVec amb = ctx.params.gens_in_ambient.col(j);
        Rat expo = pair_rat(amb, rho_full) - pair_rat(amb, comp);
        vals[j] = FormalValue::q_power(expo).mul(chi.chi.evaluate(ctx.proj.col(j)));
    }
    return make_parameter(ctx, std::move(vals));
}

bool param_equal(const SpecContext& ctx, const SatakeParameter& s, const SatakeParameter& t) {
    if (!(s.chr.domain == ctx.params.group) || !(t.chr.domain == ctx.params.group))
        throw invariant_error("parameters live on a different spec");
    return s.normal_form == t.normal_form;
}

MemberResult member_S_G(const SpecContext& ctx, const SatakeParameter& s) {
    if (!(s.chr.domain == ctx.params.group))
        throw invariant_error("parameter lives on a different spec");
    TorusCharacter half = delta_half(ctx, ctx.spec.minimal_levi, +1);
    const auto& mats = ctx.weyl_on_params();

    MemberResult res;
    for (std::size_t i = 0; i < mats.size(); ++i) {
        std::vector<FormalValue> tvals = translate_values(s, mats[i]);
        for (std::size_t j = 0; j < tvals.size(); ++j) tvals[j] = tvals[j].mul(half.values[j]);
        TorusCharacter c(ctx.params.group, std::move(tvals));

        bool trivial = true;
        for (std::size_t g = 0; g < ctx.kernel_gens.cols() && trivial; ++g) {
            FormalValue v = c.evaluate(ctx.kernel_gens.col(g));
            if (!v.is_one()) {
                trivial = false;
                res.refutation.emplace_back(g, v);
            }
        }
        if (!trivial) continue;

        // witness: c factors through p, solved generator by generator
        std::size_t nk = ctx.kottwitz.group.ambient_rank;
        std::vector<FormalValue> wvals(nk);
        for (std::size_t g = 0; g < nk; ++g) {
            IntVec unit(nk, Int(0));
            unit[g] = 1;
            auto pre = abelian::preimage(ctx.proj, ctx.kottwitz.group.relations, unit);
            if (!pre) throw invariant_error("surjection lost a preimage");
            wvals[g] = c.evaluate(*pre);
        }
        res.member = true;
        res.witness_weyl = i;
        res.witness = SupercuspidalSupport{TorusCharacter(ctx.kottwitz.group, std::move(wvals))};
        res.refutation.clear();
        return res;
    }
    return res;
}

std::vector<LeviOrbitVector> levi_orbit_vectors(const SpecContext& ctx,
                                                const std::vector<std::size_t>& levi) {
    const auto& d = ctx.spec.quasisplit_dual.datum;
    dualdata::check_levi_stable(ctx.spec.quasisplit_dual, levi);

    std::vector<std::size_t> simples;  // root indices of the levi's simple roots
    for (std::size_t p : levi) simples.push_back(d.simple[p]);
    std::sort(simples.begin(), simples.end());
    if (simples.empty()) return {};

    // inertia orbits on the levi simples = folded simple roots
    std::map<std::size_t, std::size_t> orbit_of;  // root index -> orbit id
    std::vector<std::vector<std::size_t>> orbits;
    std::vector<Perm> gens;
    for (const IntMat& g : ctx.spec.quasisplit_dual.action.inertia.generators)
        gens.push_back(rootdata::root_permutation(d, g));
    for (std::size_t r : simples) {
        if (orbit_of.count(r)) continue;
        std::size_t id = orbits.size();
        orbits.push_back({});
        std::vector<std::size_t> queue{r};
        orbit_of[r] = id;
        while (!queue.empty()) {
            std::size_t cur = queue.back();
            queue.pop_back();
            orbits[id].push_back(cur);
            for (const Perm& g : gens) {
                std::size_t nxt = g[cur];
                if (!orbit_of.count(nxt)) {
                    orbit_of[nxt] = id;
                    queue.push_back(nxt);
                }
            }
        }
        std::sort(orbits[id].begin(), orbits[id].end());
    }
    for (const auto& [r, id] : orbit_of)
        if (!std::binary_search(simples.begin(), simples.end(), r))
            throw invariant_error("inertia does not preserve the levi simples");

    // frobenius permutes the folded simples; its cycles are the evaluation orbits
    Perm frob = rootdata::root_permutation(d, ctx.spec.quasisplit_dual.action.frobenius);
    std::vector<LeviOrbitVector> out;
    std::set<std::size_t> used;
    for (std::size_t id = 0; id < orbits.size(); ++id) {
        if (used.count(id)) continue;
        IntVec v(d.rank, Int(0));
        std::size_t cur = id, len = 0;
        do {
            used.insert(cur);
            ++len;
            v = vec_add(v, d.roots[orbits[cur].front()]);  // one representative per folded simple
            cur = orbit_of.at(frob[orbits[cur].front()]);
        } while (cur != id);
        out.push_back({ctx.params.coords_of(v), len});
    }
    return out;
}

bool admissible_pair_check(const SpecContext& ctx, const SatakeParameter& s) {
    if (!(s.chr.domain == ctx.params.group))
        throw invariant_error("parameter lives on a different spec");
    std::vector<LeviOrbitVector> points = levi_orbit_vectors(ctx, ctx.spec.minimal_levi);
    if (points.empty()) return true;
    const auto& mats = ctx.weyl_on_params();
    for (const IntMat& wp : mats) {
        bool all = true;
        for (const LeviOrbitVector& pt : points) {
            FormalValue v = s.chr.evaluate(wp * pt.coords);
            if (!(v == FormalValue::q_power(Rat(Int(pt.orbit_size))))) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    return false;
}

OrbitSumImage orbit_sum_transfer(const SpecContext& ctx, const IntVec& m) {
    const FinAbGroup& kg = ctx.kottwitz.group;
    IntVec mc = kg.canon(m);
    auto pre = abelian::preimage(ctx.proj, kg.relations, m);
    if (!pre) throw invariant_error("no preimage in the parameter lattice");
    IntVec t = *pre;

    OrbitSumImage img;
    img.coefficient = Int(ctx.levi_fixed_order());

    const auto& norm = ctx.levi_normalizer();
    const auto& on_k = ctx.normalizer_on_kottwitz();
    const auto& on_p = ctx.weyl_on_params();
    for (std::size_t i = 0; i < norm.size(); ++i) {
        IntVec moved = kg.canon(on_k[i] * mc);
        // functoriality: pushing the moved preimage agrees
        if (kg.canon(ctx.proj * (on_p[norm[i]] * t)) != moved)
            throw invariant_error("orbit pushforward disagrees with the induced action");
        img.raw_image[moved] += 1;
    }
    for (const IntMat& w : ctx.kottwitz_weyl()) img.orbit_sum[kg.canon(w * mc)] += 1;

    if (Int(norm.size()) != img.coefficient * Int(ctx.kottwitz_weyl().size()))
        throw invariant_error("levi normalizer does not factor through the induced Weyl group");
    for (const auto& [key, mult] : img.raw_image)
        if (mult != img.coefficient * img.orbit_sum[key])
            throw invariant_error("orbit-sum image is not the expected multiple");
    if (img.raw_image.size() != img.orbit_sum.size())
        throw invariant_error("orbit-sum image support mismatch");
    return img;
}

FormalSum evaluate_center(const SpecContext& ctx, const std::map<IntVec, Int>& f,
                          const SatakeParameter& s) {
    if (!(s.chr.domain == ctx.params.group))
        throw invariant_error("parameter lives on a different spec");
    const auto& mats = ctx.weyl_on_params();
    FormalSum total;
    for (const auto& [m, coeff] : f) {
        if (m.size() != ctx.params.group.ambient_rank)
            throw invariant_error("orbit-sum key has wrong length");
        for (const IntMat& wp : mats) total.add(s.chr.evaluate(wp * m), coeff);
    }
    return total;
}

std::map<IntVec, Int> constant_term_include(const SpecContext& ctx,
                                            const std::vector<std::size_t>& levi,
                                            const std::map<IntVec, Int>& f) {
    // minimal_levi <= levi <= all simples, Galois-stable
    dualdata::check_levi_stable(ctx.spec.quasisplit_dual, levi);
    std::set<std::size_t> lset(levi.begin(), levi.end());
    for (std::size_t p : ctx.spec.minimal_levi)
        if (!lset.count(p)) throw invariant_error("levi does not contain the minimal levi");

    const FinAbGroup& kg = ctx.kottwitz.group;
    const auto& big = ctx.kottwitz_weyl();

    // the levi's relative Weyl group, induced on K
    rootdata::WeylGroup lsub = rootdata::weyl_subgroup(ctx.spec.quasisplit_dual.datum,
                                                       std::vector<std::size_t>(lset.begin(), lset.end()));
    std::set<Perm> lmembers(lsub.elements.begin(), lsub.elements.end());
    const auto& norm = ctx.levi_normalizer();
    const auto& on_k = ctx.normalizer_on_kottwitz();
    std::vector<IntMat> small;
    {
        std::set<IntMat> seen;
        for (std::size_t i = 0; i < norm.size(); ++i)
            if (lmembers.count(ctx.spec.relative_weyl.elements[norm[i]]) &&
                seen.insert(on_k[i]).second)
                small.push_back(on_k[i]);
    }

    // left-coset representatives of the small group inside the big one
    std::vector<IntMat> reps;
    std::set<IntMat> covered;
    for (const IntMat& g : big) {
        if (covered.count(g)) continue;
        reps.push_back(g);
        for (const IntMat& u : small) {
            IntMat prod = canon_matrix(kg, u * g);
            if (!covered.insert(prod).second)
                throw invariant_error("coset decomposition overlap");
        }
    }
    if (reps.size() * small.size() != big.size())
        throw invariant_error("levi Weyl group does not tile the full one");

    auto orbit_key = [&kg](const std::vector<IntMat>& grp, const IntVec& x) {
        IntVec best = kg.canon(grp.front() * x);
        for (const IntMat& w : grp) {
            IntVec cand = kg.canon(w * x);
            if (best < cand) best = cand;
        }
        return best;
    };

    std::map<IntVec, Int> out;
    for (const auto& [m, coeff] : f) {
        if (m.size() != kg.ambient_rank) throw invariant_error("orbit-sum key has wrong length");
        IntVec mkey = orbit_key(big, m);
        for (const IntMat& g : reps) {
            IntVec lkey = orbit_key(small, kg.canon(g * mkey));
            auto it = out.find(lkey);
            if (it == out.end())
                out.emplace(lkey, coeff);
            else if ((it->second += coeff) == 0)
                out.erase(it);
        }
    }
    return out;
}

SatakeParameter pi_star(const SpecContext& inner, const SpecContext& quasi,
                        const SatakeParameter& s) {
    const auto& a = inner.spec.quasisplit_dual;
    const auto& b = quasi.spec.quasisplit_dual;
    bool same = a.datum.rank == b.datum.rank && a.datum.roots == b.datum.roots &&
                a.datum.coroots == b.datum.coroots && a.datum.simple == b.datum.simple &&
                a.action.inertia.generators == b.action.inertia.generators &&
                a.action.frobenius == b.action.frobenius;
    if (!same) throw invariant_error("specs have different dual data");
    if (!quasi.spec.quasi_split()) throw invariant_error("target spec is not quasi-split");
    if (!(s.chr.domain == inner.params.group))
        throw invariant_error("parameter lives on a different spec");
    // identical dual data gives literally the same parameter presentation
    return make_parameter(quasi, s.chr.values);
}

SatakeParameter gl_inner_form_parameter(const SpecContext& ctx, std::size_t n, std::size_t d,
                                        const std::vector<std::size_t>& partition,
                                        const std::vector<FormalValue>& twists) {
    if (partition.empty() || twists.size() != partition.size())
        throw invariant_error("one twist per partition block");
    std::size_t total = 0;
    for (std::size_t m : partition) total += m;
    if (d == 0 || total * d != n) throw invariant_error("partition does not fill n");
    if (ctx.spec.quasisplit_dual.datum.rank != n || !ctx.sym_standard)
        throw invariant_error("context is not the split general-linear spec of rank n");

    // blocks of consecutive coordinates, sizes m_i * d
    std::vector<std::size_t> block_start{0};
    for (std::size_t m : partition) block_start.push_back(block_start.back() + m * d);
    std::vector<std::size_t> expected_levi;
    for (std::size_t i = 0; i < partition.size(); ++i)
        for (std::size_t j = block_start[i]; j + 1 < block_start[i + 1]; ++j)
            expected_levi.push_back(j);
    if (expected_levi != ctx.spec.minimal_levi)
        throw invariant_error("context levi does not match the partition blocks");

    std::vector<FormalValue> vals(n);
    for (std::size_t i = 0; i < partition.size(); ++i) {
        std::size_t ni = partition[i] * d;
        Rat top = Rat(Int(ni) - 1) / 2;
        for (std::size_t k = 0; k < ni; ++k)
            vals[block_start[i] + k] = twists[i].mul(FormalValue::q_power(top - Rat(Int(k))));
    }
    return make_parameter(ctx, std::move(vals));
}

}  // namespace parahoric::satake
