#include "parahoric/matrixmodels.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "parahoric/abelian.hpp"
#include "parahoric/error.hpp"
#include "parahoric/folding.hpp"

namespace parahoric::matrixmodels {

namespace {

RatMat scale(const RatMat& m, const Rat& c) {
    RatMat r = m;
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) *= c;
    return r;
}

Rat trace(const RatMat& m) {
    Rat t(0);
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

bool is_upper(const RatMat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (m(i, j) != 0) return false;
    return true;
}

bool is_diagonal(const RatMat& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && m(i, j) != 0) return false;
    return true;
}

bool is_scalar(const RatMat& m) {
    if (!is_diagonal(m)) return false;
    for (std::size_t i = 1; i < m.rows(); ++i)
        if (m(i, i) != m(0, 0)) return false;
    return true;
}

RatMat commutator(const RatMat& a, const RatMat& b) {
    return a * b * rat_inverse(a) * rat_inverse(b);
}

// --- polynomials over Q, coefficients low degree first ----------------------

using Poly = std::vector<Rat>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rat(Int(i)) * p[i]);
    poly_trim(d);
    return d;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.empty()) throw invariant_error("polynomial division by zero");
    Poly rem = a, quo(a.size(), Rat(0));
    poly_trim(rem);
    while (rem.size() >= b.size()) {
        Rat c = rem.back() / b.back();
        std::size_t shift = rem.size() - b.size();
        quo[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
        rem.pop_back();  // leading term cancelled exactly
        poly_trim(rem);
    }
    poly_trim(quo);
    return {quo, rem};
}

Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        Rat lead = a.back();
        for (Rat& c : a) c /= lead;
    }
    return a;
}

// Faddeev-LeVerrier; exact over Q.
Poly charpoly(const RatMat& m) {
    std::size_t n = m.rows();
    Poly c(n + 1, Rat(0));
    c[n] = 1;
    RatMat a = m;
    c[n - 1] = -trace(a);
    for (std::size_t k = 2; k <= n; ++k) {
        RatMat shift = RatMat::identity(n);
        a = m * (a + scale(shift, c[n - k + 1]));
        c[n - k] = -trace(a) / Rat(Int(k));
    }
    return c;
}

RatMat poly_eval(const Poly& p, const RatMat& m) {
    std::size_t n = m.rows();
    RatMat r(n, n);
    for (std::size_t i = p.size(); i-- > 0;) r = r * m + scale(RatMat::identity(n), p[i]);
    return r;
}

// --- folded root groups ------------------------------------------------------

struct FoldedOrbit {
    std::vector<std::size_t> members;  // superdiagonal positions, sorted
    bool type2 = false;                // adjacent pair: needs the quadratic correction
};

std::vector<FoldedOrbit> simple_orbits(const OuterAuto& tau) {
    std::vector<FoldedOrbit> out;
    std::size_t m = tau.n - 1;
    for (std::size_t p = 0; p < m; ++p) {
        std::size_t q = tau.outer ? m - 1 - p : p;
        if (q < p) continue;
        FoldedOrbit o;
        o.members = p == q ? std::vector<std::size_t>{p} : std::vector<std::size_t>{p, q};
        o.type2 = q == p + 1;
        out.push_back(std::move(o));
    }
    return out;
}

RatMat root_vector(const OuterAuto& tau, const std::vector<Rat>& signs, std::size_t p,
                   bool positive) {
    RatMat x(tau.n, tau.n);
    if (positive)
        x(p, p + 1) = signs[p];
    else
        x(p + 1, p) = signs[p];
    return x;
}

RatMat one_param(const OuterAuto& tau, const std::vector<Rat>& signs, std::size_t p, const Rat& y,
                 bool positive) {
    return RatMat::identity(tau.n) + scale(root_vector(tau, signs, p, positive), y);
}

// The single nonzero entry of a matrix expected to be supported on one cell.
std::optional<std::pair<std::pair<std::size_t, std::size_t>, Rat>> single_entry(const RatMat& m) {
    std::optional<std::pair<std::pair<std::size_t, std::size_t>, Rat>> found;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) {
                if (found) return std::nullopt;
                found = {{i, j}, m(i, j)};
            }
    return found;
}

// x-bar: the folded one-parameter group of an orbit, positive or negative
// side.  Adjacent pairs carry x_b(-y^2/2) with x_b read off the commutator.
RatMat xbar(const OuterAuto& tau, const std::vector<Rat>& signs, const FoldedOrbit& o,
            const Rat& y, bool positive) {
    RatMat r = one_param(tau, signs, o.members[0], y, positive);
    if (o.members.size() == 2) r = r * one_param(tau, signs, o.members[1], y, positive);
    if (o.type2) {
        RatMat b = commutator(one_param(tau, signs, o.members[0], Rat(1), positive),
                              one_param(tau, signs, o.members[1], Rat(1), positive)) -
                   RatMat::identity(tau.n);
        if (!single_entry(b)) throw invariant_error("commutator normalization failure");
        r = r * (RatMat::identity(tau.n) + scale(b, -y * y / 2));
    }
    return r;
}

// d/dy at 0 of the positive (resp. negative) x-bar.
RatMat lie_generator(const OuterAuto& tau, const std::vector<Rat>& signs, const FoldedOrbit& o,
                     bool positive) {
    RatMat x = root_vector(tau, signs, o.members[0], positive);
    if (o.members.size() == 2) x = x + root_vector(tau, signs, o.members[1], positive);
    return x;
}

std::vector<std::size_t> monomial_pattern(const RatMat& m) {
    std::vector<std::size_t> pattern(m.cols());
    std::vector<bool> used(m.rows(), false);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::size_t hits = 0;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (m(i, j) != 0) {
                ++hits;
                pattern[j] = i;
            }
        if (hits != 1 || used[pattern[j]]) throw invariant_error("matrix is not monomial");
        used[pattern[j]] = true;
    }
    return pattern;
}

// Monomial lift of the folded reflection: exp(e) exp(-f) exp(e) with f the
// sl2-partner of e, scaled by the computed bracket eigenvalue.
RatMat weyl_lift(const OuterAuto& tau, const std::vector<Rat>& signs, const FoldedOrbit& o) {
    RatMat e = lie_generator(tau, signs, o, true);
    RatMat f0 = lie_generator(tau, signs, o, false);
    RatMat h = e * f0 - f0 * e;
    RatMat he = h * e - e * h;
    // he = kappa * e
    std::optional<Rat> kappa;
    for (std::size_t i = 0; i < e.rows(); ++i)
        for (std::size_t j = 0; j < e.cols(); ++j)
            if (e(i, j) != 0) {
                Rat ratio = he(i, j) / e(i, j);
                if (kappa && *kappa != ratio)
                    throw invariant_error("bracket does not scale the root vector");
                kappa = ratio;
            }
    if (!kappa || *kappa == 0 || !(he == scale(e, *kappa)))
        throw invariant_error("bracket does not scale the root vector");
    RatMat lift = xbar(tau, signs, o, Rat(1), true) * xbar(tau, signs, o, Rat(-2) / *kappa, false) *
                  xbar(tau, signs, o, Rat(1), true);
    if (!tau.fixes(lift)) throw invariant_error("reflection lift is not fixed");
    monomial_pattern(lift);  // throws when not monomial
    return lift;
}

std::size_t f2_rank(const IntMat& cols) {
    std::vector<std::vector<int>> rows;
    for (std::size_t j = 0; j < cols.cols(); ++j) {
        std::vector<int> v(cols.rows());
        for (std::size_t i = 0; i < cols.rows(); ++i)
            v[i] = static_cast<int>(((cols(i, j) % 2) + 2) % 2);
        rows.push_back(std::move(v));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < (rows.empty() ? 0 : rows[0].size()); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][c] == 1)
                for (std::size_t k = 0; k < rows[r].size(); ++k) rows[r][k] ^= rows[rank][k];
        if (++rank == rows.size()) break;
    }
    return rank;
}

Rat rat_pow(const Rat& x, std::size_t k) {
    Rat r(1);
    for (std::size_t i = 0; i < k; ++i) r *= x;
    return r;
}

}  // namespace

OuterAuto OuterAuto::identity(std::size_t n) {
    OuterAuto t;
    t.n = n;
    t.outer = false;
    t.twist = RatMat::identity(n);
    t.twist_inv = t.twist;
    return t;
}

OuterAuto OuterAuto::standard(std::size_t n) {
    if (n < 2) throw invariant_error("outer automorphism needs n >= 2");
    OuterAuto t;
    t.n = n;
    t.outer = true;
    t.twist = RatMat(n, n);
    for (std::size_t a = 0; a < n; ++a) t.twist(a, n - 1 - a) = a % 2 == 0 ? Rat(1) : Rat(-1);
    t.twist_inv = rat_inverse(t.twist);

    // order two: tau^2 is conjugation by J J^{-T}, which must be scalar
    if (!is_scalar(t.twist * rat_inverse(t.twist.transpose())))
        throw invariant_error("antidiagonal twist is not an involution");

    // fixes the torus and the Borel (checked on generic elements)
    RatMat d = RatMat::identity(n);
    RatMat b = RatMat::identity(n);
    Rat prime[] = {Rat(2), Rat(3), Rat(5), Rat(7), Rat(11), Rat(13), Rat(17), Rat(19), Rat(23)};
    for (std::size_t i = 0; i < n; ++i) {
        d(i, i) = prime[i % 9] + Rat(Int(i / 9));
        b(i, i) = d(i, i);
        for (std::size_t j = i + 1; j < n; ++j) b(i, j) = Rat(Int(i + 2 * j + 1), Int(i + j + 2));
    }
    if (!is_diagonal(t.apply(d))) throw invariant_error("twist does not preserve the torus");
    if (!is_upper(t.apply(b))) throw invariant_error("twist does not preserve the Borel");

    // fixes the normalized principal nilpotent (throws when unsolvable)
    RatMat e = principal_nilpotent(t);
    if (!(t.apply_lie(e) == e)) throw invariant_error("twist does not fix the principal splitting");
    return t;
}

RatMat OuterAuto::apply(const RatMat& g) const {
    if (g.rows() != n || g.cols() != n) throw invariant_error("automorphism applied off-size");
    if (!outer) return g;
    return twist * rat_inverse(g.transpose()) * twist_inv;
}

RatMat OuterAuto::apply_lie(const RatMat& x) const {
    if (x.rows() != n || x.cols() != n) throw invariant_error("automorphism applied off-size");
    if (!outer) return x;
    return scale(twist * x.transpose() * twist_inv, Rat(-1));
}

RatMat elementary(std::size_t n, std::size_t i, std::size_t j, const Rat& y) {
    if (i >= n || j >= n || i == j) throw invariant_error("elementary position out of range");
    RatMat m = RatMat::identity(n);
    m(i, j) = y;
    return m;
}

std::vector<Rat> principal_signs(const OuterAuto& tau) {
    std::size_t m = tau.n - 1;
    std::vector<Rat> signs(m, Rat(0));
    if (!tau.outer) {
        std::fill(signs.begin(), signs.end(), Rat(1));
        return signs;
    }
    // dtau(E_{p,p+1}) = c_p E_{sig(p),sig(p)+1}, read off by evaluation
    std::vector<std::size_t> sig(m);
    std::vector<Rat> c(m);
    for (std::size_t p = 0; p < m; ++p) {
        RatMat img = tau.apply_lie(elementary(tau.n, p, p + 1, Rat(1)) - RatMat::identity(tau.n));
        auto entry = single_entry(img);
        if (!entry || entry->first.second != entry->first.first + 1 ||
            (entry->second != 1 && entry->second != -1))
            throw invariant_error("twist scrambles the superdiagonal");
        sig[p] = entry->first.first;
        c[p] = entry->second;
    }
    for (std::size_t p = 0; p < m; ++p)
        if (sig[sig[p]] != p) throw invariant_error("superdiagonal action is not an involution");
    // solve s_{sig(p)} = c_p s_p over {+-1}
    for (std::size_t p = 0; p < m; ++p) {
        if (signs[p] == 0) {
            if (sig[p] == p && c[p] != 1)
                throw invariant_error("no sign normalization fixes the principal nilpotent");
            signs[p] = 1;
            if (sig[p] != p) signs[sig[p]] = c[p];
        } else if (signs[sig[p]] != c[p] * signs[p]) {
            throw invariant_error("no sign normalization fixes the principal nilpotent");
        }
    }
    return signs;
}

RatMat principal_nilpotent(const OuterAuto& tau) {
    std::vector<Rat> signs = principal_signs(tau);
    RatMat e(tau.n, tau.n);
    for (std::size_t p = 0; p + 1 < tau.n; ++p) e(p, p + 1) = signs[p];
    if (!(tau.apply_lie(e) == e))
        throw invariant_error("no sign normalization fixes the principal nilpotent");
    return e;
}

RatMat twisted_transport(const RatMat& b, const RatMat& h, const OuterAuto& tau) {
    return rat_inverse(b) * h * tau.apply(b);
}

bool verify_type1_formula(std::size_t n, const std::vector<Rat>& ys) {
    if (n < 4) throw invariant_error("disjoint orbit needs n >= 4");
    OuterAuto tau = OuterAuto::standard(n);
    std::vector<Rat> signs = principal_signs(tau);
    FoldedOrbit o{{0, n - 2}, false};
    auto f = [&](const Rat& y) { return xbar(tau, signs, o, y, true); };

    bool ok = f(Rat(0)) == RatMat::identity(n) && f(Rat(1)) * f(Rat(-1)) == RatMat::identity(n);
    for (const Rat& y : ys) ok = ok && tau.fixes(f(y));
    for (const Rat& y1 : ys)
        for (const Rat& y2 : ys) ok = ok && f(y1) * f(y2) == f(y1 + y2);
    return ok;
}

bool verify_type2_formula(const std::vector<Rat>& ys) {
    OuterAuto tau = OuterAuto::standard(3);
    std::vector<Rat> signs = principal_signs(tau);
    auto xa = [&](const Rat& y) { return one_param(tau, signs, 0, y, true); };
    auto xt = [&](const Rat& y) { return one_param(tau, signs, 1, y, true); };

    // [x_a(y), x_ta(y')] = x_b(y y') pins down x_b
    RatMat b = commutator(xa(Rat(1)), xt(Rat(1))) - RatMat::identity(3);
    if (!single_entry(b)) throw invariant_error("commutator normalization failure");
    auto xb = [&](const Rat& z) { return RatMat::identity(3) + scale(b, z); };
    for (const Rat& y1 : ys)
        for (const Rat& y2 : ys)
            if (!(commutator(xa(y1), xt(y2)) == xb(y1 * y2)))
                throw invariant_error("commutator normalization failure");

    FoldedOrbit o{{0, 1}, true};
    auto f = [&](const Rat& y) { return xbar(tau, signs, o, y, true); };
    bool ok = f(Rat(0)) == RatMat::identity(3);
    for (const Rat& y : ys) ok = ok && tau.fixes(f(y));
    for (const Rat& y1 : ys)
        for (const Rat& y2 : ys) ok = ok && f(y1) * f(y2) == f(y1 + y2);
    return ok;
}

RatMat semisimple_to_torus(const RatMat& h, const OuterAuto& tau) {
    std::size_t n = tau.n;
    if (h.rows() != n || h.cols() != n) throw invariant_error("coset element off-size");
    if (!is_upper(h)) throw invariant_error("coset element must be upper triangular");
    for (std::size_t i = 0; i < n; ++i)
        if (h(i, i) == 0) throw invariant_error("coset element must be invertible");

    // (h tau)^2 acts as h tau(h); squarefree minimal polynomial certifies a
    // semisimple coset element
    RatMat sq = h * tau.apply(h);
    Poly p = charpoly(sq);
    Poly g = poly_gcd(p, poly_derivative(p));
    auto [radical, rem] = poly_divmod(p, g);
    if (!rem.empty()) throw invariant_error("radical division left a remainder");
    if (!poly_eval(radical, sq).is_zero())
        throw invariant_error("twisted square is not semisimple");

    RatMat b = RatMat::identity(n);
    RatMat cur = h;
    for (std::size_t k = 1; k < n; ++k) {
        std::size_t m = n - k;
        auto strip = [&](const RatMat& mm) {
            RatVec s(m);
            for (std::size_t i = 0; i < m; ++i) s[i] = mm(i, i + k);
            return s;
        };
        RatVec c0 = strip(cur);
        RatMat a(m, m);
        for (std::size_t col = 0; col < m; ++col) {
            RatMat w = elementary(n, col, col + k, Rat(1));
            a.set_col(col, vec_sub(strip(twisted_transport(w, cur, tau)), c0));
        }
        auto sol = rat_solve(a, vec_neg(c0));
        if (!sol)
            throw invariant_error("strip elimination failed: coset element is not semisimple");
        RatMat w = RatMat::identity(n);
        for (std::size_t col = 0; col < m; ++col) w(col, col + k) = (*sol)[col];
        cur = twisted_transport(w, cur, tau);
        if (!vec_is_zero(strip(cur))) throw invariant_error("strip survived its elimination");
        b = b * w;
    }
    if (!is_diagonal(cur)) throw invariant_error("triangular solve left off-diagonal residue");
    return b;
}

NilpotentReport verify_nilpotent_lemma(std::size_t n, const Rat& lambda, std::size_t trials,
                                       std::uint64_t seed) {
    if (n < 2) throw invariant_error("principal nilpotent needs n >= 2");
    if (lambda == 0 || lambda == 1 || lambda == -1)
        throw invariant_error("scaling must avoid rational roots of unity");

    OuterAuto tau = OuterAuto::standard(n);
    RatMat e = principal_nilpotent(tau);
    RatMat delta(n, n);
    for (std::size_t i = 0; i < n; ++i) delta(i, i) = rat_pow(lambda, n - 1 - i);
    if (!(delta * e * rat_inverse(delta) == scale(e, lambda)))
        throw invariant_error("diagonal does not rescale the nilpotent");

    std::vector<RatMat> epow{RatMat::identity(n)};
    for (std::size_t k = 1; k < n; ++k) epow.push_back(epow.back() * e);

    NilpotentReport rep;
    rep.n = n;
    rep.lambda = lambda;
    rep.trials = trials;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    auto small_rat = [&](bool nonzero) {
        int a = num(rng);
        while (nonzero && a == 0) a = num(rng);
        return Rat(a, den(rng));
    };

    for (std::size_t t = 0; t < trials; ++t) {
        RatMat v = RatMat::identity(n);
        for (std::size_t k = 1; k < n; ++k) v = v + scale(epow[k], small_rat(false));
        Rat z0 = small_rat(true);
        RatMat g = scale(v * delta, z0);

        std::vector<Rat> coeff(n, Rat(0));
        auto build = [&]() {
            RatMat u = RatMat::identity(n);
            for (std::size_t k = 1; k < n; ++k) u = u + scale(epow[k], coeff[k]);
            return u;
        };
        auto push = [&](const RatMat& u) { return u * g * tau.apply(rat_inverse(u)); };

        std::string fail;
        for (std::size_t k = 1; k < n && fail.empty(); ++k) {
            std::size_t m = n - k;
            auto strip = [&](const RatMat& mm) {
                RatVec s(m);
                for (std::size_t i = 0; i < m; ++i) s[i] = mm(i, i + k);
                return s;
            };
            RatVec c0 = strip(push(build()));
            coeff[k] = 1;
            RatVec c1 = strip(push(build()));
            coeff[k] = 0;
            RatMat a(m, 1);
            a.set_col(0, vec_sub(c1, c0));
            auto sol = rat_solve(a, vec_neg(c0));
            if (!sol) {
                std::ostringstream os;
                os << "trial " << t << ": strip " << k << " unsolvable";
                fail = os.str();
            } else {
                coeff[k] = (*sol)[0];
            }
        }
        if (fail.empty()) {
            RatMat u = build();
            RatMat out = push(u);
            if (!is_diagonal(out))
                fail = "trial " + std::to_string(t) + ": residue off the diagonal";
            else {
                RatMat z = out * rat_inverse(delta);
                if (!is_scalar(z))
                    fail = "trial " + std::to_string(t) + ": quotient is not central";
                else if (z(0, 0) != z0)
                    fail = "trial " + std::to_string(t) + ": central part drifted";
                else if (!(u * e * rat_inverse(u) == e))
                    fail = "trial " + std::to_string(t) + ": conjugator moved the nilpotent";
            }
        }
        if (fail.empty())
            ++rep.successes;
        else
            rep.failures.push_back(fail);
    }
    return rep;
}

FixedGroupReport verify_fixed_group_facts(std::size_t n, bool special, bool outer) {
    if (n < 2 || n > 8) throw invariant_error("matrix-side checks are desk-scale (2 <= n <= 8)");
    OuterAuto tau = outer ? OuterAuto::standard(n) : OuterAuto::identity(n);
    std::vector<Rat> signs = principal_signs(tau);

    FixedGroupReport rep;
    rep.n = n;
    rep.special = special;
    rep.outer = outer;

    // fixed permutations: commuting with reversal when the twist is outer
    std::set<std::vector<std::size_t>> fixed;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    do {
        bool ok = true;
        if (outer)
            for (std::size_t i = 0; i < n && ok; ++i)
                ok = n - 1 - perm[n - 1 - i] == perm[i];
        if (ok) fixed.insert(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    rep.fixed_weyl_order = fixed.size();

    // lifts of the folded reflections, then closure over patterns
    std::vector<FoldedOrbit> orbits = simple_orbits(tau);
    std::vector<RatMat> lifts;
    std::vector<std::vector<std::size_t>> patterns;
    for (const FoldedOrbit& o : orbits) {
        RatMat l = weyl_lift(tau, signs, o);
        std::vector<std::size_t> pat = monomial_pattern(l);
        if (!fixed.count(pat)) throw invariant_error("reflection lift pattern is not fixed");
        lifts.push_back(std::move(l));
        patterns.push_back(std::move(pat));
    }
    std::set<std::vector<std::size_t>> reached;
    std::vector<std::size_t> id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = i;
    std::vector<std::vector<std::size_t>> queue{id};
    reached.insert(id);
    while (!queue.empty()) {
        std::vector<std::size_t> w = std::move(queue.back());
        queue.pop_back();
        for (const auto& s : patterns) {
            std::vector<std::size_t> next(n);
            for (std::size_t i = 0; i < n; ++i) next[i] = s[w[i]];
            if (reached.insert(next).second) queue.push_back(next);
        }
    }
    rep.lifted = reached.size();

    // sampled words stay tau-fixed monomial lifts of their composed patterns
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, orbits.size() - 1);
    for (std::size_t w = 0; w < 10 && !orbits.empty(); ++w) {
        RatMat m = RatMat::identity(n);
        std::vector<std::size_t> expect = id;
        for (std::size_t step = 0; step < 1 + w % 5; ++step) {
            std::size_t g = pick(rng);
            m = m * lifts[g];
            std::vector<std::size_t> next(n);
            for (std::size_t i = 0; i < n; ++i) next[i] = expect[patterns[g][i]];
            expect = next;
        }
        if (!tau.fixes(m) || monomial_pattern(m) != expect)
            throw invariant_error("word of lifts lost its monomial shape");
    }

    // pi0 of the fixed diagonal torus, matrix side: sign points per
    // one-parameter reachability.  The twist has order two, so the component
    // group is elementary 2-abelian and 2-torsion meets every component.
    Int sign_points(0);
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        RatMat d = RatMat::identity(n);
        Rat det(1);
        for (std::size_t i = 0; i < n; ++i) {
            d(i, i) = (mask >> i) & 1 ? Rat(-1) : Rat(1);
            det *= d(i, i);
        }
        if (special && det != 1) continue;
        if (tau.fixes(d)) ++sign_points;
    }
    IntMat constraints(0, n);
    if (outer) {
        IntMat rev(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            rev(i, i) = 1;
            rev(i, n - 1 - i) += 1;
        }
        constraints = constraints.vstack(rev);
    }
    if (special) {
        IntMat ones(1, n);
        for (std::size_t i = 0; i < n; ++i) ones(0, i) = 1;
        constraints = constraints.vstack(ones);
    }
    IntMat cochar = constraints.rows() == 0 ? IntMat::identity(n)
                                            : abelian::kernel_basis(constraints);
    Int comp = Int(1) << f2_rank(cochar);
    if (sign_points % comp != 0) throw invariant_error("sign points do not tile the components");
    rep.pi0_matrix = sign_points / comp;

    // lattice prediction
    std::size_t rank = special ? n - 1 : n;
    std::vector<IntMat> gens;
    if (outer) {
        IntMat g(rank, rank);
        if (special)
            for (std::size_t i = 0; i < rank; ++i) g(rank - 1 - i, i) = 1;  // weight flip
        else
            for (std::size_t i = 0; i < rank; ++i) g(rank - 1 - i, i) = -1;  // -reversal
        gens.push_back(std::move(g));
    }
    rep.pi0_lattice =
        folding::pi0_fixed_torus(rank, abelian::LatticeAction{rank, std::move(gens)}).order();
    return rep;
}

}  // namespace parahoric::matrixmodels
