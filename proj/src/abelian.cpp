#include "parahoric/abelian.hpp"

#include <set>

namespace parahoric::abelian {

namespace {

// Floor division (cpp_int's operator/ truncates toward zero).
Int fdiv(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

void row_swap(IntMat& d, IntMat& u, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d(a, j), d(b, j));
    for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
}
void col_swap(IntMat& d, IntMat& v, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d(i, a), d(i, b));
    for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
}
// row dst += c * row src
void row_axpy(IntMat& d, IntMat& u, std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t j = 0; j < d.cols(); ++j) d(dst, j) += c * d(src, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(dst, j) += c * u(src, j);
}
// col dst += c * col src
void col_axpy(IntMat& d, IntMat& v, std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t i = 0; i < d.rows(); ++i) d(i, dst) += c * d(i, src);
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, dst) += c * v(i, src);
}
void row_negate(IntMat& d, IntMat& u, std::size_t r) {
    for (std::size_t j = 0; j < d.cols(); ++j) d(r, j) = -d(r, j);
    for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
}

}  // namespace

IntMat SmithResult::diagonal(std::size_t rows, std::size_t cols) const {
    IntMat d(rows, cols);
    for (std::size_t i = 0; i < divisors.size(); ++i) d(i, i) = divisors[i];
    return d;
}

SmithResult smith_normal_form(const IntMat& a) {
    const std::size_t m = a.rows(), n = a.cols();
    IntMat d = a;
    IntMat u = IntMat::identity(m);
    IntMat v = IntMat::identity(n);
    const std::size_t steps = std::min(m, n);

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            bool found = false;
            std::size_t pi = t, pj = t;
            Int best(0);
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (d(i, j) == 0) continue;
                    Int v2 = abs(d(i, j));
                    if (!found || v2 < best) {
                        found = true;
                        best = v2;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) goto done;
            row_swap(d, u, t, pi);
            col_swap(d, v, t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0) continue;
                Int q = d(i, t) / d(t, t);
                row_axpy(d, u, i, t, -q);
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) continue;
                Int q = d(t, j) / d(t, t);
                col_axpy(d, v, j, t, -q);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Enforce divisibility into the trailing block.
            bool divisible = true;
            for (std::size_t i = t + 1; i < m && divisible; ++i)
                for (std::size_t j = t + 1; j < n && divisible; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        row_axpy(d, u, t, i, Int(1));
                        divisible = false;
                    }
            if (divisible) break;
        }
        if (d(t, t) < 0) row_negate(d, u, t);
    }
done:

    SmithResult res;
    res.U = u;
    res.V = v;
    res.divisors.resize(steps);
    for (std::size_t i = 0; i < steps; ++i) res.divisors[i] = d(i, i);
    if (u * a * v != res.diagonal(m, n)) throw invariant_error("smith_normal_form internal check failed");
    return res;
}

IntMat kernel_basis(const IntMat& a) {
    const std::size_t n = a.cols();
    SmithResult s = smith_normal_form(a);
    std::vector<IntVec> cols;
    for (std::size_t j = 0; j < n; ++j)
        if (j >= s.divisors.size() || s.divisors[j] == 0) cols.push_back(s.V.col(j));
    return column_lattice_basis(IntMat::from_cols(n, cols));
}

std::optional<IntVec> int_solve(const IntMat& a, const IntVec& b) {
    if (a.rows() != b.size()) throw invariant_error("int_solve shape mismatch");
    SmithResult s = smith_normal_form(a);
    IntVec ub = s.U * b;
    IntVec y(a.cols(), Int(0));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < s.divisors.size() && s.divisors[i] != 0) {
            if (ub[i] % s.divisors[i] != 0) return std::nullopt;
            y[i] = ub[i] / s.divisors[i];
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    return s.V * y;
}

IntMat column_lattice_basis(const IntMat& a) {
    const std::size_t n = a.rows();
    std::vector<IntVec> work;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        IntVec c = a.col(j);
        if (!vec_is_zero(c)) work.push_back(c);
    }
    std::vector<IntVec> basis;
    std::vector<std::size_t> pivot_row;
    for (std::size_t r = 0; r < n; ++r) {
        // Euclidean reduction among working columns at row r.
        for (;;) {
            std::size_t cnt = 0, last = 0;
            std::size_t min_idx = 0;
            Int min_abs(0);
            for (std::size_t c = 0; c < work.size(); ++c) {
                if (work[c][r] == 0) continue;
                ++cnt;
                last = c;
                Int v = abs(work[c][r]);
                if (min_abs == 0 || v < min_abs) {
                    min_abs = v;
                    min_idx = c;
                }
            }
            if (cnt == 0) break;
            if (cnt == 1) {
                IntVec piv = work[last];
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(last));
                if (piv[r] < 0) piv = vec_neg(piv);
                // Reduce the new-pivot row in previously placed columns.
                for (auto& b : basis) {
                    Int q = fdiv(b[r], piv[r]);
                    if (q != 0) b = vec_sub(b, vec_scale(q, piv));
                }
                basis.push_back(piv);
                pivot_row.push_back(r);
                break;
            }
            for (std::size_t c = 0; c < work.size(); ++c) {
                if (c == min_idx || work[c][r] == 0) continue;
                Int q = work[c][r] / work[min_idx][r];
                work[c] = vec_sub(work[c], vec_scale(q, work[min_idx]));
            }
            std::erase_if(work, [](const IntVec& v) { return vec_is_zero(v); });
        }
    }
    return IntMat::from_cols(n, basis);
}

bool in_column_span(const IntMat& a, const IntVec& x) { return int_solve(a, x).has_value(); }

// ---------------------------------------------------------------------------

FinAbGroup::FinAbGroup(std::size_t rank, IntMat rel) : ambient_rank(rank), relations(std::move(rel)) {
    if (relations.cols() == 0) relations = IntMat(rank, 0);
    if (relations.rows() != rank) throw invariant_error("relation matrix has wrong ambient rank");
    snf_ = smith_normal_form(relations);
}

std::size_t FinAbGroup::free_rank() const {
    std::size_t nz = 0;
    for (const Int& d : snf_.divisors)
        if (d != 0) ++nz;
    return ambient_rank - nz;
}

std::vector<Int> FinAbGroup::torsion() const {
    std::vector<Int> t;
    for (const Int& d : snf_.divisors)
        if (d > 1) t.push_back(d);
    return t;
}

Int FinAbGroup::order() const {
    if (free_rank() > 0) return 0;
    Int o(1);
    for (const Int& d : torsion()) o *= d;
    return o;
}

IntVec FinAbGroup::canon(const IntVec& x) const {
    if (x.size() != ambient_rank) throw invariant_error("canon: vector has wrong rank");
    IntVec c = snf_.U * x;
    for (std::size_t i = 0; i < snf_.divisors.size(); ++i) {
        const Int& d = snf_.divisors[i];
        if (d != 0) c[i] = c[i] - d * fdiv(c[i], d);
    }
    return c;
}

bool FinAbGroup::same_class(const IntVec& x, const IntVec& y) const { return canon(x) == canon(y); }

bool FinAbGroup::is_zero_class(const IntVec& x) const { return vec_is_zero(canon(x)); }

MinimizedPresentation MinimizedPresentation::of(const FinAbGroup& g) {
    SmithResult s = smith_normal_form(g.relations);
    IntMat uinv = int_inverse(s.U);
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < g.ambient_rank; ++i)
        if (i >= s.divisors.size() || s.divisors[i] != 1) kept.push_back(i);

    MinimizedPresentation mp;
    mp.to_min = IntMat(kept.size(), g.ambient_rank);
    mp.from_min = IntMat(g.ambient_rank, kept.size());
    std::vector<IntVec> relcols;
    for (std::size_t k = 0; k < kept.size(); ++k) {
        std::size_t i = kept[k];
        for (std::size_t j = 0; j < g.ambient_rank; ++j) {
            mp.to_min(k, j) = s.U(i, j);
            mp.from_min(j, k) = uinv(j, i);
        }
        if (i < s.divisors.size() && s.divisors[i] > 1) {
            IntVec rc(kept.size(), Int(0));
            rc[k] = s.divisors[i];
            relcols.push_back(rc);
        }
    }
    mp.group = FinAbGroup(kept.size(), IntMat::from_cols(kept.size(), relcols));
    return mp;
}

// ---------------------------------------------------------------------------

std::vector<IntMat> LatticeAction::closure(std::size_t bound) const {
    for (const IntMat& g : generators) {
        if (g.rows() != rank || g.cols() != rank)
            throw invariant_error("action generator has wrong shape");
        Int dg = det(g);
        if (dg != 1 && dg != -1) throw invariant_error("action generator is not unimodular");
    }
    IntMat id = IntMat::identity(rank);
    std::vector<IntMat> elems{id};
    std::set<IntMat> seen{id};
    for (std::size_t head = 0; head < elems.size(); ++head) {
        for (const IntMat& g : generators) {
            IntMat next = g * elems[head];
            if (seen.insert(next).second) {
                elems.push_back(next);
                if (elems.size() > bound) throw limit_error("group closure exceeded bound");
            }
        }
    }
    return elems;
}

namespace {

void check_action_respects(const FinAbGroup& g, const LatticeAction& a) {
    if (a.rank != g.ambient_rank) throw invariant_error("action rank does not match group ambient rank");
    for (const IntMat& m : a.generators)
        for (std::size_t j = 0; j < g.relations.cols(); ++j)
            if (!in_column_span(g.relations, m * g.relations.col(j)))
                throw invariant_error("action does not preserve the relation span");
}

}  // namespace

FinAbGroup coinvariants(const FinAbGroup& g, const LatticeAction& a) {
    check_action_respects(g, a);
    IntMat rel = g.relations;
    for (const IntMat& m : a.generators) rel = rel.hstack(m - IntMat::identity(a.rank));
    return FinAbGroup(g.ambient_rank, rel);
}

IntMat invariant_lattice(const LatticeAction& a) {
    IntMat stacked(0, a.rank);
    for (const IntMat& m : a.generators) stacked = stacked.vstack(m - IntMat::identity(a.rank));
    if (stacked.rows() == 0) return IntMat::identity(a.rank);
    return kernel_basis(stacked);
}

// ---------------------------------------------------------------------------

SubgroupPresentation morphism_kernel(const IntMat& H, const IntMat& R_dom, const IntMat& R_cod) {
    const std::size_t n = H.cols(), m = H.rows();
    IntMat rdom = R_dom.cols() == 0 ? IntMat(n, 0) : R_dom;
    IntMat rcod = R_cod.cols() == 0 ? IntMat(m, 0) : R_cod;
    if (rdom.rows() != n || rcod.rows() != m) throw invariant_error("morphism_kernel shape mismatch");
    for (std::size_t j = 0; j < rdom.cols(); ++j)
        if (!in_column_span(rcod, H * rdom.col(j)))
            throw invariant_error("morphism does not respect relations");

    IntMat big = H.hstack(-rcod);
    IntMat ker = kernel_basis(big);
    IntMat top(n, ker.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < ker.cols(); ++j) top(i, j) = ker(i, j);
    IntMat gens = column_lattice_basis(top);

    std::vector<IntVec> relcols;
    for (std::size_t j = 0; j < rdom.cols(); ++j) {
        auto y = int_solve(gens, rdom.col(j));
        if (!y) throw invariant_error("morphism_kernel: relation escapes the kernel lattice");
        relcols.push_back(*y);
    }
    SubgroupPresentation sp;
    sp.gens = gens;
    sp.group = FinAbGroup(gens.cols(), IntMat::from_cols(gens.cols(), relcols));
    return sp;
}

bool is_surjective(const IntMat& H, const IntMat& R_dom, const IntMat& R_cod) {
    const std::size_t n = H.cols(), m = H.rows();
    IntMat rdom = R_dom.cols() == 0 ? IntMat(n, 0) : R_dom;
    IntMat rcod = R_cod.cols() == 0 ? IntMat(m, 0) : R_cod;
    for (std::size_t j = 0; j < rdom.cols(); ++j)
        if (!in_column_span(rcod, H * rdom.col(j)))
            throw invariant_error("morphism does not respect relations");
    if (m == 0) return true;
    SmithResult s = smith_normal_form(H.hstack(rcod));
    if (s.divisors.size() < m) return false;
    for (std::size_t i = 0; i < m; ++i)
        if (s.divisors[i] != 1) return false;
    return true;
}

std::optional<IntVec> preimage(const IntMat& H, const IntMat& R_cod, const IntVec& b) {
    const std::size_t n = H.cols(), m = H.rows();
    IntMat rcod = R_cod.cols() == 0 ? IntMat(m, 0) : R_cod;
    auto sol = int_solve(H.hstack(rcod), b);
    if (!sol) return std::nullopt;
    IntVec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = (*sol)[i];
    return x;
}

SubgroupPresentation invariants(const FinAbGroup& g, const LatticeAction& a) {
    check_action_respects(g, a);
    const std::size_t n = g.ambient_rank;
    const std::size_t t = a.generators.size();
    if (t == 0) {
        SubgroupPresentation sp;
        sp.gens = IntMat::identity(n);
        sp.group = g;
        return sp;
    }
    IntMat H(0, n);
    for (const IntMat& m : a.generators) H = H.vstack(m - IntMat::identity(n));
    IntMat rcod(t * n, t * g.relations.cols());
    for (std::size_t blk = 0; blk < t; ++blk)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < g.relations.cols(); ++j)
                rcod(blk * n + i, blk * g.relations.cols() + j) = g.relations(i, j);
    return morphism_kernel(H, g.relations, rcod);
}

}  // namespace parahoric::abelian
