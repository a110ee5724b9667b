#include "parahoric/linalg.hpp"

namespace parahoric {

Int det(const IntMat& a) {
    if (a.rows() != a.cols()) throw invariant_error("det of non-square matrix");
    std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMat m = a;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

std::size_t rank(const RatMat& a) {
    RatMat m = a;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
        Rat piv = m(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            Rat f = m(i, c) / piv;
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

std::size_t rank(const IntMat& a) { return rank(to_rat(a)); }

std::optional<RatVec> rat_solve(const RatMat& a, const RatVec& b) {
    if (a.rows() != b.size()) throw invariant_error("rat_solve shape mismatch");
    std::size_t m = a.rows(), n = a.cols();
    RatMat aug = a.hstack(RatMat::from_cols(m, {b}));
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && aug(p, c) == 0) ++p;
        if (p == m) continue;
        for (std::size_t j = 0; j <= n; ++j) std::swap(aug(r, j), aug(p, j));
        Rat piv = aug(r, c);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || aug(i, c) == 0) continue;
            Rat f = aug(i, c) / piv;
            for (std::size_t j = c; j <= n; ++j) aug(i, j) -= f * aug(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (aug(i, n) != 0) return std::nullopt;
    RatVec x(n, Rat(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = aug(i, n) / aug(i, pivot_col[i]);
    return x;
}

RatMat rat_inverse(const RatMat& a) {
    if (a.rows() != a.cols()) throw invariant_error("inverse of non-square matrix");
    std::size_t n = a.rows();
    RatMat aug = a.hstack(RatMat::identity(n));
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && aug(p, c) == 0) ++p;
        if (p == n) throw invariant_error("matrix is singular");
        for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(c, j), aug(p, j));
        Rat piv = aug(c, c);
        for (std::size_t j = 0; j < 2 * n; ++j) aug(c, j) /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug(i, c) == 0) continue;
            Rat f = aug(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) -= f * aug(c, j);
        }
    }
    RatMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

IntMat int_inverse(const IntMat& a) {
    RatMat inv = rat_inverse(to_rat(a));
    if (!is_integral(inv)) throw invariant_error("matrix is not invertible over Z");
    return to_int(inv);
}

}  // namespace parahoric
