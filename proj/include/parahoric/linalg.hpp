#pragma once

// Exact dense linear algebra over Z and Q, sized for rank <= ~10 lattices.
// Everything here is arbitrary precision; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <optional>
#include <vector>

#include "parahoric/error.hpp"

namespace parahoric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols, T fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Mat(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw invariant_error("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator<(const Mat& o) const {
        if (rows_ != o.rows_) return rows_ < o.rows_;
        if (cols_ != o.cols_) return cols_ < o.cols_;
        return std::lexicographical_compare(data_.begin(), data_.end(),
                                            o.data_.begin(), o.data_.end());
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw invariant_error("matrix product shape mismatch");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }
    Mat operator+(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw invariant_error("matrix sum shape mismatch");
        Mat r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw invariant_error("matrix diff shape mismatch");
        Mat r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }
    Mat operator-() const {
        Mat r = *this;
        for (auto& x : r.data_) x = -x;
        return r;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        if (cols_ != v.size()) throw invariant_error("matrix-vector shape mismatch");
        std::vector<T> r(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<T> col(std::size_t j) const {
        std::vector<T> v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    std::vector<T> row(std::size_t i) const {
        std::vector<T> v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }
    void set_col(std::size_t j, const std::vector<T>& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
    }
    bool is_identity() const {
        if (rows_ != cols_) return false;
        return *this == identity(rows_);
    }

    // Columns of `b` appended on the right.
    Mat hstack(const Mat& b) const {
        if (rows_ != b.rows_ && cols_ != 0 && b.cols_ != 0)
            throw invariant_error("hstack row mismatch");
        std::size_t rr = cols_ == 0 ? b.rows_ : rows_;
        Mat r(rr, cols_ + b.cols_);
        for (std::size_t i = 0; i < rr; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, cols_ + j) = b(i, j);
        }
        return r;
    }
    Mat vstack(const Mat& b) const {
        if (cols_ != b.cols_ && rows_ != 0 && b.rows_ != 0)
            throw invariant_error("vstack column mismatch");
        std::size_t cc = rows_ == 0 ? b.cols_ : cols_;
        Mat r(rows_ + b.rows_, cc);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cc; ++j) r(i, j) = (*this)(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < cc; ++j) r(rows_ + i, j) = b(i, j);
        return r;
    }

    static Mat from_cols(std::size_t rows, const std::vector<std::vector<T>>& cols) {
        Mat r(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw invariant_error("from_cols length mismatch");
            r.set_col(j, cols[j]);
        }
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

inline RatMat to_rat(const IntMat& a) {
    RatMat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = Rat(a(i, j));
    return r;
}
inline RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

inline bool is_integral(const RatMat& a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (denominator(a(i, j)) != 1) return false;
    return true;
}
inline IntMat to_int(const RatMat& a) {
    if (!is_integral(a)) throw invariant_error("matrix is not integral");
    IntMat r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = numerator(a(i, j));
    return r;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw invariant_error("dot length mismatch");
    T s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
inline Rat dot(const RatVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw invariant_error("dot length mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

template <class T>
std::vector<T> vec_add(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw invariant_error("vec_add length mismatch");
    std::vector<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}
template <class T>
std::vector<T> vec_sub(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw invariant_error("vec_sub length mismatch");
    std::vector<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}
template <class T>
std::vector<T> vec_neg(const std::vector<T>& a) {
    std::vector<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}
template <class T>
std::vector<T> vec_scale(const T& c, const std::vector<T>& a) {
    std::vector<T> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}
template <class T>
bool vec_is_zero(const std::vector<T>& a) {
    return std::all_of(a.begin(), a.end(), [](const T& x) { return x == 0; });
}

// Exact determinant by fraction-free (Bareiss) elimination.
Int det(const IntMat& a);

// Rank over Q.
std::size_t rank(const IntMat& a);
std::size_t rank(const RatMat& a);

// Gaussian elimination over Q; returns a solution of a*x = b if one exists.
std::optional<RatVec> rat_solve(const RatMat& a, const RatVec& b);

// Inverse over Q; throws invariant_error if singular.
RatMat rat_inverse(const RatMat& a);

// Inverse of a unimodular integer matrix; throws if not invertible over Z.
IntMat int_inverse(const IntMat& a);

}  // namespace parahoric
