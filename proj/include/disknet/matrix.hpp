#ifndef DISKNET_MATRIX_HPP
#define DISKNET_MATRIX_HPP

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "disknet/errors.hpp"
#include "disknet/rational.hpp"

namespace disknet {

/// Dense row-major matrix over an exact (Rational) or floating (double) scalar.
/// The rational instantiation is the primary path; the double one mirrors the
/// interface for numeric sweeps and the conjectural-move check.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, T init = T(0))
        : rows_(rows), cols_(cols), a_(rows * cols, init) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            fail(Err::ShapeMismatch, "matrix add");
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            fail(Err::ShapeMismatch, "matrix subtract");
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
        return r;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) fail(Err::ShapeMismatch, "matrix multiply");
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const T& xik = x(i, k);
                if (xik == T(0)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> a_;
};

using RationalMatrix = Matrix<Rational>;

namespace detail {

inline bool pivot_better(const Rational& cand, const Rational& best) {
    // Exact arithmetic: any nonzero pivot works; prefer entries with smaller
    // operands to slow coefficient growth.
    if (best.is_zero()) return !cand.is_zero();
    if (cand.is_zero()) return false;
    return mpz_sizeinbase(cand.num().get_mpz_t(), 2) + mpz_sizeinbase(cand.den().get_mpz_t(), 2) <
           mpz_sizeinbase(best.num().get_mpz_t(), 2) + mpz_sizeinbase(best.den().get_mpz_t(), 2);
}

inline bool pivot_better(const double& cand, const double& best) {
    return std::abs(cand) > std::abs(best);
}

inline bool near_zero(const Rational& x) { return x.is_zero(); }
inline bool near_zero(const double& x) { return x == 0.0; }

}  // namespace detail

/// Gauss-Jordan inverse. Exact over Rational. Throws Singular.
template <typename T>
Matrix<T> invert(const Matrix<T>& m) {
    if (m.rows() != m.cols()) fail(Err::ShapeMismatch, "invert of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<T> a = m;
    Matrix<T> inv = Matrix<T>::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (detail::pivot_better(a(i, col), a(piv, col))) piv = i;
        if (detail::near_zero(a(piv, col))) fail(Err::Singular, "invert");
        a.swap_rows(col, piv);
        inv.swap_rows(col, piv);
        T p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            T f = a(i, col);
            if (detail::near_zero(f)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

/// Solves M x = rhs. Throws Singular / ShapeMismatch.
template <typename T>
std::vector<T> solve(const Matrix<T>& m, const std::vector<T>& rhs) {
    if (m.rows() != m.cols()) fail(Err::ShapeMismatch, "solve with non-square matrix");
    if (rhs.size() != m.rows()) fail(Err::ShapeMismatch, "solve rhs size");
    const std::size_t n = m.rows();
    Matrix<T> a = m;
    std::vector<T> b = rhs;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (detail::pivot_better(a(i, col), a(piv, col))) piv = i;
        if (detail::near_zero(a(piv, col))) fail(Err::Singular, "solve");
        a.swap_rows(col, piv);
        std::swap(b[col], b[piv]);
        for (std::size_t i = col + 1; i < n; ++i) {
            T f = a(i, col) / a(col, col);
            if (detail::near_zero(f)) continue;
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
            b[i] -= f * b[col];
        }
    }
    std::vector<T> x(n, T(0));
    for (std::size_t i = n; i-- > 0;) {
        T s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
        x[i] = s / a(i, i);
    }
    return x;
}

/// Exact determinant by fraction-free (Bareiss) elimination over the integers
/// after clearing row denominators. Zero for singular input.
Rational det(const RationalMatrix& m);

/// Floating determinant via partially pivoted elimination.
double det(const Matrix<double>& m);

/// Schur complement A - B C^{-1} B^T of [[A,B],[B^T,C]].
template <typename T>
Matrix<T> schur_complement(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c) {
    if (a.rows() != a.cols()) fail(Err::ShapeMismatch, "schur: A not square");
    if (c.rows() != c.cols()) fail(Err::ShapeMismatch, "schur: C not square");
    if (b.rows() != a.rows() || b.cols() != c.rows()) fail(Err::ShapeMismatch, "schur: B shape");
    if (c.rows() == 0) return a;
    return a - b * invert(c) * b.transpose();
}

}  // namespace disknet

#endif
