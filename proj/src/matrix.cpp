#include "disknet/matrix.hpp"

#include <cmath>
#include <cstdlib>

namespace disknet {

Rational det(const RationalMatrix& m) {
    if (m.rows() != m.cols()) fail(Err::ShapeMismatch, "det of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rational(1);

    // Clear denominators row by row so Bareiss runs over integers.
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    mpq_class scale(1);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).num() * (l / m(i, j).den());
        scale *= l;
    }

    mpz_class prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { piv = i; break; }
            if (piv == k) return Rational(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    mpq_class d(a[n - 1][n - 1] * sign);
    d /= scale;
    d.canonicalize();
    return Rational(d);
}

double det(const Matrix<double>& m) {
    if (m.rows() != m.cols()) fail(Err::ShapeMismatch, "det of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1.0;
    Matrix<double> a = m;
    double d = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col + 1; i < n; ++i)
            if (std::abs(a(i, col)) > std::abs(a(piv, col))) piv = i;
        if (a(piv, col) == 0.0) return 0.0;
        if (piv != col) {
            a.swap_rows(col, piv);
            d = -d;
        }
        d *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            double f = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return d;
}

}  // namespace disknet
