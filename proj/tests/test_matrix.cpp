#include "doctest.h"

#include <random>

#include "disknet/matrix.hpp"
#include "helpers.hpp"

using namespace disknet;
using disknet::testing::mat;

TEST_CASE("invert diagonal and identity") {
    RationalMatrix d = mat(2, 2, {"-3", "0", "0", "-5"});
    RationalMatrix di = invert(d);
    CHECK(di == mat(2, 2, {"-1/3", "0", "0", "-1/5"}));

    RationalMatrix id = RationalMatrix::identity(3);
    CHECK(invert(id) == id);

    RationalMatrix z(2, 2);
    CHECK_THROWS_AS(invert(z), Error);
    try {
        invert(z);
    } catch (const Error& e) {
        CHECK(e.kind() == Err::Singular);
    }
}

TEST_CASE("schur complement on fixed 2x2 blocks") {
    RationalMatrix A = mat(2, 2, {"-5", "1", "1", "-5"});
    RationalMatrix B = mat(2, 2, {"1", "3", "2", "-2"});
    RationalMatrix C = mat(2, 2, {"-3", "0", "0", "-5"});
    RationalMatrix L = schur_complement(A, B, C);
    CHECK(L == mat(2, 2, {"-43/15", "7/15", "7/15", "-43/15"}));

    // network blocks (B all nonnegative) give the zero-row-sum complement
    RationalMatrix Bn = mat(2, 2, {"1", "3", "2", "2"});
    RationalMatrix Ln = schur_complement(A, Bn, C);
    CHECK(Ln == mat(2, 2, {"-43/15", "43/15", "43/15", "-43/15"}));
}

TEST_CASE("schur complement edge cases") {
    RationalMatrix A = mat(2, 2, {"1", "2", "2", "5"});
    RationalMatrix B(2, 2);
    RationalMatrix C = mat(2, 2, {"1", "0", "0", "1"});
    CHECK(schur_complement(A, B, C) == A);

    RationalMatrix a1 = mat(1, 1, {"-2"});
    RationalMatrix b1 = mat(1, 1, {"1"});
    RationalMatrix c1 = mat(1, 1, {"-1"});
    CHECK(schur_complement(a1, b1, c1) == mat(1, 1, {"-1"}));

    CHECK_THROWS_AS(schur_complement(A, mat(1, 2, {"1", "2"}), C), Error);
}

TEST_CASE("det basics") {
    CHECK(det(RationalMatrix::identity(4)) == Rational(1));
    CHECK(det(mat(2, 2, {"-3", "0", "0", "-5"})) == Rational(15));
    CHECK(det(mat(2, 2, {"1", "2", "2", "4"})) == Rational(0));
    CHECK(det(mat(2, 2, {"1/2", "1/3", "1/5", "1/7"})) == Rational(1, 14) - Rational(1, 15));
}

TEST_CASE("solve") {
    RationalMatrix m = mat(1, 1, {"2"});
    auto x = solve(m, {Rational(1)});
    CHECK(x[0] == Rational(1, 2));

    RationalMatrix m2 = mat(2, 2, {"2", "1", "1", "3"});
    auto y = solve(m2, {Rational(5), Rational(10)});
    CHECK(m2(0, 0) * y[0] + m2(0, 1) * y[1] == Rational(5));
    CHECK(m2(1, 0) * y[0] + m2(1, 1) * y[1] == Rational(10));
}

namespace {

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Rational(static_cast<long>(rng() % 19) - 9,
                               static_cast<long>(rng() % 6) + 1);
    return m;
}

}  // namespace

TEST_CASE("exactness properties on random matrices") {
    std::mt19937_64 rng(20240811);
    int inverted = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 4;
        RationalMatrix m = random_matrix(rng, n);
        RationalMatrix p = random_matrix(rng, n);
        CHECK(det(m * p) == det(m) * det(p));
        if (det(m) != Rational(0)) {
            ++inverted;
            CHECK(invert(invert(m)) == m);
            CHECK(m * invert(m) == RationalMatrix::identity(n));
        }
    }
    CHECK(inverted > 10);
}

TEST_CASE("double path mirrors the interface") {
    Matrix<double> m(2, 2);
    m(0, 0) = -3;
    m(1, 1) = -5;
    Matrix<double> mi = invert(m);
    CHECK(mi(0, 0) == doctest::Approx(-1.0 / 3));
    CHECK(det(m) == doctest::Approx(15.0));
}
