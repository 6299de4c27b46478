#ifndef DISKNET_RATIONAL_HPP
#define DISKNET_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace disknet {

/// Arbitrary-precision rational, always canonical: gcd(|num|,den)=1, den>0.
/// Thin value wrapper over GMP's mpq_class so the rest of the library never
/// touches gmp directly.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) : q_(n, d) { q_.canonicalize(); }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses "p/q" or "p". Throws std::invalid_argument on malformed input
    /// or zero denominator.
    static Rational parse(const std::string& s);

    static Rational from_double(double x) { return Rational(mpq_class(x)); }

    const mpq_class& raw() const { return q_; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_positive() const { return sgn(q_) > 0; }
    bool is_negative() const { return sgn(q_) < 0; }
    int sign() const { return sgn(q_); }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    double to_double() const { return q_.get_d(); }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace disknet

#endif
