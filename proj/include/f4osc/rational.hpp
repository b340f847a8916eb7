#ifndef F4OSC_RATIONAL_HPP
#define F4OSC_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "f4osc/errors.hpp"

namespace f4osc {

/// Exact rational number. Always canonical: lowest terms, denominator > 0.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}  // NOLINT: implicit on purpose
    Rational(long n, long d) { init(mpz_class(n), mpz_class(d)); }
    Rational(const mpz_class& n, const mpz_class& d = 1) { init(n, d); }

    /// Parses "p", "-p/q" etc.; throws on malformed input or q == 0.
    static Rational fromString(const std::string& s);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool isZero() const { return q_ == 0; }
    bool isInteger() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational& operator+=(const Rational& r) { q_ += r.q_; return *this; }
    Rational& operator-=(const Rational& r) { q_ -= r.q_; return *this; }
    Rational& operator*=(const Rational& r) { q_ *= r.q_; return *this; }
    Rational& operator/=(const Rational& r) {
        if (r.isZero()) throw DivisionByZeroError("rational division by zero");
        q_ /= r.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { Rational r; r.q_ = ::abs(q_); return r; }
    Rational inverse() const {
        if (isZero()) throw DivisionByZeroError("inverse of zero");
        Rational r;
        r.q_ = 1 / q_;
        return r;
    }

    /// Largest integer <= value.
    mpz_class floor() const {
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return f;
    }

    double toDouble() const { return q_.get_d(); }

    /// Canonical rendering: "p" for integers, "p/q" otherwise.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    void init(const mpz_class& n, const mpz_class& d) {
        if (d == 0) throw DivisionByZeroError("rational with zero denominator");
        q_ = mpq_class(n, d);
        q_.canonicalize();
    }

    mpq_class q_;
};

}  // namespace f4osc

#endif
