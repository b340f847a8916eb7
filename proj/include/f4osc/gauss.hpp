#ifndef F4OSC_GAUSS_HPP
#define F4OSC_GAUSS_HPP

#include <iosfwd>
#include <string>

#include "f4osc/rational.hpp"

namespace f4osc {

/// Gaussian rational a + b*i with exact rational a, b.
class Gauss {
public:
    Gauss() = default;
    Gauss(long n) : re_(n) {}  // NOLINT: implicit on purpose
    Gauss(Rational re) : re_(std::move(re)) {}  // NOLINT
    Gauss(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Gauss i() { return Gauss(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool isZero() const { return re_.isZero() && im_.isZero(); }
    bool isReal() const { return im_.isZero(); }

    Gauss conj() const { return Gauss(re_, -im_); }

    /// |z|^2 = re^2 + im^2, an exact non-negative rational.
    Rational normSquared() const { return re_ * re_ + im_ * im_; }

    Gauss& operator+=(const Gauss& z) { re_ += z.re_; im_ += z.im_; return *this; }
    Gauss& operator-=(const Gauss& z) { re_ -= z.re_; im_ -= z.im_; return *this; }
    Gauss& operator*=(const Gauss& z) {
        if (im_.isZero() && z.im_.isZero()) {  // common fast path
            re_ *= z.re_;
            return *this;
        }
        Rational r = re_ * z.re_ - im_ * z.im_;
        Rational i = re_ * z.im_ + im_ * z.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    Gauss& operator/=(const Gauss& z) {
        Rational n = z.normSquared();
        if (n.isZero()) throw DivisionByZeroError("gaussian rational division by zero");
        *this *= z.conj();
        re_ /= n;
        im_ /= n;
        return *this;
    }

    friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
    friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
    friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
    friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
    friend Gauss operator-(const Gauss& a) { return Gauss(-a.re_, -a.im_); }

    friend bool operator==(const Gauss& a, const Gauss& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }

    /// "p/q", "r/s*i", or "p/q+r/s*i" (sign folded into the numerator).
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Gauss& z);

private:
    Rational re_, im_;
};

}  // namespace f4osc

#endif
