#ifndef F4OSC_PARAMPOLY_HPP
#define F4OSC_PARAMPOLY_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "f4osc/gauss.hpp"

namespace f4osc {

/// Formal generators of the ansatz parameter ring.
enum class Gen : int { a = 0, b = 1, c = 2, d = 3, e = 4 };

inline constexpr int kNumGens = 5;
inline constexpr const char* kGenNames = "abcde";

/// Monomial exponent tuple over (a,b,c,d,e), graded-lexicographically ordered.
struct Expo {
    std::array<std::uint8_t, kNumGens> e{};

    int total() const {
        int t = 0;
        for (auto x : e) t += x;
        return t;
    }
    friend bool operator==(const Expo&, const Expo&) = default;
    friend bool operator<(const Expo& x, const Expo& y) {
        const int tx = x.total(), ty = y.total();
        if (tx != ty) return tx < ty;
        return x.e < y.e;  // lexicographic within a degree
    }
};

/// Sparse polynomial in (a,b,c,d,e) with Gaussian-rational coefficients.
/// No zero coefficients are stored; total degree is hard-capped.
class ParamPoly {
public:
    static constexpr int kDegreeCap = 8;

    ParamPoly() = default;
    ParamPoly(Gauss z) { if (!z.isZero()) t_.emplace(Expo{}, std::move(z)); }  // NOLINT
    ParamPoly(Rational r) : ParamPoly(Gauss(std::move(r))) {}                  // NOLINT
    ParamPoly(long n) : ParamPoly(Gauss(Rational(n))) {}                       // NOLINT

    static ParamPoly generator(Gen g) {
        ParamPoly p;
        Expo x;
        x.e[static_cast<int>(g)] = 1;
        p.t_.emplace(x, Gauss(1));
        return p;
    }

    bool isZero() const { return t_.empty(); }
    bool isConstant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first == Expo{});
    }
    /// Value of a constant polynomial; throws FaultError otherwise.
    Gauss constantValue() const;

    int degree() const { return t_.empty() ? -1 : t_.rbegin()->first.total(); }

    /// The single generator this polynomial depends on, or -1 if constant;
    /// throws FaultError if more than one generator occurs.
    int soleGenerator() const;

    const std::map<Expo, Gauss>& terms() const { return t_; }

    ParamPoly& operator+=(const ParamPoly& p);
    ParamPoly& operator-=(const ParamPoly& p);
    ParamPoly operator*(const ParamPoly& p) const;
    ParamPoly& operator*=(const ParamPoly& p) { return *this = *this * p; }

    friend ParamPoly operator+(ParamPoly x, const ParamPoly& y) { return x += y; }
    friend ParamPoly operator-(ParamPoly x, const ParamPoly& y) { return x -= y; }
    friend ParamPoly operator-(const ParamPoly& x) { return ParamPoly(Gauss(-1)) * x; }
    friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

    ParamPoly scaled(const Gauss& z) const;

    /// Substitutes rational values for a (possibly partial) set of generators.
    ParamPoly substitute(const std::map<Gen, Rational>& assignment) const;

    /// Evaluates a univariate polynomial at a rational point.
    Gauss evalUnivariate(const Rational& x) const;

    /// Deterministic rendering, graded-lex term order: "(2/3)*c^2 + (-1/2)".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const ParamPoly& p);

private:
    void addTerm(const Expo& x, const Gauss& z);

    std::map<Expo, Gauss> t_;
};

/// All rational roots of a nonzero univariate polynomial, each verified by
/// substitution.  Found by rational-root enumeration on the primitive integer
/// form.  Throws ZeroPolynomialError on the zero polynomial and FaultError if
/// the input is not univariate.
std::vector<Rational> rationalRoots(const ParamPoly& p);

}  // namespace f4osc

#endif
