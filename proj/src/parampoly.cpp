#include "f4osc/parampoly.hpp"

#include <algorithm>
#include <ostream>

#include "f4osc/errors.hpp"

namespace f4osc {

Gauss ParamPoly::constantValue() const {
    if (t_.empty()) return Gauss();
    if (!isConstant()) throw FaultError("constantValue() on non-constant polynomial: " + str());
    return t_.begin()->second;
}

int ParamPoly::soleGenerator() const {
    int gen = -1;
    for (const auto& [x, z] : t_) {
        for (int g = 0; g < kNumGens; ++g) {
            if (x.e[g] == 0) continue;
            if (gen == -1) gen = g;
            else if (gen != g) throw FaultError("polynomial is multivariate: " + str());
        }
    }
    return gen;
}

void ParamPoly::addTerm(const Expo& x, const Gauss& z) {
    if (z.isZero()) return;
    auto [it, inserted] = t_.emplace(x, z);
    if (!inserted) {
        it->second += z;
        if (it->second.isZero()) t_.erase(it);
    }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& p) {
    for (const auto& [x, z] : p.t_) addTerm(x, z);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& p) {
    for (const auto& [x, z] : p.t_) addTerm(x, -z);
    return *this;
}

ParamPoly ParamPoly::operator*(const ParamPoly& p) const {
    ParamPoly out;
    for (const auto& [x1, z1] : t_) {
        for (const auto& [x2, z2] : p.t_) {
            Expo x;
            for (int g = 0; g < kNumGens; ++g)
                x.e[g] = static_cast<std::uint8_t>(x1.e[g] + x2.e[g]);
            if (x.total() > kDegreeCap)
                throw DegreeCapError("parameter polynomial exceeds degree cap");
            out.addTerm(x, z1 * z2);
        }
    }
    return out;
}

ParamPoly ParamPoly::scaled(const Gauss& z) const {
    ParamPoly out;
    if (z.isZero()) return out;
    for (const auto& [x, c] : t_) out.t_.emplace(x, c * z);
    return out;
}

ParamPoly ParamPoly::substitute(const std::map<Gen, Rational>& assignment) const {
    ParamPoly out;
    for (const auto& [x, z] : t_) {
        Gauss coef = z;
        Expo rest;
        for (int g = 0; g < kNumGens; ++g) {
            auto it = assignment.find(static_cast<Gen>(g));
            if (it == assignment.end()) {
                rest.e[g] = x.e[g];
                continue;
            }
            for (int k = 0; k < x.e[g]; ++k) coef *= Gauss(it->second);
        }
        out.addTerm(rest, coef);
    }
    return out;
}

Gauss ParamPoly::evalUnivariate(const Rational& v) const {
    const int g = soleGenerator();
    if (g == -1) return constantValue();
    Gauss out;
    for (const auto& [x, z] : t_) {
        Gauss coef = z;
        for (int k = 0; k < x.e[g]; ++k) coef *= Gauss(v);
        out += coef;
    }
    return out;
}

std::string ParamPoly::str() const {
    if (t_.empty()) return "0";
    std::string out;
    // highest degree first for readability
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + it->second.str() + ")";
        for (int g = 0; g < kNumGens; ++g) {
            if (it->first.e[g] == 0) continue;
            out += "*";
            out += kGenNames[g];
            if (it->first.e[g] > 1) out += "^" + std::to_string(it->first.e[g]);
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.str(); }

namespace {

std::vector<mpz_class> divisors(const mpz_class& n) {
    // trial division; the polynomials this engine produces have small coefficients
    std::vector<mpz_class> out;
    mpz_class a = ::abs(n);
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            out.push_back(a / d);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Integer coefficient vector (degree-ascending) of a univariate rational-coefficient
// polynomial, primitivized.  Empty if identically zero.
std::vector<mpz_class> primitiveIntCoeffs(const std::vector<Rational>& coeffs) {
    mpz_class lcm = 1;
    bool any = false;
    for (const auto& c : coeffs) {
        if (c.isZero()) continue;
        any = true;
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    if (!any) return {};
    std::vector<mpz_class> out;
    out.reserve(coeffs.size());
    mpz_class g = 0;
    for (const auto& c : coeffs) {
        mpz_class v = c.num() * (lcm / c.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        out.push_back(v);
    }
    for (auto& v : out) v /= g;
    return out;
}

}  // namespace

std::vector<Rational> rationalRoots(const ParamPoly& p) {
    if (p.isZero()) throw ZeroPolynomialError("rationalRoots: polynomial is identically zero");
    const int g = p.soleGenerator();
    if (g == -1) return {};  // nonzero constant: no roots

    int deg = 0;
    for (const auto& [x, z] : p.terms()) deg = std::max<int>(deg, x.e[g]);
    std::vector<Rational> re(deg + 1), im(deg + 1);
    for (const auto& [x, z] : p.terms()) {
        re[x.e[g]] += z.re();
        im[x.e[g]] += z.im();
    }

    std::vector<Rational> candidates;
    // zero root: present iff both constant terms vanish
    if (re[0].isZero() && im[0].isZero()) candidates.push_back(Rational(0));
    // enumerate on whichever real/imaginary part is nonzero (a common root must
    // annihilate both, so either one bounds the candidate set)
    auto ic = primitiveIntCoeffs(re);
    if (ic.empty()) ic = primitiveIntCoeffs(im);
    // strip trailing/leading zero coefficients for the p|a0, q|an rule
    std::size_t lo = 0;
    while (lo < ic.size() && ic[lo] == 0) ++lo;
    std::size_t hi = ic.size();
    while (hi > lo && ic[hi - 1] == 0) --hi;
    if (hi > lo + 1) {
        for (const auto& pnum : divisors(ic[lo])) {
            for (const auto& qden : divisors(ic[hi - 1])) {
                candidates.emplace_back(pnum, qden);
                candidates.emplace_back(-pnum, qden);
            }
        }
    }

    std::vector<Rational> roots;
    for (const auto& r : candidates) {
        if (!p.evalUnivariate(r).isZero()) continue;  // verified by substitution
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace f4osc
