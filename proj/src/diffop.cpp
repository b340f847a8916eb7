#include "f4osc/diffop.hpp"

#include <algorithm>
#include <ostream>

#include "f4osc/errors.hpp"

namespace f4osc {

namespace {

// falling factorial m(m-1)...(m-j+1) as an exact rational (m may be negative)
Rational fallingFactorial(long m, unsigned j) {
    Rational r(1);
    for (unsigned t = 0; t < j; ++t) r *= Rational(m - static_cast<long>(t));
    return r;
}

Rational binomial(unsigned n, unsigned k) {
    Rational r(1);
    for (unsigned t = 1; t <= k; ++t) r *= Rational(static_cast<long>(n - k + t), static_cast<long>(t));
    return r;
}

}  // namespace

OperatorMatrix OperatorMatrix::constant(ExactMatrix m) {
    OperatorMatrix op(m.rows());
    if (!m.isZero()) op.t_.emplace(XD{0, 0}, std::move(m));
    return op;
}

OperatorMatrix OperatorMatrix::term(XD mono, ExactMatrix m) {
    OperatorMatrix op(m.rows());
    if (!m.isZero()) op.t_.emplace(mono, std::move(m));
    return op;
}

OperatorMatrix OperatorMatrix::xPower(int dim, long power) {
    return term(XD{power, 0}, ExactMatrix::identity(dim));
}

OperatorMatrix OperatorMatrix::ddx(int dim) {
    return term(XD{0, 1}, ExactMatrix::identity(dim));
}

ExactMatrix OperatorMatrix::coefficient(XD mono) const {
    auto it = t_.find(mono);
    return it == t_.end() ? ExactMatrix(dim_, dim_) : it->second;
}

bool OperatorMatrix::isConstantMatrix() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == XD{0, 0});
}

void OperatorMatrix::addTerm(XD mono, const ExactMatrix& m) {
    if (m.isZero()) return;
    auto [it, inserted] = t_.emplace(mono, m);
    if (!inserted) {
        it->second += m;
        if (it->second.isZero()) t_.erase(it);
    }
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& o) {
    if (dim_ != o.dim_) throw FaultError("operator dimension mismatch");
    for (const auto& [mono, m] : o.t_) addTerm(mono, m);
    return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& o) {
    if (dim_ != o.dim_) throw FaultError("operator dimension mismatch");
    for (const auto& [mono, m] : o.t_) addTerm(mono, m.scaled(ParamPoly(-1)));
    return *this;
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& o) const {
    if (dim_ != o.dim_) throw FaultError("operator dimension mismatch");
    OperatorMatrix out(dim_);
    for (const auto& [t1, m1] : t_) {
        for (const auto& [t2, m2] : o.t_) {
            const ExactMatrix prod = m1 * m2;
            if (prod.isZero()) continue;
            // d^k1 x^m2 = sum_j C(k1,j) m2^(j)_falling x^(m2-j) d^(k1-j)
            for (unsigned j = 0; j <= t1.d; ++j) {
                const Rational coef = binomial(t1.d, j) * fallingFactorial(t2.x, j);
                if (coef.isZero()) continue;
                const XD mono{t1.x + t2.x - static_cast<long>(j), t1.d + t2.d - j};
                if (coef == Rational(1)) out.addTerm(mono, prod);
                else out.addTerm(mono, prod.scaled(ParamPoly(coef)));
            }
        }
    }
    return out;
}

OperatorMatrix OperatorMatrix::scaled(const ParamPoly& s) const {
    OperatorMatrix out(dim_);
    if (s.isZero()) return out;
    for (const auto& [mono, m] : t_) out.t_.emplace(mono, m.scaled(s));
    return out;
}

Grading OperatorMatrix::grading() const {
    if (dim_ != 16) return Grading::even;
    bool anyDiag = false, anyAnti = false;
    for (const auto& [mono, m] : t_) {
        for (int i = 0; i < 16; ++i)
            for (int j = 0; j < 16; ++j) {
                if (m.at(i, j).isZero()) continue;
                ((i < 8) == (j < 8) ? anyDiag : anyAnti) = true;
            }
    }
    if (anyDiag && anyAnti) return Grading::indefinite;
    return anyAnti ? Grading::odd : Grading::even;
}

OperatorMatrix OperatorMatrix::gradedBracket(const OperatorMatrix& a, const OperatorMatrix& b) {
    const Grading ga = a.grading(), gb = b.grading();
    if (ga == Grading::indefinite || gb == Grading::indefinite)
        throw FaultError("graded bracket of an operator without definite grading");
    if (ga == Grading::odd && gb == Grading::odd) return anticommutator(a, b);
    return commutator(a, b);
}

OperatorMatrix OperatorMatrix::commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
    return a * b - b * a;
}

OperatorMatrix OperatorMatrix::anticommutator(const OperatorMatrix& a, const OperatorMatrix& b) {
    return a * b + b * a;
}

OperatorMatrix OperatorMatrix::adjoint() const {
    OperatorMatrix out(dim_);
    for (const auto& [mono, m] : t_) {
        const ExactMatrix md = m.dagger();
        // (x^m d^k)^+ = (-d)^k x^m, then reorder to normal form
        for (unsigned j = 0; j <= mono.d; ++j) {
            Rational coef = binomial(mono.d, j) * fallingFactorial(mono.x, j);
            if (mono.d % 2 == 1) coef = -coef;
            if (coef.isZero()) continue;
            out.addTerm(XD{mono.x - static_cast<long>(j), mono.d - j}, md.scaled(ParamPoly(coef)));
        }
    }
    return out;
}

OperatorMatrix OperatorMatrix::substitute(const std::map<Gen, Rational>& assignment) const {
    OperatorMatrix out(dim_);
    for (const auto& [mono, m] : t_) out.addTerm(mono, m.substitute(assignment));
    return out;
}

WaveVector OperatorMatrix::apply(const WaveVector& psi) const {
    if (psi.dim() != dim_) throw FaultError("apply: dimension mismatch");
    WaveVector out(dim_);
    for (const auto& [mono, m] : t_) {
        for (int col = 0; col < dim_; ++col) {
            if (psi.comp_[col].empty()) continue;
            // derivative action on each x^beta e^{-x^2/2} term, then x^m shift
            std::map<Rational, Gauss> terms = psi.comp_[col];
            for (unsigned it = 0; it < mono.d; ++it) {
                std::map<Rational, Gauss> next;
                for (const auto& [beta, cf] : terms) {
                    if (!beta.isZero()) {
                        auto& lo = next[beta - Rational(1)];
                        lo += cf * Gauss(beta);
                        if (lo.isZero()) next.erase(beta - Rational(1));
                    }
                    auto& hi = next[beta + Rational(1)];
                    hi -= cf;
                    if (hi.isZero()) next.erase(beta + Rational(1));
                }
                terms = std::move(next);
            }
            for (int row = 0; row < dim_; ++row) {
                const ParamPoly& p = m.at(row, col);
                if (p.isZero()) continue;
                const Gauss z = p.constantValue();
                for (const auto& [beta, cf] : terms)
                    out.add(row, beta + Rational(mono.x), z * cf);
            }
        }
    }
    out.checkLattice();
    return out;
}

OperatorMatrix OperatorMatrix::entry(int i, int j) const {
    OperatorMatrix out(1);
    for (const auto& [mono, m] : t_) {
        if (m.at(i, j).isZero()) continue;
        ExactMatrix cell(1, 1);
        cell.at(0, 0) = m.at(i, j);
        out.t_.emplace(mono, std::move(cell));
    }
    return out;
}

std::string OperatorMatrix::str() const {
    if (t_.empty()) return "0";
    std::string out;
    for (const auto& [mono, m] : t_) {
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                const ParamPoly& p = m.at(i, j);
                if (p.isZero()) continue;
                if (!out.empty()) out += " + ";
                out += p.isConstant() ? "(" + p.constantValue().str() + ")"
                                      : "(" + p.str() + ")";
                if (mono.x != 0) out += "*x^" + std::to_string(mono.x);
                if (mono.d != 0) out += "*d^" + std::to_string(mono.d);
                if (dim_ > 1)
                    out += "*E[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
            }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const OperatorMatrix& op) { return os << op.str(); }

WaveVector WaveVector::basisTerm(int dim, int component, Rational beta, Gauss coeff) {
    WaveVector w(dim);
    w.add(component, beta, coeff);
    return w;
}

bool WaveVector::isZero() const {
    for (const auto& c : comp_)
        if (!c.empty()) return false;
    return true;
}

void WaveVector::add(int component, const Rational& beta, const Gauss& coeff) {
    if (coeff.isZero()) return;
    auto& slot = comp_[component];
    auto [it, inserted] = slot.emplace(beta, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.isZero()) slot.erase(it);
    }
}

WaveVector& WaveVector::operator+=(const WaveVector& w) {
    if (dim_ != w.dim_) throw FaultError("wave vector dimension mismatch");
    for (int k = 0; k < dim_; ++k)
        for (const auto& [beta, cf] : w.comp_[k]) add(k, beta, cf);
    return *this;
}

WaveVector& WaveVector::operator-=(const WaveVector& w) {
    if (dim_ != w.dim_) throw FaultError("wave vector dimension mismatch");
    for (int k = 0; k < dim_; ++k)
        for (const auto& [beta, cf] : w.comp_[k]) add(k, beta, -cf);
    return *this;
}

WaveVector WaveVector::scaled(const Gauss& z) const {
    WaveVector out(dim_);
    if (z.isZero()) return out;
    for (int k = 0; k < dim_; ++k)
        for (const auto& [beta, cf] : comp_[k]) out.comp_[k].emplace(beta, cf * z);
    return out;
}

bool WaveVector::isProportionalTo(const WaveVector& w) const {
    if (dim_ != w.dim_ || isZero() || w.isZero()) return false;
    Gauss ratio;
    bool haveRatio = false;
    for (int k = 0; k < dim_; ++k) {
        if (comp_[k].size() != w.comp_[k].size()) return false;
        for (const auto& [beta, cf] : w.comp_[k]) {
            auto it = comp_[k].find(beta);
            if (it == comp_[k].end()) return false;
            if (!haveRatio) {
                ratio = it->second / cf;
                haveRatio = true;
            }
        }
    }
    return haveRatio && *this == w.scaled(ratio);
}

void WaveVector::checkLattice() const {
    for (const auto& c : comp_) {
        if (c.empty()) continue;
        const Rational& base = c.begin()->first;
        for (const auto& [beta, cf] : c)
            if (!(beta - base).isInteger())
                throw FaultError("wave vector exponents left the beta0 + Z lattice");
    }
}

std::string WaveVector::str() const {
    if (isZero()) return "0";
    std::string out;
    for (int k = 0; k < dim_; ++k) {
        for (const auto& [beta, cf] : comp_[k]) {
            if (!out.empty()) out += " + ";
            out += "(" + cf.str() + ")*x^(" + beta.str() + ")*e" + std::to_string(k + 1);
        }
    }
    return out + "  [* exp(-x^2/2)]";
}

std::ostream& operator<<(std::ostream& os, const WaveVector& w) { return os << w.str(); }

int waveSpanRank(const std::vector<WaveVector>& states) {
    if (states.empty()) return 0;
    const int dim = states.front().dim();
    std::vector<std::pair<int, Rational>> slots;
    for (const auto& s : states)
        for (int k = 0; k < dim; ++k)
            for (const auto& [beta, cf] : s.component(k)) {
                const std::pair<int, Rational> key{k, beta};
                if (std::find(slots.begin(), slots.end(), key) == slots.end())
                    slots.push_back(key);
            }
    std::sort(slots.begin(), slots.end());
    ExactMatrix m(static_cast<int>(states.size()), static_cast<int>(slots.size()));
    for (std::size_t r = 0; r < states.size(); ++r)
        for (std::size_t c = 0; c < slots.size(); ++c) {
            const auto& comp = states[r].component(slots[c].first);
            auto it = comp.find(slots[c].second);
            if (it != comp.end()) m.at(static_cast<int>(r), static_cast<int>(c)) = ParamPoly(it->second);
        }
    return m.rank();
}

}  // namespace f4osc
