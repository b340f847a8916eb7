#include "f4osc/susy.hpp"

#include <algorithm>

#include "f4osc/errors.hpp"

namespace f4osc {

const char* branchName(Branch b) { return b == Branch::first ? "first" : "second"; }

AnsatzParams AnsatzParams::formal() {
    return {ParamPoly::generator(Gen::a), ParamPoly::generator(Gen::b),
            ParamPoly::generator(Gen::c), ParamPoly::generator(Gen::d),
            ParamPoly::generator(Gen::e)};
}

AnsatzParams AnsatzParams::onBranch(Branch br, const ParamPoly& c, bool imposeN8) {
    AnsatzParams p;
    p.c = c;
    const ParamPoly half(Rational(1, 2)), third(Rational(1, 3)), six(Rational(6));
    if (br == Branch::first) {
        p.d = third * c;
        p.e = six * c - half;
    } else {
        p.d = -(third * c);
        p.e = six * c + half;
    }
    if (imposeN8) {
        p.a = -(third * c);
        p.b = p.e;
    } else {
        p.a = ParamPoly::generator(Gen::a);
        p.b = ParamPoly::generator(Gen::b);
    }
    return p;
}

std::array<Rational, 5> AnsatzParams::boundValues() const {
    auto val = [](const ParamPoly& p) {
        const Gauss z = p.constantValue();
        if (!z.isReal()) throw FaultError("ansatz parameter is not real");
        return z.re();
    };
    return {val(a), val(b), val(c), val(d), val(e)};
}

ExactMatrix buildE(int I, const AnsatzParams& p, const OctonionTensors& t, const GammaBig& g) {
    ExactMatrix out(16, 16);
    if (I == 8) {
        ExactMatrix cggg(16, 16);
        for (int i = 1; i <= 7; ++i)
            for (int j = 1; j <= 7; ++j) {
                if (i == j) continue;
                const ExactMatrix gij = g.Gamma(i) * g.Gamma(j);
                for (int k = 1; k <= 7; ++k) {
                    const int c3 = t.C3(i, j, k);
                    if (c3 == 0) continue;
                    cggg += (gij * g.Gamma(k)).scaled(ParamPoly(Rational(c3)));
                }
            }
        out += (cggg * g.Gamma(9)).scaled(p.a);
        out += g.Gamma(8).scaled(p.b);
        return out;
    }

    ExactMatrix cgg(16, 16), cggg(16, 16);
    for (int j = 1; j <= 7; ++j)
        for (int k = 1; k <= 7; ++k) {
            const int c3 = t.C3(I, j, k);
            if (c3 != 0) cgg += (g.Gamma(j) * g.Gamma(k)).scaled(ParamPoly(Rational(c3)));
            const ExactMatrix gjk = g.Gamma(j) * g.Gamma(k);
            for (int l = 1; l <= 7; ++l) {
                const int c4 = t.C4(I, j, k, l);
                if (c4 == 0) continue;
                cggg += (gjk * g.Gamma(l)).scaled(ParamPoly(Rational(c4)));
            }
        }
    out += (cgg * g.Gamma(8) * g.Gamma(9)).scaled(p.c);
    out += (cggg * g.Gamma(9)).scaled(p.d);
    out += g.Gamma(I).scaled(p.e);
    return out;
}

std::array<OperatorMatrix, 8> buildSupercharges(const AnsatzParams& p, const OctonionTensors& t,
                                                const GammaBig& g) {
    std::array<OperatorMatrix, 8> q;
    for (int I = 1; I <= 8; ++I) {
        OperatorMatrix op = OperatorMatrix::term(XD{0, 1}, g.Gamma(I) * g.Gamma(9));
        op += OperatorMatrix::term(XD{-1, 0}, buildE(I, p, t, g));
        q[I - 1] = std::move(op);
    }
    return q;
}

OperatorMatrix pairBracket(const OperatorMatrix& a, const OperatorMatrix& b) {
    return OperatorMatrix::gradedBracket(a, b).scaled(ParamPoly(Rational(1, 2)));
}

std::vector<ParamPoly> closureConstraints(const std::array<OperatorMatrix, 8>& q) {
    std::vector<ParamPoly> out;
    auto collect = [&out](const OperatorMatrix& op) {
        for (const auto& [mono, m] : op.terms())
            for (int i = 0; i < m.rows(); ++i)
                for (int j = 0; j < m.cols(); ++j) {
                    ParamPoly p = m.at(i, j);
                    if (p.isZero()) continue;
                    // canonical sign: leading coefficient real part (then
                    // imaginary part) non-negative, so +/- duplicates merge
                    const Gauss& lead = p.terms().rbegin()->second;
                    if (lead.re().sign() < 0 || (lead.re().isZero() && lead.im().sign() < 0))
                        p = -p;
                    if (std::find(out.begin(), out.end(), p) == out.end())
                        out.push_back(std::move(p));
                }
    };
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            collect(OperatorMatrix::anticommutator(q[i], q[j]));
    const OperatorMatrix h0 = OperatorMatrix::anticommutator(q[0], q[0]);
    for (int i = 1; i < 7; ++i)
        collect(OperatorMatrix::anticommutator(q[i], q[i]) - h0);
    return out;
}

std::array<ParamPoly, 16> potentialFromBranch(Branch br, const ParamPoly& c,
                                              const OctonionTensors& t, const GammaBig& g) {
    const AnsatzParams p = AnsatzParams::onBranch(br, c, false);
    const auto q = buildSupercharges(p, t, g);

    // conventional normalization: {Q_i,Q_i} = 2H, H = -1/2 d^2 I + V/x^2
    const OperatorMatrix h2 = pairBracket(q[0], q[0]);  // = 2H
    for (int i = 1; i < 7; ++i)
        if (!(pairBracket(q[i], q[i]) == h2))
            throw FaultError("branch potential: Hamiltonian depends on i");

    for (const auto& [mono, m] : h2.terms())
        if (!(mono == XD{0, 2}) && !(mono == XD{-2, 0}))
            throw FaultError("anticommutator is not of the form -d^2 I + 2V/x^2");
    if (!(h2.coefficient(XD{0, 2}) == ExactMatrix::identity(16).scaled(ParamPoly(-1))))
        throw FaultError("anticommutator kinetic part is not -d^2 I");
    const ExactMatrix v2 = h2.coefficient(XD{-2, 0});
    if (!v2.isDiagonal()) throw FaultError("branch potential is not diagonal");

    std::array<ParamPoly, 16> v;
    for (int k = 0; k < 16; ++k) v[k] = v2.at(k, k) * ParamPoly(Rational(1, 2));
    return v;
}

std::array<ParamPoly, 16> branchPotentialClosedForm(Branch br, const ParamPoly& c) {
    const ParamPoly c2 = c * c;
    const ParamPoly low = ParamPoly(32) * c2 - ParamPoly(Rational(1, 8));
    const ParamPoly plus = ParamPoly(32) * c2 + ParamPoly(8) * c + ParamPoly(Rational(3, 8));
    const ParamPoly minus = ParamPoly(32) * c2 - ParamPoly(8) * c + ParamPoly(Rational(3, 8));
    std::array<ParamPoly, 16> v;
    if (br == Branch::first) {
        for (int k = 0; k < 8; ++k) v[k] = low;
        v[8] = plus;
        for (int k = 9; k < 16; ++k) v[k] = minus;
    } else {
        v[0] = minus;
        for (int k = 1; k < 8; ++k) v[k] = plus;
        for (int k = 8; k < 16; ++k) v[k] = low;
    }
    return v;
}

}  // namespace f4osc
