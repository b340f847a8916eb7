#include "f4osc/oscillator.hpp"

#include <algorithm>
#include <functional>

#include "f4osc/errors.hpp"

namespace f4osc {

namespace {

int ibarToI(int ibar) { return ibar == 0 ? 8 : ibar; }

ExactMatrix block8(const ExactMatrix& m, int r0, int c0) {
    ExactMatrix out(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) out.at(i, j) = m.at(r0 + i, c0 + j);
    return out;
}

ExactMatrix diag16(const std::array<Rational, 16>& v) {
    ExactMatrix m(16, 16);
    for (int k = 0; k < 16; ++k) m.at(k, k) = ParamPoly(v[k]);
    return m;
}

}  // namespace

OperatorMatrix buildHamiltonian(int eps, const std::array<Rational, 16>& v) {
    OperatorMatrix h = OperatorMatrix::term(
        XD{0, 2}, ExactMatrix::identity(16).scaled(ParamPoly(Rational(-1, 2))));
    if (eps != 0)
        h += OperatorMatrix::term(
            XD{2, 0}, ExactMatrix::identity(16).scaled(ParamPoly(Rational(eps, 2))));
    h += OperatorMatrix::term(XD{-2, 0}, diag16(v));
    return h;
}

LadderSet buildLadder(const CriticalSolution& s) {
    LadderSet l;
    const ParamPoly iU(Gauss::i());
    for (int ib = 0; ib < 8; ++ib) {
        const int I = ibarToI(ib);
        l.a[ib] = s.set.Q[I - 1] - s.set.Qt[I - 1].scaled(iU);
        l.adag[ib] = s.set.Q[I - 1] + s.set.Qt[I - 1].scaled(iU);
        l.Ecrit[ib] = s.set.E[I - 1];
    }
    l.Heps1 = buildHamiltonian(1, s.V);

    const OperatorMatrix id16 = OperatorMatrix::identity(16);
    for (int ib = 0; ib < 8; ++ib) {
        // (1/2){a, adag} = H_eps1 in the conventional normalization
        if (!(pairBracket(l.a[ib], l.adag[ib]).scaled(ParamPoly(Rational(1, 2))) == l.Heps1))
            throw FaultError("(1/2){a,adag} != H_eps1");

        // Y = -[E, Gamma_Ibar Gamma_9], constant traceless diagonal
        const ExactMatrix gg = l.a[ib].coefficient(XD{0, 1});
        ExactMatrix y = (gg * l.Ecrit[ib] - l.Ecrit[ib] * gg);
        l.Y[ib] = y;
        if (!y.isDiagonal() || !y.trace().isZero())
            throw FaultError("Y is not traceless diagonal");
        for (int k = 0; k < 16; ++k) {
            Rational expect;
            if (k == 0) expect = Rational(-7, 3);
            else if (k < 8) expect = Rational(1, 3);
            else expect = Rational(-1, 3) + (k - 8 == ib ? Rational(8, 3) : Rational(0));
            if (!(y.at(k, k) == ParamPoly(expect)))
                throw FaultError("Y diagonal does not match the expected pattern");
        }

        // [a, adag] = I + Y (conventional normalization halves the stored bracket)
        const OperatorMatrix comm =
            OperatorMatrix::commutator(l.a[ib], l.adag[ib]).scaled(ParamPoly(Rational(1, 2)));
        if (!(comm == id16 + OperatorMatrix::constant(y)))
            throw FaultError("[a,adag] != I + Y");

        const OperatorMatrix yop = OperatorMatrix::constant(y);
        if (!OperatorMatrix::anticommutator(l.a[ib], yop).isZero() ||
            !OperatorMatrix::anticommutator(l.adag[ib], yop).isZero())
            throw FaultError("{a,Y} or {adag,Y} != 0");

        if (!(OperatorMatrix::commutator(l.Heps1, l.adag[ib]) == l.adag[ib]))
            throw FaultError("[H, adag] != adag");
        if (!(OperatorMatrix::commutator(l.Heps1, l.a[ib]) == l.a[ib].scaled(ParamPoly(-1))))
            throw FaultError("[H, a] != -a");
    }

    // soft supersymmetry: {adag_I, adag_J} = 2 delta_IJ Z, [Z, adag] = 0
    l.Z = pairBracket(l.adag[0], l.adag[0]).scaled(ParamPoly(Rational(1, 2)));
    for (int ib = 0; ib < 8; ++ib) {
        if (!(pairBracket(l.adag[ib], l.adag[ib]).scaled(ParamPoly(Rational(1, 2))) == l.Z))
            throw FaultError("Z depends on Ibar");
        for (int jb = 0; jb < ib; ++jb)
            if (!pairBracket(l.adag[ib], l.adag[jb]).isZero())
                throw FaultError("{adag_I, adag_J} != 0 for I != J");
        if (!OperatorMatrix::commutator(l.Z, l.adag[ib]).isZero())
            throw FaultError("[Z, adag] != 0");
    }
    return l;
}

LowestWeights solveLowestWeights(const LadderSet& l) {
    LowestWeights lw;
    for (int ib = 0; ib < 8; ++ib) {
        const ExactMatrix gg = l.a[ib].coefficient(XD{0, 1});
        const ExactMatrix& e = l.Ecrit[ib];
        for (int k = 0; k < 16; ++k) {
            // (beta GG + E) e_k = 0 with GG a signed permutation column
            int p = -1;
            for (int r = 0; r < 16; ++r)
                if (!gg.at(r, k).isZero()) {
                    if (p >= 0) throw FaultError("kinetic column is not single-entry");
                    p = r;
                }
            if (p < 0) throw FaultError("kinetic column vanishes");
            for (int r = 0; r < 16; ++r)
                if (r != p && !e.at(r, k).isZero())
                    throw FaultError("no single-power lowest weight at this slot");
            const Gauss beta =
                -(e.at(p, k).constantValue() / gg.at(p, k).constantValue());
            if (!beta.isReal()) throw FaultError("lowest-weight exponent is not real");
            lw.beta[ib][k] = beta.re();
            lw.state[ib][k] = WaveVector::basisTerm(16, k, beta.re());
            if (!l.a[ib].apply(lw.state[ib][k]).isZero())
                throw FaultError("candidate lowest weight is not annihilated");

            // energy, route 1: 1/2 + 1/2 <Y>
            const Rational e1 =
                Rational(1, 2) +
                Rational(1, 2) * l.Y[ib].at(k, k).constantValue().re();
            // route 2: direct eigen-application of H_eps1
            if (!(l.Heps1.apply(lw.state[ib][k]) == lw.state[ib][k].scaled(Gauss(e1))))
                throw FaultError("energy routes disagree");
            lw.energy[ib][k] = e1;
        }
    }
    return lw;
}

int distinctLowestWeightCount(const LowestWeights& lw) {
    std::vector<std::pair<int, Rational>> seen;
    for (int ib = 0; ib < 8; ++ib)
        for (int k = 0; k < 16; ++k) {
            const std::pair<int, Rational> key{k, lw.beta[ib][k]};
            if (std::find(seen.begin(), seen.end(), key) == seen.end()) seen.push_back(key);
        }
    return static_cast<int>(seen.size());
}

int gammaSign(const Rational& z) {
    if (z.sign() <= 0 && z.isInteger())
        throw GammaPoleError("Gamma pole at " + z.str());
    Rational arg = z;
    int sign = 1;
    while (arg.sign() <= 0) {  // Gamma(z) = Gamma(z+1)/z
        sign *= arg.sign();
        arg += Rational(1);
    }
    return sign;  // Gamma is positive on (0, inf)
}

NormVerdict normVerdict(const WaveVector& psi) {
    NormVerdict out;
    out.squareIntegrable = true;
    for (int k = 0; k < psi.dim(); ++k) {
        const auto& comp = psi.component(k);
        if (comp.empty()) continue;
        const Rational betaMin = comp.begin()->first;
        if (!(Rational(2) * betaMin > Rational(-1))) out.squareIntegrable = false;
    }
    if (psi.isZero() || out.squareIntegrable) {
        // a nonzero L^2 function has positive norm; no regularization needed
        out.sign = NormSign::positive;
        return out;
    }

    // regularize: each integral of x^(b_i+b_j) e^{-x^2} is (1/2)Gamma(a),
    // a = (b_i+b_j+1)/2; reduce every Gamma to the strip (0,1] and add the
    // exact rational weights per reduced argument
    std::map<Rational, Rational> groups;
    for (int k = 0; k < psi.dim(); ++k) {
        const auto& comp = psi.component(k);
        for (auto it = comp.begin(); it != comp.end(); ++it)
            for (auto jt = it; jt != comp.end(); ++jt) {
                Rational w = (it->second * jt->second.conj()).re();
                if (it != jt) w *= Rational(2);
                if (w.isZero()) continue;
                Rational arg = (it->first + jt->first + Rational(1)) * Rational(1, 2);
                if (arg.sign() <= 0 && arg.isInteger())
                    throw GammaPoleError("norm regularization hits a Gamma pole");
                Rational factor(1);
                while (arg.sign() <= 0) {  // Gamma(a) = Gamma(a+1)/a
                    factor /= arg;
                    arg += Rational(1);
                }
                while (arg > Rational(1)) {  // Gamma(a) = (a-1)Gamma(a-1)
                    arg -= Rational(1);
                    factor *= arg;
                }
                groups[arg] += w * factor;
            }
    }
    bool anyPos = false, anyNeg = false;
    for (const auto& [arg, w] : groups) {
        if (w.sign() > 0) anyPos = true;
        if (w.sign() < 0) anyNeg = true;
    }
    if (anyPos && anyNeg)
        throw FaultError("regularized norm sign is indeterminate (mixed Gamma groups)");
    out.sign = anyNeg ? NormSign::negative : NormSign::divergentPositive;
    return out;
}

HilbertBasis buildHilbertBasis(const LadderSet& l, const OctonionTensors& t) {
    HilbertBasis hb;
    std::array<WaveVector, 8> b{WaveVector(16), WaveVector(16), WaveVector(16), WaveVector(16),
                                WaveVector(16), WaveVector(16), WaveVector(16), WaveVector(16)};
    for (int i = 1; i <= 7; ++i) {
        b[i] = WaveVector::basisTerm(16, i, Rational(1, 6));
        hb.w[i - 1] = b[i];
        hb.energy[i - 1] = Rational(2, 3);
        hb.label[i - 1] = "b" + std::to_string(i);
    }

    // f_0 = -adag_i b_i must not depend on i
    WaveVector f0 = l.adag[1].apply(b[1]).scaled(Gauss(-1));
    for (int i = 2; i <= 7; ++i)
        if (!(l.adag[i].apply(b[i]).scaled(Gauss(-1)) == f0))
            throw FaultError("f_0 = -adag_i b_i depends on i");
    hb.w[7] = f0;
    hb.energy[7] = Rational(5, 3);
    hb.label[7] = "f0";

    std::array<WaveVector, 8> f{WaveVector(16), WaveVector(16), WaveVector(16), WaveVector(16),
                                WaveVector(16), WaveVector(16), WaveVector(16), WaveVector(16)};
    for (int i = 1; i <= 7; ++i) {
        f[i] = l.adag[0].apply(b[i]);
        hb.w[7 + i] = f[i];
        hb.energy[7 + i] = Rational(5, 3);
        hb.label[7 + i] = "f" + std::to_string(i);
    }

    // covariant relation adag_i b_j = C_ijk f_k for i != j
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) {
            if (i == j) continue;
            WaveVector rhs(16);
            for (int k = 1; k <= 7; ++k) {
                const int c3 = t.C3(i, j, k);
                if (c3 != 0) rhs += f[k].scaled(Gauss(Rational(c3)));
            }
            if (!(l.adag[i].apply(b[j]) == rhs))
                throw FaultError("covariant relation adag_i b_j = C_ijk f_k fails");
        }

    hb.w[15] = l.adag[0].apply(f0);
    hb.energy[15] = Rational(8, 3);
    hb.label[15] = "g0";

    for (int r = 0; r < 16; ++r) {
        if (!(l.Heps1.apply(hb.w[r]) == hb.w[r].scaled(Gauss(hb.energy[r]))))
            throw FaultError("Hilbert-basis state is not an H eigenvector");
        const NormVerdict nv = normVerdict(hb.w[r]);
        if (!nv.squareIntegrable || nv.sign != NormSign::positive)
            throw FaultError("Hilbert-basis state fails the norm verdict");
    }
    return hb;
}

Intertwiners buildIntertwiners(const CriticalSolution& s, const LadderSet& l,
                               const GammaBig& g) {
    Intertwiners out;
    const ExactMatrix vmat = diag16(s.V);
    const ExactMatrix& e8 = s.set.E[7];
    const ExactMatrix eps8 = block8(e8, 0, 8), eta8 = block8(e8, 8, 0);

    for (int i = 1; i <= 7; ++i) {
        const ExactMatrix gi = block8(g.Gamma(i), 0, 8);  // upper-right block of Gamma_i
        const ExactMatrix ei = s.set.E[i - 1];
        const ExactMatrix epsi = block8(ei, 0, 8), etai = block8(ei, 8, 0);
        // U = diag(P, P gamma_i) reduces the conjugation conditions to
        // P M P^T = eps_8 and P M' P^T = eta_8
        const ExactMatrix m1 = (epsi * gi).scaled(ParamPoly(-1));
        const ExactMatrix m2 = gi * etai;

        // integerize all four matrices with one common denominator so the
        // search compares machine integers
        Rational lcm(1);
        for (const ExactMatrix* m : {&eps8, &eta8, &m1, &m2})
            for (int r = 0; r < 8; ++r)
                for (int c = 0; c < 8; ++c) {
                    const Gauss z = m->at(r, c).constantValue();
                    if (!z.isReal()) throw FaultError("intertwiner data is not real");
                    mpz_class l;
                    mpz_lcm(l.get_mpz_t(), lcm.num().get_mpz_t(), z.re().den().get_mpz_t());
                    lcm = Rational(l);
                }
        long tEps[8][8], tEta[8][8], tM1[8][8], tM2[8][8];
        auto fill = [&](const ExactMatrix& m, long (&out)[8][8]) {
            for (int r = 0; r < 8; ++r)
                for (int c = 0; c < 8; ++c)
                    out[r][c] = static_cast<long>(
                        Rational(lcm * m.at(r, c).constantValue().re()).num().get_si());
        };
        fill(eps8, tEps);
        fill(eta8, tEta);
        fill(m1, tM1);
        fill(m2, tM2);

        std::array<int, 8> row{}, sign{};
        std::array<bool, 8> used{};
        std::vector<std::pair<std::array<int, 8>, std::array<int, 8>>> solutions;

        std::function<void(int)> dfs = [&](int j) {
            if (j == 8) {
                solutions.emplace_back(row, sign);
                return;
            }
            const int rHi = j == 0 ? 1 : 8;  // column 0 must fix slot 1 ([U,V]=0)
            for (int r = 0; r < rHi; ++r) {
                if (used[r]) continue;
                for (int sgn = 1; sgn >= -1; sgn -= 2) {
                    bool ok = true;
                    for (int k = 0; k <= j && ok; ++k) {
                        const int rk = k == j ? r : row[k];
                        const long ss = k == j ? 1 : sign[k] * sgn;
                        ok = tEps[rk][r] == ss * tM1[k][j] && tEps[r][rk] == ss * tM1[j][k] &&
                             tEta[rk][r] == ss * tM2[k][j] && tEta[r][rk] == ss * tM2[j][k];
                    }
                    if (!ok) continue;
                    row[j] = r;
                    sign[j] = sgn;
                    used[r] = true;
                    dfs(j + 1);
                    used[r] = false;
                }
            }
        };
        dfs(0);

        if (solutions.empty()) throw FaultError("intertwiner search failed for i=" + std::to_string(i));
        out.count[i - 1] = static_cast<int>(solutions.size());

        // canonical representative: maximal trace, then lexicographic
        auto traceOf = [](const std::pair<std::array<int, 8>, std::array<int, 8>>& sol) {
            int tr = 0;
            for (int j = 0; j < 8; ++j)
                if (sol.first[j] == j) tr += sol.second[j];
            return tr;
        };
        std::sort(solutions.begin(), solutions.end(),
                  [&](const auto& x, const auto& y) {
                      const int tx = traceOf(x), ty = traceOf(y);
                      if (tx != ty) return tx > ty;
                      return x < y;
                  });
        ExactMatrix p(8, 8);
        for (int j = 0; j < 8; ++j)
            p.at(solutions.front().first[j], j) = ParamPoly(Rational(solutions.front().second[j]));
        const ExactMatrix sblk = p * gi;
        const ExactMatrix u = blockMatrix(p, ExactMatrix(8, 8), ExactMatrix(8, 8), sblk);
        const ExactMatrix udag = u.dagger();

        // full verification of the search result
        if (!(u * udag == ExactMatrix::identity(16)))
            throw FaultError("intertwiner is not unitary");
        if (!(u * g.Gamma(i) * udag == g.Gamma(8)))
            throw FaultError("U Gamma_i U^+ != Gamma_8");
        if (!(u * ei * udag == e8)) throw FaultError("U E_i U^+ != E_8");
        if (!(u * l.Y[i] * udag == l.Y[0])) throw FaultError("U Y_i U^+ != Y_8");
        if (!(u * vmat == vmat * u)) throw FaultError("[U, V] != 0");
        if (!(conjugateBy(u, udag, l.a[i]) == l.a[0]))
            throw FaultError("U a_i U^+ != a_0");
        out.U[i - 1] = u;
    }
    return out;
}

}  // namespace f4osc
