#include "f4osc/f4.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <thread>

#include "f4osc/errors.hpp"

namespace f4osc {

namespace {

const ParamPoly kHalf(Rational(1, 2));

Gauss imag(const Rational& r) { return Gauss(Rational(0), r); }

// <B, M> = sum conj(B_rs) M_rs; with tr(B^+ B) = 16 this projects onto B.
ParamPoly traceForm(const ExactMatrix& basis, const ExactMatrix& m) {
    ParamPoly out;
    for (int r = 0; r < basis.rows(); ++r)
        for (int s = 0; s < basis.cols(); ++s) {
            if (basis.at(r, s).isZero() || m.at(r, s).isZero()) continue;
            out += m.at(r, s) * ParamPoly(basis.at(r, s).constantValue().conj());
        }
    return out;
}

ParamPoly canonicalSign(ParamPoly p) {
    if (p.isZero()) return p;
    const Gauss& lead = p.terms().rbegin()->second;
    if (lead.re().sign() < 0 || (lead.re().isZero() && lead.im().sign() < 0)) return -p;
    return p;
}

void collectResiduals(const OperatorMatrix& op, std::vector<ParamPoly>& out) {
    for (const auto& [mono, m] : op.terms())
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) {
                if (m.at(i, j).isZero()) continue;
                ParamPoly p = canonicalSign(m.at(i, j));
                if (std::find(out.begin(), out.end(), p) == out.end())
                    out.push_back(std::move(p));
            }
}

void collectResiduals(const ExactMatrix& m, std::vector<ParamPoly>& out) {
    collectResiduals(OperatorMatrix::constant(m), out);
}

// coefficients alpha_L of [R_IJ, Q_K] (or Qt) on span{Q_L} (span{Qt_L}),
// read off the d-part (x-part) by trace projection; plus the residual.
struct RepDecomposition {
    std::array<ParamPoly, 8> alpha;
    OperatorMatrix residual{16};
};

RepDecomposition repDecompose(const SuperconformalSet& s, const ExactMatrix& rij, int K,
                              bool tilde, const GammaBig& g) {
    const auto& ops = tilde ? s.Qt : s.Q;
    const OperatorMatrix b =
        OperatorMatrix::commutator(OperatorMatrix::constant(rij), ops[K - 1]);
    const ExactMatrix part = b.coefficient(tilde ? XD{1, 0} : XD{0, 1});
    RepDecomposition out;
    out.residual = b;
    for (int L = 1; L <= 8; ++L) {
        ExactMatrix basis = g.Gamma(L) * g.Gamma(9);
        if (tilde) basis = basis.scaled(ParamPoly(Gauss::i()));
        out.alpha[L - 1] = traceForm(basis, part) * ParamPoly(Rational(1, 16));
        if (!out.alpha[L - 1].isZero())
            out.residual -= ops[L - 1].scaled(out.alpha[L - 1]);
    }
    return out;
}

std::optional<Gauss> proportionalityRatio(const OperatorMatrix& a, const OperatorMatrix& b) {
    // a = lambda * b with constant lambda, for bound-coefficient operators
    if (b.isZero()) return a.isZero() ? std::optional<Gauss>(Gauss()) : std::nullopt;
    Gauss lambda;
    bool found = false;
    for (const auto& [mono, m] : b.terms()) {
        for (int i = 0; i < 16 && !found; ++i)
            for (int j = 0; j < 16 && !found; ++j)
                if (!m.at(i, j).isZero()) {
                    lambda = a.coefficient(mono).at(i, j).constantValue() /
                             m.at(i, j).constantValue();
                    found = true;
                }
    }
    if (!found) return std::nullopt;
    if (a == b.scaled(ParamPoly(lambda))) return lambda;
    return std::nullopt;
}

std::string gaussLabel(const Gauss& z) { return z.str(); }

}  // namespace

SuperconformalSet buildSuperconformal(Branch br, const ParamPoly& cval, const OctonionTensors& t,
                                      const GammaBig& g) {
    SuperconformalSet s;
    s.branch = br;
    s.cval = cval;
    s.params = AnsatzParams::onBranch(br, cval, true);
    s.Q = buildSupercharges(s.params, t, g);
    for (int I = 1; I <= 8; ++I) s.E[I - 1] = buildE(I, s.params, t, g);

    for (int I = 1; I <= 8; ++I)
        s.Qt[I - 1] = OperatorMatrix::term(
            XD{1, 0}, (g.Gamma(I) * g.Gamma(9)).scaled(ParamPoly(Gauss::i())));

    // K from {Qt,Qt}; D from {Q,Qt}; H from {Q,Q}
    s.K = OperatorMatrix::term(XD{2, 0}, ExactMatrix::identity(16).scaled(ParamPoly(kHalf)));
    for (int I = 1; I <= 8; ++I)
        for (int J = 1; J <= 8; ++J) {
            const OperatorMatrix br2 = pairBracket(s.Qt[I - 1], s.Qt[J - 1]);
            const OperatorMatrix expect =
                I == J ? s.K + s.K : OperatorMatrix(16);
            if (!(br2 == expect)) throw FaultError("{Qt_I,Qt_J} != 2 delta_IJ K");
        }

    // D = -i(x d + 1/2) I
    s.D = OperatorMatrix::term(XD{1, 1}, ExactMatrix::identity(16).scaled(ParamPoly(imag(Rational(-1)))));
    s.D += OperatorMatrix::constant(ExactMatrix::identity(16).scaled(ParamPoly(imag(Rational(-1, 2)))));
    for (int I = 1; I <= 8; ++I)
        if (!(pairBracket(s.Q[I - 1], s.Qt[I - 1]) == s.D))
            throw FaultError("{Q_I,Qt_I} != D");

    s.H = pairBracket(s.Q[0], s.Q[0]).scaled(ParamPoly(kHalf));
    for (int I = 2; I <= 8; ++I)
        if (!(pairBracket(s.Q[I - 1], s.Q[I - 1]).scaled(ParamPoly(kHalf)) == s.H))
            throw FaultError("Hamiltonian depends on I");

    s.R.assign(8, std::vector<ExactMatrix>(8, ExactMatrix(16, 16)));
    for (int I = 1; I <= 8; ++I)
        for (int J = 1; J <= 8; ++J) {
            if (I == J) continue;
            const OperatorMatrix rb = pairBracket(s.Q[I - 1], s.Qt[J - 1]);
            if (!rb.isConstantMatrix())
                throw FaultError("R_IJ is not a constant matrix");
            const ExactMatrix rm = rb.coefficient(XD{0, 0});
            // closed form (i/2)(-Gamma_I Gamma_J + {E_I, Gamma_J Gamma_9})
            const ExactMatrix gj9 = g.Gamma(J) * g.Gamma(9);
            ExactMatrix formula = s.E[I - 1] * gj9 + gj9 * s.E[I - 1];
            formula -= g.Gamma(I) * g.Gamma(J);
            formula = formula.scaled(ParamPoly(imag(Rational(1, 2))));
            if (!(rm == formula))
                throw FaultError("R_IJ bracket and closed form disagree");
            s.R[I - 1][J - 1] = rm;
        }
    for (int I = 1; I <= 8; ++I)
        for (int J = 1; J <= 8; ++J)
            if (!(s.R[I - 1][J - 1] + s.R[J - 1][I - 1]).isZero())
                throw FaultError("R_IJ is not antisymmetric in (I,J)");
    return s;
}

CriticalSolution findCriticalC(Branch br, const OctonionTensors& t, const GammaBig& g) {
    const SuperconformalSet s =
        buildSuperconformal(br, ParamPoly::generator(Gen::c), t, g);

    std::vector<ParamPoly> residuals;
    // alphas cached per (pair index, K) for reuse by the closure sweep
    std::vector<std::vector<RepDecomposition>> decQ, decQt;
    std::vector<std::pair<int, int>> pairs;
    for (int I = 1; I <= 8; ++I)
        for (int J = I + 1; J <= 8; ++J) pairs.emplace_back(I, J);

    // (ii) representation conditions: [R_IJ, Q_K] in span{Q}, same for Qt
    for (const auto& [I, J] : pairs) {
        std::vector<RepDecomposition> rowQ, rowQt;
        for (int K = 1; K <= 8; ++K) {
            rowQ.push_back(repDecompose(s, s.r(I, J), K, false, g));
            rowQt.push_back(repDecompose(s, s.r(I, J), K, true, g));
            collectResiduals(rowQ.back().residual, residuals);
            collectResiduals(rowQt.back().residual, residuals);
        }
        decQ.push_back(std::move(rowQ));
        decQt.push_back(std::move(rowQt));
    }

    // (i) closure of span{R} under commutation, via the Jacobi decomposition
    // [R_IJ, R_KL] = sum_M alpha_M R_ML + sum_N alphat_N R_KN (+ residuals)
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [I, J] = pairs[p];
        for (int K = 1; K <= 8; ++K)
            for (int L = K + 1; L <= 8; ++L) {
                const auto& alpha = decQ[p][K - 1].alpha;
                const auto& alphaT = decQt[p][L - 1].alpha;
                ExactMatrix x = s.r(I, J) * s.r(K, L) - s.r(K, L) * s.r(I, J);
                for (int M = 1; M <= 8; ++M) {
                    if (M != L && !alpha[M - 1].isZero())
                        x -= s.r(M, L).scaled(alpha[M - 1]);
                    if (M != K && !alphaT[M - 1].isZero())
                        x -= s.r(K, M).scaled(alphaT[M - 1]);
                }
                collectResiduals(x, residuals);
            }
    }

    if (residuals.empty())
        throw FaultError("critical coupling: all residuals identically zero");

    bool first = true;
    std::vector<Rational> common;
    for (const auto& p : residuals) {
        const auto roots = rationalRoots(p);
        if (first) {
            common = roots;
            first = false;
        } else {
            std::vector<Rational> keep;
            for (const auto& r : common)
                if (std::find(roots.begin(), roots.end(), r) != roots.end()) keep.push_back(r);
            common = std::move(keep);
        }
        if (common.empty()) break;
    }
    if (common.size() != 1)
        throw FaultError("critical coupling: common rational root set is not a single value");
    const Rational critical = common.front();
    const Rational expected = br == Branch::first ? Rational(1, 12) : Rational(-1, 12);
    if (critical != expected)
        throw FaultError("critical coupling does not match the branch value");

    CriticalSolution out;
    out.branch = br;
    out.c = critical;
    out.residualCount = residuals.size();
    out.set = buildSuperconformal(br, ParamPoly(critical), t, g);
    out.params = out.set.params.boundValues();
    const auto vpoly = potentialFromBranch(br, ParamPoly(critical), t, g);
    for (int k = 0; k < 16; ++k) {
        const Gauss z = vpoly[k].constantValue();
        if (!z.isReal()) throw FaultError("critical potential is not real");
        out.V[k] = z.re();
    }
    return out;
}

Report verifySevenConstraints(const CriticalSolution& s, const OctonionTensors& t,
                              const GammaBig& g) {
    Report rep;
    bool all = true;
    for (int i = 1; i <= 7; ++i) {
        ExactMatrix c = s.set.r(i, 8).scaled(ParamPoly(2));
        for (int j = 1; j <= 7; ++j)
            for (int k = 1; k <= 7; ++k) {
                if (j == k) continue;
                const int c3 = t.C3(i, j, k);
                if (c3 != 0) c += s.set.r(j, k).scaled(ParamPoly(Rational(c3)));
            }
        if (!c.isZero()) all = false;
    }
    rep.add("seven_constraints_2Ri8_plus_CijkRjk", all);

    std::vector<ExactMatrix> rs;
    for (int I = 1; I <= 8; ++I)
        for (int J = I + 1; J <= 8; ++J) rs.push_back(s.set.r(I, J));
    const int rank = ExactMatrix::spanRank(rs);
    rep.add("rank_R_at_critical_equals_21", rank == 21, "rank=" + std::to_string(rank));

    const SuperconformalSet probe =
        buildSuperconformal(s.branch, ParamPoly(Rational(1)), t, g);
    std::vector<ExactMatrix> rsProbe;
    for (int I = 1; I <= 8; ++I)
        for (int J = I + 1; J <= 8; ++J) rsProbe.push_back(probe.r(I, J));
    const int rankProbe = ExactMatrix::spanRank(rsProbe);
    rep.add("rank_R_noncritical_probe_exceeds_21", rankProbe > 21,
            "rank(c=1)=" + std::to_string(rankProbe));
    return rep;
}

Report verifyStructureRelations(const CriticalSolution& s, const OctonionTensors& t,
                                bool fullSweep) {
    Report rep;
    const auto& S = s.set;
    const Rational third(1, 3);

    // [R_ij, Q_k] = -(i/3)C_ijk Q_8 + (i/3)C_ijkl Q_l + i delta_ik Q_j - i delta_jk Q_i
    auto rhsQ = [&](int i, int j, int k, const std::array<OperatorMatrix, 8>& ops) {
        OperatorMatrix rhs(16);
        if (const int c3 = t.C3(i, j, k); c3 != 0)
            rhs += ops[7].scaled(ParamPoly(imag(-third * Rational(c3))));
        for (int l = 1; l <= 7; ++l)
            if (const int c4 = t.C4(i, j, k, l); c4 != 0)
                rhs += ops[l - 1].scaled(ParamPoly(imag(third * Rational(c4))));
        if (i == k) rhs += ops[j - 1].scaled(ParamPoly(imag(Rational(1))));
        if (j == k) rhs -= ops[i - 1].scaled(ParamPoly(imag(Rational(1))));
        return rhs;
    };
    auto rhsQ8 = [&](int i, int j, const std::array<OperatorMatrix, 8>& ops) {
        OperatorMatrix rhs(16);
        for (int k = 1; k <= 7; ++k)
            if (const int c3 = t.C3(i, j, k); c3 != 0)
                rhs += ops[k - 1].scaled(ParamPoly(imag(third * Rational(c3))));
        return rhs;
    };

    bool rqOk = true, rqtOk = true;
    std::string rqFail, rqtFail;
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j) {
            const OperatorMatrix rop = OperatorMatrix::constant(S.r(i, j));
            for (int k = 1; k <= 8; ++k) {
                const OperatorMatrix lhs = OperatorMatrix::commutator(rop, S.Q[k - 1]);
                const OperatorMatrix rhs =
                    k == 8 ? rhsQ8(i, j, S.Q) : rhsQ(i, j, k, S.Q);
                if (!(lhs == rhs) && rqOk) {
                    rqOk = false;
                    rqFail = "(i,j,k)=(" + std::to_string(i) + "," + std::to_string(j) + "," +
                             std::to_string(k) + ")";
                }
                const OperatorMatrix lhsT = OperatorMatrix::commutator(rop, S.Qt[k - 1]);
                const OperatorMatrix rhsT =
                    k == 8 ? rhsQ8(i, j, S.Qt) : rhsQ(i, j, k, S.Qt);
                if (!(lhsT == rhsT) && rqtOk) {
                    rqtOk = false;
                    rqtFail = "(i,j,k)=(" + std::to_string(i) + "," + std::to_string(j) + "," +
                              std::to_string(k) + ")";
                }
            }
        }
    rep.add("structure_R_Q", rqOk, rqFail);
    rep.add("structure_R_Qt", rqtOk, rqtFail);

    // [R_ij, R_kl], four-line covariant form
    auto rr = [&](int i, int j, int k, int l) {
        ExactMatrix lhs = S.r(i, j) * S.r(k, l) - S.r(k, l) * S.r(i, j);
        ExactMatrix rhs(16, 16);
        auto addR = [&](int p, int q, const Gauss& w) {
            if (p != q && !w.isZero()) rhs += S.r(p, q).scaled(ParamPoly(w));
        };
        const Gauss I1 = imag(Rational(1)), I6 = imag(Rational(-1, 6)), I3 = imag(third);
        if (i == k) addR(j, l, I1);
        if (i == l) addR(j, k, -I1);
        if (j == k) addR(i, l, -I1);
        if (j == l) addR(i, k, I1);
        for (int m = 1; m <= 7; ++m)
            for (int n = 1; n <= 7; ++n) {
                if (m == n) continue;
                if (i == k) addR(m, n, I6 * Gauss(Rational(t.C4(j, l, m, n))));
                if (i == l) addR(m, n, -(I6 * Gauss(Rational(t.C4(j, k, m, n)))));
                if (j == k) addR(m, n, -(I6 * Gauss(Rational(t.C4(i, l, m, n)))));
                if (j == l) addR(m, n, I6 * Gauss(Rational(t.C4(i, k, m, n))));
                addR(m, n, I3 * Gauss(Rational(t.C3(i, j, m) * t.C3(k, l, n))));
            }
        for (int m = 1; m <= 7; ++m) {
            addR(m, l, I3 * Gauss(Rational(t.C4(i, j, k, m))));
            addR(m, k, -(I3 * Gauss(Rational(t.C4(i, j, l, m)))));
            addR(m, j, -(I3 * Gauss(Rational(t.C4(k, l, i, m)))));
            addR(m, i, I3 * Gauss(Rational(t.C4(k, l, j, m))));
        }
        return lhs == rhs;
    };

    bool rrOk = true;
    std::string rrFail;
    long rrChecked = 0;
    if (fullSweep) {
        for (int i = 1; i <= 7 && rrOk; ++i)
            for (int j = i + 1; j <= 7 && rrOk; ++j)
                for (int k = 1; k <= 7 && rrOk; ++k)
                    for (int l = k + 1; l <= 7 && rrOk; ++l) {
                        ++rrChecked;
                        if (!rr(i, j, k, l)) {
                            rrOk = false;
                            rrFail = "(i,j,k,l)=(" + std::to_string(i) + "," + std::to_string(j) +
                                     "," + std::to_string(k) + "," + std::to_string(l) + ")";
                        }
                    }
    } else {
        const int sample[][4] = {{1, 2, 3, 4}, {1, 2, 1, 3}, {2, 5, 6, 7},
                                 {1, 2, 1, 2}, {3, 4, 5, 6}, {1, 7, 2, 6}};
        for (const auto& q : sample) {
            ++rrChecked;
            if (!rr(q[0], q[1], q[2], q[3])) {
                rrOk = false;
                rrFail = "sample tuple failed";
            }
        }
    }
    rep.add(fullSweep ? "structure_R_R_full" : "structure_R_R_sample", rrOk,
            rrOk ? std::to_string(rrChecked) + " tuples" : rrFail);
    return rep;
}

Report verifyJacobi(const CriticalSolution& s, bool fullSweep, int threads) {
    Report rep;
    const auto& S = s.set;

    struct Generator {
        const OperatorMatrix* op;
        bool odd;
        std::string name;
    };
    std::vector<Generator> gens;
    std::vector<OperatorMatrix> rOps;
    gens.push_back({&S.H, false, "H"});
    gens.push_back({&S.D, false, "D"});
    gens.push_back({&S.K, false, "K"});
    for (int I = 1; I <= 8; ++I) gens.push_back({&S.Q[I - 1], true, "Q" + std::to_string(I)});
    for (int I = 1; I <= 8; ++I) gens.push_back({&S.Qt[I - 1], true, "Qt" + std::to_string(I)});
    rOps.reserve(21);
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j)
            rOps.push_back(OperatorMatrix::constant(S.r(i, j)));
    {
        int idx = 0;
        for (int i = 1; i <= 7; ++i)
            for (int j = i + 1; j <= 7; ++j)
                gens.push_back({&rOps[idx++], false,
                                "R" + std::to_string(i) + std::to_string(j)});
    }
    const int n = static_cast<int>(gens.size());  // 40

    // record sl(2) and mixed bracket coefficients (computed facts)
    {
        auto ratio = [&](const OperatorMatrix& a, const OperatorMatrix& b) {
            const auto r = proportionalityRatio(a, b);
            return r ? gaussLabel(*r) : std::string("not proportional");
        };
        std::ostringstream os;
        os << "[H,D]=(" << ratio(OperatorMatrix::commutator(S.H, S.D), S.H) << ")H"
           << " [D,K]=(" << ratio(OperatorMatrix::commutator(S.D, S.K), S.K) << ")K"
           << " [H,K]=(" << ratio(OperatorMatrix::commutator(S.H, S.K), S.D) << ")D"
           << " [D,Q]=(" << ratio(OperatorMatrix::commutator(S.D, S.Q[0]), S.Q[0]) << ")Q"
           << " [K,Q]=(" << ratio(OperatorMatrix::commutator(S.K, S.Q[0]), S.Qt[0]) << ")Qt"
           << " [H,Qt]=(" << ratio(OperatorMatrix::commutator(S.H, S.Qt[0]), S.Q[0]) << ")Q"
           << " [D,Qt]=(" << ratio(OperatorMatrix::commutator(S.D, S.Qt[0]), S.Qt[0]) << ")Qt";
        rep.add("sl2_and_mixed_bracket_coefficients", true, os.str());
    }

    // pairwise graded brackets, shared read-only by the sweep
    std::vector<std::vector<OperatorMatrix>> pair(n, std::vector<OperatorMatrix>(n, OperatorMatrix(16)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            pair[a][b] = OperatorMatrix::gradedBracket(*gens[a].op, *gens[b].op);

    // cyclic representatives cover all ordered triples: the graded Jacobi sum
    // is literally the same expression for the three rotations
    std::vector<std::array<int, 3>> reps;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const std::array<int, 3> t1{x, y, z}, t2{y, z, x}, t3{z, x, y};
                if (t1 <= t2 && t1 <= t3) reps.push_back(t1);
            }
    if (!fullSweep) {
        // deterministic sample: all triples over a small generator subset
        std::vector<std::array<int, 3>> sample;
        const int subset[] = {0, 1, 2, 3, 10, 11, 18, 19, 25};
        for (int x : subset)
            for (int y : subset)
                for (int z : subset) {
                    const std::array<int, 3> t1{x, y, z}, t2{y, z, x}, t3{z, x, y};
                    if (t1 <= t2 && t1 <= t3) sample.push_back(t1);
                }
        reps = std::move(sample);
    }

    if (threads <= 0) {
        if (const char* env = std::getenv("F4OSC_THREADS")) threads = std::atoi(env);
        if (threads <= 0) threads = 1;
    }

    std::vector<std::string> failures(threads);
    std::vector<long> counts(threads, 0);
    auto worker = [&](int tid) {
        for (std::size_t w = tid; w < reps.size(); w += threads) {
            const auto [x, y, z] = reps[w];
            const bool ox = gens[x].odd, oy = gens[y].odd, oz = gens[z].odd;
            OperatorMatrix j1 = OperatorMatrix::gradedBracket(*gens[x].op, pair[y][z]);
            OperatorMatrix j2 = OperatorMatrix::gradedBracket(*gens[y].op, pair[z][x]);
            OperatorMatrix j3 = OperatorMatrix::gradedBracket(*gens[z].op, pair[x][y]);
            if (ox && oz) j1 = j1.scaled(ParamPoly(-1));
            if (oy && ox) j2 = j2.scaled(ParamPoly(-1));
            if (oz && oy) j3 = j3.scaled(ParamPoly(-1));
            if (!(j1 + j2 + j3).isZero()) {
                if (failures[tid].empty())
                    failures[tid] = "(" + gens[x].name + "," + gens[y].name + "," +
                                    gens[z].name + ")";
                continue;
            }
            counts[tid] += 3;  // the triple and its two rotations
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int tid = 0; tid < threads; ++tid) pool.emplace_back(worker, tid);
        for (auto& th : pool) th.join();
    }

    std::string firstFailure;
    long total = 0;
    for (int tid = 0; tid < threads; ++tid) {
        total += counts[tid];
        if (firstFailure.empty()) firstFailure = failures[tid];
    }
    rep.add(fullSweep ? "graded_jacobi_full" : "graded_jacobi_sample", firstFailure.empty(),
            firstFailure.empty() ? std::to_string(total) + " ordered triples" : firstFailure);
    return rep;
}

OperatorMatrix conjugateBy(const ExactMatrix& u, const ExactMatrix& uInv,
                           const OperatorMatrix& a) {
    OperatorMatrix out(a.dim());
    for (const auto& [mono, m] : a.terms()) out += OperatorMatrix::term(mono, u * m * uInv);
    return out;
}

Report verifyBranchEquivalence(const CriticalSolution& first, const CriticalSolution& second,
                               const GammaBig& g) {
    Report rep;
    const ExactMatrix& g8 = g.Gamma(8);
    rep.add("gamma8_squared_is_identity", g8 * g8 == ExactMatrix::identity(16));

    auto conj = [&](const OperatorMatrix& a) { return conjugateBy(g8, g8, a); };
    rep.add("H_conjugates", conj(first.set.H) == second.set.H);
    rep.add("D_invariant", conj(first.set.D) == second.set.D);
    rep.add("K_invariant", conj(first.set.K) == second.set.K);

    bool qOk = true, qtOk = true;
    for (int I = 1; I <= 8; ++I) {
        const ParamPoly sign(Rational(I == 8 ? -1 : 1));
        if (!(conj(first.set.Q[I - 1]) == second.set.Q[I - 1].scaled(sign))) qOk = false;
        if (!(conj(first.set.Qt[I - 1]) == second.set.Qt[I - 1].scaled(sign))) qtOk = false;
    }
    rep.add("Q_conjugates_with_sign_character", qOk, "sign -1 on Q_8");
    rep.add("Qt_conjugates_with_sign_character", qtOk, "sign -1 on Qt_8");

    bool rOk = true;
    for (int I = 1; I <= 8; ++I)
        for (int J = 1; J <= 8; ++J) {
            if (I == J) continue;
            const ParamPoly sign(Rational((I == 8) != (J == 8) ? -1 : 1));
            if (!(g8 * first.set.r(I, J) * g8 == second.set.r(I, J).scaled(sign))) rOk = false;
        }
    rep.add("R_conjugates_with_sign_character", rOk, "sign -1 on R_i8");

    // potential swaps its 8+8 blocks
    bool vOk = true;
    for (int k = 0; k < 16; ++k)
        if (first.V[k] != second.V[(k + 8) % 16]) vOk = false;
    rep.add("V_blocks_swap", vOk);
    return rep;
}

}  // namespace f4osc
