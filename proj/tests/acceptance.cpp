// Acceptance suite: one criterion per block, one pass/fail line each.
// Everything algebraic is exact; the numerics criterion carries its stated
// floating-point tolerances.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "f4osc/numerics.hpp"
#include "f4osc/spectrum.hpp"

using namespace f4osc;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, bool pass, const std::string& note = "") {
    std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                note.empty() ? "" : " -- ", note.c_str());
    if (!pass) ++failures;
}

double seconds(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    const OctonionTensors tensors = OctonionTensors::build();
    const GammaSmall gs = buildGammaSmall(tensors);
    const GammaBig gb = buildGammaBig(gs);

    // 1. Clifford anticommutator sweeps, exact, under one second
    {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        const ExactMatrix i8 = ExactMatrix::identity(8);
        for (int i = 1; i <= 7; ++i)
            for (int j = 1; j <= 7; ++j)
                if (!(gs.gamma(i) * gs.gamma(j) + gs.gamma(j) * gs.gamma(i) ==
                      i8.scaled(ParamPoly(Rational(i == j ? -2 : 0)))))
                    ok = false;
        const ExactMatrix i16 = ExactMatrix::identity(16);
        for (int a = 1; a <= 9; ++a)
            for (int b = 1; b <= 9; ++b)
                if (!(gb.Gamma(a) * gb.Gamma(b) + gb.Gamma(b) * gb.Gamma(a) ==
                      i16.scaled(ParamPoly(Rational(a == b ? 2 : 0)))))
                    ok = false;
        const double dt = seconds(t0);
        criterion(1, "Clifford sweeps Cl(0,7) and Cl(9,0)", ok && dt < 1.0,
                  std::to_string(dt) + " s");
    }

    // 2. Duality identity over all 7^4 tuples
    {
        const auto rep = verifyDuality(tensors);
        criterion(2, "6 C_ijkl = eps_ijklmnp C_mnp (2401 tuples)",
                  rep.pass && rep.checkedTuples == 2401);
    }

    // 3. Basis classification table
    {
        bool ok = true;
        std::string note;
        try {
            const BasisClassification c = classifyBasis(gb);
            const int expected[16] = {1, 7, 1, 1, 21, 7, 7, 1, 35, 21, 21, 7, 35, 35, 35, 21};
            for (int r = 0; r < 16; ++r)
                if (c.rows[r].count != expected[r]) ok = false;
            if (c.total != 256 || c.symmetricTotal != 136 || c.antisymmetricTotal != 120)
                ok = false;
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
        criterion(3, "256-product classification, counts 1+9+36+84+126", ok, note);
    }

    // 4. Closure branches annihilate the i != j residuals identically in c;
    //    potentials match the closed forms as polynomials in c
    {
        bool ok = true;
        const ParamPoly c = ParamPoly::generator(Gen::c);
        for (const Branch br : {Branch::first, Branch::second}) {
            const auto q = buildSupercharges(AnsatzParams::onBranch(br, c, false), tensors, gb);
            for (int i = 0; i < 7; ++i)
                for (int j = i + 1; j < 7; ++j)
                    if (!OperatorMatrix::anticommutator(q[i], q[j]).isZero()) ok = false;
            const auto v = potentialFromBranch(br, c, tensors, gb);
            const auto closed = branchPotentialClosedForm(br, c);
            for (int k = 0; k < 16; ++k)
                if (!(v[k] == closed[k])) ok = false;
        }
        criterion(4, "branch closure and polynomial potentials", ok);
    }

    // 5. Critical couplings, parameter tuples, critical potential
    CriticalSolution critFirst, critSecond;
    {
        bool ok = true;
        std::string note;
        try {
            critFirst = findCriticalC(Branch::first, tensors, gb);
            critSecond = findCriticalC(Branch::second, tensors, gb);
            ok = critFirst.c == Rational(1, 12) && critSecond.c == Rational(-1, 12);
            ok = ok && critFirst.params == std::array<Rational, 5>{Rational(-1, 36), Rational(0),
                                                                   Rational(1, 12),
                                                                   Rational(1, 36), Rational(0)};
            ok = ok && critSecond.params == std::array<Rational, 5>{Rational(1, 36), Rational(0),
                                                                    Rational(-1, 12),
                                                                    Rational(1, 36), Rational(0)};
            std::array<Rational, 16> v2;
            v2[0] = Rational(91, 72);
            for (int k = 1; k < 8; ++k) v2[k] = Rational(-5, 72);
            for (int k = 8; k < 16; ++k) v2[k] = Rational(7, 72);
            ok = ok && critSecond.V == v2;
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
        criterion(5, "critical c = 1/12 / -1/12 with tuples and V", ok, note);
        if (!ok) return 1;  // everything downstream depends on the critical solutions
    }

    // 6. Seven constraints and R-span ranks
    {
        const Report rep = verifySevenConstraints(critSecond, tensors, gb);
        criterion(6, "2R_i8 + C_ijk R_jk = 0, rank 21 (28 off-critical probe)", rep.allPass());
    }

    // 7. Structure relations and the graded Jacobi sweep
    {
        const auto t0 = std::chrono::steady_clock::now();
        const Report sr = verifyStructureRelations(critSecond, tensors, true);
        const Report jac = verifyJacobi(critSecond, true);
        const double dt = seconds(t0);
        criterion(7, "structure relations + graded Jacobi (full sweeps)",
                  sr.allPass() && jac.allPass() && dt < 600.0, std::to_string(dt) + " s");
    }

    // 8. Ladder algebra identities (verified inside the builder)
    LadderSet ladder;
    {
        bool ok = true;
        std::string note;
        try {
            ladder = buildLadder(critSecond);
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
        criterion(8, "ladder algebra: H_eps1, I+Y, {a,Y}=0, [H,adag]=adag", ok, note);
        if (!ok) return 1;
    }

    // 9. Lowest weights: exponents, energies, 24 states, norm verdicts
    {
        bool ok = true;
        std::string note;
        try {
            const LowestWeights lw = solveLowestWeights(ladder);
            for (int ib = 0; ib < 8 && ok; ++ib) {
                if (lw.beta[ib][0] != Rational(-7, 6) || lw.energy[ib][0] != Rational(-2, 3))
                    ok = false;
                for (int k = 1; k < 8; ++k)
                    if (lw.beta[ib][k] != Rational(1, 6) || lw.energy[ib][k] != Rational(2, 3))
                        ok = false;
                for (int k = 8; k < 16; ++k) {
                    const bool own = (k - 8) == ib;
                    if (lw.beta[ib][k] != (own ? Rational(7, 6) : Rational(-1, 6))) ok = false;
                    if (lw.energy[ib][k] !=
                        Rational(1, 3) + (own ? Rational(4, 3) : Rational(0)))
                        ok = false;
                }
            }
            if (distinctLowestWeightCount(lw) != 24) ok = false;
            const auto lam1 = normVerdict(lw.state[0][0]);
            if (lam1.squareIntegrable || lam1.sign != NormSign::negative) ok = false;
            const auto desc = normVerdict(WaveVector::basisTerm(16, 9, Rational(-1, 6)));
            if (!desc.squareIntegrable || desc.sign != NormSign::positive) ok = false;
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
        criterion(9, "lowest-weight exponents, energies, 24 states, norms", ok, note);
    }

    // 10. Hilbert tower: depth-6 spectrum, covariant relation, Z independence
    HilbertBasis hb;
    {
        bool ok = true;
        std::string note;
        try {
            hb = buildHilbertBasis(ladder, tensors);  // covariant relation checked inside
            const SpectrumTable tab = buildSpectrum(ladder, hb, 6);
            if (tab.levels.size() != 7) ok = false;
            if (tab.levels.at(0).degeneracy != 7) ok = false;
            for (std::size_t n = 1; n < tab.levels.size(); ++n) {
                if (tab.levels[n].degeneracy != 8) ok = false;
                if (tab.levels[n].energy != Rational(2, 3) + Rational(static_cast<long>(n)))
                    ok = false;
            }
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
        criterion(10, "spectrum 2/3+n with degeneracies (7,8,8,8,8,8,8)", ok, note);
    }

    // 11. Quasi-nonassociativity: coupling formula and supertrace
    {
        const Report rep = verifyVFormula(tensors, gb, critSecond.V);
        criterion(11, "V from C_ijk Gamma products, str V = 0", rep.allPass());
    }

    // 12. Intertwiners
    {
        bool ok = true;
        std::string note;
        try {
            const Intertwiners itw = buildIntertwiners(critSecond, ladder, gb);
            ExactMatrix u1(16, 16);
            auto E = [&u1](int r, int s, int val) {
                u1.at(r - 1, s - 1) = ParamPoly(Rational(val));
            };
            E(1, 1, 1); E(2, 2, 1); E(3, 3, 1); E(4, 4, 1);
            E(5, 8, -1); E(6, 7, 1); E(7, 6, -1); E(8, 5, 1);
            E(9, 10, 1); E(10, 9, -1); E(11, 12, 1); E(12, 11, -1);
            E(13, 13, 1); E(14, 14, 1); E(15, 15, 1); E(16, 16, 1);
            if (!(itw.U[0] == u1)) ok = false;
            for (int i = 1; i <= 7; ++i) {
                if (itw.count[i - 1] < 1) ok = false;
                if (!(conjugateBy(itw.U[i - 1], itw.U[i - 1].dagger(), ladder.a[i]) ==
                      ladder.a[0]))
                    ok = false;
            }
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
        criterion(12, "U_1 published matrix; signed-permutation U_i with U a U+ = a_0", ok, note);
    }

    // 13. Numerics oracle on the default grid, all 16 components
    {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string note;
        try {
            for (int k = 1; k <= 16; ++k) {
                const ComponentSpectrum cs = diagonalizeComponent(k, critSecond.V, GridSpec{});
                // three lowest levels within tolerance
                for (int i = 0; i < 3; ++i) {
                    const auto& m = cs.matches.at(i);
                    const double tol = cs.ladders.at(m.ladder).cuspFree ? 2e-3 : 2e-2;
                    if (m.relError > tol) ok = false;
                }
                // ladder spacing ~ 2 within the same tolerances
                for (std::size_t i = 0; i < cs.matches.size(); ++i)
                    for (std::size_t j = i + 1; j < cs.matches.size(); ++j) {
                        if (cs.matches[i].ladder != cs.matches[j].ladder) continue;
                        if (cs.matches[j].level != cs.matches[i].level + 1) continue;
                        const double gap = cs.computed[j] - cs.computed[i];
                        const double tol = cs.ladders.at(cs.matches[i].ladder).cuspFree ? 2e-3
                                                                                        : 2e-2;
                        if (std::abs(gap - 2.0) / 2.0 > tol) ok = false;
                    }
            }
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
        const double dt = seconds(t0);
        if (dt >= 30.0) ok = false;
        criterion(13, "finite-difference eigenvalues vs indicial ladders (16 components)", ok,
                  note.empty() ? std::to_string(dt) + " s" : note);
    }

    // 14. Branch equivalence under Gamma_8 conjugation
    {
        const Report rep = verifyBranchEquivalence(critFirst, critSecond, gb);
        criterion(14, "Gamma_8 conjugation maps branch first onto branch second",
                  rep.allPass());
    }

    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return 1;
}
