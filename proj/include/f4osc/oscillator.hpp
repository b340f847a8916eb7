#ifndef F4OSC_OSCILLATOR_HPP
#define F4OSC_OSCILLATOR_HPP

#include <array>
#include <optional>

#include "f4osc/f4.hpp"

namespace f4osc {

/// H_eps = -1/2 d^2 I + 1/2 eps x^2 I + V/x^2; eps=0 is the superconformal
/// Hamiltonian, eps=1 the deformed oscillator H+K.
OperatorMatrix buildHamiltonian(int eps, const std::array<Rational, 16>& v);

/// Ladder operators indexed by Ibar = 0..7 (a_0 := a_8, Gamma_0 := Gamma_8),
/// carrying the stored sqrt(2) scale of the supercharges:
/// a_Ibar = Q_Ibar - i Qt_Ibar, adag_Ibar = Q_Ibar + i Qt_Ibar.
struct LadderSet {
    std::array<OperatorMatrix, 8> a{OperatorMatrix(16), OperatorMatrix(16), OperatorMatrix(16),
                                    OperatorMatrix(16), OperatorMatrix(16), OperatorMatrix(16),
                                    OperatorMatrix(16), OperatorMatrix(16)};
    std::array<OperatorMatrix, 8> adag = a;
    std::array<ExactMatrix, 8> Y;          // constant traceless diagonal
    OperatorMatrix Z{16};                  // (1/2){adag,adag} conventional: a raising operator
    OperatorMatrix Heps1{16};
    std::array<ExactMatrix, 8> Ecrit;      // E_Ibar at the critical coupling
};

/// Builds the ladder set at the critical solution and verifies, exactly:
/// (1/2){a,adag} = H_eps1, [a,adag] = I + Y with the expected Y diagonal,
/// {a,Y} = {adag,Y} = 0, [H,adag] = adag, [H,a] = -a, Z independence of Ibar,
/// {adag_I, adag_J} = 0 for I != J, and [Z, adag] = 0.
/// Throws FaultError on any failure.
LadderSet buildLadder(const CriticalSolution& s);

/// Exponents, states and energies of the 8x16 lowest-weight table:
/// a_Ibar |lambda_k> = 0 with the single-component ansatz x^beta e^{-x^2/2}.
struct LowestWeights {
    std::array<std::array<Rational, 16>, 8> beta;
    std::array<std::array<Rational, 16>, 8> energy;   // both routes agree
    std::array<std::array<WaveVector, 16>, 8> state;

    LowestWeights() { state.fill({WaveVector(16), WaveVector(16), WaveVector(16), WaveVector(16),
                                  WaveVector(16), WaveVector(16), WaveVector(16), WaveVector(16),
                                  WaveVector(16), WaveVector(16), WaveVector(16), WaveVector(16),
                                  WaveVector(16), WaveVector(16), WaveVector(16), WaveVector(16)}); }
};

/// Solves each slot for beta, verifies a_Ibar annihilates the state, and
/// computes the energy both as 1/2 + 1/2 <Y> and by direct application of
/// H_eps1; throws FaultError if a slot admits no single-power solution or
/// the two energy routes disagree.
LowestWeights solveLowestWeights(const LadderSet& l);

/// Number of distinct states in the 8x16 table (expected: 24).
int distinctLowestWeightCount(const LowestWeights& lw);

enum class NormSign { positive, negative, divergentPositive };

struct NormVerdict {
    bool squareIntegrable = false;
    NormSign sign = NormSign::positive;
};

/// Square integrability (2 beta_min > -1 per nonzero component) and the
/// regularized norm sign via the exact sign of Gamma((2 beta + 1)/2),
/// reduced by Gamma(z+1) = z Gamma(z) to the strip (0, 1].  Throws
/// GammaPoleError at a Gamma pole.
NormVerdict normVerdict(const WaveVector& psi);

/// Exact sign of Gamma at a non-pole rational argument (+1 or -1).
int gammaSign(const Rational& z);

/// The (7;8;1) Hilbert-space seed: w_1..w_7 = b_i, w_8 = f_0,
/// w_{8+i} = f_i, w_16 = g_0.
struct HilbertBasis {
    std::array<WaveVector, 16> w{WaveVector(16), WaveVector(16), WaveVector(16), WaveVector(16),
                                 WaveVector(16), WaveVector(16), WaveVector(16), WaveVector(16),
                                 WaveVector(16), WaveVector(16), WaveVector(16), WaveVector(16),
                                 WaveVector(16), WaveVector(16), WaveVector(16), WaveVector(16)};
    std::array<Rational, 16> energy;
    std::array<std::string, 16> label;
};

/// Builds b_i, f_0 = -adag_i b_i (verified identical for every i),
/// f_i = adag_0 b_i, g_0 = adag_0 f_0; verifies the covariant relation
/// adag_i b_j = C_ijk f_k (i != j) and the energy eigenvalues (2/3; 5/3; 8/3).
/// The lambda_1 module (negative regularized norm) and its x^{-1/6}
/// descendants are excluded by construction.
HilbertBasis buildHilbertBasis(const LadderSet& l, const OctonionTensors& t);

/// Signed-permutation intertwiners U_i with U_i Gamma_i U_i^+ = Gamma_8,
/// U_i E_i U_i^+ = E_8, U_i Y_i U_i^+ = Y_8, [U_i, V] = 0; block-diagonal
/// in the 8+8 grading.  count[i-1] is the number of solutions found; the
/// returned representative is the solution of maximal trace (then smallest
/// in lexicographic order), which normalizes it towards the identity.
struct Intertwiners {
    std::array<ExactMatrix, 7> U;
    std::array<int, 7> count{};
};

Intertwiners buildIntertwiners(const CriticalSolution& s, const LadderSet& l, const GammaBig& g);

}  // namespace f4osc

#endif
