#ifndef F4OSC_F4_HPP
#define F4OSC_F4_HPP

#include <array>
#include <vector>

#include "f4osc/report.hpp"
#include "f4osc/susy.hpp"

namespace f4osc {

/// The full generator set of the superconformal algebra on one branch:
/// sl(2) = {H, D, K}, odd sector {Q_I, Qt_I}, R-symmetry R_IJ.
/// Q and Qt carry the stored sqrt(2) scale (see buildSupercharges); H, D, K
/// and the R_IJ are conventionally normalized.
struct SuperconformalSet {
    Branch branch = Branch::second;
    ParamPoly cval;                          // formal c or a bound rational
    AnsatzParams params;
    std::array<OperatorMatrix, 8> Q, Qt;     // slots [0..7] = I = 1..8
    std::array<ExactMatrix, 8> E;
    OperatorMatrix H{16}, D{16}, K{16};
    std::vector<std::vector<ExactMatrix>> R;  // R[I-1][J-1]; zero on the diagonal

    const ExactMatrix& r(int I, int J) const { return R[I - 1][J - 1]; }
};

/// Builds Qt_I = i x Gamma_I Gamma_9 (stored scale), D, K and the R_IJ;
/// verifies {Qt_I,Qt_J} = 2 delta K, {Q_I,Qt_I} = D for every I, the
/// antisymmetry and constancy of R_IJ, and agreement of the bracket-derived
/// R with (i/2)(-Gamma_I Gamma_J + {E_I, Gamma_J Gamma_9}).  Throws
/// FaultError on any failure.
SuperconformalSet buildSuperconformal(Branch br, const ParamPoly& cval, const OctonionTensors& t,
                                      const GammaBig& g);

struct CriticalSolution {
    Branch branch = Branch::second;
    Rational c;
    std::array<Rational, 5> params;  // (a,b,c,d,e)
    std::array<Rational, 16> V;
    SuperconformalSet set;
    /// residual polynomials whose common rational root fixed c
    std::size_t residualCount = 0;
};

/// Fixes the critical coupling from the residuals of (i) closure of
/// span{R_IJ} under commutation and (ii) [R_IJ, Q_K] and [R_IJ, Qt_K]
/// remaining in span{Q} / span{Qt}; the common rational root set must be a
/// single value (1/12 on branch first, -1/12 on branch second).
CriticalSolution findCriticalC(Branch br, const OctonionTensors& t, const GammaBig& g);

/// 2R_{i8} + C_ijk R_jk = 0 for i = 1..7, rank{R_IJ} = 21 at criticality,
/// rank > 21 at the non-critical probe c = 1.
Report verifySevenConstraints(const CriticalSolution& s, const OctonionTensors& t,
                              const GammaBig& g);

/// Entrywise checks of the [R,Q], [R,Qt] and [R,R] structure relations.
/// fullSweep covers every index combination; otherwise a fixed sample.
Report verifyStructureRelations(const CriticalSolution& s, const OctonionTensors& t,
                                bool fullSweep);

/// Graded Jacobi identity over the 40-generator basis
/// {H,D,K} + {Q_I} + {Qt_I} + {R_ij, i<j}: all ordered triples via their
/// cyclic representatives (the graded Jacobi sum is cyclic-invariant
/// term-by-term).  Also records the sl(2) and mixed bracket coefficients.
/// threads <= 0 means use F4OSC_THREADS or single-threaded.
Report verifyJacobi(const CriticalSolution& s, bool fullSweep, int threads = 0);

/// Gamma_8-conjugation maps every branch-first generator onto its
/// branch-second counterpart; the index-8 generators (Q_8, Qt_8, R_i8) pick
/// up a factor -1, which is part of the recorded sign character.
Report verifyBranchEquivalence(const CriticalSolution& first, const CriticalSolution& second,
                               const GammaBig& g);

/// Conjugation U A U^{-1} for a constant invertible U with given inverse.
OperatorMatrix conjugateBy(const ExactMatrix& u, const ExactMatrix& uInv,
                           const OperatorMatrix& a);

}  // namespace f4osc

#endif
