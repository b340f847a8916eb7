#ifndef F4OSC_SPECTRUM_HPP
#define F4OSC_SPECTRUM_HPP

#include <string>
#include <vector>

#include "f4osc/oscillator.hpp"

namespace f4osc {

struct SpectrumLevel {
    Rational energy;
    int degeneracy = 0;               // exact rank of the level's state family
    std::vector<std::string> labels;  // "Z^n*wr" basis labels
    std::vector<WaveVector> states;
};

struct SpectrumTable {
    std::vector<SpectrumLevel> levels;  // energies 2/3 + 0 .. 2/3 + depth
};

/// Tower Z^n w_r up to the requested depth (levels 2/3 + 0 .. 2/3 + depth).
/// Every state is verified as an exact H_eps1 eigenvector with eigenvalue
/// 2n + E_r and passes the square-integrability verdict; degeneracy is the
/// exact rank of the level family.  Throws FaultError on any violation.
SpectrumTable buildSpectrum(const LadderSet& l, const HilbertBasis& hb, int depth);

/// Raising property: every adag applied to a level-n state lands in the span
/// of level-(n+1) states; R-symmetry action preserves each level (exact
/// linear solves).
Report verifySpectrumStructure(const SpectrumTable& table, const LadderSet& l,
                               const SuperconformalSet& s);

/// The coupling formula V = (1/72)(Gamma_8 - (1/36) C_ijk G_i G_j G_k)
/// (C_lmn G_l G_m G_n) reproduces diag(V) entrywise, and str V = 0.
Report verifyVFormula(const OctonionTensors& t, const GammaBig& g,
                      const std::array<Rational, 16>& v);

}  // namespace f4osc

#endif
