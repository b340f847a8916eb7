#ifndef F4OSC_NUMERICS_HPP
#define F4OSC_NUMERICS_HPP

#include <array>
#include <vector>

#include "f4osc/rational.hpp"

namespace f4osc {

/// Uniform grid on (0, x_max] with Dirichlet conditions at both ends and a
/// second-order central scheme; h = x_max / (n_points + 1).
struct GridSpec {
    int nPoints = 2000;
    double xMax = 12.0;
};

/// One reference ladder 2n + a + 1/2 from the indicial equation
/// a(a-1)/2 = v of -1/2 psi'' + 1/2 x^2 psi + v/x^2 psi = E psi.
struct RefLadder {
    double a = 0.0;
    bool cuspFree = false;  // a >= 2: eigenfunction has no sub-quadratic cusp
    std::vector<double> energies;
};

struct EigenMatch {
    double computed = 0.0;
    double reference = 0.0;
    int ladder = -1;  // index into ladders
    int level = -1;   // n within the ladder
    double relError = 0.0;
};

struct ComponentSpectrum {
    int component = 0;  // 1..16
    Rational coupling;
    GridSpec grid;
    std::vector<double> computed;    // lowest eigenvalues, ascending
    std::vector<RefLadder> ladders;  // the larger indicial root; the smaller
                                     // one too whenever it is normalizable
    std::vector<EigenMatch> matches; // each computed value vs nearest reference
};

/// Lowest m eigenvalues of the discretized -1/2 d^2 + 1/2 x^2 + v/x^2 on the
/// half line (symmetric tridiagonal eigensolver), with the indicial-equation
/// reference ladders and the nearest-reference matching.
ComponentSpectrum diagonalizeComponent(int k, const std::array<Rational, 16>& v, GridSpec grid,
                                       int m = 6);

struct ConvergenceStudy {
    int component = 0;
    std::vector<GridSpec> grids;
    std::vector<double> lowest;   // lowest eigenvalue per grid
    double reference = 0.0;       // ladder value the sequence approaches
    double empiricalOrder = 0.0;  // from successive differences
    bool cuspFree = false;
    bool divergent = false;       // error grew under refinement
};

/// Empirical convergence order of the lowest eigenvalue on >= 3 refining
/// grids.  Cusp-free components approach the nominal second order; cusped
/// ones (a < 2) converge at a degraded rate, which is recorded.
ConvergenceStudy convergenceStudy(int k, const std::array<Rational, 16>& v,
                                  const std::vector<GridSpec>& grids);

/// Lowest m eigenvalues of a symmetric tridiagonal matrix (diag, off).
std::vector<double> lowestEigenvalues(const std::vector<double>& diag,
                                      const std::vector<double>& off, int m);

}  // namespace f4osc

#endif
