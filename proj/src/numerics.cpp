#include "f4osc/numerics.hpp"

#include <lapacke.h>

#include <cmath>
#include <stdexcept>

#include "f4osc/errors.hpp"

namespace f4osc {

std::vector<double> lowestEigenvalues(const std::vector<double>& diag,
                                      const std::vector<double>& off, int m) {
    const lapack_int n = static_cast<lapack_int>(diag.size());
    std::vector<double> d = diag, e = off, w(n);
    e.resize(n, 0.0);
    std::vector<lapack_int> isuppz(2 * std::max<lapack_int>(1, m));
    lapack_int found = 0;
    const lapack_int info = LAPACKE_dstevr(
        LAPACK_COL_MAJOR, 'N', 'I', n, d.data(), e.data(), 0.0, 0.0, 1, m, 0.0, &found,
        w.data(), nullptr, 1, isuppz.data());
    if (info != 0)
        throw std::runtime_error("tridiagonal eigensolver did not converge (info=" +
                                 std::to_string(info) + ")");
    w.resize(found);
    return w;
}

namespace {

std::vector<RefLadder> referenceLadders(const Rational& v, int levels) {
    // indicial equation a(a-1)/2 = v; x^a behavior at the singularity
    const double vd = v.toDouble();
    const double disc = 1.0 + 8.0 * vd;
    std::vector<RefLadder> out;
    if (disc < 0.0) return out;
    const double aPlus = 0.5 * (1.0 + std::sqrt(disc));
    const double aMinus = 0.5 * (1.0 - std::sqrt(disc));
    auto mk = [&](double a) {
        RefLadder l;
        l.a = a;
        l.cuspFree = a >= 2.0;
        for (int n = 0; n < levels; ++n) l.energies.push_back(2.0 * n + a + 0.5);
        out.push_back(std::move(l));
    };
    mk(aPlus);
    // the smaller root is a valid boundary behavior whenever x^a is
    // normalizable at 0, i.e. 2a > -1
    if (aMinus > -0.5 && aMinus != aPlus) mk(aMinus);
    return out;
}

}  // namespace

ComponentSpectrum diagonalizeComponent(int k, const std::array<Rational, 16>& v, GridSpec grid,
                                       int m) {
    if (k < 1 || k > 16) throw std::invalid_argument("component index must be 1..16");
    if (grid.nPoints < 100) throw std::invalid_argument("grid must have at least 100 points");
    if (grid.xMax <= 0.0) throw std::invalid_argument("x_max must be positive");

    ComponentSpectrum out;
    out.component = k;
    out.coupling = v[k - 1];
    out.grid = grid;

    const int n = grid.nPoints;
    const double h = grid.xMax / (n + 1);
    const double vd = out.coupling.toDouble();
    std::vector<double> d(n), e(n - 1, -0.5 / (h * h));
    for (int i = 0; i < n; ++i) {
        const double x = h * (i + 1);
        d[i] = 1.0 / (h * h) + 0.5 * x * x + vd / (x * x);
    }
    out.computed = lowestEigenvalues(d, e, m);
    out.ladders = referenceLadders(out.coupling, m + 2);

    for (const double lam : out.computed) {
        EigenMatch match;
        match.computed = lam;
        for (std::size_t li = 0; li < out.ladders.size(); ++li)
            for (std::size_t nn = 0; nn < out.ladders[li].energies.size(); ++nn) {
                const double ref = out.ladders[li].energies[nn];
                if (match.ladder < 0 || std::abs(lam - ref) < std::abs(lam - match.reference)) {
                    match.reference = ref;
                    match.ladder = static_cast<int>(li);
                    match.level = static_cast<int>(nn);
                }
            }
        match.relError = std::abs(match.computed - match.reference) / std::abs(match.reference);
        out.matches.push_back(match);
    }
    return out;
}

ConvergenceStudy convergenceStudy(int k, const std::array<Rational, 16>& v,
                                  const std::vector<GridSpec>& grids) {
    if (grids.size() < 3)
        throw std::invalid_argument("convergence study needs at least 3 grids");
    ConvergenceStudy out;
    out.component = k;
    out.grids = grids;
    for (const auto& g : grids)
        out.lowest.push_back(diagonalizeComponent(k, v, g, 1).computed.at(0));

    const ComponentSpectrum fine = diagonalizeComponent(k, v, grids.back(), 1);
    out.reference = fine.matches.at(0).reference;
    out.cuspFree = fine.ladders.at(fine.matches.at(0).ladder).cuspFree;

    for (std::size_t i = 0; i + 1 < out.lowest.size(); ++i) {
        const double errCoarse = std::abs(out.lowest[i] - out.reference);
        const double errFine = std::abs(out.lowest[i + 1] - out.reference);
        if (errFine > errCoarse) out.divergent = true;
    }

    // order from successive differences, averaged over the refinements
    double sum = 0.0;
    int cnt = 0;
    for (std::size_t i = 0; i + 2 < out.lowest.size(); ++i) {
        const double d1 = std::abs(out.lowest[i] - out.lowest[i + 1]);
        const double d2 = std::abs(out.lowest[i + 1] - out.lowest[i + 2]);
        const double h1 = grids[i].xMax / (grids[i].nPoints + 1);
        const double h2 = grids[i + 1].xMax / (grids[i + 1].nPoints + 1);
        if (d2 > 0.0 && h1 != h2) {
            sum += std::log(d1 / d2) / std::log(h1 / h2);
            ++cnt;
        }
    }
    out.empiricalOrder = cnt > 0 ? sum / cnt : 0.0;
    if (out.divergent) throw FaultError("eigenvalue diverges under grid refinement");
    return out;
}

}  // namespace f4osc
