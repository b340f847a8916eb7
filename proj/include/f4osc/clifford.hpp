#ifndef F4OSC_CLIFFORD_HPP
#define F4OSC_CLIFFORD_HPP

#include <array>
#include <string>
#include <vector>

#include "f4osc/matrix.hpp"
#include "f4osc/octonion.hpp"

namespace f4osc {

/// The seven 8x8 generators of Cl(0,7) built from octonionic left
/// multiplication: (gamma_i)_{0m} = delta_im, (gamma_i)_{l0} = -delta_il,
/// (gamma_i)_{lm} = C_ilm.  gamma(i) is 1-based.
class GammaSmall {
public:
    explicit GammaSmall(std::array<ExactMatrix, 7> g) : g_(std::move(g)) {}
    const ExactMatrix& gamma(int i) const { return g_[i - 1]; }

private:
    std::array<ExactMatrix, 7> g_;
};

/// The nine 16x16 generators of Cl(9,0).  Gamma(A) is 1-based; Gamma_9 is the
/// fermion parity operator diag(I8, -I8).
class GammaBig {
public:
    explicit GammaBig(std::array<ExactMatrix, 9> g) : g_(std::move(g)) {}
    const ExactMatrix& Gamma(int A) const { return g_[A - 1]; }

private:
    std::array<ExactMatrix, 9> g_;
};

/// Builds the gamma_i from the structure constants and cross-checks them
/// against the left-multiplication map (which reproduces them up to one
/// uniform overall sign).  Throws FaultError on any mismatch.
GammaSmall buildGammaSmall(const OctonionTensors& t);

GammaBig buildGammaBig(const GammaSmall& g);

/// Product of gamma matrices over an ascending index subset (empty = I).
ExactMatrix gammaProduct(const GammaSmall& g, const std::vector<int>& idx);
ExactMatrix gammaProduct(const GammaBig& g, const std::vector<int>& idx);

struct BasisRow {
    std::string label;       // e.g. "Gamma^(2)*Gamma_8"
    bool blockDiagonal = false;  // dg vs ad
    bool symmetric = false;      // SYM vs AS
    int count = 0;
};

struct BasisClassification {
    std::array<BasisRow, 16> rows;
    int total = 0;
    int symmetricTotal = 0;
    int antisymmetricTotal = 0;
};

/// Enumerates the 256 rank-(0..4) products of the Gamma_A with the 7+1+1
/// index refinement, classifies block structure and symmetry per class, and
/// proves linear independence of all 256 products (pairwise trace
/// orthogonality of their signed-permutation forms).  Throws FaultError if
/// any product is not a signed permutation matrix or any class is not
/// homogeneous in its flags.
BasisClassification classifyBasis(const GammaBig& g);

/// Verifies rank-(7-r) gamma products equal +/- the complementary rank-r
/// products (all 2^7 subsets), returning false at the first failure.
bool verifySmallHodgeDuality(const GammaSmall& g);

/// Same duality on the Gamma side: every rank>=5 product equals +/- the
/// complementary rank<=4 product.
bool verifyBigHodgeDuality(const GammaBig& g);

}  // namespace f4osc

#endif
