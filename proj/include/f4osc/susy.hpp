#ifndef F4OSC_SUSY_HPP
#define F4OSC_SUSY_HPP

#include <array>
#include <vector>

#include "f4osc/clifford.hpp"
#include "f4osc/diffop.hpp"

namespace f4osc {

/// The two one-parameter families solving {Q_i, Q_j} = 0 for i != j:
/// first:  d =  c/3, e = -1/2 + 6c
/// second: d = -c/3, e =  1/2 + 6c
enum class Branch { first, second };

const char* branchName(Branch b);

/// Ansatz coefficients (a,b,c,d,e); each may be a formal generator or a
/// bound value.
struct AnsatzParams {
    ParamPoly a, b, c, d, e;

    /// All five as formal generators.
    static AnsatzParams formal();

    /// Branch relations substituted; a,b stay formal unless imposeN8, which
    /// sets a = -c/3, b = e.
    static AnsatzParams onBranch(Branch br, const ParamPoly& c, bool imposeN8);

    /// The bound rational tuple (a,b,c,d,e); throws if any entry is formal
    /// or non-real.
    std::array<Rational, 5> boundValues() const;
};

/// Potential-term matrices: E_8 = a C_ijk G_i G_j G_k G_9 + b G_8 and
/// E_i = c C_ijk G_j G_k G_8 G_9 + d C_ijkl G_j G_k G_l G_9 + e G_i,
/// with full sums over repeated indices.  I is 1..8.
ExactMatrix buildE(int I, const AnsatzParams& p, const OctonionTensors& t, const GammaBig& g);

/// Supercharges Q_I = G_I G_9 d + (1/x) E_I, I = 1..8 at slots [0..7].
/// Stored scaled by sqrt(2) relative to the conventional normalization so
/// that every coefficient stays a Gaussian rational; bracket relations are
/// stated through pairBracket below.
std::array<OperatorMatrix, 8> buildSupercharges(const AnsatzParams& p, const OctonionTensors& t,
                                                const GammaBig& g);

/// (1/2){A,B} or (1/2)[A,B] by grading: the bracket of the conventionally
/// normalized operators when A, B carry the stored sqrt(2) scale.
OperatorMatrix pairBracket(const OperatorMatrix& a, const OperatorMatrix& b);

/// Generating set of closure conditions: every coefficient of every entry of
/// {Q_i, Q_j} for i != j (i,j = 1..7), together with the coefficients of the
/// differences {Q_i, Q_i} - {Q_1, Q_1} (the Hamiltonian must not depend
/// on i).  Zero polynomials are dropped; duplicates removed.
std::vector<ParamPoly> closureConstraints(const std::array<OperatorMatrix, 8>& q);

/// Diagonal of the constant matrix V where (1/2){Q_i,Q_i} = -1/2 d^2 I + V/x^2
/// (conventional normalization).  Verifies the shape, the diagonality, the
/// constancy of V and the i-independence of the Hamiltonian; throws
/// FaultError otherwise.  a,b do not enter.
std::array<ParamPoly, 16> potentialFromBranch(Branch br, const ParamPoly& c,
                                              const OctonionTensors& t, const GammaBig& g);

/// Closed forms of the branch potentials as polynomials in c:
/// first:  v_1..8 = -1/8+32c^2, v_9 = 3/8+8c+32c^2, v_10..16 = 3/8-8c+32c^2
/// second: v_1 = 3/8-8c+32c^2, v_2..8 = 3/8+8c+32c^2, v_9..16 = -1/8+32c^2
std::array<ParamPoly, 16> branchPotentialClosedForm(Branch br, const ParamPoly& c);

}  // namespace f4osc

#endif
