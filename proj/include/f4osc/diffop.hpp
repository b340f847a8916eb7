#ifndef F4OSC_DIFFOP_HPP
#define F4OSC_DIFFOP_HPP

#include <compare>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "f4osc/matrix.hpp"

namespace f4osc {

/// Normal-ordered monomial x^m d^k (all x powers left of all derivatives);
/// m may be negative.
struct XD {
    long x = 0;
    unsigned d = 0;
    friend auto operator<=>(const XD&, const XD&) = default;
};

class WaveVector;

/// Even/odd with respect to the 8+8 block grading of 16-dimensional
/// operators (Gamma_9 parity); everything else counts as even.
enum class Grading { even, odd, indefinite };

/// Matrix of differential polynomials, stored term-major: a sum of
/// x^m d^k (x) coefficient-matrix contributions in canonical normal order.
/// The 1x1 case doubles as the scalar differential polynomial.
class OperatorMatrix {
public:
    explicit OperatorMatrix(int dim = 16) : dim_(dim) {}

    static OperatorMatrix constant(ExactMatrix m);
    static OperatorMatrix term(XD mono, ExactMatrix m);
    static OperatorMatrix identity(int dim) { return constant(ExactMatrix::identity(dim)); }
    /// x^power * I
    static OperatorMatrix xPower(int dim, long power);
    /// d/dx * I
    static OperatorMatrix ddx(int dim);

    int dim() const { return dim_; }
    bool isZero() const { return t_.empty(); }
    const std::map<XD, ExactMatrix>& terms() const { return t_; }

    /// Coefficient matrix of one monomial (zero matrix if absent).
    ExactMatrix coefficient(XD mono) const;
    /// True if the only term is a constant matrix.
    bool isConstantMatrix() const;

    OperatorMatrix& operator+=(const OperatorMatrix& o);
    OperatorMatrix& operator-=(const OperatorMatrix& o);
    /// Operator composition with normal reordering via d x^m = x^m d + m x^(m-1).
    OperatorMatrix operator*(const OperatorMatrix& o) const;

    friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
    friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }
    friend bool operator==(const OperatorMatrix&, const OperatorMatrix&) = default;

    OperatorMatrix scaled(const ParamPoly& s) const;

    Grading grading() const;

    /// Anticommutator if both operands are odd, commutator otherwise.
    /// Throws FaultError on indefinite grading.
    static OperatorMatrix gradedBracket(const OperatorMatrix& a, const OperatorMatrix& b);
    static OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);
    static OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b);

    /// Formal adjoint: conjugate-transpose coefficients, d -> -d, x^m -> x^m.
    OperatorMatrix adjoint() const;

    OperatorMatrix substitute(const std::map<Gen, Rational>& assignment) const;

    /// Exact action on a wavefunction vector (components x^beta e^{-x^2/2});
    /// coefficients must be constant (parameters already bound).
    WaveVector apply(const WaveVector& psi) const;

    /// Scalar entry as a 1x1 operator.
    OperatorMatrix entry(int i, int j) const;

    /// Deterministic rendering as a sum of "(coef)*x^m*d^k*E[i,j]" terms,
    /// 1-based matrix indices.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const OperatorMatrix& op);

private:
    void addTerm(XD mono, const ExactMatrix& m);

    int dim_;
    std::map<XD, ExactMatrix> t_;
};

/// 16-component wavefunction; each component is a finite sum of
/// coeff * x^beta terms with an implicit universal factor e^{-x^2/2}.
class WaveVector {
public:
    explicit WaveVector(int dim = 16) : dim_(dim), comp_(dim) {}

    static WaveVector basisTerm(int dim, int component, Rational beta, Gauss coeff = Gauss(1));

    int dim() const { return dim_; }
    bool isZero() const;
    const std::map<Rational, Gauss>& component(int k) const { return comp_[k]; }

    void add(int component, const Rational& beta, const Gauss& coeff);

    WaveVector& operator+=(const WaveVector& w);
    WaveVector& operator-=(const WaveVector& w);
    friend WaveVector operator+(WaveVector a, const WaveVector& b) { return a += b; }
    friend WaveVector operator-(WaveVector a, const WaveVector& b) { return a -= b; }
    friend bool operator==(const WaveVector&, const WaveVector&) = default;

    WaveVector scaled(const Gauss& z) const;

    /// True if w is a nonzero scalar multiple of this vector.
    bool isProportionalTo(const WaveVector& w) const;

    /// Exponents within each component must lie on a common beta0 + Z
    /// lattice; composition bugs break this.  Throws FaultError if violated.
    void checkLattice() const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const WaveVector& w);

private:
    int dim_;
    std::vector<std::map<Rational, Gauss>> comp_;

    friend class OperatorMatrix;
};

/// Exact rank of a family of wave vectors (coefficient-matrix rank over the
/// union of (component, exponent) slots).
int waveSpanRank(const std::vector<WaveVector>& states);

}  // namespace f4osc

#endif
