#ifndef F4OSC_MATRIX_HPP
#define F4OSC_MATRIX_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "f4osc/parampoly.hpp"

namespace f4osc {

/// Dense matrix over the parameter-polynomial ring (Gaussian rationals embed
/// as constants).  Dimensions are fixed at construction.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static ExactMatrix identity(int n) {
        ExactMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = ParamPoly(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    ParamPoly& at(int i, int j) { return e_[i * cols_ + j]; }
    const ParamPoly& at(int i, int j) const { return e_[i * cols_ + j]; }

    bool isZero() const;
    bool isConstant() const;
    bool isDiagonal() const;
    bool isSymmetric() const { return *this == transposed(); }
    bool isAntisymmetric() const;

    ExactMatrix& operator+=(const ExactMatrix& m);
    ExactMatrix& operator-=(const ExactMatrix& m);
    ExactMatrix operator*(const ExactMatrix& m) const;

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

    ExactMatrix scaled(const ParamPoly& s) const;
    ExactMatrix transposed() const;
    /// Conjugate transpose (entrywise complex conjugation of coefficients).
    ExactMatrix dagger() const;

    ParamPoly trace() const;

    ExactMatrix substitute(const std::map<Gen, Rational>& assignment) const;

    /// Rank over the Gaussian-rational field; requires constant entries.
    int rank() const;

    /// Rank of a family of matrices viewed as vectors in entry space.
    static int spanRank(const std::vector<ExactMatrix>& mats);

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

private:
    int rows_, cols_;
    std::vector<ParamPoly> e_;
};

/// 2n x 2n matrix from four n x n blocks [[A,B],[C,D]].
ExactMatrix blockMatrix(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c,
                        const ExactMatrix& d);

}  // namespace f4osc

#endif
