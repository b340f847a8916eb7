#include "f4osc/matrix.hpp"

#include <ostream>

#include "f4osc/errors.hpp"

namespace f4osc {

bool ExactMatrix::isZero() const {
    for (const auto& p : e_)
        if (!p.isZero()) return false;
    return true;
}

bool ExactMatrix::isConstant() const {
    for (const auto& p : e_)
        if (!p.isConstant()) return false;
    return true;
}

bool ExactMatrix::isDiagonal() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).isZero()) return false;
    return true;
}

bool ExactMatrix::isAntisymmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (!(at(i, j) + at(j, i)).isZero()) return false;
    return true;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& m) {
    if (rows_ != m.rows_ || cols_ != m.cols_) throw FaultError("matrix shape mismatch in +");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += m.e_[k];
    return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& m) {
    if (rows_ != m.rows_ || cols_ != m.cols_) throw FaultError("matrix shape mismatch in -");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= m.e_[k];
    return *this;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& m) const {
    if (cols_ != m.rows_) throw FaultError("matrix shape mismatch in *");
    ExactMatrix out(rows_, m.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const ParamPoly& aik = at(i, k);
            if (aik.isZero()) continue;
            for (int j = 0; j < m.cols_; ++j) {
                const ParamPoly& bkj = m.at(k, j);
                if (bkj.isZero()) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

ExactMatrix ExactMatrix::scaled(const ParamPoly& s) const {
    ExactMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k] * s;
    return out;
}

ExactMatrix ExactMatrix::transposed() const {
    ExactMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

ExactMatrix ExactMatrix::dagger() const {
    ExactMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            ParamPoly conj;
            for (const auto& [x, z] : at(i, j).terms()) {
                ParamPoly mono(z.conj());
                for (int g = 0; g < kNumGens; ++g)
                    for (int k = 0; k < x.e[g]; ++k)
                        mono *= ParamPoly::generator(static_cast<Gen>(g));
                conj += mono;
            }
            out.at(j, i) = conj;
        }
    return out;
}

ParamPoly ExactMatrix::trace() const {
    ParamPoly t;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
}

ExactMatrix ExactMatrix::substitute(const std::map<Gen, Rational>& assignment) const {
    ExactMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) out.e_[k] = e_[k].substitute(assignment);
    return out;
}

int ExactMatrix::rank() const {
    if (!isConstant()) throw FaultError("rank() requires a constant matrix");
    std::vector<std::vector<Gauss>> a(rows_, std::vector<Gauss>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) a[i][j] = at(i, j).constantValue();

    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (!a[r][col].isZero()) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        const Gauss inv = Gauss(1) / a[rank][col];
        for (int j = col; j < cols_; ++j) a[rank][j] *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || a[r][col].isZero()) continue;
            const Gauss f = a[r][col];
            for (int j = col; j < cols_; ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

int ExactMatrix::spanRank(const std::vector<ExactMatrix>& mats) {
    if (mats.empty()) return 0;
    const int n = mats.front().rows() * mats.front().cols();
    ExactMatrix stacked(static_cast<int>(mats.size()), n);
    for (std::size_t r = 0; r < mats.size(); ++r) {
        int k = 0;
        for (int i = 0; i < mats[r].rows(); ++i)
            for (int j = 0; j < mats[r].cols(); ++j) stacked.at(static_cast<int>(r), k++) = mats[r].at(i, j);
    }
    return stacked.rank();
}

std::string ExactMatrix::str() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
        out += i == 0 ? "[" : " ";
        for (int j = 0; j < cols_; ++j) {
            out += at(i, j).str();
            if (j + 1 < cols_) out += ", ";
        }
        out += i + 1 < rows_ ? ";\n" : "]";
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) { return os << m.str(); }

ExactMatrix blockMatrix(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c,
                        const ExactMatrix& d) {
    const int n = a.rows();
    if (a.cols() != n || b.rows() != n || b.cols() != n || c.rows() != n || c.cols() != n ||
        d.rows() != n || d.cols() != n)
        throw FaultError("blockMatrix: blocks must be square and equal-sized");
    ExactMatrix out(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            out.at(i, j) = a.at(i, j);
            out.at(i, n + j) = b.at(i, j);
            out.at(n + i, j) = c.at(i, j);
            out.at(n + i, n + j) = d.at(i, j);
        }
    return out;
}

}  // namespace f4osc
