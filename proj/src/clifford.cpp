#include "f4osc/clifford.hpp"

#include <algorithm>

#include "f4osc/errors.hpp"

namespace f4osc {

namespace {

// compact form of a +/-1 signed permutation matrix: column j holds
// sign[j] at row row[j]
struct SignedPerm {
    std::array<int, 16> row;
    std::array<int, 16> sign;
};

SignedPerm toSignedPerm(const ExactMatrix& m) {
    SignedPerm sp{};
    std::vector<bool> rowUsed(m.rows(), false);
    for (int j = 0; j < m.cols(); ++j) {
        int hits = 0;
        for (int i = 0; i < m.rows(); ++i) {
            const ParamPoly& p = m.at(i, j);
            if (p.isZero()) continue;
            const Gauss z = p.constantValue();
            if (!z.isReal() || (z.re() != Rational(1) && z.re() != Rational(-1)))
                throw FaultError("basis product entry is not +/-1");
            sp.row[j] = i;
            sp.sign[j] = z.re().sign();
            ++hits;
        }
        if (hits != 1 || rowUsed[sp.row[j]])
            throw FaultError("basis product is not a signed permutation matrix");
        rowUsed[sp.row[j]] = true;
    }
    return sp;
}

int traceDot(const SignedPerm& a, const SignedPerm& b, int n) {
    // tr(a^T b) using one +/-1 entry per column
    int t = 0;
    for (int j = 0; j < n; ++j)
        if (a.row[j] == b.row[j]) t += a.sign[j] * b.sign[j];
    return t;
}

// is m equal to s*base for s in {+1,-1}?
bool isPlusMinus(const ExactMatrix& m, const ExactMatrix& base) {
    if (m == base) return true;
    return m == base.scaled(ParamPoly(-1));
}

}  // namespace

GammaSmall buildGammaSmall(const OctonionTensors& t) {
    std::array<ExactMatrix, 7> g;
    for (int i = 1; i <= 7; ++i) {
        ExactMatrix m(8, 8);
        for (int mm = 1; mm <= 7; ++mm) {
            m.at(0, mm) = ParamPoly(Rational(mm == i ? 1 : 0));
            m.at(mm, 0) = ParamPoly(Rational(mm == i ? -1 : 0));
        }
        for (int l = 1; l <= 7; ++l)
            for (int mm = 1; mm <= 7; ++mm) m.at(l, mm) = ParamPoly(Rational(t.C3(i, l, mm)));
        g[i - 1] = m;
    }

    // cross-check against the left-multiplication map x -> e_i x; the map
    // reproduces the formula matrices up to one overall sign, which must be
    // uniform across all seven
    int overall = 0;
    for (int i = 1; i <= 7; ++i) {
        ExactMatrix mapM(8, 8);
        for (int col = 0; col <= 7; ++col) {
            const Octonion image = multiply(t, Octonion::unit(i), Octonion::unit(col));
            mapM.at(0, col) = ParamPoly(image.x0);
            for (int r = 1; r <= 7; ++r) mapM.at(r, col) = ParamPoly(image.xj[r - 1]);
        }
        int sign;
        if (mapM == g[i - 1]) sign = 1;
        else if (mapM == g[i - 1].scaled(ParamPoly(-1))) sign = -1;
        else throw FaultError("gamma construction fault: map and formula disagree");
        if (overall == 0) overall = sign;
        else if (overall != sign)
            throw FaultError("gamma construction fault: non-uniform overall sign");
    }
    return GammaSmall(std::move(g));
}

GammaBig buildGammaBig(const GammaSmall& g) {
    const ExactMatrix z8(8, 8), i8 = ExactMatrix::identity(8);
    std::array<ExactMatrix, 9> G;
    for (int i = 1; i <= 7; ++i)
        G[i - 1] = blockMatrix(z8, g.gamma(i), g.gamma(i).scaled(ParamPoly(-1)), z8);
    G[7] = blockMatrix(z8, i8, i8, z8);
    G[8] = blockMatrix(i8, z8, z8, i8.scaled(ParamPoly(-1)));
    return GammaBig(std::move(G));
}

ExactMatrix gammaProduct(const GammaSmall& g, const std::vector<int>& idx) {
    ExactMatrix m = ExactMatrix::identity(8);
    for (int i : idx) m = m * g.gamma(i);
    return m;
}

ExactMatrix gammaProduct(const GammaBig& g, const std::vector<int>& idx) {
    ExactMatrix m = ExactMatrix::identity(16);
    for (int i : idx) m = m * g.Gamma(i);
    return m;
}

BasisClassification classifyBasis(const GammaBig& g) {
    // row index per (rank in 1..7, has Gamma_8, has Gamma_9), table order
    auto rowIndex = [](int r7, bool h8, bool h9) -> int {
        static constexpr int kIdx[5][2][2] = {
            // [r7][h8][h9]
            {{0, 3}, {2, 7}},    // r7=0:  I, G9, G8, G8G9
            {{1, 6}, {5, 11}},   // r7=1
            {{4, 10}, {9, 15}},  // r7=2
            {{8, 14}, {13, -1}},  // r7=3
            {{12, -1}, {-1, -1}}  // r7=4
        };
        return kIdx[r7][h8 ? 1 : 0][h9 ? 1 : 0];
    };
    static constexpr const char* kLabels[16] = {
        "I", "Gamma^(1)", "Gamma_8", "Gamma_9",
        "Gamma^(2)", "Gamma^(1)*Gamma_8", "Gamma^(1)*Gamma_9", "Gamma_8*Gamma_9",
        "Gamma^(3)", "Gamma^(2)*Gamma_8", "Gamma^(2)*Gamma_9", "Gamma^(1)*Gamma_8*Gamma_9",
        "Gamma^(4)", "Gamma^(3)*Gamma_8", "Gamma^(3)*Gamma_9", "Gamma^(2)*Gamma_8*Gamma_9"};

    BasisClassification out;
    for (int r = 0; r < 16; ++r) out.rows[r].label = kLabels[r];

    std::vector<SignedPerm> forms;
    forms.reserve(256);
    std::array<bool, 16> seen{};

    for (int mask = 0; mask < (1 << 9); ++mask) {
        const int rank = __builtin_popcount(static_cast<unsigned>(mask));
        if (rank > 4) continue;
        std::vector<int> idx;
        for (int bit = 0; bit < 9; ++bit)
            if (mask & (1 << bit)) idx.push_back(bit + 1);
        const bool h8 = mask & (1 << 7), h9 = mask & (1 << 8);
        const int r7 = rank - (h8 ? 1 : 0) - (h9 ? 1 : 0);
        const int row = rowIndex(r7, h8, h9);
        if (row < 0) throw FaultError("classifyBasis: impossible class");

        const ExactMatrix m = gammaProduct(g, idx);
        forms.push_back(toSignedPerm(m));

        bool dg = true, ad = true;
        for (int i = 0; i < 16; ++i)
            for (int j = 0; j < 16; ++j) {
                if (m.at(i, j).isZero()) continue;
                const bool sameBlock = (i < 8) == (j < 8);
                if (sameBlock) ad = false;
                else dg = false;
            }
        if (dg == ad) throw FaultError("classifyBasis: product neither dg nor ad");
        const bool sym = m.isSymmetric();
        if (!sym && !m.isAntisymmetric())
            throw FaultError("classifyBasis: product neither symmetric nor antisymmetric");

        BasisRow& br = out.rows[row];
        if (!seen[row]) {
            br.blockDiagonal = dg;
            br.symmetric = sym;
            seen[row] = true;
        } else if (br.blockDiagonal != dg || br.symmetric != sym) {
            throw FaultError("classifyBasis: class " + br.label + " is not homogeneous");
        }
        ++br.count;
    }

    // pairwise trace orthogonality proves independence of all 256 products
    for (std::size_t p = 0; p < forms.size(); ++p) {
        if (traceDot(forms[p], forms[p], 16) != 16)
            throw FaultError("classifyBasis: wrong self trace");
        for (std::size_t q = p + 1; q < forms.size(); ++q)
            if (traceDot(forms[p], forms[q], 16) != 0)
                throw FaultError("classifyBasis: products not trace-orthogonal");
    }

    for (const auto& r : out.rows) {
        out.total += r.count;
        (r.symmetric ? out.symmetricTotal : out.antisymmetricTotal) += r.count;
    }
    return out;
}

bool verifySmallHodgeDuality(const GammaSmall& g) {
    for (int mask = 0; mask < (1 << 7); ++mask) {
        std::vector<int> idx, comp;
        for (int bit = 0; bit < 7; ++bit)
            ((mask & (1 << bit)) ? idx : comp).push_back(bit + 1);
        if (!isPlusMinus(gammaProduct(g, comp), gammaProduct(g, idx))) return false;
    }
    return true;
}

bool verifyBigHodgeDuality(const GammaBig& g) {
    for (int mask = 0; mask < (1 << 9); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) < 5) continue;
        std::vector<int> idx, comp;
        for (int bit = 0; bit < 9; ++bit)
            ((mask & (1 << bit)) ? idx : comp).push_back(bit + 1);
        if (!isPlusMinus(gammaProduct(g, idx), gammaProduct(g, comp))) return false;
    }
    return true;
}

}  // namespace f4osc
