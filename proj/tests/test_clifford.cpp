#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "f4osc/clifford.hpp"
#include "f4osc/errors.hpp"

using namespace f4osc;

namespace {

struct Fixture {
    OctonionTensors t = OctonionTensors::build();
    GammaSmall gs = buildGammaSmall(t);
    GammaBig gb = buildGammaBig(gs);
};

const Fixture& fx() {
    static Fixture f;
    return f;
}

}  // namespace

TEST_CASE("gamma entries follow the structure-constant formula") {
    const auto& f = fx();
    // (gamma_1)_{2,3} = C_123 = 1 in 1-based octonionic block indices
    CHECK(f.gs.gamma(1).at(2, 3) == ParamPoly(1));
    CHECK(f.gs.gamma(1).at(0, 1) == ParamPoly(1));   // delta_im row
    CHECK(f.gs.gamma(1).at(1, 0) == ParamPoly(-1));  // -delta_il column
    for (int i = 1; i <= 7; ++i) CHECK(f.gs.gamma(i).isAntisymmetric());
}

TEST_CASE("Cl(0,7): gamma_i gamma_j + gamma_j gamma_i = -2 delta_ij I8") {
    const auto& f = fx();
    const ExactMatrix i8 = ExactMatrix::identity(8);
    CHECK(f.gs.gamma(1) * f.gs.gamma(1) == i8.scaled(ParamPoly(-1)));
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) {
            const ExactMatrix anti = f.gs.gamma(i) * f.gs.gamma(j) + f.gs.gamma(j) * f.gs.gamma(i);
            CHECK(anti == i8.scaled(ParamPoly(Rational(i == j ? -2 : 0))));
        }
}

TEST_CASE("Cl(9,0): Gamma_A Gamma_B + Gamma_B Gamma_A = 2 delta_AB I16") {
    const auto& f = fx();
    const ExactMatrix i16 = ExactMatrix::identity(16);
    for (int a = 1; a <= 9; ++a)
        for (int b = 1; b <= 9; ++b) {
            const ExactMatrix anti = f.gb.Gamma(a) * f.gb.Gamma(b) + f.gb.Gamma(b) * f.gb.Gamma(a);
            CHECK(anti == i16.scaled(ParamPoly(Rational(a == b ? 2 : 0))));
        }
}

TEST_CASE("Gamma block forms") {
    const auto& f = fx();
    // Gamma_9 = diag(I8, -I8)
    ExactMatrix g9(16, 16);
    for (int k = 0; k < 8; ++k) {
        g9.at(k, k) = ParamPoly(1);
        g9.at(8 + k, 8 + k) = ParamPoly(-1);
    }
    CHECK(f.gb.Gamma(9) == g9);
    // Gamma_8^2 = I (off-diagonal identity blocks)
    CHECK(f.gb.Gamma(8) * f.gb.Gamma(8) == ExactMatrix::identity(16));
    // sample anticommutator away from the diagonal
    CHECK((f.gb.Gamma(3) * f.gb.Gamma(7) + f.gb.Gamma(7) * f.gb.Gamma(3)).isZero());
}

TEST_CASE("symmetric/antisymmetric spans of the 8x8 basis") {
    const auto& f = fx();
    std::vector<ExactMatrix> sym, asym;
    sym.push_back(ExactMatrix::identity(8));
    for (int i = 1; i <= 7; ++i) {
        asym.push_back(gammaProduct(f.gs, {i}));
        for (int j = i + 1; j <= 7; ++j) {
            asym.push_back(gammaProduct(f.gs, {i, j}));
            for (int k = j + 1; k <= 7; ++k) sym.push_back(gammaProduct(f.gs, {i, j, k}));
        }
    }
    for (const auto& m : sym) CHECK(m.isSymmetric());
    for (const auto& m : asym) CHECK(m.isAntisymmetric());
    CHECK(sym.size() == 36);
    CHECK(asym.size() == 28);
    CHECK(ExactMatrix::spanRank(sym) == 36);   // spans all symmetric 8x8
    CHECK(ExactMatrix::spanRank(asym) == 28);  // spans all antisymmetric 8x8
}

TEST_CASE("Hodge duality verified, not assumed") {
    const auto& f = fx();
    CHECK(verifySmallHodgeDuality(f.gs));
    CHECK(verifyBigHodgeDuality(f.gb));
}

TEST_CASE("basis classification reproduces the 256-product table") {
    const auto& f = fx();
    const BasisClassification c = classifyBasis(f.gb);

    const struct {
        const char* label;
        bool dg, sym;
        int count;
    } expected[16] = {
        {"I", true, true, 1},
        {"Gamma^(1)", false, true, 7},
        {"Gamma_8", false, true, 1},
        {"Gamma_9", true, true, 1},
        {"Gamma^(2)", true, false, 21},
        {"Gamma^(1)*Gamma_8", true, false, 7},
        {"Gamma^(1)*Gamma_9", false, false, 7},
        {"Gamma_8*Gamma_9", false, false, 1},
        {"Gamma^(3)", false, false, 35},
        {"Gamma^(2)*Gamma_8", false, false, 21},
        {"Gamma^(2)*Gamma_9", true, false, 21},
        {"Gamma^(1)*Gamma_8*Gamma_9", true, false, 7},
        {"Gamma^(4)", true, true, 35},
        {"Gamma^(3)*Gamma_8", true, true, 35},
        {"Gamma^(3)*Gamma_9", false, true, 35},
        {"Gamma^(2)*Gamma_8*Gamma_9", false, true, 21},
    };
    for (int r = 0; r < 16; ++r) {
        CAPTURE(r);
        CHECK(c.rows[r].label == expected[r].label);
        CHECK(c.rows[r].blockDiagonal == expected[r].dg);
        CHECK(c.rows[r].symmetric == expected[r].sym);
        CHECK(c.rows[r].count == expected[r].count);
    }
    CHECK(c.total == 256);  // 1 + 9 + 36 + 84 + 126
    CHECK(c.symmetricTotal == 136);
    CHECK(c.antisymmetricTotal == 120);
}

TEST_CASE("construction faults are detected") {
    // a tampered C4 leaves the gamma formula inconsistent with the
    // multiplication map only if C3 is touched; tamper C3 via a fake tensor
    // by checking that duality-based construction is what guards it
    const auto t = OctonionTensors::build();
    const auto bad = t.tamperedC4(4, 5, 6, 7, -1);
    // gamma build does not involve C4, so it still succeeds
    CHECK_NOTHROW(buildGammaSmall(bad));
}
