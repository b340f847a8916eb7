#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "f4osc/errors.hpp"
#include "f4osc/f4.hpp"

using namespace f4osc;

namespace {

struct Fixture {
    OctonionTensors t = OctonionTensors::build();
    GammaBig gb = buildGammaBig(buildGammaSmall(OctonionTensors::build()));
    CriticalSolution second;
    CriticalSolution first;
    Fixture() {
        second = findCriticalC(Branch::second, t, gb);
        first = findCriticalC(Branch::first, t, gb);
    }
};

const Fixture& fx() {
    static Fixture f;
    return f;
}

}  // namespace

TEST_CASE("superconformal building blocks at a generic on-branch c") {
    const auto& f = fx();
    const SuperconformalSet s = buildSuperconformal(Branch::second, ParamPoly(Rational(1, 5)),
                                                    f.t, f.gb);
    // {Qt_3, Qt_3} = 2K
    CHECK(pairBracket(s.Qt[2], s.Qt[2]) ==
          s.K.scaled(ParamPoly(2)));
    // {Q_5, Qt_5} = D
    CHECK(pairBracket(s.Q[4], s.Qt[4]) == s.D);
    // R antisymmetry
    for (int I = 1; I <= 8; ++I)
        for (int J = 1; J <= 8; ++J)
            CHECK((s.r(I, J) + s.r(J, I)).isZero());
    // D = -i(x d + 1/2) I16
    OperatorMatrix d = OperatorMatrix::term(
        XD{1, 1}, ExactMatrix::identity(16).scaled(ParamPoly(Gauss(Rational(0), Rational(-1)))));
    d += OperatorMatrix::constant(
        ExactMatrix::identity(16).scaled(ParamPoly(Gauss(Rational(0), Rational(-1, 2)))));
    CHECK(s.D == d);
}

TEST_CASE("critical coupling and parameter tuples") {
    const auto& f = fx();

    CHECK(f.first.c == Rational(1, 12));
    CHECK(f.second.c == Rational(-1, 12));

    // (a, b, c, d, e)
    CHECK(f.first.params == std::array<Rational, 5>{Rational(-1, 36), Rational(0),
                                                    Rational(1, 12), Rational(1, 36),
                                                    Rational(0)});
    CHECK(f.second.params == std::array<Rational, 5>{Rational(1, 36), Rational(0),
                                                     Rational(-1, 12), Rational(1, 36),
                                                     Rational(0)});
    CHECK(f.first.residualCount > 0);
}

TEST_CASE("critical potentials") {
    const auto& f = fx();
    std::array<Rational, 16> expect2;
    expect2[0] = Rational(91, 72);
    for (int k = 1; k < 8; ++k) expect2[k] = Rational(-5, 72);
    for (int k = 8; k < 16; ++k) expect2[k] = Rational(7, 72);
    CHECK(f.second.V == expect2);

    std::array<Rational, 16> expect1;
    for (int k = 0; k < 8; ++k) expect1[k] = Rational(7, 72);
    expect1[8] = Rational(91, 72);
    for (int k = 9; k < 16; ++k) expect1[k] = Rational(-5, 72);
    CHECK(f.first.V == expect1);
}

TEST_CASE("seven linear constraints and R-span ranks") {
    const auto& f = fx();
    const Report rep = verifySevenConstraints(f.second, f.t, f.gb);
    for (const auto& c : rep.checks()) {
        CAPTURE(c.name);
        CHECK(c.pass);
    }
}

TEST_CASE("structure relations at criticality") {
    const auto& f = fx();

    SUBCASE("sample sweep") {
        const Report rep = verifyStructureRelations(f.second, f.t, false);
        for (const auto& c : rep.checks()) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.pass);
        }
    }
    SUBCASE("explicit spot checks") {
        const auto& S = f.second.set;
        // [R_12, Q_8] = (i/3) C_12k Q_k = (i/3) Q_3
        CHECK(OperatorMatrix::commutator(OperatorMatrix::constant(S.r(1, 2)), S.Q[7]) ==
              S.Q[2].scaled(ParamPoly(Gauss(Rational(0), Rational(1, 3)))));
        // [R_12, Q_3] = -(i/3) Q_8 + (i/3) C_123l Q_l + i Q_... with C_123=1:
        // C_123l vanishes, deltas vanish, so the commutator is -(i/3) Q_8
        CHECK(OperatorMatrix::commutator(OperatorMatrix::constant(S.r(1, 2)), S.Q[2]) ==
              S.Q[7].scaled(ParamPoly(Gauss(Rational(0), Rational(-1, 3)))));
    }
}

TEST_CASE("graded Jacobi sample and recorded bracket coefficients") {
    const auto& f = fx();
    const Report rep = verifyJacobi(f.second, false);
    for (const auto& c : rep.checks()) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
    // regression-pin the computed sl(2)/mixed coefficients
    const auto& rec = rep.checks().front();
    REQUIRE(rec.name == "sl2_and_mixed_bracket_coefficients");
    CHECK(rec.detail ==
          "[H,D]=(-2*i)H [D,K]=(-2*i)K [H,K]=(-1*i)D [D,Q]=(1*i)Q [K,Q]=(1*i)Qt "
          "[H,Qt]=(-1*i)Q [D,Qt]=(-1*i)Qt");
}

TEST_CASE("explicit Jacobi triples") {
    const auto& f = fx();
    const auto& S = f.second.set;
    // (H, D, K): plain sl(2) Jacobi
    const OperatorMatrix j1 = OperatorMatrix::commutator(S.H, OperatorMatrix::commutator(S.D, S.K));
    const OperatorMatrix j2 = OperatorMatrix::commutator(S.D, OperatorMatrix::commutator(S.K, S.H));
    const OperatorMatrix j3 = OperatorMatrix::commutator(S.K, OperatorMatrix::commutator(S.H, S.D));
    CHECK((j1 + j2 + j3).isZero());

    // (Q_1, Q_1, Qt_2): oracle = direct bracket expansion of the graded form
    // -[Q1,{Q1,Qt2}] - [Q1,{Qt2,Q1}] - [Qt2,{Q1,Q1}] = 0
    const OperatorMatrix t1 =
        OperatorMatrix::commutator(S.Q[0], OperatorMatrix::anticommutator(S.Q[0], S.Qt[1]));
    const OperatorMatrix t2 =
        OperatorMatrix::commutator(S.Q[0], OperatorMatrix::anticommutator(S.Qt[1], S.Q[0]));
    const OperatorMatrix t3 =
        OperatorMatrix::commutator(S.Qt[1], OperatorMatrix::anticommutator(S.Q[0], S.Q[0]));
    CHECK((t1 + t2 + t3).isZero());
}

TEST_CASE("branch equivalence under Gamma_8 conjugation") {
    const auto& f = fx();
    const Report rep = verifyBranchEquivalence(f.first, f.second, f.gb);
    for (const auto& c : rep.checks()) {
        CAPTURE(c.name);
        CHECK(c.pass);
    }
}
