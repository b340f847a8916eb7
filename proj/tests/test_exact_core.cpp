#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "f4osc/errors.hpp"
#include "f4osc/matrix.hpp"
#include "f4osc/parampoly.hpp"

using namespace f4osc;

namespace {

std::mt19937 rng(20260810);

Rational randomRational() {
    std::uniform_int_distribution<long> num(-12, 12), den(1, 9);
    return Rational(num(rng), den(rng));
}

Gauss randomGauss() { return Gauss(randomRational(), randomRational()); }

ParamPoly randomPoly(int maxTerms = 4, int maxDeg = 2) {
    std::uniform_int_distribution<int> nTerms(1, maxTerms), expo(0, maxDeg), gen(0, kNumGens - 1);
    ParamPoly p;
    for (int t = 0; t < nTerms(rng); ++t) {
        ParamPoly mono(randomGauss());
        for (int reps = expo(rng); reps > 0; --reps)
            mono *= ParamPoly::generator(static_cast<Gen>(gen(rng)));
        p += mono;
    }
    return p;
}

ExactMatrix randomMatrix(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = ParamPoly(randomGauss());
    return m;
}

}  // namespace

TEST_CASE("rational arithmetic basics") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(4, 8) == Rational(1, 2));  // canonical form
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-1, 2).den() == 2);  // denominator stays positive
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK(Rational(-5, 1).str() == "-5");
    CHECK(Rational::fromString("91/72") == Rational(91, 72));
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZeroError);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DivisionByZeroError);
}

TEST_CASE("gaussian rational arithmetic") {
    const Gauss i = Gauss::i();
    CHECK(i * i == Gauss(-1));
    CHECK((Gauss(Rational(1, 2), Rational(1, 3)).conj() ==
           Gauss(Rational(1, 2), Rational(-1, 3))));
    // conjugation is an involution
    for (int t = 0; t < 50; ++t) {
        const Gauss z = randomGauss();
        CHECK(z.conj().conj() == z);
    }
    // field inverse
    const Gauss z(Rational(3, 4), Rational(-2, 5));
    CHECK(z / z == Gauss(1));
    CHECK_THROWS_AS(z / Gauss(), DivisionByZeroError);
    CHECK(Gauss(Rational(1, 2), Rational(-1, 3)).str() == "1/2-1/3*i");
    CHECK(Gauss(Rational(0), Rational(1)).str() == "1*i");
}

TEST_CASE("supertrace identity of the critical couplings") {
    // 91/72 + 7*(-5/72) - 8*(7/72) = 0
    const Rational v1(91, 72), vmid(-5, 72), vtop(7, 72);
    CHECK(v1 + Rational(7) * vmid - Rational(8) * vtop == Rational(0));
}

TEST_CASE("parameter polynomial substitution") {
    const ParamPoly c = ParamPoly::generator(Gen::c);
    const ParamPoly d = ParamPoly::generator(Gen::d);

    // substitute d = c/3 into (3d - c) -> 0 requires symbolic d -> value;
    // here the substitution operation binds rationals, so probe at points:
    // with d=1/6, c=1/2 the relation 3d - c vanishes
    const ParamPoly rel = ParamPoly(3) * d - c;
    CHECK(rel.substitute({{Gen::d, Rational(1, 6)}, {Gen::c, Rational(1, 2)}}).isZero());

    // empty substitution is the identity
    const ParamPoly p = randomPoly();
    CHECK(p.substitute({}) == p);

    // substitute c = 1/12 into (-1/2 + 6c) -> 0
    const ParamPoly e = ParamPoly(Rational(-1, 2)) + ParamPoly(6) * c;
    CHECK(e.substitute({{Gen::c, Rational(1, 12)}}).isZero());

    // partial substitution keeps the remaining generator
    const ParamPoly q = c * d;
    const ParamPoly partial = q.substitute({{Gen::d, Rational(2)}});
    CHECK(partial == ParamPoly(2) * c);
}

TEST_CASE("parameter polynomial ring axioms (randomized, exact)") {
    for (int t = 0; t < 40; ++t) {
        const ParamPoly p = randomPoly(), q = randomPoly(), r = randomPoly();
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
    }
}

TEST_CASE("degree cap is a hard error") {
    const ParamPoly c = ParamPoly::generator(Gen::c);
    ParamPoly p(1);
    for (int k = 0; k < ParamPoly::kDegreeCap; ++k) p *= c;  // degree 8: fine
    CHECK(p.degree() == ParamPoly::kDegreeCap);
    CHECK_THROWS_AS(p * c, DegreeCapError);
}

TEST_CASE("rational roots") {
    const ParamPoly c = ParamPoly::generator(Gen::c);

    SUBCASE("12c - 1") {
        const auto roots = rationalRoots(ParamPoly(12) * c - ParamPoly(1));
        REQUIRE(roots.size() == 1);
        CHECK(roots[0] == Rational(1, 12));
    }
    SUBCASE("c^2 - 1/144") {
        // oracle: substitute-and-check both candidate values
        const ParamPoly p = c * c - ParamPoly(Rational(1, 144));
        CHECK(p.evalUnivariate(Rational(1, 12)).isZero());
        CHECK(p.evalUnivariate(Rational(-1, 12)).isZero());
        const auto roots = rationalRoots(p);
        REQUIRE(roots.size() == 2);
        CHECK(roots[0] == Rational(-1, 12));
        CHECK(roots[1] == Rational(1, 12));
    }
    SUBCASE("c^2 + 1 has no rational roots") {
        CHECK(rationalRoots(c * c + ParamPoly(1)).empty());
    }
    SUBCASE("zero polynomial is an error") {
        CHECK_THROWS_AS(rationalRoots(ParamPoly()), ZeroPolynomialError);
    }
    SUBCASE("every returned root vanishes under substitution") {
        std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
        for (int t = 0; t < 25; ++t) {
            // build a polynomial with known roots times a rootless factor
            const Rational r1(num(rng), den(rng)), r2(num(rng), den(rng));
            ParamPoly p = (c - ParamPoly(r1)) * (c - ParamPoly(r2)) * (c * c + ParamPoly(1));
            for (const auto& r : rationalRoots(p)) CHECK(p.evalUnivariate(r).isZero());
        }
    }
}

TEST_CASE("matrix multiplication is associative (randomized 4x4, exact)") {
    for (int t = 0; t < 15; ++t) {
        const ExactMatrix a = randomMatrix(4), b = randomMatrix(4), m = randomMatrix(4);
        CHECK((a * b) * m == a * (b * m));
    }
}

TEST_CASE("matrix rank over the gaussian rationals") {
    ExactMatrix m(3, 3);
    m.at(0, 0) = ParamPoly(1);
    m.at(0, 1) = ParamPoly(2);
    m.at(1, 0) = ParamPoly(2);
    m.at(1, 1) = ParamPoly(4);  // row 1 = 2 * row 0
    m.at(2, 2) = ParamPoly(Gauss::i());
    CHECK(m.rank() == 2);
    CHECK(ExactMatrix::identity(5).rank() == 5);
    CHECK(ExactMatrix(4, 4).rank() == 0);
}

TEST_CASE("canonical rendering is deterministic graded-lex") {
    const ParamPoly c = ParamPoly::generator(Gen::c);
    const ParamPoly p = ParamPoly(Rational(-1, 2)) + ParamPoly(6) * c;
    CHECK(p.str() == "(6)*c + (-1/2)");
}
