#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "f4osc/octonion.hpp"

using namespace f4osc;

namespace {

std::mt19937 rng(31415);

Octonion randomOctonion() {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
    Octonion x;
    x.x0 = Rational(num(rng), den(rng));
    for (auto& v : x.xj) v = Rational(num(rng), den(rng));
    return x;
}

}  // namespace

TEST_CASE("seed entries and antisymmetry") {
    const auto t = OctonionTensors::build();
    CHECK(t.C3(1, 2, 3) == 1);
    CHECK(t.C3(2, 1, 3) == -1);  // antisymmetry
    CHECK(t.C3(1, 4, 7) == 1);
    CHECK(t.C3(1, 6, 5) == 1);
    CHECK(t.C3(1, 5, 6) == -1);
    CHECK(t.C3(1, 1, 2) == 0);
    CHECK(t.C4(4, 5, 6, 7) == 1);
    CHECK(t.C4(5, 4, 6, 7) == -1);
    CHECK(t.C4(2, 4, 3, 7) == 1);
    CHECK(t.C4(2, 3, 4, 7) == -1);
    CHECK(OctonionTensors::eps7({1, 2, 3, 4, 5, 6, 7}) == 1);
    CHECK(OctonionTensors::eps7({2, 1, 3, 4, 5, 6, 7}) == -1);
    CHECK(OctonionTensors::eps7({1, 1, 3, 4, 5, 6, 7}) == 0);
}

TEST_CASE("counting: 7 lines and 7 complementary quadruples") {
    const auto t = OctonionTensors::build();
    const auto lines = t.lines();
    const auto quads = t.quads();
    CHECK(lines.size() == 7);
    CHECK(quads.size() == 7);
    // each quadruple is the complement of one line
    for (const auto& l : lines) {
        std::array<bool, 8> in{};
        for (int i : l) in[i] = true;
        std::array<int, 4> comp{};
        int n = 0;
        for (int i = 1; i <= 7; ++i)
            if (!in[i]) comp[n++] = i;
        CHECK(std::find(quads.begin(), quads.end(), comp) != quads.end());
    }
}

TEST_CASE("octonion multiplication") {
    const auto t = OctonionTensors::build();
    auto e = [](int j) { return Octonion::unit(j); };

    CHECK(multiply(t, e(1), e(2)) == e(3));
    Octonion minusOne;
    minusOne.x0 = Rational(-1);
    CHECK(multiply(t, e(5), e(5)) == minusOne);  // e_5^2 = -1

    // non-associativity: (e1 e2) e4 = -e5 but e1 (e2 e4) = +e5
    const Octonion left = multiply(t, multiply(t, e(1), e(2)), e(4));
    const Octonion right = multiply(t, e(1), multiply(t, e(2), e(4)));
    Octonion minusE5;
    minusE5.xj[4] = Rational(-1);
    CHECK(left == minusE5);
    CHECK(right == e(5));

    // unit element
    const Octonion x = randomOctonion();
    CHECK(multiply(t, e(0), x) == x);
    CHECK(multiply(t, x, e(0)) == x);
}

TEST_CASE("alternativity: (x x) y = x (x y), exact randomized") {
    const auto t = OctonionTensors::build();
    for (int k = 0; k < 30; ++k) {
        const Octonion x = randomOctonion(), y = randomOctonion();
        CHECK(multiply(t, multiply(t, x, x), y) == multiply(t, x, multiply(t, x, y)));
    }
}

TEST_CASE("norm composition: N(xy) = N(x)N(y), exact randomized") {
    const auto t = OctonionTensors::build();
    for (int k = 0; k < 30; ++k) {
        const Octonion x = randomOctonion(), y = randomOctonion();
        CHECK(multiply(t, x, y).normSquared() == x.normSquared() * y.normSquared());
    }
}

TEST_CASE("duality 6 C_ijkl = eps_ijklmnp C_mnp") {
    const auto t = OctonionTensors::build();

    SUBCASE("full sweep passes") {
        const auto rep = verifyDuality(t);
        CHECK(rep.pass);
        CHECK(rep.checkedTuples == 7 * 7 * 7 * 7);
        CHECK(!rep.firstCounterexample.has_value());
    }
    SUBCASE("tampering C4[4][5][6][7] fails at (4,5,6,7)") {
        const auto bad = t.tamperedC4(4, 5, 6, 7, -1);
        const auto rep = verifyDuality(bad);
        CHECK(!rep.pass);
        REQUIRE(rep.firstCounterexample.has_value());
        CHECK(*rep.firstCounterexample == std::array<int, 4>{4, 5, 6, 7});
    }
    SUBCASE("repeated index tuple gives 0 = 0") {
        CHECK(t.C4(1, 1, 2, 3) == 0);
        long rhs = 0;
        for (int m = 1; m <= 7; ++m)
            for (int n = 1; n <= 7; ++n)
                for (int p = 1; p <= 7; ++p) {
                    const int eps = OctonionTensors::eps7({1, 1, 2, 3, m, n, p});
                    if (eps != 0) rhs += eps * t.C3(m, n, p);
                }
        CHECK(rhs == 0);
    }
}
