#include "f4osc/octonion.hpp"

#include <algorithm>

#include "f4osc/errors.hpp"

namespace f4osc {

namespace {

constexpr int kLines[7][3] = {{1, 2, 3}, {1, 4, 7}, {1, 6, 5}, {2, 4, 6},
                              {2, 5, 7}, {3, 5, 4}, {3, 6, 7}};
constexpr int kQuads[7][4] = {{4, 5, 6, 7}, {2, 3, 5, 6}, {2, 4, 3, 7}, {1, 3, 5, 7},
                              {1, 3, 4, 6}, {1, 2, 7, 6}, {1, 2, 4, 5}};

template <typename Seq>
int permutationSign(Seq v) {
    int sign = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            if (v[j] == v[i]) return 0;
            if (v[j] < v[i]) {
                std::swap(v[i], v[j]);
                sign = -sign;
            }
        }
    }
    return sign;
}

}  // namespace

OctonionTensors OctonionTensors::build() {
    OctonionTensors t;
    for (const auto& s : kLines) {
        std::array<int, 3> perm = {0, 1, 2};
        do {
            const int i = s[perm[0]], j = s[perm[1]], k = s[perm[2]];
            t.c3_[i - 1][j - 1][k - 1] = static_cast<std::int8_t>(permutationSign(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    for (const auto& s : kQuads) {
        std::array<int, 4> perm = {0, 1, 2, 3};
        do {
            const int i = s[perm[0]], j = s[perm[1]], k = s[perm[2]], l = s[perm[3]];
            t.c4_[i - 1][j - 1][k - 1][l - 1] = static_cast<std::int8_t>(permutationSign(perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return t;
}

int OctonionTensors::eps7(const std::array<int, 7>& idx) { return permutationSign(idx); }

std::vector<std::array<int, 3>> OctonionTensors::lines() const {
    std::vector<std::array<int, 3>> out;
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j)
            for (int k = j + 1; k <= 7; ++k)
                if (C3(i, j, k) != 0) out.push_back({i, j, k});
    return out;
}

std::vector<std::array<int, 4>> OctonionTensors::quads() const {
    std::vector<std::array<int, 4>> out;
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j)
            for (int k = j + 1; k <= 7; ++k)
                for (int l = k + 1; l <= 7; ++l)
                    if (C4(i, j, k, l) != 0) out.push_back({i, j, k, l});
    return out;
}

OctonionTensors OctonionTensors::tamperedC4(int i, int j, int k, int l, int value) const {
    OctonionTensors t = *this;
    t.c4_[i - 1][j - 1][k - 1][l - 1] = static_cast<std::int8_t>(value);
    return t;
}

Octonion Octonion::unit(int j) {
    Octonion x;
    if (j == 0) x.x0 = Rational(1);
    else x.xj[j - 1] = Rational(1);
    return x;
}

Rational Octonion::normSquared() const {
    Rational n = x0 * x0;
    for (const auto& v : xj) n += v * v;
    return n;
}

Octonion operator+(const Octonion& x, const Octonion& y) {
    Octonion z;
    z.x0 = x.x0 + y.x0;
    for (int j = 0; j < 7; ++j) z.xj[j] = x.xj[j] + y.xj[j];
    return z;
}

Octonion operator-(const Octonion& x, const Octonion& y) {
    Octonion z;
    z.x0 = x.x0 - y.x0;
    for (int j = 0; j < 7; ++j) z.xj[j] = x.xj[j] - y.xj[j];
    return z;
}

Octonion multiply(const OctonionTensors& t, const Octonion& x, const Octonion& y) {
    Octonion z;
    z.x0 = x.x0 * y.x0;
    for (int j = 1; j <= 7; ++j) {
        z.x0 -= x.xj[j - 1] * y.xj[j - 1];  // e_j e_j = -1
        z.xj[j - 1] = x.x0 * y.xj[j - 1] + x.xj[j - 1] * y.x0;
    }
    for (int i = 1; i <= 7; ++i) {
        if (x.xj[i - 1].isZero()) continue;
        for (int j = 1; j <= 7; ++j) {
            if (y.xj[j - 1].isZero()) continue;
            for (int k = 1; k <= 7; ++k) {
                const int c = t.C3(i, j, k);
                if (c != 0) z.xj[k - 1] += Rational(c) * x.xj[i - 1] * y.xj[j - 1];
            }
        }
    }
    return z;
}

DualityReport verifyDuality(const OctonionTensors& t) {
    DualityReport rep;
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j)
            for (int k = 1; k <= 7; ++k)
                for (int l = 1; l <= 7; ++l) {
                    long rhs = 0;
                    for (int m = 1; m <= 7; ++m)
                        for (int n = 1; n <= 7; ++n)
                            for (int p = 1; p <= 7; ++p) {
                                const int eps = OctonionTensors::eps7({i, j, k, l, m, n, p});
                                if (eps != 0) rhs += eps * t.C3(m, n, p);
                            }
                    ++rep.checkedTuples;
                    if (6 * t.C4(i, j, k, l) != rhs && rep.pass) {
                        rep.pass = false;
                        rep.firstCounterexample = {{i, j, k, l}};
                    }
                }
    return rep;
}

}  // namespace f4osc
