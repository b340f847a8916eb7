#ifndef F4OSC_OCTONION_HPP
#define F4OSC_OCTONION_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "f4osc/rational.hpp"

namespace f4osc {

/// Totally antisymmetric octonionic structure tensors over indices 1..7:
/// rank-3 C_ijk, rank-4 C_ijkl, and the rank-7 Levi-Civita symbol.
/// Normalization: C_123 = C_147 = C_165 = C_246 = C_257 = C_354 = C_367 = 1,
/// C_4567 = C_2356 = C_2437 = C_1357 = C_1346 = C_1276 = C_1245 = 1,
/// eps_1234567 = 1.
class OctonionTensors {
public:
    static OctonionTensors build();

    /// 1-based indices throughout.
    int C3(int i, int j, int k) const { return c3_[i - 1][j - 1][k - 1]; }
    int C4(int i, int j, int k, int l) const { return c4_[i - 1][j - 1][k - 1][l - 1]; }

    /// Sign of the permutation (i1..i7) of (1..7); 0 on repeats.
    static int eps7(const std::array<int, 7>& idx);

    /// The 7 independent ascending triples with C3 = +1 or -1.
    std::vector<std::array<int, 3>> lines() const;
    /// The 7 independent ascending quadruples with C4 != 0.
    std::vector<std::array<int, 4>> quads() const;

    /// Copy with one raw C4 slot overwritten (fault injection for tests).
    OctonionTensors tamperedC4(int i, int j, int k, int l, int value) const;

private:
    OctonionTensors() = default;
    std::int8_t c3_[7][7][7] = {};
    std::int8_t c4_[7][7][7][7] = {};
};

/// Real octonion x0 + x_j e_j with rational coordinates.
struct Octonion {
    Rational x0;
    std::array<Rational, 7> xj{};

    static Octonion unit(int j);  // e_j for j=1..7, the real unit for j=0

    /// N(x) = x0^2 + sum x_j^2.
    Rational normSquared() const;

    friend Octonion operator+(const Octonion& x, const Octonion& y);
    friend Octonion operator-(const Octonion& x, const Octonion& y);
    friend bool operator==(const Octonion&, const Octonion&) = default;
};

/// Bilinear product from e_i e_j = -delta_ij + C_ijk e_k, with e_0 the unit.
Octonion multiply(const OctonionTensors& t, const Octonion& x, const Octonion& y);

struct DualityReport {
    bool pass = true;
    long checkedTuples = 0;
    std::optional<std::array<int, 4>> firstCounterexample;
};

/// Checks 6 C_ijkl = eps_ijklmnp C_mnp over all 7^4 index tuples.
DualityReport verifyDuality(const OctonionTensors& t);

}  // namespace f4osc

#endif
