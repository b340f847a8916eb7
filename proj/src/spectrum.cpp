#include "f4osc/spectrum.hpp"

#include "f4osc/errors.hpp"

namespace f4osc {

SpectrumTable buildSpectrum(const LadderSet& l, const HilbertBasis& hb, int depth) {
    SpectrumTable table;
    // Z^n w_r, generated level by level; Z raises the energy by 2
    std::array<WaveVector, 16> zpow = hb.w;
    std::array<int, 16> npow{};
    for (int level = 0; level <= depth; ++level) {
        SpectrumLevel lv;
        lv.energy = Rational(2, 3) + Rational(level);
        for (int r = 0; r < 16; ++r) {
            // state Z^n w_r sits at energy E_r + 2n
            const Rational e = hb.energy[r] + Rational(2 * npow[r]);
            if (e != lv.energy) continue;
            const WaveVector& st = zpow[r];
            if (st.isZero()) throw FaultError("tower state vanished");
            if (!(l.Heps1.apply(st) == st.scaled(Gauss(e))))
                throw FaultError("tower state is not an eigenvector");
            const NormVerdict nv = normVerdict(st);
            if (!nv.squareIntegrable || nv.sign != NormSign::positive)
                throw FaultError("tower state fails the norm verdict");
            lv.labels.push_back(
                (npow[r] > 0 ? "Z^" + std::to_string(npow[r]) + "*" : "") + hb.label[r]);
            lv.states.push_back(st);
            // advance this ladder to its next appearance
            zpow[r] = l.Z.apply(st);
            ++npow[r];
        }
        lv.degeneracy = waveSpanRank(lv.states);
        table.levels.push_back(std::move(lv));
    }
    return table;
}

namespace {

// exact membership of w in span(states)
bool inSpan(const std::vector<WaveVector>& states, const WaveVector& w) {
    if (w.isZero()) return true;
    std::vector<WaveVector> aug = states;
    aug.push_back(w);
    return waveSpanRank(aug) == waveSpanRank(states);
}

}  // namespace

Report verifySpectrumStructure(const SpectrumTable& table, const LadderSet& l,
                               const SuperconformalSet& s) {
    Report rep;
    bool raiseOk = true;
    for (std::size_t n = 0; n + 1 < table.levels.size() && raiseOk; ++n)
        for (int ib = 0; ib < 8 && raiseOk; ++ib)
            for (const auto& st : table.levels[n].states)
                if (!inSpan(table.levels[n + 1].states, l.adag[ib].apply(st))) {
                    raiseOk = false;
                    break;
                }
    rep.add("adag_maps_level_n_into_level_n_plus_1", raiseOk);

    bool rOk = true;
    for (const auto& lv : table.levels) {
        for (int i = 1; i <= 7 && rOk; ++i)
            for (int j = i + 1; j <= 7 && rOk; ++j) {
                const OperatorMatrix rop = OperatorMatrix::constant(s.r(i, j));
                for (const auto& st : lv.states)
                    if (!inSpan(lv.states, rop.apply(st))) {
                        rOk = false;
                        break;
                    }
            }
    }
    rep.add("R_action_preserves_each_level", rOk);
    return rep;
}

Report verifyVFormula(const OctonionTensors& t, const GammaBig& g,
                      const std::array<Rational, 16>& v) {
    Report rep;
    ExactMatrix cggg(16, 16);
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) {
            if (i == j) continue;
            const ExactMatrix gij = g.Gamma(i) * g.Gamma(j);
            for (int k = 1; k <= 7; ++k) {
                const int c3 = t.C3(i, j, k);
                if (c3 != 0) cggg += (gij * g.Gamma(k)).scaled(ParamPoly(Rational(c3)));
            }
        }
    ExactMatrix w = g.Gamma(8) - cggg.scaled(ParamPoly(Rational(1, 36)));
    w = (w * cggg).scaled(ParamPoly(Rational(1, 72)));

    rep.add("coupling_formula_output_is_diagonal", w.isDiagonal());
    ExactMatrix expect(16, 16);
    for (int k = 0; k < 16; ++k) expect.at(k, k) = ParamPoly(v[k]);
    std::string mismatch;
    if (!(w == expect)) {
        for (int k = 0; k < 16 && mismatch.empty(); ++k)
            if (!(w.at(k, k) == expect.at(k, k)))
                mismatch = "entry " + std::to_string(k + 1) + ": " + w.at(k, k).str() +
                           " vs " + expect.at(k, k).str();
    }
    rep.add("coupling_formula_matches_diag_V", w == expect, mismatch);

    Rational str;
    for (int k = 0; k < 8; ++k) str += v[k];
    for (int k = 8; k < 16; ++k) str -= v[k];
    rep.add("supertrace_V_vanishes", str.isZero(), "str V = " + str.str());
    return rep;
}

}  // namespace f4osc
