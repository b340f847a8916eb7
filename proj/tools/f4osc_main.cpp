#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "f4osc/numerics.hpp"
#include "f4osc/spectrum.hpp"

using namespace f4osc;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Options {
    Branch branch = Branch::second;
    std::string format = "table";
    bool timings = false;
    int threads = 0;
};

struct Engine {
    OctonionTensors tensors = OctonionTensors::build();
    GammaSmall gs = buildGammaSmall(tensors);
    GammaBig gb = buildGammaBig(gs);

    CriticalSolution critical(Branch br) { return findCriticalC(br, tensors, gb); }
};

ordered_json checksJson(const Report& rep, bool timings) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : rep.checks()) {
        ordered_json j;
        j["name"] = c.name;
        j["status"] = c.pass ? "pass" : "fail";
        if (!c.detail.empty()) j["detail"] = c.detail;
        if (timings) j["elapsed_s"] = c.elapsedSec;
        arr.push_back(std::move(j));
    }
    return arr;
}

ordered_json reportHeader(const Options& opt, const CriticalSolution* crit) {
    ordered_json j;
    j["tool"] = "f4osc";
    j["version"] = kVersion;
    j["branch"] = branchName(opt.branch);
    if (crit != nullptr) {
        ordered_json p;
        const char* names = "abcde";
        for (int k = 0; k < 5; ++k) p[std::string(1, names[k])] = crit->params[k].str();
        j["parameters"] = std::move(p);
        j["critical_c"] = crit->c.str();
    }
    return j;
}

void printReportTable(const Report& rep, bool timings) {
    for (const auto& c : rep.checks()) {
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        if (timings) std::cout << "  [" << c.elapsedSec << " s]";
        std::cout << "\n";
    }
    std::cout << (rep.allPass() ? "overall: pass" : "overall: FAIL") << "\n";
}

int emitReport(const Options& opt, const Report& rep, ordered_json header,
               const std::string& outPath = "") {
    if (opt.format == "json") {
        header["checks"] = checksJson(rep, opt.timings);
        header["overall"] = rep.allPass() ? "pass" : "fail";
        if (outPath.empty()) {
            std::cout << header.dump(2) << "\n";
        } else {
            std::ofstream out(outPath);
            out << header.dump(2) << "\n";
        }
    } else {
        printReportTable(rep, opt.timings);
    }
    return rep.allPass() ? 0 : 1;
}

// ---------------------------------------------------------------- verify ---

Report runAlgebraicChecks(Engine& eng, const Options& opt, bool full, CriticalSolution& crit) {
    Report rep;
    Timer total;

    {
        Timer tm;
        const auto dual = verifyDuality(eng.tensors);
        rep.add("octonion_duality_6C4_eq_eps_C3", dual.pass,
                std::to_string(dual.checkedTuples) + " tuples", tm.elapsed());
    }
    {
        Timer tm;
        bool cl07 = true;
        const ExactMatrix i8 = ExactMatrix::identity(8);
        for (int i = 1; i <= 7; ++i)
            for (int j = 1; j <= 7; ++j)
                if (!(eng.gs.gamma(i) * eng.gs.gamma(j) + eng.gs.gamma(j) * eng.gs.gamma(i) ==
                      i8.scaled(ParamPoly(Rational(i == j ? -2 : 0)))))
                    cl07 = false;
        rep.add("clifford_cl07_anticommutators", cl07, "49 pairs", tm.elapsed());
    }
    {
        Timer tm;
        bool cl90 = true;
        const ExactMatrix i16 = ExactMatrix::identity(16);
        for (int a = 1; a <= 9; ++a)
            for (int b = 1; b <= 9; ++b)
                if (!(eng.gb.Gamma(a) * eng.gb.Gamma(b) + eng.gb.Gamma(b) * eng.gb.Gamma(a) ==
                      i16.scaled(ParamPoly(Rational(a == b ? 2 : 0)))))
                    cl90 = false;
        rep.add("clifford_cl90_anticommutators", cl90, "81 pairs", tm.elapsed());
    }
    {
        Timer tm;
        const BasisClassification cls = classifyBasis(eng.gb);
        const int expected[16] = {1, 7, 1, 1, 21, 7, 7, 1, 35, 21, 21, 7, 35, 35, 35, 21};
        bool table = cls.total == 256 && cls.symmetricTotal == 136 && cls.antisymmetricTotal == 120;
        for (int r = 0; r < 16; ++r)
            if (cls.rows[r].count != expected[r]) table = false;
        rep.add("basis_classification_table", table, "256 products, independence proven",
                tm.elapsed());
        rep.add("hodge_duality", verifySmallHodgeDuality(eng.gs) && verifyBigHodgeDuality(eng.gb),
                "", 0.0);
    }
    {
        Timer tm;
        const auto q = buildSupercharges(AnsatzParams::formal(), eng.tensors, eng.gb);
        const auto constraints = closureConstraints(q);
        bool branches = !constraints.empty();
        for (const Branch br : {Branch::first, Branch::second}) {
            const auto bq = buildSupercharges(
                AnsatzParams::onBranch(br, ParamPoly::generator(Gen::c), false), eng.tensors,
                eng.gb);
            for (int i = 0; i < 7; ++i)
                for (int j = i + 1; j < 7; ++j)
                    if (!OperatorMatrix::anticommutator(bq[i], bq[j]).isZero()) branches = false;
        }
        rep.add("closure_branches_annihilate_residuals", branches,
                std::to_string(constraints.size()) + " generating constraints", tm.elapsed());
    }
    {
        Timer tm;
        bool pots = true;
        const ParamPoly c = ParamPoly::generator(Gen::c);
        for (const Branch br : {Branch::first, Branch::second}) {
            const auto v = potentialFromBranch(br, c, eng.tensors, eng.gb);
            const auto closed = branchPotentialClosedForm(br, c);
            for (int k = 0; k < 16; ++k)
                if (!(v[k] == closed[k])) pots = false;
        }
        rep.add("branch_potentials_polynomial_in_c", pots, "", tm.elapsed());
    }
    {
        Timer tm;
        crit = eng.critical(opt.branch);
        rep.add("critical_c_" + std::string(branchName(opt.branch)), true,
                "c=" + crit.c.str() + ", " + std::to_string(crit.residualCount) + " residuals",
                tm.elapsed());
    }
    rep.merge(verifySevenConstraints(crit, eng.tensors, eng.gb));
    rep.merge(verifyStructureRelations(crit, eng.tensors, full));
    rep.merge(verifyJacobi(crit, full, opt.threads));
    {
        Timer tm;
        const LadderSet ladder = buildLadder(crit);
        rep.add("ladder_identities", true, "built and verified for all 8 Ibar", tm.elapsed());

        const LowestWeights lw = solveLowestWeights(ladder);
        const int distinct = distinctLowestWeightCount(lw);
        rep.add("lowest_weights_24_distinct", distinct == 24, std::to_string(distinct) + " states",
                0.0);

        const auto lam1 = normVerdict(lw.state[0][0]);
        const auto desc = normVerdict(WaveVector::basisTerm(16, 9, Rational(-1, 6)));
        rep.add("norm_verdicts",
                !lam1.squareIntegrable && lam1.sign == NormSign::negative &&
                    desc.squareIntegrable && desc.sign == NormSign::positive,
                "lambda_1 regularized sign negative; x^(-1/6) positive", 0.0);

        const HilbertBasis hb = buildHilbertBasis(ladder, eng.tensors);
        rep.add("hilbert_basis_7_8_1", true, "f_0 consistent, covariant relation holds", 0.0);

        Timer ti;
        const Intertwiners itw = buildIntertwiners(crit, ladder, eng.gb);
        std::string counts;
        for (int i = 0; i < 7; ++i) counts += (i ? "," : "") + std::to_string(itw.count[i]);
        rep.add("intertwiners_found", true, "solutions per i: " + counts, ti.elapsed());

        Timer ts;
        const SpectrumTable tab = buildSpectrum(ladder, hb, full ? 6 : 3);
        bool degs = tab.levels.at(0).degeneracy == 7;
        for (std::size_t n = 1; n < tab.levels.size(); ++n)
            if (tab.levels[n].degeneracy != 8) degs = false;
        rep.add("spectrum_degeneracies_7_8_8", degs,
                "depth " + std::to_string(tab.levels.size() - 1), ts.elapsed());
        rep.merge(verifySpectrumStructure(tab, ladder, crit.set));
        rep.merge(verifyVFormula(eng.tensors, eng.gb, crit.V));
    }
    {
        const CriticalSolution other =
            eng.critical(opt.branch == Branch::first ? Branch::second : Branch::first);
        const CriticalSolution& first = opt.branch == Branch::first ? crit : other;
        const CriticalSolution& second = opt.branch == Branch::first ? other : crit;
        rep.merge(verifyBranchEquivalence(first, second, eng.gb));
    }
    rep.add("total", rep.allPass(), "", total.elapsed());
    return rep;
}

// ------------------------------------------------------------ subcommands ---

int cmdVerify(Engine& eng, const Options& opt, const std::string& level) {
    CriticalSolution crit;
    const Report rep = runAlgebraicChecks(eng, opt, level == "full", crit);
    ordered_json header = reportHeader(opt, &crit);
    header["level"] = level;
    return emitReport(opt, rep, std::move(header));
}

int cmdSolveClosure(Engine& eng, const Options& opt) {
    const auto q = buildSupercharges(AnsatzParams::formal(), eng.tensors, eng.gb);
    const auto constraints = closureConstraints(q);

    ordered_json out = reportHeader(opt, nullptr);
    out["residual_generating_set_size"] = constraints.size();
    ordered_json branches = ordered_json::array();
    const ParamPoly c = ParamPoly::generator(Gen::c);
    for (const Branch br : {Branch::first, Branch::second}) {
        ordered_json bj;
        bj["branch"] = branchName(br);
        const AnsatzParams p = AnsatzParams::onBranch(br, c, false);
        bj["relations"]["d"] = p.d.str();
        bj["relations"]["e"] = p.e.str();
        const auto bq = buildSupercharges(p, eng.tensors, eng.gb);
        bool zero = true;
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j)
                if (!OperatorMatrix::anticommutator(bq[i], bq[j]).isZero()) zero = false;
        bj["annihilates_residuals"] = zero;
        const auto v = potentialFromBranch(br, c, eng.tensors, eng.gb);
        ordered_json vj = ordered_json::array();
        for (const auto& vk : v) vj.push_back(vk.str());
        bj["potential"] = std::move(vj);
        branches.push_back(std::move(bj));
    }
    out["branches"] = std::move(branches);

    if (opt.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "closure constraint generators: " << constraints.size() << "\n";
        for (const auto& bj : out["branches"])
            std::cout << "branch " << bj["branch"].get<std::string>() << ": d="
                      << bj["relations"]["d"].get<std::string>()
                      << ", e=" << bj["relations"]["e"].get<std::string>()
                      << ", residuals annihilated: "
                      << (bj["annihilates_residuals"].get<bool>() ? "yes" : "no")
                      << ", v1=" << bj["potential"][0].get<std::string>() << "\n";
    }
    return 0;
}

int cmdSpectrum(Engine& eng, const Options& opt, int depth) {
    const CriticalSolution crit = eng.critical(opt.branch);
    const LadderSet ladder = buildLadder(crit);
    const HilbertBasis hb = buildHilbertBasis(ladder, eng.tensors);
    const SpectrumTable tab = buildSpectrum(ladder, hb, depth);

    if (opt.format == "json") {
        ordered_json out = reportHeader(opt, &crit);
        ordered_json levels = ordered_json::array();
        for (const auto& lv : tab.levels) {
            ordered_json lj;
            lj["energy"] = lv.energy.str();
            lj["degeneracy"] = lv.degeneracy;
            lj["states"] = lv.labels;
            levels.push_back(std::move(lj));
        }
        out["levels"] = std::move(levels);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "energy  degeneracy  states\n";
        for (const auto& lv : tab.levels) {
            std::string names;
            for (const auto& s : lv.labels) names += (names.empty() ? "" : " ") + s;
            std::cout << lv.energy.str() << "\t" << lv.degeneracy << "\t" << names << "\n";
        }
    }
    return 0;
}

int cmdLowestWeights(Engine& eng, const Options& opt) {
    const CriticalSolution crit = eng.critical(opt.branch);
    const LadderSet ladder = buildLadder(crit);
    const LowestWeights lw = solveLowestWeights(ladder);

    auto signName = [](NormSign s) {
        switch (s) {
            case NormSign::positive: return "positive";
            case NormSign::negative: return "negative";
            default: return "divergent-positive";
        }
    };

    if (opt.format == "json") {
        ordered_json out = reportHeader(opt, &crit);
        ordered_json rows = ordered_json::array();
        for (int ib = 0; ib < 8; ++ib)
            for (int k = 0; k < 16; ++k) {
                ordered_json r;
                r["Ibar"] = ib;
                r["slot"] = k + 1;
                r["beta"] = lw.beta[ib][k].str();
                r["energy"] = lw.energy[ib][k].str();
                const auto nv = normVerdict(lw.state[ib][k]);
                r["square_integrable"] = nv.squareIntegrable;
                r["norm_sign"] = signName(nv.sign);
                rows.push_back(std::move(r));
            }
        out["lowest_weights"] = std::move(rows);
        out["distinct_states"] = distinctLowestWeightCount(lw);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "Ibar slot beta energy square_integrable norm_sign\n";
        for (int ib = 0; ib < 8; ++ib)
            for (int k = 0; k < 16; ++k) {
                const auto nv = normVerdict(lw.state[ib][k]);
                std::cout << ib << "\t" << (k + 1) << "\t" << lw.beta[ib][k].str() << "\t"
                          << lw.energy[ib][k].str() << "\t"
                          << (nv.squareIntegrable ? "yes" : "no") << "\t" << signName(nv.sign)
                          << "\n";
            }
        std::cout << "distinct states: " << distinctLowestWeightCount(lw) << "\n";
    }
    return 0;
}

int cmdNumerics(Engine& eng, const Options& opt, int component, int gridN, double xmax) {
    const CriticalSolution crit = eng.critical(opt.branch);
    const GridSpec grid{gridN, xmax};

    std::vector<int> components;
    if (component > 0) components.push_back(component);
    else for (int k = 1; k <= 16; ++k) components.push_back(k);

    ordered_json out = reportHeader(opt, &crit);
    ordered_json comps = ordered_json::array();
    bool pass = true;
    for (int k : components) {
        const ComponentSpectrum cs = diagonalizeComponent(k, crit.V, grid);
        ordered_json cj;
        cj["component"] = k;
        cj["coupling"] = cs.coupling.str();
        cj["computed"] = cs.computed;
        ordered_json ladders = ordered_json::array();
        for (const auto& l : cs.ladders) {
            ordered_json lj;
            lj["a"] = l.a;
            lj["cusp_free"] = l.cuspFree;
            lj["energies"] = l.energies;
            ladders.push_back(std::move(lj));
        }
        cj["ladders"] = std::move(ladders);
        ordered_json matches = ordered_json::array();
        for (const auto& m : cs.matches) {
            ordered_json mj;
            mj["computed"] = m.computed;
            mj["reference"] = m.reference;
            mj["abs_error"] = std::abs(m.computed - m.reference);
            mj["rel_error"] = m.relError;
            const double tol = cs.ladders[m.ladder].cuspFree ? 2e-3 : 2e-2;
            mj["within_tolerance"] = m.relError <= tol;
            if (m.relError > tol) pass = false;
            matches.push_back(std::move(mj));
        }
        cj["matches"] = std::move(matches);
        comps.push_back(std::move(cj));
    }
    out["grid"] = {{"n_points", grid.nPoints}, {"x_max", grid.xMax}};
    out["components"] = std::move(comps);
    out["overall"] = pass ? "pass" : "fail";

    if (opt.format == "json") {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "component coupling lowest_computed lowest_reference rel_error\n";
        for (const auto& cj : out["components"])
            std::cout << cj["component"].get<int>() << "\t" << cj["coupling"].get<std::string>()
                      << "\t" << cj["matches"][0]["computed"].get<double>() << "\t"
                      << cj["matches"][0]["reference"].get<double>() << "\t"
                      << cj["matches"][0]["rel_error"].get<double>() << "\n";
        std::cout << (pass ? "overall: pass" : "overall: FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

int cmdDumpTensors(Engine& eng) {
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j)
            for (int k = 1; k <= 7; ++k)
                if (eng.tensors.C3(i, j, k) != 0) {
                    ordered_json r;
                    r["tensor"] = "C3";
                    r["indices"] = {i, j, k};
                    r["value"] = eng.tensors.C3(i, j, k);
                    std::cout << r.dump() << "\n";
                }
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j)
            for (int k = 1; k <= 7; ++k)
                for (int l = 1; l <= 7; ++l)
                    if (eng.tensors.C4(i, j, k, l) != 0) {
                        ordered_json r;
                        r["tensor"] = "C4";
                        r["indices"] = {i, j, k, l};
                        r["value"] = eng.tensors.C4(i, j, k, l);
                        std::cout << r.dump() << "\n";
                    }
    return 0;
}

int cmdDumpGammas(Engine& eng) {
    auto toJson = [](const ExactMatrix& m) {
        ordered_json rows = ordered_json::array();
        for (int i = 0; i < m.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (int j = 0; j < m.cols(); ++j) {
                const Gauss z = m.at(i, j).constantValue();
                row.push_back(z.re().num().get_si());
            }
            rows.push_back(std::move(row));
        }
        return rows;
    };
    for (int i = 1; i <= 7; ++i) {
        ordered_json r;
        r["name"] = "gamma_" + std::to_string(i);
        r["entries"] = toJson(eng.gs.gamma(i));
        std::cout << r.dump() << "\n";
    }
    for (int a = 1; a <= 9; ++a) {
        ordered_json r;
        r["name"] = "Gamma_" + std::to_string(a);
        r["entries"] = toJson(eng.gb.Gamma(a));
        std::cout << r.dump() << "\n";
    }
    return 0;
}

int cmdReport(Engine& eng, const Options& opt, int depth, const std::string& outPath) {
    CriticalSolution crit;
    Report rep = runAlgebraicChecks(eng, opt, true, crit);

    // numerics summary for the three distinct couplings
    bool numericsPass = true;
    for (int k : {1, 2, 9}) {
        const ComponentSpectrum cs = diagonalizeComponent(k, crit.V, GridSpec{});
        for (std::size_t i = 0; i < 3 && i < cs.matches.size(); ++i) {
            const double tol = cs.ladders[cs.matches[i].ladder].cuspFree ? 2e-3 : 2e-2;
            if (cs.matches[i].relError > tol) numericsPass = false;
        }
    }
    rep.add("numerics_cross_check", numericsPass, "components 1,2,9 on the default grid");

    ordered_json header = reportHeader(opt, &crit);
    header["level"] = "full";
    header["spectrum_depth"] = depth;
    return emitReport(opt, rep, std::move(header), outPath);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"F(4) deformed quantum oscillator: exact construction and verification"};
    app.require_subcommand(1);

    Options opt;
    std::string branchStr = "second";
    app.add_option("--branch", branchStr, "solution branch")
        ->check(CLI::IsMember({"first", "second"}));
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_flag("--timings", opt.timings, "include elapsed times in reports");
    app.add_option("--threads", opt.threads,
                   "worker threads for the Jacobi sweep (or F4OSC_THREADS)");

    auto* verify = app.add_subcommand("verify", "run the full verification suite");
    std::string level = "full";
    verify->add_option("--level", level, "quick skips the full Jacobi and [R,R] sweeps")
        ->check(CLI::IsMember({"quick", "full"}));

    auto* closure = app.add_subcommand("solve-closure", "branch relations and potentials");

    auto* spectrum = app.add_subcommand("spectrum", "energy tower of the deformed oscillator");
    int depth = 6;
    spectrum->add_option("--depth", depth, "number of excited levels")->check(CLI::Range(0, 64));

    auto* lowest = app.add_subcommand("lowest-weights", "8x16 lowest-weight table");

    auto* numerics = app.add_subcommand("numerics", "finite-difference cross-check");
    int component = 0, gridN = 2000;
    double xmax = 12.0;
    numerics->add_option("--component", component, "component 1..16 (default: all)")
        ->check(CLI::Range(1, 16));
    numerics->add_option("--grid", gridN, "number of interior grid points")
        ->check(CLI::Range(100, 100000));
    numerics->add_option("--xmax", xmax, "domain cutoff");

    auto* dumpT = app.add_subcommand("dump-tensors", "nonzero C3/C4 entries as JSON lines");
    auto* dumpG = app.add_subcommand("dump-gammas", "gamma and Gamma matrices as JSON lines");

    auto* report = app.add_subcommand("report", "full machine-readable report");
    int reportDepth = 6;
    std::string outPath;
    report->add_option("--depth", reportDepth, "spectrum depth")->check(CLI::Range(0, 64));
    report->add_option("--out", outPath, "write the JSON report to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }
    opt.branch = branchStr == "first" ? Branch::first : Branch::second;

    try {
        Engine eng;
        if (verify->parsed()) return cmdVerify(eng, opt, level);
        if (closure->parsed()) return cmdSolveClosure(eng, opt);
        if (spectrum->parsed()) return cmdSpectrum(eng, opt, depth);
        if (lowest->parsed()) return cmdLowestWeights(eng, opt);
        if (numerics->parsed()) return cmdNumerics(eng, opt, component, gridN, xmax);
        if (dumpT->parsed()) return cmdDumpTensors(eng);
        if (dumpG->parsed()) return cmdDumpGammas(eng);
        if (report->parsed()) return cmdReport(eng, opt, reportDepth, outPath);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
