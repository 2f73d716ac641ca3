// Command-line front end: parses the surface parameter and FM matrix,
// dispatches the requested computation, and emits CSV or JSON on stdout.
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include "mukai/entropy.hpp"
#include "mukai/fm_group.hpp"
#include "mukai/lattice.hpp"
#include "mukai/sympow.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace mukai;
using nlohmann::json;

namespace {

struct RunConfig {
    long long D = 1;
    std::string matrix;
    std::string mode = "closed";
    std::string t_grid = "0:2:5";
    unsigned long long n_max = 40;
    long long m = 0;  // 0 = pick automatically
    int sym_d = 2;
    std::string format = "csv";
    unsigned long long seed = 0;
    long long k = 0;
    long long lemma_m = 1;
    long long bound = 30;
    std::string v1, v2;
};

std::vector<Int> parse_ints(const std::string& text, char sep, std::size_t expected,
                            const std::string& what) {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        try {
            out.emplace_back(Int(item));
        } catch (const std::exception&) {
            throw InvalidInput(what + ": cannot parse integer '" + item + "'");
        }
    }
    if (out.size() != expected)
        throw InvalidInput(what + ": expected " + std::to_string(expected) + " integers");
    return out;
}

struct TGrid {
    double min = 0, max = 0;
    int steps = 1;
};

TGrid parse_t_grid(const std::string& text) {
    TGrid g;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d", &g.min, &g.max, &g.steps) != 3)
        throw InvalidInput("t grid: expected min:max:steps");
    if (g.steps < 1) throw InvalidInput("t grid: steps must be >= 1");
    return g;
}

std::vector<double> grid_points(const TGrid& g) {
    std::vector<double> ts;
    if (g.steps == 1) {
        ts.push_back(g.min);
    } else {
        for (int i = 0; i < g.steps; ++i)
            ts.push_back(g.min + (g.max - g.min) * i / (g.steps - 1));
    }
    return ts;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

FMMatrix matrix_from(const RunConfig& cfg) {
    if (cfg.matrix.empty()) throw InvalidInput("--matrix is required for this mode");
    const auto e = parse_ints(cfg.matrix, ',', 4, "--matrix");
    return make_fm(e[0], e[1], e[2], e[3], SurfaceParams(cfg.D));
}

json matrix_json(const FMMatrix& A) {
    return json::array({A.a().str(), A.b().str(), A.c().str(), A.d().str()});
}

int run_closed(const RunConfig& cfg) {
    const FMMatrix A = matrix_from(cfg);
    const EntropyFunction h = entropy_closed(A);
    const std::string rho = h.rho.exact_string();
    const std::string slope = rat_string(h.slope);
    const auto ts = grid_points(parse_t_grid(cfg.t_grid));
    if (cfg.format == "json") {
        json doc{{"mode", "closed"},
                 {"D", cfg.D},
                 {"matrix", matrix_json(A)},
                 {"rho_exact", rho},
                 {"rho", h.rho.to_double()},
                 {"slope", slope},
                 {"rows", json::array()}};
        for (double t : ts) doc["rows"].push_back({{"t", t}, {"h_t", h.value_at(t)}});
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "t,h_t,rho_exact,slope\n";
        for (double t : ts)
            std::cout << fmt(t) << "," << fmt(h.value_at(t)) << "," << rho << "," << slope
                      << "\n";
    }
    return 0;
}

int run_estimate(const RunConfig& cfg) {
    if (cfg.n_max < 2) throw InvalidInput("--n-max must be >= 2 for estimate mode");
    const FMMatrix A = matrix_from(cfg);
    const EntropyFunction closed = entropy_closed(A);
    const auto ts = grid_points(parse_t_grid(cfg.t_grid));
    const std::string rho = closed.rho.exact_string();
    const std::string slope = rat_string(closed.slope);
    double max_diff = 0.0;
    std::vector<double> est(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        est[i] = entropy_estimate(A, ts[i], cfg.n_max);
        max_diff = std::max(max_diff, std::abs(est[i] - closed.value_at(ts[i])));
    }
    if (cfg.format == "json") {
        json doc{{"mode", "estimate"},       {"D", cfg.D},
                 {"matrix", matrix_json(A)}, {"n_max", cfg.n_max},
                 {"rho_exact", rho},         {"slope", slope},
                 {"max_diff_vs_closed", max_diff}, {"rows", json::array()}};
        for (std::size_t i = 0; i < ts.size(); ++i)
            doc["rows"].push_back(
                {{"t", ts[i]}, {"h_t", est[i]}, {"h_t_closed", closed.value_at(ts[i])}});
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "t,h_t,rho_exact,slope\n";
        for (std::size_t i = 0; i < ts.size(); ++i)
            std::cout << fmt(ts[i]) << "," << fmt(est[i]) << "," << rho << "," << slope << "\n";
        std::cerr << "estimate: n_max=" << cfg.n_max
                  << " max|estimate-closed|=" << fmt(max_diff) << "\n";
    }
    return 0;
}

int run_sequence(const RunConfig& cfg) {
    if (cfg.n_max < 2) throw InvalidInput("--n-max must be >= 2 for sequence mode");
    const FMMatrix A = matrix_from(cfg);
    const Int m = cfg.m != 0 ? Int(cfg.m) : Int(1);
    const GrowthSequence seq = delta0_sequence(A, m, cfg.n_max);
    if (cfg.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < seq.n_values.size(); ++i) {
            json row{{"n", seq.n_values[i]}, {"delta", seq.delta_values[i].str()}};
            if (i > 0) row["log_ratio"] = seq.ratio_estimates[i - 1];
            rows.push_back(std::move(row));
        }
        json doc{{"mode", "sequence"}, {"D", cfg.D},          {"matrix", matrix_json(A)},
                 {"m", m.str()},       {"n_max", cfg.n_max},  {"rows", rows}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "n,delta,log_ratio\n";
        for (std::size_t i = 0; i < seq.n_values.size(); ++i) {
            std::cout << seq.n_values[i] << "," << seq.delta_values[i].str() << ",";
            if (i > 0) std::cout << fmt(seq.ratio_estimates[i - 1]);
            std::cout << "\n";
        }
    }
    return 0;
}

int run_verify(const RunConfig& cfg) {
    const FMMatrix A = matrix_from(cfg);
    const SurfaceParams P = A.params();
    bool all_ok = true;
    auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << "verify " << name << ": " << (ok ? "ok" : "FAIL");
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        all_ok = all_ok && ok;
    };

    // estimator vs closed form at t = 0
    const Int tau = A.trace();
    const unsigned long long n = tau == 2 ? std::max<unsigned long long>(cfg.n_max, 200)
                                          : std::max<unsigned long long>(cfg.n_max, 40);
    const KTReport kt = kt_check(A, n, 1e-3);
    check("kt_check", kt.pass, "diff=" + fmt(kt.diff));

    // closed power formulas against binary exponentiation
    const unsigned long long limit = tau > 2 ? 50 : (tau == 2 ? 500 : 600);
    bool powers_ok = true;
    for (unsigned long long i = 0; i <= limit && powers_ok; ++i)
        powers_ok = power_closed(A, i) == power(A, i);
    check("power_oracle", powers_ok, "n<=" + std::to_string(limit));

    // isometry of the lattice action
    std::mt19937 rng(static_cast<unsigned>(cfg.seed));
    std::uniform_int_distribution<int> c(-30, 30);
    bool isom_ok = true;
    for (int i = 0; i < 1000 && isom_ok; ++i) {
        const MukaiVector v{c(rng), c(rng), c(rng)};
        const MukaiVector w{c(rng), c(rng), c(rng)};
        isom_ok = b_form(ghat_act(A, iota(v, P)), ghat_act(A, iota(w, P)), P) ==
                  pairing(v, w, P);
    }
    check("isometry_suite", isom_ok, "1000 samples, seed=" + std::to_string(cfg.seed));

    // estimator tracks the closed form across the grid
    const EntropyFunction closed = entropy_closed(A);
    double max_diff = 0.0;
    for (double t : grid_points(parse_t_grid(cfg.t_grid)))
        max_diff = std::max(max_diff, std::abs(entropy_estimate(A, t, n) - closed.value_at(t)));
    check("closed_vs_estimate", max_diff < 1e-3, "max_diff=" + fmt(max_diff));

    std::cout << (all_ok ? "verify: all checks passed" : "verify: FAILED") << "\n";
    return all_ok ? 0 : 1;
}

int run_sympow(const RunConfig& cfg) {
    if (cfg.matrix.empty()) throw InvalidInput("--matrix is required for this mode");
    const auto e = parse_ints(cfg.matrix, ',', 4, "--matrix");
    const Mat2x2 M{{{e[0], e[1]}, {e[2], e[3]}}};
    if (cfg.sym_d < 1) throw InvalidInput("--sym-d must be >= 1");
    const SymPowerRep rep = sym_power(M, cfg.sym_d);
    const Int tr = M[0][0] + M[1][1];
    const Int det = M[0][0] * M[1][1] - M[0][1] * M[1][0];
    const bool entropy_applies = det == 1 && tr < -2;
    const auto ts = grid_points(parse_t_grid(cfg.t_grid));
    if (cfg.format == "json") {
        json mat = json::array();
        for (const auto& row : rep.matrix) {
            json r = json::array();
            for (const auto& x : row) r.push_back(x.str());
            mat.push_back(std::move(r));
        }
        json doc{{"mode", "sympow"}, {"d", rep.d}, {"matrix", mat}};
        if (entropy_applies) {
            json rows = json::array();
            for (double t : ts) rows.push_back({{"t", t}, {"h_t", ppav_entropy(M, rep.d, t)}});
            doc["entropy"] = rows;
        } else {
            doc["entropy"] = nullptr;
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& row : rep.matrix) {
            for (std::size_t j = 0; j < row.size(); ++j)
                std::cout << (j ? "," : "") << row[j].str();
            std::cout << "\n";
        }
        if (entropy_applies) {
            std::cout << "t,h_t\n";
            for (double t : ts)
                std::cout << fmt(t) << "," << fmt(ppav_entropy(M, rep.d, t)) << "\n";
        } else {
            std::cerr << "sympow: entropy formula needs det=1 and trace<-2; skipped\n";
        }
    }
    return 0;
}

int run_lemma_d(const RunConfig& cfg) {
    const SurfaceParams P(cfg.D);
    const auto found = lemma_d_search(P, cfg.k, cfg.lemma_m, cfg.bound);
    if (cfg.format == "json") {
        json doc{{"mode", "lemma-d"}, {"D", cfg.D},          {"k", cfg.k},
                 {"m", cfg.lemma_m},  {"bound", cfg.bound},  {"found", found.has_value()}};
        if (found)
            doc["vector"] = json::array({found->r.str(), found->d.str(), found->a.str()});
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "D,k,m,bound,found,r,d,a\n";
        std::cout << cfg.D << "," << cfg.k << "," << cfg.lemma_m << "," << cfg.bound << ","
                  << (found ? "true" : "false") << ",";
        if (found)
            std::cout << found->r.str() << "," << found->d.str() << "," << found->a.str();
        else
            std::cout << ",,";
        std::cout << "\n";
    }
    return 0;
}

int run_factor(const RunConfig& cfg) {
    if (cfg.v1.empty() || cfg.v2.empty())
        throw InvalidInput("--v1 and --v2 are required for factor mode");
    const auto e1 = parse_ints(cfg.v1, ',', 3, "--v1");
    const auto e2 = parse_ints(cfg.v2, ',', 3, "--v2");
    const SurfaceParams P(cfg.D);
    const GhatElement g =
        factor_isotropic_pair({e1[0], e1[1], e1[2]}, {e2[0], e2[1], e2[2]}, P);
    if (cfg.format == "json") {
        json doc{{"mode", "factor"},   {"D", cfg.D},
                 {"p1", g.p1().str()}, {"q1", g.q1().str()},
                 {"p2", g.p2().str()}, {"q2", g.q2().str()},
                 {"r1", g.r1().str()}, {"r2", g.r2().str()},
                 {"unit", g.unit().str()}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "p1,q1,p2,q2,r1,r2,unit\n";
        std::cout << g.p1().str() << "," << g.q1().str() << "," << g.p2().str() << ","
                  << g.q2().str() << "," << g.r1().str() << "," << g.r2().str() << ","
                  << g.unit().str() << "\n";
    }
    return 0;
}

int dispatch(const RunConfig& cfg) {
    if (cfg.D < 1) throw InvalidInput("--D must be a positive integer");
    if (cfg.mode == "closed") return run_closed(cfg);
    if (cfg.mode == "estimate") return run_estimate(cfg);
    if (cfg.mode == "sequence") return run_sequence(cfg);
    if (cfg.mode == "verify") return run_verify(cfg);
    if (cfg.mode == "sympow") return run_sympow(cfg);
    if (cfg.mode == "lemma-d") return run_lemma_d(cfg);
    if (cfg.mode == "factor") return run_factor(cfg);
    throw InvalidInput("unknown mode '" + cfg.mode + "'");
}

int fail(const std::string& kind, const std::string& what) {
    std::cerr << "error: " << kind << ": " << what << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Categorical entropy of Fourier-Mukai autoequivalences on abelian surfaces"};
    app.add_option("--D", cfg.D, "Surface parameter D = H^2/2 (positive integer)");
    app.add_option("--matrix", cfg.matrix, "FM matrix as a,b,c,d (row-major)");
    app.add_option("--mode", cfg.mode,
                   "closed | estimate | sequence | verify | sympow | lemma-d | factor");
    app.add_option("--t", cfg.t_grid, "t grid as min:max:steps");
    app.add_option("--n-max", cfg.n_max, "Sequence length for estimators");
    app.add_option("--m", cfg.m, "Twist override for the growth sequence");
    app.add_option("--sym-d", cfg.sym_d, "Symmetric-power degree (sympow mode)");
    app.add_option("--format", cfg.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", cfg.seed, "Seed for randomized verification");
    app.add_option("--k", cfg.k, "Exponent k for lemma-d mode");
    app.add_option("--lemma-m", cfg.lemma_m, "Twist m for lemma-d mode");
    app.add_option("--bound", cfg.bound, "Coefficient bound for lemma-d mode");
    app.add_option("--v1", cfg.v1, "First Mukai vector r,d,a (factor mode)");
    app.add_option("--v2", cfg.v2, "Second Mukai vector r,d,a (factor mode)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("ParseError", e.what());
    }

    try {
        return dispatch(cfg);
    } catch (const NotUnimodular& e) {
        return fail("NotUnimodular", e.what());
    } catch (const ComplexEigenvalues& e) {
        return fail("ComplexEigenvalues", e.what());
    } catch (const NotUpperHalfPlane& e) {
        return fail("NotUpperHalfPlane", e.what());
    } catch (const NotClosed& e) {
        return fail("NotClosed", e.what());
    } catch (const NotFactorizable& e) {
        return fail("NotFactorizable", e.what());
    } catch (const PoleHit& e) {
        return fail("PoleHit", e.what());
    } catch (const NotApplicable& e) {
        return fail("NotApplicable", e.what());
    } catch (const DegenerateSequence& e) {
        return fail("DegenerateSequence", e.what());
    } catch (const OutOfScopeTrace& e) {
        return fail("OutOfScopeTrace", e.what());
    } catch (const InvalidInput& e) {
        return fail("InvalidInput", e.what());
    } catch (const std::exception& e) {
        return fail("Internal", e.what());
    }
}
