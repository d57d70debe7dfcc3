// Copyright 2026 The affine-levy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "affine_levy/cli/runner.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include "affine_levy/cli/expression.hpp"
#include "affine_levy/core/errors.hpp"
#include "affine_levy/generating/canonical.hpp"
#include "affine_levy/generating/decompose.hpp"
#include "affine_levy/generating/plane.hpp"
#include "affine_levy/kernels/kernels.hpp"
#include "affine_levy/pricing/martingale.hpp"
#include "affine_levy/regvar/regvar.hpp"
#include "affine_levy/regvar/weyl.hpp"
#include "affine_levy/simulate/path_io.hpp"

#ifndef AFFINE_LEVY_VERSION
#define AFFINE_LEVY_VERSION "0.0.0"
#endif

namespace affine_levy {

namespace fs = std::filesystem;

namespace {

constexpr double kHjmTol = 1e-6;
constexpr double kMartingaleSe = 4.0;
constexpr double kIndexAgreement = 0.05;

Json measure_json(const LevyMeasure1D& rho) {
    return std::visit(
        [&](const auto& k) -> Json {
            using K = std::decay_t<decltype(k)>;
            Json j;
            if constexpr (std::is_same_v<K, LevyMeasure1D::Zero>) {
                j["kind"] = "zero";
            } else if constexpr (std::is_same_v<K, LevyMeasure1D::Stable>) {
                j["kind"] = "stable";
                j["alpha"] = k.alpha;
                j["scale"] = k.scale;
            } else if constexpr (std::is_same_v<K, LevyMeasure1D::Atoms>) {
                j["kind"] = "atoms";
                j["atoms"] = Json::array();
                for (const auto& [l, w] : k.atoms) j["atoms"].push_back({l, w});
            } else if constexpr (std::is_same_v<K, LevyMeasure1D::Sum>) {
                j["kind"] = "sum";
                j["parts"] = Json::array();
                for (const auto& p : *k.parts) j["parts"].push_back(measure_json(p));
            } else {
                j["kind"] = "density";
                j["describe"] = rho.describe();
            }
            return j;
        },
        rho.kind());
}

std::optional<double> single_stable_index(const LevyMeasure1D& rho) {
    if (const auto* s = std::get_if<LevyMeasure1D::Stable>(&rho.kind())) return s->alpha;
    if (const auto* s = std::get_if<LevyMeasure1D::Sum>(&rho.kind()))
        if (s->parts->size() == 1) return single_stable_index(s->parts->front());
    return std::nullopt;
}

std::string case_tag(const ProjectionTriplet& t) {
    const bool c = t.c > 1e-12, nu0 = !t.nu0.is_zero(), mu = !t.mu.is_zero();
    if (c && !nu0 && !mu) return "classical CIR";
    if (!c && !nu0 && mu && single_stable_index(t.mu)) return "stable CIR";
    if (!c && nu0 && !mu) return "generalized Vasicek";
    return "general";
}

class Csv {
public:
    explicit Csv(const fs::path& p) : os_(p, std::ios::binary) {
        if (!os_) throw Error("cannot open " + p.string() + " for writing");
        os_.precision(17);
    }
    template <class... T>
    void row(const T&... v) {
        int i = 0;
        ((os_ << (i++ ? "," : "") << v), ...);
        os_ << '\n';
    }

private:
    std::ofstream os_;
};

struct Context {
    const Scenario& s;
    fs::path dir;
    GeneratingPair pair;
    std::optional<ProjectionTriplet> triplet;
    std::optional<AffineSolution> sol;
    std::optional<ShortRatePaths> paths;
    std::vector<std::string> files;
    std::vector<std::string> failures;

    fs::path file(const std::string& name) {
        files.push_back(name);
        return dir / name;
    }
    const ProjectionTriplet& get_triplet() {
        if (!triplet) triplet = projection_triplet(pair);
        return *triplet;
    }
    const AffineSolution& get_solution() {
        if (!sol) sol = affine_solution(get_triplet(), pair.drift, s.v_max, s.tol);
        return *sol;
    }
};

Json validate(Context& c) {
    const auto rep = validate_generating(c.pair, c.s.x_grid, c.s.b_grid);
    Json j;
    Json conds;
    auto put = [&](const char* name, const ConditionResult& r) {
        conds[name] = {{"ok", r.ok}, {"diagnostic", r.diagnostic}};
        if (!r.ok) c.failures.push_back("validate: " + r.diagnostic);
    };
    put("jumps_nonneg", rep.jumps_nonneg);
    put("nu0_finite_variation", rep.nu0_finite_variation);
    put("linear_in_x", rep.linear_in_x);
    put("drift_bound", rep.drift_bound_ok);
    j["conditions"] = conds;
    if (rep.decomposition) {
        const auto& d = *rep.decomposition;
        j["decomposition_residual"] = d.residual;
        Csv csv(c.file("decomposition.csv"));
        csv.row("b", "intercept", "slope");
        for (std::size_t i = 0; i < d.b.size(); ++i) csv.row(d.b[i], d.intercept[i], d.slope[i]);
        if (rep.all()) c.triplet = projection_triplet(c.pair, d);
    }
    {
        Csv csv(c.file("laplace.csv"));
        csv.row("x", "b", "J");
        for (double x : c.s.x_grid)
            for (double b : c.s.b_grid) csv.row(x, b, pair_projection_laplace(c.pair, x, b, decomposition_quad()));
    }
    if (c.triplet) {
        j["triplet"] = {{"c", c.triplet->c}, {"nu0", measure_json(c.triplet->nu0)}, {"mu", measure_json(c.triplet->mu)}};
        j["case"] = case_tag(*c.triplet);
    }
    j["passed"] = rep.all();
    return j;
}

Json canonicalize_step(Context& c) {
    const auto fit = canonicalize(c.pair, c.s.x_small, c.s.b_grid);
    const auto sde = synthesize_canonical_equation(fit.form, c.pair.drift);
    Json j;
    j["terms"] = Json::array();
    for (const auto& t : fit.form.terms) j["terms"].push_back({{"alpha", t.alpha}, {"eta", t.eta}});
    j["fit_residual"] = fit.residual;
    j["small_x_deviation"] = fit.small_x_deviation;
    Json eq;
    eq["drift"] = {{"a", sde.drift.a}, {"b", sde.drift.b}};
    eq["terms"] = Json::array();
    for (const auto& t : sde.terms)
        eq["terms"].push_back({{"alpha", t.alpha}, {"eta", t.eta}, {"coefficient", t.d}, {"wiener", t.wiener}});
    j["equation"] = eq;
    Csv csv(c.file("canonical_fit.csv"));
    csv.row("b", "observed", "fitted");
    for (std::size_t i = 0; i < fit.b.size(); ++i) csv.row(fit.b[i], fit.observed[i], fit.fitted[i]);
    j["passed"] = true;
    return j;
}

Json classify_step(Context& c) {
    const auto cl = classify_plane(c.pair);
    Json j;
    j["case"] = to_string(cl.kind);
    j["reason"] = cl.reason;
    j["ratio_spread"] = cl.ratio_spread;
    if (cl.form) {
        j["terms"] = Json::array();
        for (const auto& t : cl.form->terms) j["terms"].push_back({{"alpha", t.alpha}, {"eta", t.eta}});
    }
    const bool ok = cl.kind != PlaneCase::not_generating;
    if (!ok) c.failures.push_back("classify2d: " + cl.reason);
    j["passed"] = ok;
    return j;
}

Json price_step(Context& c) {
    const auto& sol = c.get_solution();
    Json j;
    j["v_max"] = sol.v_max();
    j["grid_points"] = sol.v.size();
    j["B_nonneg"] = sol.B_nonneg;
    const double mid = sol.midpoint_residual();
    j["midpoint_residual"] = mid;
    j["term_structure"] = Json::array();
    sol.write_csv(c.file("affine_solution.csv").string());
    Csv csv(c.file("term_structure.csv"));
    csv.row("T", "P", "yield");
    csv.row(0.0, 1.0, c.s.x0);
    for (double T : c.s.maturities) {
        if (T == 0.0) continue;
        const double P = bond_price(sol, 0.0, T, c.s.x0);
        const double y = -std::log(P) / T;
        csv.row(T, P, y);
        j["term_structure"].push_back({{"T", T}, {"P", P}, {"yield", y}});
    }
    const bool ok = sol.B_nonneg && mid < 10.0 * c.s.tol;
    if (!sol.B_nonneg) c.failures.push_back("price: B turned negative on the grid");
    if (!(mid < 10.0 * c.s.tol)) c.failures.push_back("price: B equation midpoint residual exceeds 10 tol");
    j["passed"] = ok;
    return j;
}

Json hjm_step(Context& c) {
    const auto& sol = c.get_solution();
    std::vector<double> v;
    for (double x : c.s.hjm_v)
        if (x <= sol.v_max()) v.push_back(x);
    const double r = hjm_residual(c.pair, sol, v, c.s.hjm_x);
    Json j;
    j["residual"] = r;
    j["tolerance"] = kHjmTol;
    j["perturbed_B_residual"] = hjm_residual(c.pair, perturbed_B(sol, 1.01), v, c.s.hjm_x);
    const bool ok = r < kHjmTol;
    if (!ok) c.failures.push_back("hjm: bond-price consistency condition violated (residual above tolerance)");
    j["passed"] = ok;
    return j;
}

double quantile(std::vector<double>& x, double q) {
    std::sort(x.begin(), x.end());
    const double pos = q * static_cast<double>(x.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, x.size() - 1);
    return x[lo] + (pos - static_cast<double>(lo)) * (x[hi] - x[lo]);
}

Json simulate_step(Context& c) {
    const PathConfig& cfg = *c.s.simulation;
    c.paths = simulate_short_rate(c.pair, c.s.x0, cfg);
    const auto& p = *c.paths;
    Json j;
    j["n_paths"] = cfg.n_paths;
    j["n_steps"] = cfg.n_steps();
    j["dt"] = cfg.T / static_cast<double>(cfg.n_steps());
    j["seed"] = cfg.seed;
    j["scheme"] = p.scheme_tag;
    j["clamp_count"] = p.clamp_count;
    j["clamp_rate"] = p.clamp_rate();
    j["records"] = Json::array();
    std::vector<double> col(p.n_paths);
    for (std::size_t k = 0; k < p.n_records(); ++k) {
        for (std::size_t i = 0; i < p.n_paths; ++i) col[i] = p.value(i, k);
        const double mean = kernels::pairwise_sum(col.data(), col.size()) / static_cast<double>(p.n_paths);
        j["records"].push_back({{"t", p.times[k]}, {"mean", mean}, {"median", quantile(col, 0.5)}});
    }
    write_paths_binary(p, c.file("paths.bin").string());
    if (p.n_paths * p.n_records() <= 100000) write_paths_csv(p, c.file("paths.csv").string());
    j["passed"] = true;
    return j;
}

Json martingale_step(Context& c) {
    const auto& sol = c.get_solution();
    const auto rep = martingale_check(*c.paths, sol, c.s.martingale_T, c.s.checkpoints);
    std::vector<double> positive;
    for (double t : c.s.checkpoints)
        if (t > 0.0) positive.push_back(t);
    const double biased = positive.empty() ? 0.0 : martingale_check(*c.paths, biased_A(sol, 0.1), c.s.martingale_T, positive).max_deviation_se;
    Json j;
    j["T"] = rep.T;
    j["P0"] = rep.P0;
    j["checkpoints"] = Json::array();
    for (std::size_t i = 0; i < rep.times.size(); ++i)
        j["checkpoints"].push_back({{"t", rep.times[i]}, {"mean", rep.means[i]}, {"std_error", rep.std_errors[i]}});
    j["max_deviation_se"] = rep.max_deviation_se;
    j["tolerance_se"] = kMartingaleSe;
    j["biased_A_deviation_se"] = biased;
    const bool ok = rep.max_deviation_se <= kMartingaleSe;
    if (!ok) c.failures.push_back("martingale: discounted bond prices drift by more than 4 standard errors");
    j["passed"] = ok;
    return j;
}

Json regvar_step(Context& c) {
    const Json& cfg = c.s.doc.at("regvar");
    Json j;
    bool ok = true;
    if (cfg.contains("measures")) {
        j["measures"] = Json::array();
        for (const auto& spec : cfg.at("measures")) {
            const LevyMeasure1D m = build_measure(spec);
            Json e;
            e["measure"] = spec;
            std::vector<double> est;
            auto route = [&](const char* name, const std::function<IndexEstimate()>& f) {
                try {
                    const auto r = f();
                    e[name] = r.alpha;
                    est.push_back(r.alpha);
                } catch (const Error& ex) {
                    e[name] = nullptr;
                    e[std::string(name) + "_note"] = ex.what();
                }
            };
            route("laplace", [&] { return rv_index_from_laplace(laplace_function(m)); });
            if (const auto* d = std::get_if<LevyMeasure1D::Density>(&m.kind())) route("density", [&] { return rv_index_from_density(d->f); });
            route("tail", [&] { return rv_index_from_tail(tail_function(m)); });
            const double spread = est.empty() ? 0.0 : *std::max_element(est.begin(), est.end()) - *std::min_element(est.begin(), est.end());
            e["spread"] = spread;
            if (est.size() < 2 || spread > kIndexAgreement) {
                ok = false;
                c.failures.push_back("regvar: index estimators disagree or do not apply");
            }
            j["measures"].push_back(e);
        }
    }
    if (cfg.contains("power_law")) {
        const Json& pl = cfg.at("power_law");
        const Expression J = Expression::parse(pl.at("J").get<std::string>(), "b");
        const auto ev = measure_scaling([&](double b) { return J(b); }, pl.value("beta", 2.0), pl.value("gamma", 3.0));
        Json r;
        r["eta"] = ev.eta;
        r["theta"] = ev.theta;
        r["scaling_residual"] = ev.residual;
        try {
            const auto p = power_law_detect([&](double b) { return J(b); }, ev);
            r["C"] = p.C;
            r["alpha"] = p.alpha;
        } catch (const Error& ex) {
            r["error"] = ex.what();
            ok = false;
            c.failures.push_back(std::string("regvar: ") + ex.what());
        }
        j["power_law"] = r;
    }
    j["passed"] = ok;
    return j;
}

Json weyl_step(Context& c) {
    const Json& w = c.s.doc.at("weyl");
    const double p = w.at("p").get<double>(), q = w.at("q").get<double>(), x = w.at("x").get<double>(),
                 delta = w.at("delta").get<double>();
    const auto r = weyl_approximate(p, q, x, delta);
    Json j;
    j["m"] = r.m;
    j["n"] = r.n;
    j["error"] = r.error;
    j["delta"] = delta;
    const bool ok = r.error <= delta;
    j["passed"] = ok;
    return j;
}

void write_json(const fs::path& p, const Json& j) {
    std::ofstream os(p, std::ios::binary);
    if (!os) throw Error("cannot open " + p.string() + " for writing");
    os << j.dump(2) << '\n';
}

}  // namespace

RunOutcome run_scenario(const Scenario& s, const std::string& out_dir, const std::string& scenario_file) {
    fs::create_directories(out_dir);
    Context c{s, fs::path(out_dir), build_pair(s), {}, {}, {}, {}, {}};

    const std::map<std::string, std::function<Json(Context&)>> steps = {
        {"validate", validate},     {"canonicalize", canonicalize_step}, {"classify2d", classify_step},
        {"price", price_step},      {"hjm", hjm_step},                   {"simulate", simulate_step},
        {"martingale", martingale_step}, {"regvar", regvar_step},        {"weyl", weyl_step}};

    RunOutcome out;
    Json analyses = Json::object();
    Json timings = Json::object();
    for (const auto& name : s.analyses) {
        const auto t0 = std::chrono::steady_clock::now();
        Json j;
        try {
            if (name == "martingale" && !c.paths) throw MissingResultError("martingale check needs simulated paths");
            j = steps.at(name)(c);
        } catch (const std::exception& e) {
            j = {{"passed", false}, {"error", e.what()}};
            c.failures.push_back(name + ": " + e.what());
        }
        analyses[name] = j;
        timings[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }

    out.result["scenario"] = s.name;
    out.result["analyses"] = analyses;
    out.result["failures"] = c.failures;
    out.result["passed"] = c.failures.empty();
    out.failures = c.failures;
    out.exit_code = c.failures.empty() ? 0 : 1;

    write_json(c.dir / "result.json", out.result);
    Json manifest;
    manifest["scenario"] = s.name;
    manifest["scenario_file"] = scenario_file;
    manifest["version"] = AFFINE_LEVY_VERSION;
    manifest["seed"] = s.simulation ? Json(s.simulation->seed) : Json(nullptr);
    manifest["threads"] = thread_count();
    manifest["simd"] = kernels::to_string(kernels::active_isa());
    manifest["wall_seconds"] = timings;
    manifest["files"] = c.files;
    manifest["scenario_normalized"] = serialize_scenario(s);
    write_json(c.dir / "manifest.json", manifest);
    return out;
}

int run_command(const std::string& scenario, const std::string& out_dir, const std::vector<std::string>& overrides,
                std::ostream& err) {
    Scenario s;
    std::string path;
    try {
        path = resolve_scenario_path(scenario);
        s = load_scenario(path, overrides);
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << '\n';
        return 2;
    }
    try {
        const auto out = run_scenario(s, out_dir, path);
        for (const auto& f : out.failures) err << "FAILED " << f << '\n';
        return out.exit_code;
    } catch (const DomainError& e) {
        err << "schema error: " << e.what() << '\n';
        return 2;
    } catch (const SchemaError& e) {
        err << "schema error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "FAILED " << e.what() << '\n';
        return 1;
    }
}

}  // namespace affine_levy
