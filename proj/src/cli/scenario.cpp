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

#include "affine_levy/cli/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "affine_levy/cli/expression.hpp"
#include "affine_levy/core/errors.hpp"
#include "affine_levy/generating/decompose.hpp"
#include "affine_levy/generating/families.hpp"

#ifndef AFFINE_LEVY_SCENARIO_DIR
#define AFFINE_LEVY_SCENARIO_DIR "scenarios"
#endif

namespace affine_levy {

namespace fs = std::filesystem;

namespace {

// Fields holding text or functions of a variable; everything else that is a
// string must be a closed numeric expression.
const std::set<std::string> kTextKeys = {"name", "description", "kind", "variation", "label",
                                         "analyses", "expr", "components", "g3", "J"};

void normalize(Json& j, const std::string& key) {
    if (kTextKeys.count(key)) return;
    if (j.is_string()) {
        j = evaluate_expression(j.get<std::string>());
    } else if (j.is_array()) {
        for (auto& e : j) normalize(e, key);
    } else if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) normalize(it.value(), it.key());
    }
}

[[noreturn]] void schema(const std::string& what) { throw SchemaError(what); }

const Json& need(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) schema(where + ": missing \"" + key + "\"");
    return j.at(key);
}

double num(const Json& j, const char* key, const std::string& where) {
    const Json& v = need(j, key, where);
    if (!v.is_number()) schema(where + "." + key + " must be a number");
    return v.get<double>();
}

double num_or(const Json& j, const char* key, double def, const std::string& where) {
    return j.is_object() && j.contains(key) ? num(j, key, where) : def;
}

std::vector<double> nums(const Json& j, const std::string& where) {
    if (!j.is_array()) schema(where + " must be an array of numbers");
    std::vector<double> out;
    for (const auto& e : j) {
        if (!e.is_number()) schema(where + " must be an array of numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

std::vector<double> nums_or(const Json& j, const char* key, std::vector<double> def, const std::string& where) {
    return j.is_object() && j.contains(key) ? nums(j.at(key), where + "." + key) : def;
}

std::string str(const Json& j, const char* key, const std::string& where) {
    const Json& v = need(j, key, where);
    if (!v.is_string()) schema(where + "." + key + " must be a string");
    return v.get<std::string>();
}

Vec vec(const Json& j, const std::string& where) {
    const auto v = nums(j, where);
    return Eigen::Map<const Vec>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Mat mat_or_zero(const Json& j, int d, const std::string& where) {
    if (!j.is_object() || !j.contains("Q")) return Mat::Zero(d, d);
    const Json& q = j.at("Q");
    if (!q.is_array() || static_cast<int>(q.size()) != d) schema(where + ".Q must be a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
    Mat Q(d, d);
    for (int i = 0; i < d; ++i) {
        const auto row = nums(q.at(static_cast<std::size_t>(i)), where + ".Q");
        if (static_cast<int>(row.size()) != d) schema(where + ".Q must be square");
        for (int k = 0; k < d; ++k) Q(i, k) = row[static_cast<std::size_t>(k)];
    }
    return Q;
}

void check_expression(const Json& j, const std::string& var, const std::string& where) {
    if (!j.is_string()) schema(where + " must be an expression string");
    Expression::parse(j.get<std::string>(), var);
}

// Parse-checks function-valued fields.
void check_functions(const Json& j, const std::string& where) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string w = where + "." + it.key();
            if (it.key() == "expr") {
                check_expression(it.value(), "v", w);
            } else if (it.key() == "J") {
                check_expression(it.value(), "b", w);
            } else if (it.key() == "g3") {
                check_expression(it.value(), "x", w);
            } else if (it.key() == "components") {
                if (!it.value().is_array()) schema(w + " must be an array of expressions");
                for (const auto& c : it.value()) check_expression(c, "x", w);
            } else {
                check_functions(it.value(), w);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) check_functions(e, where);
    }
}

Variation variation_of(const Json& j) {
    if (!j.contains("variation")) return Variation::unknown;
    const std::string v = j.at("variation").get<std::string>();
    if (v == "finite") return Variation::finite;
    if (v == "infinite") return Variation::infinite;
    return Variation::unknown;
}

GFunction build_gfun(const Json& g) {
    const std::string w = "gfun";
    const std::string kind = str(g, "kind", w);
    if (kind == "power_sum") {
        std::vector<GFunction::PowerTerm> terms;
        for (const auto& t : need(g, "terms", w))
            terms.push_back({num(t, "coef", w + ".terms"), num(t, "alpha", w + ".terms"),
                             static_cast<int>(num(t, "axis", w + ".terms"))});
        return GFunction::power_sum(static_cast<int>(num(g, "dim", w)), std::move(terms));
    }
    if (kind == "affine_power") {
        std::vector<GFunction::AffinePowerCoord> coords;
        for (const auto& c : need(g, "coords", w))
            coords.push_back({num(c, "c0", w + ".coords"), num(c, "c1", w + ".coords"), num(c, "alpha", w + ".coords")});
        return GFunction::affine_power(std::move(coords));
    }
    if (kind == "stable_cone") return GFunction::stable_cone(vec(need(g, "direction", w), w + ".direction"), num(g, "coef", w), num(g, "alpha", w));
    if (kind == "tabulated") {
        const auto x = nums(need(g, "x", w), w + ".x");
        std::vector<Vec> values;
        for (const auto& v : need(g, "values", w)) values.push_back(vec(v, w + ".values"));
        return GFunction::tabulated(x, std::move(values));
    }
    if (kind == "expr") {
        std::vector<Expression> comps;
        std::ostringstream label;
        label << "(";
        for (const auto& c : need(g, "components", w)) {
            comps.push_back(Expression::parse(c.get<std::string>(), "x"));
            label << (comps.size() > 1 ? ", " : "") << c.get<std::string>();
        }
        label << ")";
        if (comps.empty()) schema("gfun.components must not be empty");
        return GFunction::callable(
            static_cast<int>(comps.size()),
            [comps](double x) {
                Vec v(static_cast<Eigen::Index>(comps.size()));
                for (std::size_t i = 0; i < comps.size(); ++i) v[static_cast<Eigen::Index>(i)] = comps[i](x);
                return v;
            },
            label.str());
    }
    schema("gfun.kind \"" + kind + "\" is not one of power_sum, affine_power, stable_cone, tabulated, expr");
}

LevyModel build_model(const Json& m) {
    const std::string w = "model";
    const std::string kind = str(m, "kind", w);
    if (kind == "independent") {
        std::vector<IndependentCoord> coords;
        for (const auto& c : need(m, "coords", w)) {
            IndependentCoord ic;
            ic.measure = c.contains("measure") ? build_measure(c.at("measure")) : LevyMeasure1D::zero();
            ic.q = num_or(c, "q", 0.0, w + ".coords");
            coords.push_back(std::move(ic));
        }
        return LevyModel::independent(std::move(coords));
    }
    if (kind == "spherical") {
        SphericalMeasure sm;
        for (const auto& d : need(m, "directions", w))
            sm.directions.emplace_back(vec(need(d, "direction", w + ".directions"), w + ".directions.direction"),
                                       num(d, "weight", w + ".directions"));
        sm.radial = build_measure(need(m, "radial", w));
        if (sm.directions.empty()) schema("model.directions must not be empty");
        const int d = static_cast<int>(sm.directions.front().first.size());
        return LevyModel::spherical(std::move(sm), mat_or_zero(m, d, w));
    }
    if (kind == "custom") {
        const int d = static_cast<int>(num(m, "dim", w));
        std::vector<Ray> rays;
        for (const auto& r : need(m, "rays", w))
            rays.push_back({vec(need(r, "direction", w + ".rays"), w + ".rays.direction"), build_measure(need(r, "measure", w + ".rays"))});
        return LevyModel::custom(d, std::move(rays), mat_or_zero(m, d, w));
    }
    schema("model.kind \"" + kind + "\" is not one of independent, spherical, custom");
}

GeneratingPair build_family(const Json& f, const DriftSpec& drift) {
    const std::string w = "family";
    const std::string name = str(f, "name", w);
    if (name == "example_3d") {
        Example3dParams p;
        const Json params = f.contains("params") ? f.at("params") : Json::object();
        p.gamma1 = num_or(params, "gamma1", p.gamma1, w);
        p.gamma2 = num_or(params, "gamma2", p.gamma2, w);
        p.gamma3 = num_or(params, "gamma3", p.gamma3, w);
        p.gamma3_tilde = num_or(params, "gamma3_tilde", p.gamma3_tilde, w);
        p.eta1 = num_or(params, "eta1", p.eta1, w);
        p.eta2 = num_or(params, "eta2", p.eta2, w);
        p.alpha1 = num_or(params, "alpha1", p.alpha1, w);
        p.alpha2 = num_or(params, "alpha2", p.alpha2, w);
        const Expression g3 = Expression::parse(str(f, "g3", w), "x");
        return build_example_3d([g3](double x) { return g3(x); }, p, drift);
    }
    if (name == "antithetic") return example_antithetic_pair(num(f, "alpha", w), drift);
    if (name == "split_stable") return example_split_stable(num(f, "alpha", w), nums(need(f, "cuts", w), w + ".cuts"), drift);
    if (name == "spherical_stable") {
        std::vector<std::pair<Vec, double>> dirs;
        for (const auto& d : need(f, "directions", w))
            dirs.emplace_back(vec(need(d, "direction", w + ".directions"), w + ".directions.direction"), num(d, "weight", w + ".directions"));
        return example_spherical_stable(dirs, num(f, "alpha", w), vec(need(f, "u", w), w + ".u"), num(f, "eta", w), drift);
    }
    schema("family.name \"" + name + "\" is not one of example_3d, antithetic, split_stable, spherical_stable");
}

}  // namespace

const std::vector<std::string>& known_analyses() {
    static const std::vector<std::string> a = {"validate", "canonicalize", "classify2d", "price", "hjm",
                                               "simulate", "martingale",   "regvar",     "weyl"};
    return a;
}

bool Scenario::wants(const std::string& analysis) const {
    return std::find(analyses.begin(), analyses.end(), analysis) != analyses.end();
}

LevyMeasure1D build_measure(const Json& spec) {
    const std::string w = "measure";
    const std::string kind = str(spec, "kind", w);
    if (kind == "zero") return LevyMeasure1D::zero();
    if (kind == "stable") return LevyMeasure1D::stable(num(spec, "alpha", w), num_or(spec, "scale", 1.0, w));
    if (kind == "atoms") {
        std::vector<std::pair<double, double>> atoms;
        for (const auto& a : need(spec, "atoms", w)) {
            const auto p = nums(a, w + ".atoms");
            if (p.size() != 2) schema("measure.atoms entries are [location, weight]");
            atoms.emplace_back(p[0], p[1]);
        }
        return LevyMeasure1D::atoms(std::move(atoms));
    }
    if (kind == "density") {
        const Expression f = Expression::parse(str(spec, "expr", w), "v");
        std::vector<double> breaks = nums_or(spec, "breakpoints", {}, w);
        double hi = num_or(spec, "support_hi", HUGE_VAL, w);
        if (spec.contains("support")) {
            std::vector<std::pair<double, double>> pieces;
            for (const auto& p : spec.at("support")) {
                const auto lh = nums(p, w + ".support");
                if (lh.size() != 2 || !(lh[1] > lh[0])) schema("measure.support entries are [lo, hi] with hi > lo");
                pieces.emplace_back(lh[0], lh[1]);
                if (lh[0] > 0.0) breaks.push_back(lh[0]);
                if (std::isfinite(lh[1])) breaks.push_back(lh[1]);
            }
            double top = 0.0;
            for (const auto& p : pieces) top = std::max(top, p.second);
            hi = std::min(hi, top);
            std::sort(breaks.begin(), breaks.end());
            breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
            return LevyMeasure1D::density(
                [f, pieces](double v) {
                    for (const auto& [lo, up] : pieces)
                        if (v > lo && v <= up) return f(v);
                    return 0.0;
                },
                hi, breaks, variation_of(spec));
        }
        return LevyMeasure1D::density([f](double v) { return f(v); }, hi, breaks, variation_of(spec));
    }
    if (kind == "sum") {
        std::vector<LevyMeasure1D> parts;
        for (const auto& p : need(spec, "parts", w)) parts.push_back(build_measure(p));
        return LevyMeasure1D::sum(std::move(parts));
    }
    schema("measure.kind \"" + kind + "\" is not one of zero, stable, atoms, density, sum");
}

Scenario parse_scenario(Json doc) {
    if (!doc.is_object()) schema("scenario must be a JSON object");
    normalize(doc, "");
    check_functions(doc, "scenario");

    Scenario s;
    s.name = str(doc, "name", "scenario");
    const bool family = doc.contains("family");
    if (!family && !(doc.contains("model") && doc.contains("gfun")))
        schema("scenario needs either \"family\" or both \"model\" and \"gfun\"");

    const Json drift = doc.contains("drift") ? doc.at("drift") : Json::object();
    s.drift = {num_or(drift, "a", 0.0, "drift"), num_or(drift, "b", 0.0, "drift")};
    s.x0 = num_or(doc, "x0", 0.0, "scenario");
    if (!(s.x0 >= 0.0)) schema("x0 must be nonnegative");

    const Json grids = doc.contains("grids") ? doc.at("grids") : Json::object();
    s.x_grid = nums_or(grids, "x", default_x_grid(), "grids");
    s.b_grid = nums_or(grids, "b", default_b_grid(), "grids");
    s.x_small = nums_or(grids, "x_small", {1e-6, 1e-5, 1e-4}, "grids");
    s.v_max = num_or(grids, "v_max", 30.0, "grids");
    s.tol = num_or(grids, "tol", 1e-10, "grids");
    {
        std::vector<double> hv, hx;
        for (int i = 0; i <= 40; ++i) hv.push_back(0.25 * i);
        for (int i = 0; i <= 10; ++i) hx.push_back(0.1 * i);
        s.hjm_v = nums_or(grids, "hjm_v", hv, "grids");
        s.hjm_x = nums_or(grids, "hjm_x", hx, "grids");
    }
    if (!(s.v_max > 0.0)) schema("grids.v_max must be positive");

    if (doc.contains("simulation")) {
        const Json& j = doc.at("simulation");
        PathConfig c;
        c.T = num_or(j, "T", c.T, "simulation");
        c.dt = num_or(j, "dt", c.dt, "simulation");
        const double n = num_or(j, "n_paths", static_cast<double>(c.n_paths), "simulation");
        const double seed = num_or(j, "seed", static_cast<double>(c.seed), "simulation");
        const double every = num_or(j, "record_every", 1.0, "simulation");
        if (!(n >= 1.0) || n != std::floor(n)) schema("simulation.n_paths must be a positive integer");
        if (!(seed >= 0.0) || seed != std::floor(seed) || seed > 9.007199254740992e15)
            schema("simulation.seed must be a nonnegative integer below 2^53");
        if (!(every >= 1.0) || every != std::floor(every)) schema("simulation.record_every must be a positive integer");
        c.n_paths = static_cast<std::size_t>(n);
        c.seed = static_cast<std::uint64_t>(seed);
        c.record_every = static_cast<std::size_t>(every);
        c.truncation_eps = num_or(j, "truncation_eps", c.truncation_eps, "simulation");
        try {
            c.validate();
        } catch (const DomainError& e) {
            schema(std::string("simulation: ") + e.what());
        }
        s.simulation = c;
    }

    const Json pricing = doc.contains("pricing") ? doc.at("pricing") : Json::object();
    s.maturities = nums_or(pricing, "maturities", {0.25, 0.5, 1, 2, 3, 5, 7, 10, 15, 20, 30}, "pricing");
    s.checkpoints = nums_or(pricing, "checkpoints", {0.0, 0.25, 0.5, 0.75}, "pricing");
    s.martingale_T = num_or(pricing, "T", s.simulation ? s.simulation->T : 1.0, "pricing");
    for (double m : s.maturities)
        if (!(m >= 0.0 && m <= s.v_max)) schema("pricing.maturities must lie in [0, v_max]");

    if (!doc.contains("analyses")) schema("scenario: missing \"analyses\"");
    std::set<std::string> requested;
    for (const auto& a : doc.at("analyses")) {
        if (!a.is_string()) schema("analyses must be strings");
        const std::string n = a.get<std::string>();
        if (std::find(known_analyses().begin(), known_analyses().end(), n) == known_analyses().end())
            schema("unknown analysis \"" + n + "\"");
        requested.insert(n);
    }
    for (const auto& a : known_analyses())
        if (requested.count(a)) s.analyses.push_back(a);

    if ((s.wants("simulate") || s.wants("martingale")) && !s.simulation) schema("analysis \"simulate\" requires a \"simulation\" section");
    if (s.wants("martingale") && !s.wants("simulate")) schema("analysis \"martingale\" requires \"simulate\"");
    if (s.wants("martingale") && s.martingale_T > s.simulation->T * (1.0 + 1e-12)) schema("pricing.T exceeds the simulated horizon");
    if (s.wants("regvar") && !doc.contains("regvar")) schema("analysis \"regvar\" requires a \"regvar\" section");
    if (s.wants("weyl") && !doc.contains("weyl")) schema("analysis \"weyl\" requires a \"weyl\" section");
    if (doc.contains("regvar") && doc.at("regvar").contains("measures"))
        for (const auto& m : doc.at("regvar").at("measures")) build_measure(m);
    if (doc.contains("weyl")) {
        const Json& w = doc.at("weyl");
        num(w, "p", "weyl");
        num(w, "q", "weyl");
        num(w, "x", "weyl");
        num(w, "delta", "weyl");
    }
    s.doc = std::move(doc);
    return s;
}

Json serialize_scenario(const Scenario& s) { return s.doc; }

void apply_override(Json& doc, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) schema("override \"" + assignment + "\" is not key=value");
    const std::string key = assignment.substr(0, eq), text = assignment.substr(eq + 1);
    Json value;
    try {
        value = Json::parse(text);
    } catch (const Json::parse_error&) {
        value = text;
    }
    Json* cur = &doc;
    std::stringstream ss(key);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, '.')) parts.push_back(part);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!cur->is_object()) schema("override \"" + key + "\" walks into a non-object");
        if (i + 1 == parts.size())
            (*cur)[parts[i]] = value;
        else
            cur = &(*cur)[parts[i]];
    }
}

std::string bundled_scenario_dir() {
    if (const char* env = std::getenv("AFFINE_LEVY_SCENARIOS")) return env;
    return AFFINE_LEVY_SCENARIO_DIR;
}

std::vector<std::string> bundled_scenarios() {
    std::vector<std::string> out;
    std::error_code ec;
    for (const auto& e : fs::directory_iterator(bundled_scenario_dir(), ec))
        if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
    std::sort(out.begin(), out.end());
    return out;
}

std::string resolve_scenario_path(const std::string& path_or_name) {
    if (fs::exists(path_or_name)) return path_or_name;
    const fs::path bundled = fs::path(bundled_scenario_dir()) / (path_or_name + ".json");
    if (fs::exists(bundled)) return bundled.string();
    throw SchemaError("scenario \"" + path_or_name + "\" is neither a file nor a bundled scenario");
}

Scenario load_scenario(const std::string& path_or_name, const std::vector<std::string>& overrides) {
    const std::string path = resolve_scenario_path(path_or_name);
    std::ifstream is(path);
    if (!is) throw SchemaError("cannot read " + path);
    Json doc;
    try {
        doc = Json::parse(is);
    } catch (const Json::exception& e) {
        throw SchemaError(path + ": " + e.what());
    }
    for (const auto& o : overrides) apply_override(doc, o);
    return parse_scenario(std::move(doc));
}

GeneratingPair build_pair(const Scenario& s) {
    if (s.doc.contains("family")) return build_family(s.doc.at("family"), s.drift);
    return make_generating_pair(build_model(s.doc.at("model")), build_gfun(s.doc.at("gfun")), s.drift);
}

}  // namespace affine_levy
