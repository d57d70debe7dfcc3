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

#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "affine_levy/cli/expression.hpp"
#include "affine_levy/cli/plot.hpp"
#include "affine_levy/cli/runner.hpp"
#include "affine_levy/cli/scenario.hpp"
#include "affine_levy/core/errors.hpp"

using namespace affine_levy;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("affine_levy_cli_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::vector<double>> read_csv(const fs::path& p, std::string* header = nullptr) {
    std::ifstream in(p);
    std::string line;
    std::getline(in, line);
    if (header) *header = line;
    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        rows.push_back(row);
    }
    return rows;
}

int run(const std::string& scenario, const fs::path& out, const std::vector<std::string>& sets, std::string* err_text = nullptr) {
    std::ostringstream err;
    const int code = run_command(scenario, out.string(), sets, err);
    if (err_text) *err_text = err.str();
    return code;
}

}  // namespace

TEST_CASE("expression grammar") {
    CHECK(evaluate_expression("2^1.5") == doctest::Approx(std::pow(2.0, 1.5)).epsilon(1e-15));
    CHECK(evaluate_expression("2^3^2") == 512.0);
    CHECK(evaluate_expression("-2^2") == -4.0);
    CHECK(evaluate_expression("1/500") == 0.002);
    CHECK(evaluate_expression("gamma(0.5)^2") == doctest::Approx(std::acos(-1.0)).epsilon(1e-14));
    CHECK(evaluate_expression("C(1.5)") == doctest::Approx(std::sqrt(std::acos(-1.0)) / 0.75).epsilon(1e-14));
    CHECK(evaluate_expression("min(3, max(1, 2)) + abs(-1)") == 3.0);
    CHECK(std::isinf(evaluate_expression("inf")));
    const auto f = Expression::parse("40*exp(-20*v)", "v");
    CHECK(f.uses_variable());
    CHECK(f(0.1) == doctest::Approx(40 * std::exp(-2.0)).epsilon(1e-15));
    CHECK_THROWS_AS(evaluate_expression("2 +"), SchemaError);
    CHECK_THROWS_AS(evaluate_expression("foo(1)"), SchemaError);
    CHECK_THROWS_AS(evaluate_expression("x + 1"), SchemaError);
    CHECK_THROWS_AS(evaluate_expression("(1"), SchemaError);
}

TEST_CASE("bundled scenarios are listed and round trip") {
    const auto names = bundled_scenarios();
    for (const char* want : {"cir_classic", "vasicek_jump", "example_2_1", "example_2_2", "example_2_3", "plane_case_Ia",
                             "plane_case_Ib", "plane_case_II", "spherical_stable", "example_3d"})
        CHECK(std::find(names.begin(), names.end(), want) != names.end());
    for (const auto& n : names) {
        const Scenario s = load_scenario(n);
        const Json once = serialize_scenario(s);
        const Json twice = serialize_scenario(parse_scenario(once));
        CHECK(once == twice);
        CHECK(once.dump() == twice.dump());
    }
}

TEST_CASE("string expressions are evaluated and overrides applied") {
    const Scenario s = load_scenario("cir_classic", {"simulation.n_paths=10", "x0=0.04", "simulation.dt=\"1/100\""});
    REQUIRE(s.simulation);
    CHECK(s.simulation->n_paths == 10);
    CHECK(s.simulation->dt == 0.01);
    CHECK(s.x0 == 0.04);
    CHECK(s.doc.at("simulation").at("dt").is_number());
}

TEST_CASE("schema violations") {
    Json doc = serialize_scenario(load_scenario("cir_classic"));
    doc.erase("simulation");
    CHECK_THROWS_AS(parse_scenario(doc), SchemaError);
    Json bad = serialize_scenario(load_scenario("cir_classic"));
    bad["analyses"] = Json::array({"validate", "dance"});
    CHECK_THROWS_AS(parse_scenario(bad), SchemaError);
    Json nogfun = serialize_scenario(load_scenario("cir_classic"));
    nogfun.erase("gfun");
    CHECK_THROWS_AS(parse_scenario(nogfun), SchemaError);
    CHECK_THROWS_AS(load_scenario("no_such_scenario"), Error);
}

TEST_CASE("exit codes") {
    const auto out = scratch("codes");
    std::string err;
    CHECK(run("g0_control", out / "g0", {}, &err) == 1);
    CHECK(err.find("G(0)=0") != std::string::npos);
    const Json r = Json::parse(slurp(out / "g0" / "result.json"));
    CHECK_FALSE(r.at("passed").get<bool>());
    CHECK(run("nonlinear_control", out / "nl", {}) == 1);
    CHECK(run("cir_classic", out / "schema", {"simulation.n_paths=\"abc\""}) == 2);
    CHECK(run("cir_classic", out / "schema2", {"analyses=[\"martingale\"]", "simulation=null"}) == 2);
    fs::remove_all(out);
}

TEST_CASE("cir_classic reports the classical CIR case and a term structure") {
    const auto out = scratch("cir");
    CHECK(run("cir_classic", out, {"analyses=[\"validate\",\"price\"]"}) == 0);
    const Json r = Json::parse(slurp(out / "result.json"));
    CHECK(r.at("analyses").at("validate").at("case") == "classical CIR");
    const fs::path f = emit_plot_data(out.string(), "term-structure");
    std::string header;
    const auto rows = read_csv(f, &header);
    CHECK(header == "T,P,yield");
    REQUIRE_FALSE(rows.empty());
    CHECK(rows[0][0] == 0.0);
    CHECK(rows[0][1] == 1.0);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][1] < rows[i - 1][1]);
    CHECK_THROWS_AS(emit_plot_data(out.string(), "path-fan"), MissingResultError);
    CHECK_THROWS_AS(emit_plot_data(out.string(), "nonsense"), Error);
    fs::remove_all(out);
}

TEST_CASE("path fan with a single path collapses the quantiles") {
    const auto out = scratch("fan");
    CHECK(run("cir_classic", out, {"analyses=[\"simulate\"]", "simulation.n_paths=1", "simulation.dt=0.01"}) == 0);
    const auto rows = read_csv(emit_plot_data(out.string(), "path-fan"));
    REQUIRE(rows.size() > 1);
    for (const auto& r : rows)
        for (std::size_t k = 2; k < r.size(); ++k) CHECK(r[k] == r[1]);
    fs::remove_all(out);
}

TEST_CASE("canonical fit of a two-power scenario") {
    const auto out = scratch("canon");
    CHECK(run("plane_case_II", out, {"analyses=[\"canonicalize\"]"}) == 0);
    std::string header;
    const auto rows = read_csv(emit_plot_data(out.string(), "canon-fit"), &header);
    CHECK(header == "b,observed,fitted");
    for (const auto& r : rows) CHECK(std::abs(r[2] - r[1]) <= 1e-6 * std::abs(r[1]));
    fs::remove_all(out);
}

TEST_CASE("result.json is independent of the thread count") {
    const auto out = scratch("threads");
    std::string first;
    for (const char* t : {"1", "4", "8"}) {
        setenv("AFFINE_LEVY_THREADS", t, 1);
        const fs::path dir = out / t;
        CHECK(run("example_2_2", dir, {"simulation.n_paths=3000", "simulation.dt=0.01", "simulation.record_every=25"}) == 0);
        const std::string body = slurp(dir / "result.json");
        if (first.empty())
            first = body;
        else
            CHECK(body == first);
    }
    unsetenv("AFFINE_LEVY_THREADS");
    fs::remove_all(out);
}
