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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "affine_levy/cli/plot.hpp"
#include "affine_levy/cli/runner.hpp"
#include "affine_levy/cli/scenario.hpp"
#include "affine_levy/core/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Affine short-rate models driven by Levy noise"};
    app.require_subcommand(1);

    std::string scenario, out_dir = "out";
    std::vector<std::string> overrides;
    auto* run = app.add_subcommand("run", "Run a scenario and write result.json, manifest.json and CSVs");
    run->add_option("scenario", scenario, "Scenario file or bundled scenario name")->required();
    run->add_option("--out", out_dir, "Output directory")->capture_default_str();
    run->add_option("--set", overrides, "Override a scenario field, key.sub=value (repeatable)");

    std::string result_dir, which;
    auto* plot = app.add_subcommand("plot", "Emit plot-ready CSV from a run directory");
    plot->add_option("dir", result_dir, "Run output directory")->required();
    plot->add_option("--which", which, "laplace | term-structure | path-fan | canon-fit")
        ->required()
        ->check(CLI::IsMember(affine_levy::plot_kinds()));

    auto* list = app.add_subcommand("list-scenarios", "List bundled scenarios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (*run) return affine_levy::run_command(scenario, out_dir, overrides, std::cerr);
    if (*plot) {
        try {
            std::cout << affine_levy::emit_plot_data(result_dir, which) << '\n';
            return 0;
        } catch (const std::exception& e) {
            std::cerr << e.what() << '\n';
            return 1;
        }
    }
    if (*list) {
        for (const auto& s : affine_levy::bundled_scenarios()) std::cout << s << '\n';
        return 0;
    }
    return 2;
}
