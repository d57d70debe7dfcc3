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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affine_levy/generating/pair.hpp"
#include "affine_levy/simulate/short_rate.hpp"
#include "json.hpp"

namespace affine_levy {

using Json = nlohmann::ordered_json;

const std::vector<std::string>& known_analyses();  // in execution order

struct Scenario {
    Json doc;  // normalized: every numeric field is a number
    std::string name;
    std::vector<std::string> analyses;  // sorted into execution order
    DriftSpec drift;
    double x0 = 0.0;
    std::vector<double> x_grid, b_grid, x_small;
    std::vector<double> hjm_v, hjm_x;
    double v_max = 30.0;
    double tol = 1e-10;
    std::optional<PathConfig> simulation;
    std::vector<double> maturities;
    std::vector<double> checkpoints;
    double martingale_T = 1.0;

    bool wants(const std::string& analysis) const;
};

// Throws SchemaError on a malformed document.
Scenario parse_scenario(Json doc);
Json serialize_scenario(const Scenario& s);

// `key.sub=value`; value is read as JSON when it parses, else as a string.
void apply_override(Json& doc, const std::string& assignment);

// A path, or the name of a bundled scenario.
Scenario load_scenario(const std::string& path_or_name, const std::vector<std::string>& overrides = {});
std::string resolve_scenario_path(const std::string& path_or_name);

std::string bundled_scenario_dir();
std::vector<std::string> bundled_scenarios();

LevyMeasure1D build_measure(const Json& spec);
GeneratingPair build_pair(const Scenario& s);

}  // namespace affine_levy
