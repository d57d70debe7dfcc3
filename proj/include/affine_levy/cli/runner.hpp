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

#include <iosfwd>
#include <string>
#include <vector>

#include "affine_levy/cli/scenario.hpp"

namespace affine_levy {

struct RunOutcome {
    int exit_code = 0;  // 0 all checks pass, 1 an analysis failed
    Json result;
    std::vector<std::string> failures;
};

// Runs the requested analyses and writes result.json, manifest.json and
// the per-analysis CSVs into out_dir.
RunOutcome run_scenario(const Scenario& s, const std::string& out_dir, const std::string& scenario_file = "");

// Front end for `affine-levy run`: returns 2 on schema errors, otherwise the
// run's exit code.  Failures are reported on err.
int run_command(const std::string& scenario, const std::string& out_dir, const std::vector<std::string>& overrides,
                std::ostream& err);

}  // namespace affine_levy
