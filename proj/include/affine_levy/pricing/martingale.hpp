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

#include <vector>

#include "affine_levy/pricing/affine_solution.hpp"
#include "affine_levy/simulate/short_rate.hpp"

namespace affine_levy {

struct MartingaleReport {
    double T = 0.0;
    double P0 = 0.0;  // P(0, T) at the initial rate
    std::vector<double> times;
    std::vector<double> means;
    std::vector<double> std_errors;
    double max_deviation_se = 0.0;  // max |mean - P0| / SE over checkpoints with SE > 0
};

// Mean of exp(-int_0^t R - A(T-t) - B(T-t) R(t)) across paths at each
// checkpoint (which must be record times of the paths).
MartingaleReport martingale_check(const ShortRatePaths& paths, const AffineSolution& sol, double T,
                                  const std::vector<double>& checkpoints);

}  // namespace affine_levy
