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

#include "affine_levy/generating/pair.hpp"

namespace affine_levy {

struct PowerFit {
    std::vector<CanonicalTerm> terms;  // alpha descending, pairwise >= 0.01 apart
    double residual = 0.0;             // max relative misfit on the samples
};

// Fits y(b) ~ sum_k eta_k b^{alpha_k} with alpha_k in (1,2], eta_k > 0 and at
// most max_terms terms, adding terms until the residual drops below target.
// Returns the best fit found; the caller judges whether it is good enough.
PowerFit fit_power_sum(const std::vector<double>& b, const std::vector<double>& y, int max_terms,
                       double target = 1e-6);

}  // namespace affine_levy
