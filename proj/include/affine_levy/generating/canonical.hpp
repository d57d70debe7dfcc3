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

#include "affine_levy/generating/decompose.hpp"
#include "affine_levy/generating/pair.hpp"

namespace affine_levy {

std::vector<double> default_x_small();  // 1e-6, 1e-5, 1e-4

struct CanonicalFit {
    CanonicalForm form;
    double residual = 0.0;           // max relative misfit of the power sum
    double small_x_deviation = 0.0;  // J(bG(x))/x at small x against the fit
    std::vector<double> b;
    std::vector<double> observed;
    std::vector<double> fitted;
};

// Power-sum fit of sampled slopes; throws FitFailure when the misfit at
// max_terms terms is 1e-4 or worse.
CanonicalFit canonical_from_slope(const std::vector<double>& b, const std::vector<double>& slope, int max_terms);

// Requires nu_G(0) = 0.  Throws ConstraintViolation otherwise, and
// NonlinearityError / FitFailure as the underlying steps do.
CanonicalFit canonicalize(const GeneratingPair& pair, const std::vector<double>& x_small = default_x_small(),
                          const std::vector<double>& b_grid = default_b_grid());

struct WienerSplit {
    double c = 0.0;
    std::vector<CanonicalTerm> mu_terms;  // alpha in (1,2)
};

WienerSplit split_wiener(const CanonicalForm& cf);

struct CanonicalSdeTerm {
    double alpha;
    double eta;
    double d;     // coefficient of x^{1/alpha}
    bool wiener;  // alpha == 2: driven by a standard Brownian motion
};

// dR = (aR + b)dt + sum_k d_k R^{1/alpha_k} dZ_k
struct CanonicalSde {
    DriftSpec drift;
    std::vector<CanonicalSdeTerm> terms;
};

CanonicalSde synthesize_canonical_equation(const CanonicalForm& cf, const DriftSpec& drift);

// The canonical equation as a generating pair: independent coordinates,
// Z_k standard alpha_k-stable (scale 1) or Brownian (q = 1), G_k = d_k x^{1/alpha_k}.
GeneratingPair canonical_pair(const CanonicalSde& sde);

}  // namespace affine_levy
