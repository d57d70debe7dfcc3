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

#include <functional>
#include <vector>

#include "affine_levy/core/levy_measure.hpp"

namespace affine_levy {

using RealFn = std::function<double(double)>;

struct IndexEstimate {
    double alpha = 0.0;
    double diagnostic = 0.0;  // size of the last correction / spread across probes
    std::vector<double> raw;  // per-probe estimates
};

std::vector<double> default_probe_grid();  // 10^2 .. 10^8

// Index of regular variation of J at 0 from log(J(b x)/J(x))/log(b) on
// x = 10^-1 .. 10^-8, Richardson-extrapolated.
IndexEstimate rv_index_from_laplace(const RealFn& J, double b_probe = 2.0);

// Index from the tail of a Levy density g(by)/g(y) -> b^{-alpha-1}.
// Requires int v^2 g(v) dv = inf (checked numerically; DivergenceError otherwise).
IndexEstimate rv_index_from_density(const RealFn& g, const std::vector<double>& y_grid = default_probe_grid());

// Index from F~(v) = int_0^v u^2 rho(du): F~(by)/F~(y) -> b^{2-alpha}.
IndexEstimate rv_index_from_tail(const RealFn& F_tilde, const std::vector<double>& y_grid = default_probe_grid());

// b -> J_rho(b) with purely relative quadrature tolerance, suited to the
// tiny arguments probed above.
RealFn laplace_function(const LevyMeasure1D& rho);

// v -> int_0^v u^2 rho(du)
RealFn tail_function(const LevyMeasure1D& rho);

struct ScalingRelationEvidence {
    double beta = 2.0;
    double eta = 0.0;
    double gamma = 3.0;
    double theta = 0.0;
    double residual = 0.0;
};

// Reads eta = J(beta)/J(1) and theta = J(gamma)/J(1) off J and records the
// worst relative violation of J(beta b) = eta J(b), J(gamma b) = theta J(b)
// on the verification grid.
ScalingRelationEvidence measure_scaling(const RealFn& J, double beta, double gamma);

struct PowerLaw {
    double C;
    double alpha;
};

// J(b) = C b^alpha from two multiplicative scaling relations with
// incommensurable log-ratios.  Throws HypothesisViolation when the relations
// fail on the grid, InconsistencyError when the two log-ratios disagree.
PowerLaw power_law_detect(const RealFn& J, const ScalingRelationEvidence& evidence);

struct RationalMatch {
    bool matched = false;  // a convergent reproduces r to rounding
    long long numerator = 0;
    long long denominator = 0;
};

// Continued-fraction convergents of r up to denominator max_den.
RationalMatch rational_match(double r, long long max_den = 1000000);

}  // namespace affine_levy
