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

#include "affine_levy/core/levy_measure.hpp"
#include "affine_levy/core/levy_model.hpp"

namespace affine_levy {

// J_rho(b) = int (e^{-b v} - 1 + b v) rho(dv), b >= 0.
double laplace_exponent_1d(const LevyMeasure1D& rho, double b, const QuadOptions& opts = {});

// Same integral for any real z.  Negative z needs exponential moments and
// throws DivergenceError when they do not exist.
double laplace_exponent_signed(const LevyMeasure1D& rho, double z, const QuadOptions& opts = {});

// J_Z(lam) = 1/2 <Q lam, lam> + J_nu(lam)
double laplace_exponent_multi(const LevyModel& model, const Vec& lam, const QuadOptions& opts = {});

// Laplace exponent of the projection <g, Z> at b.
double projection_laplace(const LevyModel& model, const Vec& g, double b, const QuadOptions& opts = {});

struct ProjectionImage {
    double wiener = 0.0;           // 1/2 <Q g, g>
    LevyMeasure1D positive;        // image of nu restricted to positive jumps
    bool has_negative = false;     // some ray with nonzero mass maps to negative jumps
};

// Image of the model under y -> <g, y>.  Jumps mapped to 0 are dropped.
ProjectionImage image_measure(const LevyModel& model, const Vec& g);

struct JumpSupportReport {
    bool all_nonneg;
    double min_inner;  // min of <g,y>/(|g||y|) over support directions; 1 when there are none
};

JumpSupportReport check_jump_support(const LevyModel& model, const Vec& g);

// x + <G(x), y> >= 0 for every jump y of the model.
bool appendix_support_bound(const LevyModel& model, const GFunction& gfun, double x);

}  // namespace affine_levy
