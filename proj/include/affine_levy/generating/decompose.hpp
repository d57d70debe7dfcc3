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

namespace affine_levy {

std::vector<double> default_x_grid();  // 2^-6 .. 2^3
std::vector<double> default_b_grid();  // 2^-4 .. 2^4, half-octave steps

// Quadrature settings used when sampling projection exponents for the
// linearity test; tighter than the defaults so that density-kind measures
// do not masquerade as nonlinearity.
QuadOptions decomposition_quad();

struct Decomposition {
    std::vector<double> x;
    std::vector<double> b;
    std::vector<double> intercept;  // J_{nu_G(0)}(b) samples
    std::vector<double> slope;      // c b^2 + J_mu(b) samples
    double residual = 0.0;          // max relative deviation from a line in x
    bool linear = false;            // residual < 1e-6
};

// Fits x -> J_{Z^{G(x)}}(b) by a line for every b.  Throws NonlinearityError
// when the residual exceeds 1e-3.
Decomposition decompose_projection(const GeneratingPair& pair, const std::vector<double>& x_grid = default_x_grid(),
                                   const std::vector<double>& b_grid = default_b_grid());

// Same analysis without the throw; used by validators and reports.
Decomposition decompose_samples(const GeneratingPair& pair, const std::vector<double>& x_grid,
                                const std::vector<double>& b_grid);

// (c, nu_G(0), mu): nu_G(0) is the image of nu under y -> <G(0), y>; c and mu
// come from a power-sum fit of the slope samples.
ProjectionTriplet projection_triplet(const GeneratingPair& pair, const Decomposition& dec);
ProjectionTriplet projection_triplet(const GeneratingPair& pair);

struct ConditionResult {
    bool ok = false;
    std::string diagnostic;
};

struct ConditionReport {
    ConditionResult jumps_nonneg;
    ConditionResult nu0_finite_variation;
    ConditionResult linear_in_x;
    ConditionResult drift_bound_ok;
    std::optional<Decomposition> decomposition;

    bool all() const {
        return jumps_nonneg.ok && nu0_finite_variation.ok && linear_in_x.ok && drift_bound_ok.ok;
    }
};

ConditionReport validate_generating(const GeneratingPair& pair, const std::vector<double>& x_grid = default_x_grid(),
                                    const std::vector<double>& b_grid = default_b_grid());

}  // namespace affine_levy
