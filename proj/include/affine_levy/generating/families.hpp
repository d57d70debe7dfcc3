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

#include "affine_levy/generating/pair.hpp"

namespace affine_levy {

struct Example3dParams {
    double gamma1 = 1.0;
    double gamma2 = 1.0;
    double gamma3 = 1.0;
    double gamma3_tilde = 1.0;
    double eta1 = 1.0;
    double eta2 = 1.0;
    double alpha1 = 1.8;
    double alpha2 = 1.3;
};

// Upper bound on G3: ((eta1/gamma3) x)^{1/alpha1} ^ ((eta2/gamma3~) x)^{1/alpha2}
double example_3d_bound(const Example3dParams& p, double x);

// Three independent coordinates: Z1 alpha1-stable with J_1 = gamma1 b^alpha1,
// Z2 alpha2-stable with J_2 = gamma2 b^alpha2, Z3 with
// J_3 = gamma3 b^alpha1 + gamma3~ b^alpha2.  G1, G2 are solved from G3 so that
// the projection exponent is x (eta1 b^alpha1 + eta2 b^alpha2).  Throws
// ConstraintViolation when G3 leaves [0, bound] on the grid.
GeneratingPair build_example_3d(std::function<double(double)> g3, const Example3dParams& p, const DriftSpec& drift = {},
                                const std::vector<double>& x_grid = {});

// Noise whose Levy measure is a weighted finite set of directions on the
// nonnegative part of the unit sphere with stable radial part, and
// G(x) = x^{1/alpha} u where sum_j w_j <u, xi_j>^alpha = eta / C_alpha.
GeneratingPair example_spherical_stable(const std::vector<std::pair<Vec, double>>& directions, double alpha,
                                        const Vec& u_direction, double eta, const DriftSpec& drift = {});

// Z = (S, -S) for a spectrally positive alpha-stable S and
// G(x) = (x^{1/alpha} + 1, 1 - x^{1/alpha}).  The short rate is dR = 2 R^{1/alpha} dS.
GeneratingPair example_antithetic_pair(double alpha, const DriftSpec& drift = {});

// Z1, Z2 independent with densities 1_E(v) v^{-1-alpha} and 1_{E^c}(v) v^{-1-alpha},
// E a finite union of intervals given by its sorted cut points starting
// with (0, cuts[0]]; G(x) = x^{1/alpha} (1, 1).
GeneratingPair example_split_stable(double alpha, const std::vector<double>& cuts, const DriftSpec& drift = {});

}  // namespace affine_levy
