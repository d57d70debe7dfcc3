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
#include <limits>
#include <vector>

namespace affine_levy {

using Integrand = std::function<double(double)>;

struct QuadOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_intervals = 4000;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int intervals = 0;
};

// Globally adaptive Gauss-Kronrod (7,15) on a finite interval.
QuadResult integrate_interval(const Integrand& f, double a, double b, const QuadOptions& opts = {});

// Integral of f over (0, hi), hi possibly infinite.  The range is split at 1
// and at the given breakpoints; the end pieces touching 0 and infinity are
// integrated in logarithmic coordinates so that algebraic singularities at
// the origin and algebraic tails are handled.
QuadResult integrate_half_line(const Integrand& f,
                               double hi = std::numeric_limits<double>::infinity(),
                               const std::vector<double>& breakpoints = {},
                               const QuadOptions& opts = {});

// Fixed 8-point Gauss-Legendre rule on [a, b].
double gauss_legendre8(const Integrand& f, double a, double b);

}  // namespace affine_levy
