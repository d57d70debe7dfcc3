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

#include <algorithm>
#include <cmath>

#include "affine_levy/kernels/kernels.hpp"

namespace affine_levy::kernels {

namespace {

inline double power_of(double x, double p) {
    if (p == 0.0) return 1.0;
    if (x <= 0.0) return 0.0;
    if (p == 1.0) return x;
    if (p == 0.5) return std::sqrt(x);
    return std::exp(p * std::log(x));
}

}  // namespace

namespace scalar {

std::size_t euler_power_step(double* r, double* integral, std::size_t n, const StepArgs& s) {
    std::size_t clamped = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r0 = r[i];
        const double rp = std::max(r0, 0.0);
        double acc = r0 + (s.a * rp + s.b) * s.dt;
        for (std::size_t k = 0; k < s.n_terms; ++k) acc = std::fma(power_of(rp, s.powers[k]), s.noise[k * s.stride + i], acc);
        if (acc < 0.0) {
            acc = 0.0;
            ++clamped;
        }
        r[i] = acc;
        integral[i] += 0.5 * s.dt * (r0 + acc);
    }
    return clamped;
}

void discounted_price(const double* r, const double* integral, std::size_t n, double A, double B, double* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(-integral[i] - A - B * r[i]);
}

void exp_neg_scaled(const double* x, std::size_t n, double lambda, double* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(-lambda * x[i]);
}

}  // namespace scalar

double pairwise_sum(const double* x, std::size_t n) {
    if (n <= 16) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += x[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

}  // namespace affine_levy::kernels
