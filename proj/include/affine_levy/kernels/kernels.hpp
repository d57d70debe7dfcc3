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

#include <cstddef>

// Batch kernels for the Monte Carlo loops.  Each kernel has a scalar
// reference and, on x86-64 builds, an AVX2/FMA variant; the plain entry
// points dispatch once per process on CPU support and AFFINE_LEVY_SIMD.

namespace affine_levy::kernels {

enum class Isa { scalar, avx2 };

const char* to_string(Isa isa);

bool avx2_compiled();
bool avx2_supported();  // compiled in and the CPU has AVX2 + FMA

// AFFINE_LEVY_SIMD=scalar|avx2 overrides the CPU-based choice; an
// unavailable request falls back to scalar.
Isa active_isa();

// One full-truncation Euler step over n paths:
//   r+ = max(r, 0)
//   r' = max(r + (a r+ + b) dt + sum_k r+^{p_k} noise[k * stride + i], 0)
//   integral += dt (r + r') / 2
// Returns how many entries were clamped.
struct StepArgs {
    double a;
    double b;
    double dt;
    const double* powers;
    std::size_t n_terms;
    const double* noise;
    std::size_t stride;
};

namespace scalar {
std::size_t euler_power_step(double* r, double* integral, std::size_t n, const StepArgs& args);
void discounted_price(const double* r, const double* integral, std::size_t n, double A, double B, double* out);
void exp_neg_scaled(const double* x, std::size_t n, double lambda, double* out);
}  // namespace scalar

#if defined(AFFINE_LEVY_HAVE_AVX2)
namespace avx2 {
std::size_t euler_power_step(double* r, double* integral, std::size_t n, const StepArgs& args);
void discounted_price(const double* r, const double* integral, std::size_t n, double A, double B, double* out);
void exp_neg_scaled(const double* x, std::size_t n, double lambda, double* out);
}  // namespace avx2
#endif

std::size_t euler_power_step(double* r, double* integral, std::size_t n, const StepArgs& args);
// out[i] = exp(-integral[i] - A - B r[i])
void discounted_price(const double* r, const double* integral, std::size_t n, double A, double B, double* out);
// out[i] = exp(-lambda x[i])
void exp_neg_scaled(const double* x, std::size_t n, double lambda, double* out);

// Pairwise sum; the association order depends only on n.
double pairwise_sum(const double* x, std::size_t n);

}  // namespace affine_levy::kernels
