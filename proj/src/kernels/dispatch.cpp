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

#include <cstdlib>
#include <string>

#include "affine_levy/kernels/kernels.hpp"

namespace affine_levy::kernels {

const char* to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool avx2_compiled() {
#if defined(AFFINE_LEVY_HAVE_AVX2)
    return true;
#else
    return false;
#endif
}

bool avx2_supported() {
#if defined(AFFINE_LEVY_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    static const bool ok = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return ok;
#else
    return false;
#endif
}

Isa active_isa() {
    static const Isa isa = [] {
        const char* env = std::getenv("AFFINE_LEVY_SIMD");
        if (env != nullptr && std::string(env) == "scalar") return Isa::scalar;
        return avx2_supported() ? Isa::avx2 : Isa::scalar;
    }();
    return isa;
}

std::size_t euler_power_step(double* r, double* integral, std::size_t n, const StepArgs& args) {
#if defined(AFFINE_LEVY_HAVE_AVX2)
    if (active_isa() == Isa::avx2) return avx2::euler_power_step(r, integral, n, args);
#endif
    return scalar::euler_power_step(r, integral, n, args);
}

void discounted_price(const double* r, const double* integral, std::size_t n, double A, double B, double* out) {
#if defined(AFFINE_LEVY_HAVE_AVX2)
    if (active_isa() == Isa::avx2) return avx2::discounted_price(r, integral, n, A, B, out);
#endif
    scalar::discounted_price(r, integral, n, A, B, out);
}

void exp_neg_scaled(const double* x, std::size_t n, double lambda, double* out) {
#if defined(AFFINE_LEVY_HAVE_AVX2)
    if (active_isa() == Isa::avx2) return avx2::exp_neg_scaled(x, n, lambda, out);
#endif
    scalar::exp_neg_scaled(x, n, lambda, out);
}

}  // namespace affine_levy::kernels
