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

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <cstring>

#include "affine_levy/kernels/kernels.hpp"

namespace affine_levy::kernels::avx2 {

namespace {

// exp on 4 lanes: x = n ln2 + r, |r| <= ln2/2, Taylor to degree 13.
inline __m256d exp4(__m256d x) {
    const __m256d hi = _mm256_set1_pd(709.0);
    const __m256d lo = _mm256_set1_pd(-708.0);
    const __m256d underflow = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
    x = _mm256_min_pd(_mm256_max_pd(x, lo), hi);
    const __m256d n = _mm256_round_pd(_mm256_mul_pd(x, _mm256_set1_pd(1.4426950408889634)),
                                      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, _mm256_set1_pd(6.93147180369123816490e-01), x);
    r = _mm256_fnmadd_pd(n, _mm256_set1_pd(1.90821492927058770002e-10), r);
    static constexpr double c[] = {1.0 / 6227020800.0, 1.0 / 479001600.0, 1.0 / 39916800.0, 1.0 / 3628800.0,
                                   1.0 / 362880.0,     1.0 / 40320.0,     1.0 / 5040.0,     1.0 / 720.0,
                                   1.0 / 120.0,        1.0 / 24.0,        1.0 / 6.0,        0.5,
                                   1.0,                1.0};
    __m256d p = _mm256_set1_pd(c[0]);
    for (int k = 1; k < 14; ++k) p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(c[k]));
    // 2^n by exponent-field construction
    const __m128i n32 = _mm256_cvtpd_epi32(n);
    __m256i e = _mm256_cvtepi32_epi64(n32);
    e = _mm256_slli_epi64(_mm256_add_epi64(e, _mm256_set1_epi64x(1023)), 52);
    p = _mm256_mul_pd(p, _mm256_castsi256_pd(e));
    return _mm256_andnot_pd(underflow, p);
}

// log on 4 lanes of positive normal numbers: x = m 2^e with m in [sqrt(1/2), sqrt(2)),
// log m = 2 atanh(s), s = (m-1)/(m+1).
inline __m256d log4(__m256d x) {
    const __m256i bits = _mm256_castpd_si256(x);
    __m256i ebits = _mm256_srli_epi64(bits, 52);
    const __m256i mant = _mm256_or_si256(_mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
                                         _mm256_set1_epi64x(0x3FF0000000000000LL));
    __m256d m = _mm256_castsi256_pd(mant);  // [1, 2)
    // exponent as double: the biased field fits in 11 bits
    alignas(32) long long eb[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(eb), ebits);
    __m256d e = _mm256_set_pd(static_cast<double>(eb[3] - 1023), static_cast<double>(eb[2] - 1023),
                              static_cast<double>(eb[1] - 1023), static_cast<double>(eb[0] - 1023));
    const __m256d big = _mm256_cmp_pd(m, _mm256_set1_pd(1.4142135623730951), _CMP_GT_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), big);
    e = _mm256_add_pd(e, _mm256_and_pd(big, _mm256_set1_pd(1.0)));
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d s = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
    const __m256d s2 = _mm256_mul_pd(s, s);
    __m256d p = _mm256_set1_pd(1.0 / 25.0);
    for (int k = 11; k >= 0; --k) p = _mm256_fmadd_pd(p, s2, _mm256_set1_pd(1.0 / (2 * k + 1)));
    const __m256d lm = _mm256_mul_pd(_mm256_add_pd(s, s), p);
    const __m256d l = _mm256_fmadd_pd(e, _mm256_set1_pd(6.93147180369123816490e-01), lm);
    return _mm256_fmadd_pd(e, _mm256_set1_pd(1.90821492927058770002e-10), l);
}

inline __m256d power4(__m256d rp, double p, __m256d logr, __m256d positive) {
    if (p == 0.0) return _mm256_set1_pd(1.0);
    if (p == 1.0) return rp;
    if (p == 0.5) return _mm256_sqrt_pd(rp);
    return _mm256_and_pd(positive, exp4(_mm256_mul_pd(_mm256_set1_pd(p), logr)));
}

unsigned step4(double* r, double* integral, const double* const* noise, const StepArgs& s) {
    const __m256d zero = _mm256_setzero_pd();
    const __m256d r0 = _mm256_loadu_pd(r);
    const __m256d rp = _mm256_max_pd(r0, zero);
    const __m256d positive = _mm256_cmp_pd(rp, _mm256_set1_pd(2.2250738585072014e-308), _CMP_GE_OQ);
    const __m256d logr = log4(_mm256_blendv_pd(_mm256_set1_pd(1.0), rp, positive));
    const __m256d drift = _mm256_mul_pd(_mm256_fmadd_pd(_mm256_set1_pd(s.a), rp, _mm256_set1_pd(s.b)), _mm256_set1_pd(s.dt));
    __m256d acc = _mm256_add_pd(r0, drift);
    for (std::size_t k = 0; k < s.n_terms; ++k)
        acc = _mm256_fmadd_pd(power4(rp, s.powers[k], logr, positive), _mm256_loadu_pd(noise[k]), acc);
    const __m256d neg = _mm256_cmp_pd(acc, zero, _CMP_LT_OQ);
    acc = _mm256_max_pd(acc, zero);
    _mm256_storeu_pd(r, acc);
    const __m256d half_dt = _mm256_set1_pd(0.5 * s.dt);
    _mm256_storeu_pd(integral, _mm256_fmadd_pd(half_dt, _mm256_add_pd(r0, acc), _mm256_loadu_pd(integral)));
    return static_cast<unsigned>(_mm256_movemask_pd(neg));
}

}  // namespace

std::size_t euler_power_step(double* r, double* integral, std::size_t n, const StepArgs& s) {
    std::size_t clamped = 0;
    constexpr std::size_t kMaxTerms = 16;
    if (s.n_terms > kMaxTerms) return scalar::euler_power_step(r, integral, n, s);
    const double* rows[kMaxTerms];
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        for (std::size_t k = 0; k < s.n_terms; ++k) rows[k] = s.noise + k * s.stride + i;
        clamped += static_cast<std::size_t>(__builtin_popcount(step4(r + i, integral + i, rows, s)));
    }
    if (i < n) {
        const std::size_t m = n - i;
        double rt[4] = {0, 0, 0, 0}, it[4] = {0, 0, 0, 0};
        double wt[kMaxTerms][4] = {};
        std::memcpy(rt, r + i, m * sizeof(double));
        std::memcpy(it, integral + i, m * sizeof(double));
        for (std::size_t k = 0; k < s.n_terms; ++k) {
            std::memcpy(wt[k], s.noise + k * s.stride + i, m * sizeof(double));
            rows[k] = wt[k];
        }
        const unsigned lanes = (1u << m) - 1u;
        clamped += static_cast<std::size_t>(__builtin_popcount(step4(rt, it, rows, s) & lanes));
        std::memcpy(r + i, rt, m * sizeof(double));
        std::memcpy(integral + i, it, m * sizeof(double));
    }
    return clamped;
}

void discounted_price(const double* r, const double* integral, std::size_t n, double A, double B, double* out) {
    const __m256d vA = _mm256_set1_pd(A), vB = _mm256_set1_pd(B);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d x = _mm256_fmadd_pd(vB, _mm256_loadu_pd(r + i), _mm256_add_pd(_mm256_loadu_pd(integral + i), vA));
        _mm256_storeu_pd(out + i, exp4(_mm256_sub_pd(_mm256_setzero_pd(), x)));
    }
    for (; i < n; ++i) {
        alignas(32) double t[4] = {-(integral[i] + A + B * r[i]), 0, 0, 0};
        _mm256_store_pd(t, exp4(_mm256_load_pd(t)));
        out[i] = t[0];
    }
}

void exp_neg_scaled(const double* x, std::size_t n, double lambda, double* out) {
    const __m256d vl = _mm256_set1_pd(-lambda);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) _mm256_storeu_pd(out + i, exp4(_mm256_mul_pd(vl, _mm256_loadu_pd(x + i))));
    for (; i < n; ++i) {
        alignas(32) double t[4] = {-lambda * x[i], 0, 0, 0};
        _mm256_store_pd(t, exp4(_mm256_load_pd(t)));
        out[i] = t[0];
    }
}

}  // namespace affine_levy::kernels::avx2
