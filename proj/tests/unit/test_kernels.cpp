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

#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "affine_levy/kernels/kernels.hpp"

using namespace affine_levy::kernels;

namespace {

struct Batch {
    std::vector<double> r, integral, noise;
};

Batch make_batch(std::size_t n, std::size_t terms, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    std::normal_distribution<double> N(0.0, 1.0);
    Batch b;
    for (std::size_t i = 0; i < n; ++i) {
        // a few exact zeros and negatives exercise the truncation branches
        const double u = U(rng);
        b.r.push_back(u < 0.1 ? 0.0 : (u < 0.15 ? -0.01 : 0.2 * U(rng)));
        b.integral.push_back(0.05 * U(rng));
    }
    for (std::size_t k = 0; k < terms * n; ++k) b.noise.push_back(0.05 * N(rng));
    return b;
}

}  // namespace

TEST_CASE("dispatch reports a usable ISA") {
    const Isa isa = active_isa();
    CHECK((isa == Isa::scalar || avx2_supported()));
    CHECK(std::string(to_string(Isa::scalar)) == "scalar");
}

TEST_CASE("pairwise sum matches a long double reference") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (std::size_t n : {0u, 1u, 7u, 100u, 4097u}) {
        std::vector<double> x(n);
        long double ref = 0;
        for (auto& v : x) {
            v = U(rng);
            ref += v;
        }
        CHECK(pairwise_sum(x.data(), n) == doctest::Approx(static_cast<double>(ref)).epsilon(1e-14));
    }
}

TEST_CASE("scalar Euler step on hand-computed values") {
    std::vector<double> r{0.04, 0.0, -0.02}, integral{0.0, 0.0, 0.0};
    const double powers[] = {0.5};
    std::vector<double> noise{0.1, 0.1, 0.1};
    StepArgs a{-1.0, 0.05, 0.01, powers, 1, noise.data(), 3};
    const std::size_t clamps = scalar::euler_power_step(r.data(), integral.data(), 3, a);
    // R+ = max(R, 0); R += (a R+ + b) dt + sqrt(R+) * noise
    CHECK(r[0] == doctest::Approx(0.04 + (-0.04 + 0.05) * 0.01 + 0.2 * 0.1).epsilon(1e-15));
    CHECK(r[1] == doctest::Approx(0.0005).epsilon(1e-15));
    CHECK(r[2] == 0.0);
    CHECK(integral[0] == doctest::Approx(0.5 * 0.01 * (0.04 + r[0])).epsilon(1e-15));
    CHECK(clamps == 1);

    std::vector<double> r2{0.01}, i2{0.0}, n2{-0.5};
    StepArgs b{0.0, 0.0, 0.01, powers, 1, n2.data(), 1};
    CHECK(scalar::euler_power_step(r2.data(), i2.data(), 1, b) == 1);
    CHECK(r2[0] == 0.0);
}

#if defined(AFFINE_LEVY_HAVE_AVX2)
TEST_CASE("AVX2 kernels agree with the scalar reference") {
    if (!avx2_supported()) return;
    const std::vector<std::vector<double>> power_sets{{0.5}, {1.0 / 1.5}, {0.5, 1.0 / 1.3}, {0.0, 1.0}, {1.0 / 1.8, 1.0 / 1.3, 0.5}};
    for (std::size_t n : {1u, 3u, 4u, 5u, 13u, 64u, 511u}) {
        for (const auto& powers : power_sets) {
            Batch s = make_batch(n, powers.size(), n * 31 + powers.size());
            Batch v = s;
            StepArgs as{-0.7, 0.03, 0.002, powers.data(), powers.size(), s.noise.data(), n};
            StepArgs av = as;
            av.noise = v.noise.data();
            for (int step = 0; step < 5; ++step) {
                const auto cs = scalar::euler_power_step(s.r.data(), s.integral.data(), n, as);
                const auto cv = avx2::euler_power_step(v.r.data(), v.integral.data(), n, av);
                CHECK(cs == cv);
            }
            for (std::size_t i = 0; i < n; ++i) {
                CHECK(v.r[i] == doctest::Approx(s.r[i]).epsilon(1e-13).scale(1e-15));
                CHECK(v.integral[i] == doctest::Approx(s.integral[i]).epsilon(1e-13));
            }
            std::vector<double> ps(n), pv(n);
            scalar::discounted_price(s.r.data(), s.integral.data(), n, 0.01, 0.9, ps.data());
            avx2::discounted_price(s.r.data(), s.integral.data(), n, 0.01, 0.9, pv.data());
            for (std::size_t i = 0; i < n; ++i) CHECK(pv[i] == doctest::Approx(ps[i]).epsilon(1e-14));
        }
    }
}

TEST_CASE("AVX2 exponential over a wide range") {
    if (!avx2_supported()) return;
    std::vector<double> x;
    for (int i = 0; i <= 2000; ++i) x.push_back(-10.0 + 0.37 * i);
    x.push_back(800.0);
    std::vector<double> s(x.size()), v(x.size());
    scalar::exp_neg_scaled(x.data(), x.size(), 1.3, s.data());
    avx2::exp_neg_scaled(x.data(), x.size(), 1.3, v.data());
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(s[i] == doctest::Approx(std::exp(-1.3 * x[i])).epsilon(1e-15));
        CHECK(v[i] == doctest::Approx(s[i]).epsilon(1e-14));
    }
}
#endif
