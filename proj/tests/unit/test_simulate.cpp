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
#include <cstdio>
#include <filesystem>

#include "affine_levy/core/errors.hpp"
#include "affine_levy/core/laplace.hpp"
#include "affine_levy/core/special.hpp"
#include "affine_levy/generating/families.hpp"
#include "affine_levy/simulate/path_io.hpp"
#include "affine_levy/simulate/rng.hpp"
#include "affine_levy/simulate/samplers.hpp"
#include "affine_levy/simulate/short_rate.hpp"

using namespace affine_levy;

namespace {

// z-score of the empirical E exp(-lam X) against exp(dt J(lam))
template <class Draw>
double laplace_z(Draw draw, double lam, double want, int n) {
    double s = 0, s2 = 0;
    for (int i = 0; i < n; ++i) {
        const double e = std::exp(-lam * draw(i));
        s += e;
        s2 += e * e;
    }
    const double m = s / n, var = s2 / n - m * m;
    return std::abs(m - want) / std::sqrt(var / n);
}

GeneratingPair cir_pair() {
    auto model = LevyModel::independent({{LevyMeasure1D::zero(), 0.04}});
    return make_generating_pair(model, GFunction::power_sum(1, {{1.0, 2.0, 0}}), {-1.0, 0.05});
}

}  // namespace

TEST_CASE("substreams are reproducible and distinct") {
    Rng a = substream(7, 3), b = substream(7, 3), c = substream(7, 4), d = substream(8, 3);
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
    CHECK(x != d());
}

TEST_CASE("stable increment sampler matches its Laplace transform") {
    const double dt = 0.01;
    for (double alpha : {1.3, 1.7}) {
        Rng rng = substream(1, static_cast<std::uint64_t>(alpha * 10));
        for (double lam : {0.5, 2.0}) {
            const double want = std::exp(dt * 0.8 * stable_constant(alpha) * std::pow(lam, alpha));
            CHECK(laplace_z([&](int) { return sample_stable_increment(alpha, 0.8, dt, rng); }, lam, want, 40000) < 4.0);
        }
    }
}

TEST_CASE("measure sampler on densities and atoms") {
    const double dt = 0.02;
    const std::vector<LevyMeasure1D> measures{
        LevyMeasure1D::density([](double v) { return 40.0 * std::exp(-20.0 * v); }),
        LevyMeasure1D::density([](double v) { return std::exp(-v) * std::pow(v, -2.5); }),
        LevyMeasure1D::atoms({{0.3, 5.0}, {1.5, 0.5}}),
    };
    std::uint64_t k = 0;
    for (const auto& rho : measures) {
        const MeasureSampler s(rho, dt);
        Rng rng = substream(2, k++);
        for (double lam : {0.5, 1.0, 2.0}) {
            const double want = std::exp(dt * laplace_exponent_1d(rho, lam));
            CHECK(laplace_z([&](int) { return s(rng); }, lam, want, 40000) < 4.0);
        }
    }
}

TEST_CASE("spherical sampler along a fixed direction") {
    SphericalMeasure sm;
    Vec e1(2), e2(2), u(2);
    e1 << 1, 0;
    e2 << 0.6, 0.8;
    sm.directions = {{e1, 1.0}, {e2, 0.5}};
    sm.radial = LevyMeasure1D::stable(1.5, 1.0);
    const auto model = LevyModel::spherical(sm, Mat::Zero(2, 2));
    u << 0.3, 0.7;
    const double dt = 0.01;
    Rng rng = substream(3, 0);
    for (double lam : {0.5, 2.0}) {
        const double want = std::exp(dt * laplace_exponent_multi(model, lam * u));
        CHECK(laplace_z([&](int) { return u.dot(sample_spherical_increment(sm, dt, 1e-3, rng)); }, lam, want, 40000) < 4.0);
    }
}

TEST_CASE("CIR mean at T matches the closed form") {
    PathConfig cfg;
    cfg.T = 1.0;
    cfg.dt = 1.0 / 250;
    cfg.n_paths = 20000;
    cfg.seed = 123;
    cfg.record_every = 50;
    const auto paths = simulate_short_rate(cir_pair(), 0.03, cfg);
    const std::size_t last = paths.n_records() - 1;
    CHECK(paths.times[last] == doctest::Approx(1.0));
    double s = 0, s2 = 0;
    for (std::size_t p = 0; p < paths.n_paths; ++p) {
        const double r = paths.value(p, last);
        CHECK(r >= 0.0);
        s += r;
        s2 += r * r;
    }
    const double n = static_cast<double>(paths.n_paths), m = s / n, se = std::sqrt((s2 / n - m * m) / n);
    const double want = 0.03 * std::exp(-1.0) + 0.05 * (1 - std::exp(-1.0));
    CHECK(std::abs(m - want) < 4 * se);
}

TEST_CASE("paths do not depend on the thread count") {
    PathConfig cfg;
    cfg.T = 0.5;
    cfg.dt = 0.01;
    cfg.n_paths = 1500;
    cfg.seed = 9;
    cfg.record_every = 10;
    const auto pair = example_antithetic_pair(1.5);
    const auto one = simulate_short_rate(pair, 1.0, cfg, 1);
    for (unsigned t : {2u, 4u, 8u}) {
        const auto many = simulate_short_rate(pair, 1.0, cfg, t);
        CHECK(many.values == one.values);
        CHECK(many.integrals == one.integrals);
        CHECK(many.clamp_count == one.clamp_count);
    }
}

TEST_CASE("binary path file round trip") {
    PathConfig cfg;
    cfg.T = 0.1;
    cfg.dt = 0.01;
    cfg.n_paths = 7;
    const auto paths = simulate_short_rate(cir_pair(), 0.03, cfg);
    const auto file = (std::filesystem::temp_directory_path() / "affine_levy_paths_test.bin").string();
    write_paths_binary(paths, file);
    const auto back = read_paths_binary(file);
    CHECK(back.times == paths.times);
    CHECK(back.values == paths.values);
    CHECK(back.integrals == paths.integrals);
    CHECK(back.seed_used == paths.seed_used);
    std::remove(file.c_str());
}

TEST_CASE("path configuration validation") {
    PathConfig cfg;
    cfg.dt = -1;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg.dt = 0.3;
    cfg.T = 1.0;
    CHECK(cfg.n_steps() == 4);
}
