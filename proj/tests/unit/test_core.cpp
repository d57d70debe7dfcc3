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

#include "affine_levy/core/errors.hpp"
#include "affine_levy/core/laplace.hpp"
#include "affine_levy/core/levy_measure.hpp"
#include "affine_levy/core/levy_model.hpp"
#include "affine_levy/core/quadrature.hpp"
#include "affine_levy/core/special.hpp"

using namespace affine_levy;

namespace {

const double kPi = std::acos(-1.0);

LevyMeasure1D stable_density(double alpha, double scale) {
    return LevyMeasure1D::density([=](double v) { return scale * std::pow(v, -1.0 - alpha); });
}

// J for 40 e^{-20 v}
double exp_density_J(double b) { return 40.0 * (1.0 / (20.0 + b) - 1.0 / 20.0 + b / 400.0); }

}  // namespace

TEST_CASE("h_func small and moderate arguments") {
    CHECK(h_func(0.0) == 0.0);
    CHECK(h_func(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    // series z^2/2 - z^3/6 + z^4/24
    const double z = 1e-5;
    CHECK(h_func(z) == doctest::Approx(z * z / 2 - z * z * z / 6 + z * z * z * z / 24).epsilon(1e-13));
    CHECK(h_func(50.0) == doctest::Approx(49.0 + std::exp(-50.0)).epsilon(1e-15));
    CHECK_THROWS_AS(h_func(-1.0), DomainError);
}

TEST_CASE("stable constant at alpha 1.5 is sqrt(pi)/0.75") {
    CHECK(stable_constant(1.5) == doctest::Approx(std::sqrt(kPi) / 0.75).epsilon(1e-14));
    CHECK_THROWS_AS(stable_constant(2.0), DomainError);
    CHECK_THROWS_AS(stable_constant(1.0), DomainError);
}

TEST_CASE("half-line quadrature on known integrals") {
    CHECK(integrate_half_line([](double v) { return std::exp(-v); }).value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(integrate_half_line([](double v) { return 1.0 / (1.0 + v * v); }).value ==
          doctest::Approx(kPi / 2).epsilon(1e-10));
    CHECK(integrate_half_line([](double v) { return std::pow(v, -0.5) * std::exp(-v); }).value ==
          doctest::Approx(std::sqrt(kPi)).epsilon(1e-9));
    CHECK(integrate_interval([](double v) { return v * v; }, 0.0, 3.0).value == doctest::Approx(9.0).epsilon(1e-14));
}

TEST_CASE("stable measure: quadrature of the density matches scale C b^alpha") {
    for (double alpha : {1.2, 1.5, 1.8})
        for (double b : {0.1, 1.0, 10.0}) {
            const double exact = 0.7 * std::tgamma(2 - alpha) / (alpha * (alpha - 1)) * std::pow(b, alpha);
            CHECK(laplace_exponent_1d(stable_density(alpha, 0.7), b) == doctest::Approx(exact).epsilon(1e-7));
            CHECK(laplace_exponent_1d(LevyMeasure1D::stable(alpha, 0.7), b) == doctest::Approx(exact).epsilon(1e-13));
        }
}

TEST_CASE("closed forms for exponential density and atoms") {
    const auto rho = LevyMeasure1D::density([](double v) { return 40.0 * std::exp(-20.0 * v); });
    for (double b : {0.01, 0.5, 3.0, 40.0}) CHECK(laplace_exponent_1d(rho, b) == doctest::Approx(exp_density_J(b)).epsilon(1e-8));

    const auto at = LevyMeasure1D::atoms({{0.5, 2.0}, {3.0, 0.25}});
    for (double b : {0.1, 1.0, 7.0}) {
        const double want = 2.0 * (std::exp(-0.5 * b) - 1 + 0.5 * b) + 0.25 * (std::exp(-3 * b) - 1 + 3 * b);
        CHECK(laplace_exponent_1d(at, b) == doctest::Approx(want).epsilon(1e-14));
    }
    const auto s = LevyMeasure1D::sum({rho, at});
    CHECK(laplace_exponent_1d(s, 2.0) == doctest::Approx(exp_density_J(2.0) + laplace_exponent_1d(at, 2.0)).epsilon(1e-9));
}

TEST_CASE("scaling and weighting act on J as expected") {
    const auto rho = LevyMeasure1D::density([](double v) { return std::exp(-v) * std::pow(v, -2.2); });
    for (double s : {0.3, 2.5})
        for (double b : {0.2, 4.0}) {
            CHECK(laplace_exponent_1d(scaled(rho, s), b) == doctest::Approx(laplace_exponent_1d(rho, s * b)).epsilon(1e-8));
            CHECK(laplace_exponent_1d(weighted(rho, s), b) == doctest::Approx(s * laplace_exponent_1d(rho, b)).epsilon(1e-8));
        }
}

TEST_CASE("moment helpers") {
    const auto rho = LevyMeasure1D::density([](double v) { return 40.0 * std::exp(-20.0 * v); });
    const auto fm = first_moment_check(rho);
    CHECK(fm.finite);
    CHECK(fm.value == doctest::Approx(0.1).epsilon(1e-9));
    CHECK_FALSE(first_moment_check(LevyMeasure1D::stable(1.5, 1.0)).finite);
    CHECK_FALSE(first_moment_check(stable_density(1.3, 1.0)).finite);
    // int (v^2 ^ v) v^{-2.5} dv = 2 + 2
    CHECK(integrability_constant(LevyMeasure1D::stable(1.5, 1.0)) == doctest::Approx(4.0).epsilon(1e-9));
    CHECK_THROWS_AS(integrability_constant(LevyMeasure1D::density([](double v) { return 1.0 / (v * v); })), DivergenceError);
    CHECK(mass_above(rho, 0.1) == doctest::Approx(2.0 * std::exp(-2.0)).epsilon(1e-9));
    CHECK(tail_excess(LevyMeasure1D::atoms({{3.0, 0.5}, {0.5, 1.0}})) == doctest::Approx(1.0).epsilon(1e-14));
    // int_0^eps v^2 v^{-2.5} = 2 sqrt(eps)
    CHECK(second_moment_below(LevyMeasure1D::stable(1.5, 1.0), 0.01) == doctest::Approx(0.2).epsilon(1e-9));
}

TEST_CASE("J/b increases, J/b^2 decreases, min-max scaling bound") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int trial = 0; trial < 8; ++trial) {
        const double alpha = 1.05 + 0.9 * U(rng);
        const double lam = 0.1 + 5 * U(rng);
        const auto rho = LevyMeasure1D::sum({LevyMeasure1D::density([=](double v) { return std::exp(-lam * v) * std::pow(v, -1 - alpha); }),
                                             LevyMeasure1D::atoms({{0.1 + 3 * U(rng), U(rng)}})});
        double prev1 = 0.0, prev2 = INFINITY;
        for (int i = 0; i < 40; ++i) {
            const double b = std::pow(10.0, -2 + 4.0 * i / 39);
            const double J = laplace_exponent_1d(rho, b);
            CHECK(J / b > prev1);
            CHECK(J / (b * b) < prev2);
            prev1 = J / b;
            prev2 = J / (b * b);
            for (double t : {0.3, 2.0}) {
                const double Jt = laplace_exponent_1d(rho, t * b);
                CHECK(Jt >= std::min(1.0, t * t) * J * (1 - 1e-9));
                CHECK(Jt <= std::max(1.0, t * t) * J * (1 + 1e-9));
            }
        }
    }
}

TEST_CASE("multivariate exponent of an independent model is the coordinate sum") {
    const auto model = LevyModel::independent({{LevyMeasure1D::stable(1.5, 1.0), 0.0}, {LevyMeasure1D::zero(), 0.04}});
    Vec lam(2);
    lam << 0.7, 2.0;
    const double want = stable_constant(1.5) * std::pow(0.7, 1.5) + 0.5 * 0.04 * 4.0;
    CHECK(laplace_exponent_multi(model, lam) == doctest::Approx(want).epsilon(1e-12));
    Vec g(2);
    g << 1.0, 1.0;
    CHECK(projection_laplace(model, g, 0.7) == doctest::Approx(stable_constant(1.5) * std::pow(0.7, 1.5) + 0.02 * 0.49).epsilon(1e-9));
}

TEST_CASE("jump support check sees negative projections") {
    SphericalMeasure sm;
    Vec e1(2), e2(2);
    e1 << 1, 0;
    e2 << 0, 1;
    sm.directions = {{e1, 1.0}, {e2, 1.0}};
    sm.radial = LevyMeasure1D::stable(1.5, 1.0);
    const auto model = LevyModel::spherical(sm, Mat::Zero(2, 2));
    Vec g(2);
    g << 1.0, -0.5;
    CHECK_FALSE(check_jump_support(model, g).all_nonneg);
    CHECK(image_measure(model, g).has_negative);
    g << 1.0, 0.5;
    CHECK(check_jump_support(model, g).all_nonneg);
}

TEST_CASE("invalid measures are rejected") {
    CHECK_THROWS_AS(LevyMeasure1D::stable(2.5, 1.0), DomainError);
    CHECK_THROWS_AS(LevyMeasure1D::stable(1.5, -1.0), DomainError);
    CHECK_THROWS_AS(LevyMeasure1D::atoms({{-1.0, 1.0}}), DomainError);
    CHECK_THROWS_AS(laplace_exponent_1d(LevyMeasure1D::stable(1.5, 1.0), -1.0), DomainError);
}
