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

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "affine_levy/core/errors.hpp"
#include "affine_levy/generating/decompose.hpp"
#include "affine_levy/generating/families.hpp"
#include "affine_levy/pricing/affine_solution.hpp"
#include "affine_levy/pricing/martingale.hpp"
#include "affine_levy/simulate/short_rate.hpp"

using namespace affine_levy;

namespace {

const ScalarFn kZero = [](double) { return 0.0; };

GeneratingPair cir_pair() {
    auto model = LevyModel::independent({{LevyMeasure1D::zero(), 0.04}});
    return make_generating_pair(model, GFunction::power_sum(1, {{1.0, 2.0, 0}}), {-1.0, 0.05});
}

// dR = (a R + b) dt + sigma sqrt(R) dW
struct CirClosedForm {
    double a, b, s2;
    double gamma() const { return std::sqrt(a * a + 2 * s2); }
    double B(double v) const {
        const double g = gamma(), e = std::expm1(g * v);
        return 2 * e / ((g - a) * e + 2 * g);
    }
    double A(double v) const {
        const double g = gamma(), e = std::expm1(g * v);
        return -2 * b / s2 * (std::log(2 * g) + 0.5 * (g - a) * v - std::log((g - a) * e + 2 * g));
    }
};

}  // namespace

TEST_CASE("B oracle: linear equation") {
    for (double a : {-1.0, -0.3, 0.2}) {
        const auto g = solve_B(a, 0.0, kZero);
        double worst = 0.0;
        for (std::size_t i = 0; i < g.v.size(); ++i)
            worst = std::max(worst, std::abs(g.B[i] - std::expm1(a * g.v[i]) / a) / std::max(1.0, std::abs(g.B[i])));
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("B oracle: tanh") {
    const auto g = solve_B(0.0, 2.0, kZero);
    double worst = 0.0;
    for (std::size_t i = 0; i < g.v.size(); ++i) worst = std::max(worst, std::abs(g.B[i] - std::tanh(g.v[i])));
    CHECK(worst < 1e-8);
    CHECK(g.v.back() == doctest::Approx(30.0));
    const auto sol = solve_A(0.0, kZero, g);
    CHECK(sol.midpoint_residual() < 1e-9);
    CHECK(sol.B_at(0.7) == doctest::Approx(std::tanh(0.7)).epsilon(1e-10));
    CHECK(sol.dB_at(0.7) == doctest::Approx(1 - std::tanh(0.7) * std::tanh(0.7)).epsilon(1e-9));
}

TEST_CASE("CIR closed form for B and A") {
    const auto pair = cir_pair();
    const auto sol = affine_solution(pair);
    const CirClosedForm cf{-1.0, 0.05, 0.04};
    for (double v : {0.1, 1.0, 5.0, 17.3, 30.0}) {
        CHECK(sol.B_at(v) == doctest::Approx(cf.B(v)).epsilon(1e-9));
        CHECK(sol.A_at(v) == doctest::Approx(cf.A(v)).epsilon(1e-9));
    }
    const double P = bond_price(sol, 0.0, 2.0, 0.03);
    CHECK(P == doctest::Approx(std::exp(-cf.A(2.0) - cf.B(2.0) * 0.03)).epsilon(1e-10));
}

TEST_CASE("jump Vasicek A against independent quadrature") {
    auto model = LevyModel::independent({{LevyMeasure1D::density([](double v) { return 40.0 * std::exp(-20.0 * v); }), 0.0}});
    const auto pair = make_generating_pair(model, GFunction::affine_power({{1.0, 0.0, 2.0}}), {-0.5, 0.12});
    const auto sol = affine_solution(pair);
    const auto Bx = [](double s) { return (1 - std::exp(-0.5 * s)) / 0.5; };
    const auto Jnu = [](double z) { return 40.0 * (1.0 / (20.0 + z) - 1.0 / 20.0 + z / 400.0); };
    for (double v : {0.5, 3.0, 12.0}) {
        CHECK(sol.B_at(v) == doctest::Approx(Bx(v)).epsilon(1e-10));
        const double want = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
            [&](double s) { return 0.12 * Bx(s) - Jnu(Bx(s)); }, 0.0, v, 15, 1e-13);
        CHECK(sol.A_at(v) == doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("bond price edge cases") {
    const auto sol = affine_solution(cir_pair(), 5.0);
    CHECK(bond_price(sol, 1.0, 1.0, 0.7) == 1.0);
    CHECK_THROWS_AS(bond_price(sol, 0.0, 6.0, 0.03), OutOfGridError);
    // zero rate and zero drift constant: price equals exp(-A)
    CHECK(bond_price(sol, 0.0, 2.0, 0.0) == doctest::Approx(std::exp(-sol.A_at(2.0))));
}

TEST_CASE("HJM residual small for true solutions, large for perturbed B") {
    std::vector<double> v, x;
    for (int i = 0; i <= 40; ++i) v.push_back(0.25 * i);
    for (int i = 0; i <= 10; ++i) x.push_back(0.1 * i);
    for (const auto& pair : {cir_pair(), example_antithetic_pair(1.5, {-0.3, 0.02}), example_split_stable(1.5, {1, 2, 4})}) {
        const auto sol = affine_solution(pair);
        CHECK(hjm_residual(pair, sol, v, x) < 1e-6);
        CHECK(hjm_residual(pair, perturbed_B(sol, 1.01), v, x) > 1e-3);
    }
}

TEST_CASE("martingale check: CIR passes, biased A fails") {
    PathConfig cfg;
    cfg.T = 1.0;
    cfg.dt = 1.0 / 250;
    cfg.n_paths = 20000;
    cfg.seed = 77;
    cfg.record_every = 25;
    const auto pair = cir_pair();
    const auto paths = simulate_short_rate(pair, 0.03, cfg);
    const auto sol = affine_solution(pair);
    const auto rep = martingale_check(paths, sol, 1.0, {0.0, 0.3, 0.6, 0.9});
    CHECK(rep.means[0] == doctest::Approx(rep.P0).epsilon(1e-15));
    CHECK(rep.max_deviation_se < 4.0);
    CHECK(martingale_check(paths, biased_A(sol, 0.1), 1.0, {0.3, 0.6, 0.9}).max_deviation_se > 10.0);
    CHECK_THROWS_AS(martingale_check(paths, sol, 1.0, {0.31}), DomainError);
}
