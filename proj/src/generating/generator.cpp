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

#include "affine_levy/generating/generator.hpp"

#include <algorithm>
#include <cmath>

#include "affine_levy/core/errors.hpp"
#include "affine_levy/core/quadrature.hpp"

namespace affine_levy {

namespace {

constexpr double kSmallJump = 0.1;

double jump_part(const LevyMeasure1D& m, const TestFunction& t, double x, const QuadOptions& opts) {
    if (m.is_zero()) return 0.0;
    const double fx = t.f(x), dfx = t.df(x);
    Integrand g = [&](double v) {
        if (v <= kSmallJump) {
            // f(x+v) - f(x) - f'(x) v = int_0^v (v - s) f''(x + s) ds
            return gauss_legendre8([&](double s) { return (v - s) * t.d2f(x + s); }, 0.0, v);
        }
        if (v <= 1.0) return t.f(x + v) - fx - dfx * v;
        return t.f(x + v) - fx - dfx;
    };
    return integrate_measure(m, g, opts, {kSmallJump});
}

double generator_core(double diffusion, double drift, const LevyMeasure1D& m, const TestFunction& t, double x,
                      const QuadOptions& base) {
    // The absolute tolerance is taken relative to the size of f near x so
    // that rapidly decaying test functions keep their relative accuracy.
    QuadOptions opts = base;
    const double size = std::max({std::abs(t.f(x)), std::abs(t.df(x)), std::abs(t.d2f(x))});
    opts.abs_tol = base.abs_tol * std::clamp(size, 1e-280, 1.0);
    const double tail = m.is_zero() ? 0.0 : tail_excess(m, opts);
    return diffusion * t.d2f(x) + (drift - tail) * t.df(x) + jump_part(m, t, x, opts);
}

}  // namespace

TestFunction exponential_test_function(double lambda) {
    return {[lambda](double x) { return std::exp(-lambda * x); },
            [lambda](double x) { return -lambda * std::exp(-lambda * x); },
            [lambda](double x) { return lambda * lambda * std::exp(-lambda * x); }};
}

double generator_apply(const ProjectionTriplet& triplet, const DriftSpec& drift, const TestFunction& f, double x,
                       const QuadOptions& opts) {
    if (!(x >= 0.0)) throw DomainError("generator is defined for x >= 0");
    std::vector<LevyMeasure1D> parts{triplet.nu0};
    if (x > 0.0) parts.push_back(weighted(triplet.mu, x));
    const LevyMeasure1D m = LevyMeasure1D::sum(std::move(parts));
    return generator_core(triplet.c * x, drift(x), m, f, x, opts);
}

double pair_generator_apply(const GeneratingPair& pair, const TestFunction& f, double x, const QuadOptions& opts) {
    if (!(x >= 0.0)) throw DomainError("generator is defined for x >= 0");
    const ProjectionImage img = image_measure(pair.model, pair.gfun(x));
    if (img.has_negative) throw DomainError("projection has negative jumps; the pair is not generating");
    return generator_core(img.wiener, pair.drift(x), img.positive, f, x, opts);
}

}  // namespace affine_levy
