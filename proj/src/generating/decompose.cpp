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

#include "affine_levy/generating/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "affine_levy/core/errors.hpp"
#include "affine_levy/generating/canonical.hpp"
#include "affine_levy/generating/power_fit.hpp"

namespace affine_levy {

namespace {

constexpr double kLinear = 1e-6;
constexpr double kNonlinear = 1e-3;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace

std::vector<double> default_x_grid() {
    std::vector<double> x;
    for (int k = -6; k <= 3; ++k) x.push_back(std::ldexp(1.0, k));
    return x;
}

std::vector<double> default_b_grid() {
    std::vector<double> b;
    for (int k = -8; k <= 8; ++k) b.push_back(std::exp2(0.5 * k));
    return b;
}

QuadOptions decomposition_quad() {
    QuadOptions q;
    q.abs_tol = 1e-15;
    q.rel_tol = 1e-12;
    q.max_intervals = 20000;
    return q;
}

Decomposition decompose_samples(const GeneratingPair& pair, const std::vector<double>& x_grid,
                                const std::vector<double>& b_grid) {
    if (x_grid.size() < 3) throw DomainError("decompose_projection needs at least 3 x points");
    for (double x : x_grid)
        if (!(x > 0.0)) throw DomainError("x grid must be positive");
    for (double b : b_grid)
        if (!(b > 0.0)) throw DomainError("b grid must be positive");
    const QuadOptions q = decomposition_quad();
    Decomposition d;
    d.x = x_grid;
    d.b = b_grid;
    const std::size_t n = x_grid.size();
    std::vector<Vec> gx;
    for (double x : x_grid) gx.push_back(pair.gfun(x));

    double xm = 0.0;
    for (double x : x_grid) xm += x;
    xm /= static_cast<double>(n);
    double sxx = 0.0;
    for (double x : x_grid) sxx += (x - xm) * (x - xm);

    for (double b : b_grid) {
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = projection_laplace(pair.model, gx[i], b, q);
        double ym = 0.0;
        for (double v : y) ym += v;
        ym /= static_cast<double>(n);
        double sxy = 0.0;
        for (std::size_t i = 0; i < n; ++i) sxy += (x_grid[i] - xm) * (y[i] - ym);
        const double slope = sxy / sxx;
        const double intercept = ym - slope * xm;
        double scale = 0.0, worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            scale = std::max(scale, std::abs(y[i]));
            worst = std::max(worst, std::abs(y[i] - (intercept + slope * x_grid[i])));
        }
        const double r = scale > 0.0 ? worst / scale : 0.0;
        d.residual = std::max(d.residual, r);
        d.slope.push_back(slope);
        d.intercept.push_back(intercept);
    }
    d.linear = d.residual < kLinear;
    return d;
}

Decomposition decompose_projection(const GeneratingPair& pair, const std::vector<double>& x_grid,
                                   const std::vector<double>& b_grid) {
    Decomposition d = decompose_samples(pair, x_grid, b_grid);
    if (d.residual > kNonlinear)
        throw NonlinearityError("projection Laplace exponent is not linear in x (residual " + fmt(d.residual) +
                                    "); the pair is not generating",
                                d.residual);
    return d;
}

ProjectionTriplet projection_triplet(const GeneratingPair& pair, const Decomposition& dec) {
    ProjectionTriplet t;
    t.nu0 = image_measure(pair.model, pair.gfun(0.0)).positive;
    double smax = 0.0, imax = 0.0;
    for (double v : dec.slope) smax = std::max(smax, std::abs(v));
    for (double v : dec.intercept) imax = std::max(imax, std::abs(v));
    if (smax <= 1e-10 * imax + 1e-14) return t;
    const PowerFit fit = fit_power_sum(dec.b, dec.slope, std::max(1, pair.model.dim()));
    if (!(fit.residual < 1e-4))
        throw FitFailure("slope of the projection exponent is not a sum of stable powers (residual " +
                         fmt(fit.residual) + ")");
    const WienerSplit w = split_wiener(CanonicalForm{fit.terms});
    t.c = w.c;
    t.mu = stable_sum_measure(w.mu_terms);
    return t;
}

ProjectionTriplet projection_triplet(const GeneratingPair& pair) {
    return projection_triplet(pair, decompose_projection(pair));
}

ConditionReport validate_generating(const GeneratingPair& pair, const std::vector<double>& x_grid,
                                    const std::vector<double>& b_grid) {
    ConditionReport rep;

    // (a) nonnegative jumps of every projection
    {
        std::vector<double> xs{0.0};
        xs.insert(xs.end(), x_grid.begin(), x_grid.end());
        double worst = 1.0;
        double at = 0.0;
        bool ok = true;
        for (double x : xs) {
            const auto r = check_jump_support(pair.model, pair.gfun(x));
            if (r.min_inner < worst) {
                worst = r.min_inner;
                at = x;
            }
            ok = ok && r.all_nonneg;
        }
        rep.jumps_nonneg.ok = ok;
        rep.jumps_nonneg.diagnostic = ok ? "projections have nonnegative jumps (min normalized <G(x),y> = " + fmt(worst) + ")"
                                         : "projection along G(" + fmt(at) + ") has negative jumps (min normalized <G(x),y> = " +
                                               fmt(worst) + ")";
    }

    // (b) finite variation of nu_G(0)
    const ProjectionImage img0 = image_measure(pair.model, pair.gfun(0.0));
    {
        const VariationCheck v = first_moment_check(img0.positive);
        rep.nu0_finite_variation.ok = v.finite && !img0.has_negative;
        if (v.finite)
            rep.nu0_finite_variation.diagnostic = "int v nu_G(0)(dv) = " + fmt(v.value);
        else
            rep.nu0_finite_variation.diagnostic =
                "G(0)=0 condition violated: nu_G(0) has infinite variation (int v nu_G(0)(dv) = inf), so a "
                "coordinate of infinite variation must be switched off at 0";
        if (img0.has_negative) rep.nu0_finite_variation.diagnostic += "; nu_G(0) charges negative jumps";
    }

    // (c) linearity in x
    try {
        Decomposition d = decompose_samples(pair, x_grid, b_grid);
        rep.linear_in_x.ok = d.linear;
        rep.linear_in_x.diagnostic = "max relative deviation from linearity " + fmt(d.residual);
        rep.decomposition = std::move(d);
    } catch (const DivergenceError& e) {
        rep.linear_in_x.ok = false;
        rep.linear_in_x.diagnostic = std::string("projection exponent diverges: ") + e.what();
    } catch (const QuadratureError& e) {
        rep.linear_in_x.ok = false;
        rep.linear_in_x.diagnostic = std::string("projection exponent could not be evaluated: ") + e.what();
    }

    // (d) drift bound b >= int_{(1,inf)} (v-1) nu_G(0)(dv)
    try {
        const double need = tail_excess(img0.positive);
        rep.drift_bound_ok.ok = pair.drift.b >= need - 1e-12;
        rep.drift_bound_ok.diagnostic = "b = " + fmt(pair.drift.b) + ", int_(1,inf) (v-1) nu_G(0)(dv) = " + fmt(need);
    } catch (const QuadratureError& e) {
        rep.drift_bound_ok.ok = false;
        rep.drift_bound_ok.diagnostic = std::string("tail integral of nu_G(0) diverges: ") + e.what();
    }
    return rep;
}

}  // namespace affine_levy
