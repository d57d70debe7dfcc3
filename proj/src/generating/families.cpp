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

#include "affine_levy/generating/families.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "affine_levy/core/errors.hpp"
#include "affine_levy/core/special.hpp"
#include "affine_levy/generating/decompose.hpp"

namespace affine_levy {

namespace {

// Stable measure whose Laplace exponent is gamma b^alpha; alpha = 2 is a
// Brownian part with q = 2 gamma.
void add_power(double alpha, double gamma, std::vector<LevyMeasure1D>& parts, double& q) {
    if (alpha >= 2.0) q += 2.0 * gamma;
    else parts.push_back(LevyMeasure1D::stable(alpha, gamma / stable_constant(alpha)));
}

}  // namespace

double example_3d_bound(const Example3dParams& p, double x) {
    return std::min(std::pow(p.eta1 / p.gamma3 * x, 1.0 / p.alpha1), std::pow(p.eta2 / p.gamma3_tilde * x, 1.0 / p.alpha2));
}

GeneratingPair build_example_3d(std::function<double(double)> g3, const Example3dParams& p, const DriftSpec& drift,
                                const std::vector<double>& x_grid) {
    for (double v : {p.gamma1, p.gamma2, p.gamma3, p.gamma3_tilde, p.eta1, p.eta2})
        if (!(v > 0.0)) throw DomainError("example 3d parameters must be positive");
    if (!(p.alpha1 <= 2.0 && p.alpha1 > p.alpha2 && p.alpha2 > 1.0))
        throw DomainError("example 3d needs 2 >= alpha1 > alpha2 > 1");

    std::vector<double> xs = x_grid.empty() ? default_x_grid() : x_grid;
    xs.push_back(0.0);
    for (double x : xs) {
        const double g = g3(x);
        const double hi = example_3d_bound(p, x);
        if (!(g >= 0.0) || g > hi * (1.0 + 1e-12)) {
            std::ostringstream os;
            os << "G3(" << x << ") = " << g << " violates 0 <= G3 <= " << hi;
            throw ConstraintViolation(os.str());
        }
    }

    std::vector<IndependentCoord> coords(3);
    {
        std::vector<LevyMeasure1D> parts;
        double q = 0.0;
        add_power(p.alpha1, p.gamma1, parts, q);
        coords[0] = {LevyMeasure1D::sum(std::move(parts)), q};
    }
    {
        std::vector<LevyMeasure1D> parts;
        double q = 0.0;
        add_power(p.alpha2, p.gamma2, parts, q);
        coords[1] = {LevyMeasure1D::sum(std::move(parts)), q};
    }
    {
        std::vector<LevyMeasure1D> parts;
        double q = 0.0;
        add_power(p.alpha1, p.gamma3, parts, q);
        add_power(p.alpha2, p.gamma3_tilde, parts, q);
        coords[2] = {LevyMeasure1D::sum(std::move(parts)), q};
    }
    auto fn = [g3, p](double x) {
        const double g = g3(x);
        Vec out(3);
        out[0] = std::pow(std::max(0.0, (x * p.eta1 - p.gamma3 * std::pow(g, p.alpha1)) / p.gamma1), 1.0 / p.alpha1);
        out[1] = std::pow(std::max(0.0, (x * p.eta2 - p.gamma3_tilde * std::pow(g, p.alpha2)) / p.gamma2), 1.0 / p.alpha2);
        out[2] = g;
        return out;
    };
    return make_generating_pair(LevyModel::independent(std::move(coords)), GFunction::callable(3, fn, "example_3d"), drift);
}

GeneratingPair example_spherical_stable(const std::vector<std::pair<Vec, double>>& directions, double alpha,
                                        const Vec& u_direction, double eta, const DriftSpec& drift) {
    SphericalMeasure sm;
    sm.directions = directions;
    sm.radial = LevyMeasure1D::stable(alpha, 1.0);
    double s = 0.0;
    for (const auto& [xi, w] : directions) {
        const double inner = u_direction.dot(xi);
        if (inner < 0.0) throw DomainError("G direction must have nonnegative inner products with the support");
        s += w * std::pow(inner, alpha);
    }
    if (!(s > 0.0)) throw DomainError("G direction is orthogonal to the support");
    // scale u so that sum_j w_j <u, xi_j>^alpha = eta / C_alpha
    const double k = std::pow(eta / stable_constant(alpha) / s, 1.0 / alpha);
    const int d = static_cast<int>(u_direction.size());
    return make_generating_pair(LevyModel::spherical(std::move(sm), Mat::Zero(d, d)),
                                GFunction::stable_cone(u_direction, k, alpha), drift);
}

GeneratingPair example_antithetic_pair(double alpha, const DriftSpec& drift) {
    Vec dir(2);
    dir << 1.0, -1.0;
    std::vector<Ray> rays{{dir, LevyMeasure1D::stable(alpha, 1.0)}};
    return make_generating_pair(LevyModel::custom(2, std::move(rays), Mat::Zero(2, 2)),
                                GFunction::affine_power({{1.0, 1.0, alpha}, {1.0, -1.0, alpha}}), drift);
}

GeneratingPair example_split_stable(double alpha, const std::vector<double>& cuts, const DriftSpec& drift) {
    if (cuts.empty()) throw DomainError("split needs at least one cut");
    auto in_e = [cuts](double v) {
        // E = (0, c0] U (c1, c2] U ...
        std::size_t k = static_cast<std::size_t>(std::lower_bound(cuts.begin(), cuts.end(), v) - cuts.begin());
        return k % 2 == 0;
    };
    auto f1 = [alpha, in_e](double v) { return in_e(v) ? std::pow(v, -1.0 - alpha) : 0.0; };
    auto f2 = [alpha, in_e](double v) { return in_e(v) ? 0.0 : std::pow(v, -1.0 - alpha); };
    std::vector<IndependentCoord> coords{
        {LevyMeasure1D::density(f1, std::numeric_limits<double>::infinity(), cuts, Variation::infinite), 0.0},
        {LevyMeasure1D::density(f2, std::numeric_limits<double>::infinity(), cuts, Variation::finite), 0.0}};
    return make_generating_pair(LevyModel::independent(std::move(coords)),
                                GFunction::power_sum(2, {{1.0, alpha, 0}, {1.0, alpha, 1}}), drift);
}

}  // namespace affine_levy
