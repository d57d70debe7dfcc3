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

#include "affine_levy/generating/plane.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "affine_levy/core/errors.hpp"
#include "affine_levy/core/special.hpp"
#include "affine_levy/generating/canonical.hpp"
#include "affine_levy/generating/power_fit.hpp"

namespace affine_levy {

namespace {

struct CoordPower {
    double alpha;
    double c;
};

// J_i(b) = c b^alpha for the coordinate, read off the measure when it is a
// single stable law or a pure Wiener part, fitted otherwise.
std::optional<CoordPower> coordinate_power(const IndependentCoord& coord) {
    if (coord.measure.is_zero()) {
        if (coord.q > 0.0) return CoordPower{2.0, 0.5 * coord.q};
        return std::nullopt;
    }
    if (const auto* s = std::get_if<LevyMeasure1D::Stable>(&coord.measure.kind()); s && coord.q == 0.0)
        return CoordPower{s->alpha, s->scale * stable_constant(s->alpha)};
    std::vector<double> b = default_b_grid(), y;
    for (double v : b) y.push_back(0.5 * coord.q * v * v + laplace_exponent_1d(coord.measure, v));
    const PowerFit f = fit_power_sum(b, y, 1);
    if (f.terms.size() != 1 || !(f.residual < 1e-6)) return std::nullopt;
    return CoordPower{f.terms[0].alpha, f.terms[0].eta};
}

std::vector<double> plane_grid() {
    std::vector<double> x;
    for (int k = -12; k <= 12; ++k) x.push_back(std::exp2(0.5 * k));
    return x;
}

}  // namespace

const char* to_string(PlaneCase c) {
    switch (c) {
        case PlaneCase::Ia: return "Ia";
        case PlaneCase::Ib: return "Ib";
        case PlaneCase::II: return "II";
        default: return "not_generating";
    }
}

PlaneClassification classify_plane(const GeneratingPair& pair) {
    PlaneClassification out;
    const auto* ind = std::get_if<LevyModel::Independent>(&pair.model.noise());
    if (pair.model.dim() != 2 || !ind) {
        out.reason = "plane classification needs two independent coordinates";
        return out;
    }
    const auto p1 = coordinate_power(ind->coords[0]);
    const auto p2 = coordinate_power(ind->coords[1]);
    if (!p1 || !p2) {
        out.reason = "coordinate Laplace exponents are not single powers";
        return out;
    }

    const auto xs = plane_grid();
    double rmin = std::numeric_limits<double>::infinity(), rmax = -rmin;
    for (double x : xs) {
        const Vec g = pair.gfun(x);
        if (!(g[0] > 0.0) || !(g[1] > 0.0)) {
            out.reason = "G1 and G2 must be positive for x > 0";
            return out;
        }
        const double r = g[1] / g[0];
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    out.ratio_spread = (rmax - rmin) / std::abs(rmax);

    CanonicalFit fit;
    try {
        fit = canonicalize(pair);
    } catch (const Error& e) {
        out.reason = e.what();
        return out;
    }
    out.form = fit.form;
    const bool same_alpha = std::abs(p1->alpha - p2->alpha) < 0.01;

    if (out.ratio_spread < 1e-8) {
        if (fit.form.g() == 1) {
            out.kind = PlaneCase::Ia;
            out.reason = "G2/G1 constant and the projection exponent is a single power";
        } else {
            out.reason = "G2/G1 constant but the projection exponent has several powers";
        }
        return out;
    }
    if (fit.form.g() == 1) {
        if (same_alpha) {
            out.kind = PlaneCase::Ib;
            out.reason = "G2/G1 nonconstant, equal coordinate exponents, c1 G1^a + c2 G2^a linear";
        } else {
            out.reason = "single canonical power but coordinate exponents differ";
        }
        return out;
    }
    if (fit.form.g() == 2) {
        // G_i(x) = (eta_i x / c_i)^{1/alpha_i}, matching coordinate exponents to terms.
        const CoordPower cp[2] = {*p1, *p2};
        double worst = 0.0;
        for (int i = 0; i < 2; ++i) {
            const CanonicalTerm* term = nullptr;
            for (const auto& t : fit.form.terms)
                if (std::abs(t.alpha - cp[i].alpha) < 0.01) term = &t;
            if (!term) {
                out.reason = "canonical exponents do not match the coordinate exponents";
                return out;
            }
            for (double x : xs) {
                const double expect = std::pow(term->eta * x / cp[i].c, 1.0 / cp[i].alpha);
                const double got = pair.gfun(x)[i];
                worst = std::max(worst, std::abs(got - expect) / expect);
            }
        }
        if (worst < 1e-6) {
            out.kind = PlaneCase::II;
            out.reason = "two canonical powers and G_i = (eta_i x / c_i)^{1/alpha_i}";
        } else {
            std::ostringstream os;
            os << "two canonical powers but G deviates from the power form by " << worst;
            out.reason = os.str();
        }
        return out;
    }
    out.reason = "more than two canonical powers";
    return out;
}

bool plane_inequality_check(double a, double b, double c, double d, double alpha1, double alpha2, double x) {
    if (!(a > 0 && b > 0 && c > 0 && d > 0 && x > 0)) throw DomainError("plane_inequality_check needs positive arguments");
    if (!(alpha1 > 1.0 && alpha1 <= 2.0 && alpha2 > 1.0 && alpha2 < alpha1))
        throw DomainError("plane_inequality_check needs 2 >= alpha1 > alpha2 > 1");
    const double ymax = std::min(std::pow(b / c * x, 1.0 / alpha1), std::pow(a / d * x, 1.0 / alpha2));
    constexpr int n = 10000;
    for (int i = 0; i < n; ++i) {
        const double y = ymax * static_cast<double>(i) / (n - 1);
        const double lhs = std::pow(std::max(0.0, b * x - c * std::pow(y, alpha1)), 1.0 / alpha1);
        const double rhs = std::pow(std::max(0.0, a * x - d * std::pow(y, alpha2)), 1.0 / alpha2);
        if (!(lhs < rhs)) return false;
    }
    return true;
}

}  // namespace affine_levy
