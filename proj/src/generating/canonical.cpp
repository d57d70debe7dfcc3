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

#include "affine_levy/generating/canonical.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "affine_levy/core/errors.hpp"
#include "affine_levy/core/special.hpp"
#include "affine_levy/generating/power_fit.hpp"

namespace affine_levy {

namespace {
constexpr double kMerge = 0.01;
constexpr double kAccept = 1e-4;
}  // namespace

std::vector<double> default_x_small() { return {1e-6, 1e-5, 1e-4}; }

CanonicalFit canonical_from_slope(const std::vector<double>& b, const std::vector<double>& slope, int max_terms) {
    const PowerFit fit = fit_power_sum(b, slope, max_terms);
    if (fit.terms.empty() || !(fit.residual < kAccept)) {
        std::ostringstream os;
        os << "slope samples are not a sum of at most " << max_terms << " powers b^alpha with alpha in (1,2] (residual "
           << fit.residual << ")";
        throw FitFailure(os.str());
    }
    CanonicalFit out;
    out.form.terms = fit.terms;
    out.residual = fit.residual;
    out.b = b;
    out.observed = slope;
    for (double v : b) out.fitted.push_back(out.form(v));
    return out;
}

CanonicalFit canonicalize(const GeneratingPair& pair, const std::vector<double>& x_small,
                          const std::vector<double>& b_grid) {
    const Decomposition dec = decompose_projection(pair, default_x_grid(), b_grid);
    double smax = 0.0, imax = 0.0;
    for (double v : dec.slope) smax = std::max(smax, std::abs(v));
    for (double v : dec.intercept) imax = std::max(imax, std::abs(v));
    if (imax > 1e-8 * smax + 1e-14)
        throw ConstraintViolation("canonical form needs nu_G(0) = 0 (G(0)=0 regime); intercept of the projection exponent is nonzero");
    CanonicalFit out = canonical_from_slope(dec.b, dec.slope, pair.model.dim());

    const QuadOptions q = decomposition_quad();
    for (double x : x_small) {
        const Vec g = pair.gfun(x);
        for (double b : b_grid) {
            const double ratio = projection_laplace(pair.model, g, b, q) / x;
            const double fit = out.form(b);
            out.small_x_deviation = std::max(out.small_x_deviation, std::abs(ratio - fit) / fit);
        }
    }
    return out;
}

WienerSplit split_wiener(const CanonicalForm& cf) {
    WienerSplit w;
    for (const auto& t : cf.terms) {
        if (t.alpha >= 2.0 - kMerge) w.c += t.eta;
        else w.mu_terms.push_back(t);
    }
    return w;
}

CanonicalSde synthesize_canonical_equation(const CanonicalForm& cf, const DriftSpec& drift) {
    CanonicalSde sde;
    sde.drift = drift;
    for (const auto& t : cf.terms) {
        if (t.alpha >= 2.0 - kMerge) {
            sde.terms.push_back({2.0, t.eta, std::sqrt(2.0 * t.eta), true});
        } else {
            sde.terms.push_back({t.alpha, t.eta, std::pow(t.eta / stable_constant(t.alpha), 1.0 / t.alpha), false});
        }
    }
    return sde;
}

GeneratingPair canonical_pair(const CanonicalSde& sde) {
    std::vector<IndependentCoord> coords;
    std::vector<GFunction::PowerTerm> terms;
    int axis = 0;
    for (const auto& t : sde.terms) {
        if (t.wiener) coords.push_back({LevyMeasure1D::zero(), 1.0});
        else coords.push_back({LevyMeasure1D::stable(t.alpha, 1.0), 0.0});
        terms.push_back({t.d, t.alpha, axis++});
    }
    const int d = static_cast<int>(coords.size());
    return make_generating_pair(LevyModel::independent(std::move(coords)), GFunction::power_sum(d, std::move(terms)),
                                sde.drift);
}

}  // namespace affine_levy
