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

#include "affine_levy/core/laplace.hpp"

#include <cmath>
#include <string>

#include "affine_levy/core/errors.hpp"
#include "affine_levy/core/special.hpp"

namespace affine_levy {

namespace {
constexpr double kTol = 1e-12;
}

double laplace_exponent_signed(const LevyMeasure1D& rho, double z, const QuadOptions& opts) {
    if (z == 0.0 || rho.is_zero()) return 0.0;
    if (const auto* s = std::get_if<LevyMeasure1D::Stable>(&rho.kind())) {
        if (z < 0.0) throw DivergenceError("stable measure has no exponential moments; J(z) diverges for z < 0");
        return s->scale * stable_constant(s->alpha) * std::pow(z, s->alpha);
    }
    if (const auto* sm = std::get_if<LevyMeasure1D::Sum>(&rho.kind())) {
        double acc = 0.0;
        for (const auto& p : *sm->parts) acc += laplace_exponent_signed(p, z, opts);
        return acc;
    }
    if (z < 0.0 && std::isinf(support_sup(rho))) {
        try {
            const double v = integrate_measure(rho, [z](double v) { return h_signed(z * v); }, opts);
            if (!std::isfinite(v)) throw QuadratureError("non-finite");
            return v;
        } catch (const QuadratureError& e) {
            throw DivergenceError(std::string("exponential moment does not exist: ") + e.what());
        }
    }
    return integrate_measure(rho, [z](double v) { return h_signed(z * v); }, opts);
}

double laplace_exponent_1d(const LevyMeasure1D& rho, double b, const QuadOptions& opts) {
    if (!(b >= 0.0)) throw DomainError("laplace_exponent_1d requires b >= 0");
    return laplace_exponent_signed(rho, b, opts);
}

double laplace_exponent_multi(const LevyModel& model, const Vec& lam, const QuadOptions& opts) {
    if (lam.size() != model.dim()) throw DomainError("lambda has the wrong dimension");
    double j = 0.5 * lam.dot(model.Q() * lam);
    for (const auto& r : model.rays()) {
        const double z = lam.dot(r.direction);
        if (z == 0.0) continue;
        j += laplace_exponent_signed(r.measure, z, opts);
    }
    return j;
}

double projection_laplace(const LevyModel& model, const Vec& g, double b, const QuadOptions& opts) {
    if (!(b >= 0.0)) throw DomainError("projection_laplace requires b >= 0");
    return laplace_exponent_multi(model, b * g, opts);
}

ProjectionImage image_measure(const LevyModel& model, const Vec& g) {
    ProjectionImage out;
    out.wiener = 0.5 * g.dot(model.Q() * g);
    std::vector<LevyMeasure1D> parts;
    for (const auto& r : model.rays()) {
        const double s = g.dot(r.direction);
        if (s > 0.0) parts.push_back(scaled(r.measure, s));
        else if (s < 0.0) out.has_negative = true;
    }
    out.positive = LevyMeasure1D::sum(std::move(parts));
    return out;
}

JumpSupportReport check_jump_support(const LevyModel& model, const Vec& g) {
    JumpSupportReport rep{true, 1.0};
    const double gn = g.norm();
    for (const auto& r : model.rays()) {
        const double yn = r.direction.norm();
        const double inner = g.dot(r.direction);
        const double normalized = gn > 0.0 ? inner / (gn * yn) : 0.0;
        rep.min_inner = std::min(rep.min_inner, normalized);
        if (inner < -kTol * gn * yn) rep.all_nonneg = false;
    }
    return rep;
}

bool appendix_support_bound(const LevyModel& model, const GFunction& gfun, double x) {
    const Vec g = gfun(x);
    for (const auto& r : model.rays()) {
        const double s = g.dot(r.direction);
        if (s >= 0.0) continue;
        const double rmax = support_sup(r.measure);
        if (std::isinf(rmax)) return false;
        if (x + s * rmax < -kTol) return false;
    }
    return true;
}

}  // namespace affine_levy
