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

#include "affine_levy/generating/pair.hpp"

#include <algorithm>
#include <cmath>

#include "affine_levy/core/errors.hpp"
#include "affine_levy/core/special.hpp"

namespace affine_levy {

GeneratingPair make_generating_pair(LevyModel model, GFunction gfun, DriftSpec drift) {
    if (gfun.dim() != model.dim()) throw DomainError("G and Z must have the same dimension");
    if (!(drift.b >= 0.0)) throw DomainError("drift b must be nonnegative");
    return GeneratingPair{std::move(model), std::move(gfun), drift};
}

double pair_projection_laplace(const GeneratingPair& pair, double x, double b, const QuadOptions& opts) {
    return projection_laplace(pair.model, pair.gfun(x), b, opts);
}

double CanonicalForm::operator()(double b) const {
    double s = 0.0;
    for (const auto& t : terms) s += t.eta * std::pow(b, t.alpha);
    return s;
}

void CanonicalForm::validate(int dim) const {
    if (terms.empty() || g() > dim) throw DomainError("canonical form needs 1 <= g <= dim terms");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (!(terms[i].alpha > 1.0 && terms[i].alpha <= 2.0)) throw DomainError("canonical exponents must lie in (1,2]");
        if (!(terms[i].eta > 0.0)) throw DomainError("canonical weights must be positive");
        if (i > 0 && !(terms[i].alpha < terms[i - 1].alpha)) throw DomainError("canonical exponents must be distinct and descending");
    }
}

LevyMeasure1D stable_sum_measure(const std::vector<CanonicalTerm>& terms) {
    std::vector<LevyMeasure1D> parts;
    for (const auto& t : terms) {
        if (!(t.alpha > 1.0 && t.alpha < 2.0)) throw DomainError("jump terms need alpha in (1,2)");
        parts.push_back(LevyMeasure1D::stable(t.alpha, t.eta / stable_constant(t.alpha)));
    }
    return LevyMeasure1D::sum(std::move(parts));
}

}  // namespace affine_levy
