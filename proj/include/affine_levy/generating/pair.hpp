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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affine_levy/core/laplace.hpp"
#include "affine_levy/core/levy_measure.hpp"
#include "affine_levy/core/levy_model.hpp"

namespace affine_levy {

// F(x) = a x + b
struct DriftSpec {
    double a = 0.0;
    double b = 0.0;

    double operator()(double x) const { return a * x + b; }
};

struct GeneratingPair {
    LevyModel model;
    GFunction gfun;
    DriftSpec drift;
};

// Throws DomainError when the dimensions of G and Z disagree.
GeneratingPair make_generating_pair(LevyModel model, GFunction gfun, DriftSpec drift);

// Laplace exponent of the projection along G(x): b -> J_{Z^{G(x)}}(b)
double pair_projection_laplace(const GeneratingPair& pair, double x, double b, const QuadOptions& opts = {});

struct ProjectionTriplet {
    double c = 0.0;
    LevyMeasure1D nu0;
    LevyMeasure1D mu;
};

struct CanonicalTerm {
    double alpha;
    double eta;
};

// x sum_k eta_k b^{alpha_k}; terms sorted by alpha descending.
struct CanonicalForm {
    std::vector<CanonicalTerm> terms;

    int g() const { return static_cast<int>(terms.size()); }
    double operator()(double b) const;
    void validate(int dim) const;
};

// sum_k stable(alpha_k, eta_k / C_{alpha_k}); its Laplace exponent is sum_k eta_k b^{alpha_k}.
LevyMeasure1D stable_sum_measure(const std::vector<CanonicalTerm>& terms);

}  // namespace affine_levy
