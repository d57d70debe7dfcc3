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

#include "affine_levy/generating/pair.hpp"

namespace affine_levy {

enum class PlaneCase { Ia, Ib, II, not_generating };

const char* to_string(PlaneCase c);

struct PlaneClassification {
    PlaneCase kind = PlaneCase::not_generating;
    std::string reason;
    double ratio_spread = 0.0;  // relative spread of G2/G1 on the grid
    std::optional<CanonicalForm> form;
};

// Two independent coordinates with J_i(b) = c_i b^{alpha_i}.
PlaneClassification classify_plane(const GeneratingPair& pair);

// (b x - c y^{a1})^{1/a1} < (a x - d y^{a2})^{1/a2} for all y on a 10^4-point
// grid of [0, ((b/c)x)^{1/a1} ^ ((a/d)x)^{1/a2}].
bool plane_inequality_check(double a, double b, double c, double d, double alpha1, double alpha2, double x);

}  // namespace affine_levy
