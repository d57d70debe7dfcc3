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

#include "affine_levy/core/special.hpp"

#include <cmath>
#include <string>

#include "affine_levy/core/errors.hpp"

namespace affine_levy {

double h_signed(double z) {
    if (std::abs(z) < 1e-4) {
        const double z2 = z * z;
        return z2 * (0.5 - z / 6.0 + z2 / 24.0);
    }
    return std::expm1(-z) + z;
}

double h_func(double z) {
    if (!(z >= 0.0)) throw DomainError("h_func: argument must be nonnegative");
    if (std::isinf(z)) return z;
    return h_signed(z);
}

double stable_constant(double alpha) {
    if (!(alpha > 1.0 && alpha < 2.0))
        throw DomainError("stable_constant: alpha must lie in (1,2), got " + std::to_string(alpha));
    return std::tgamma(2.0 - alpha) / (alpha * (alpha - 1.0));
}

}  // namespace affine_levy
