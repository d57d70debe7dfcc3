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

namespace affine_levy {

// e^{-z} - 1 + z for z >= 0.
double h_func(double z);

// Same expression without the sign restriction; used for negative
// arguments when exponential moments exist.
double h_signed(double z);

// Gamma(2 - alpha) / (alpha (alpha - 1)), alpha in (1, 2).
double stable_constant(double alpha);

}  // namespace affine_levy
