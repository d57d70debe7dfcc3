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

struct WeylResult {
    long long m;
    long long n;
    double error;  // |x - (m p + n q)|
};

// Integers m, n with |x - (m p + n q)| <= delta for p/q irrational.  Throws
// IrrationalitySuspect when p/q matches a rational with denominator < 1000.
WeylResult weyl_approximate(double p, double q, double x, double delta);

}  // namespace affine_levy
