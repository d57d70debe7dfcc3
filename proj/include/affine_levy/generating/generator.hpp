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

#include <functional>

#include "affine_levy/generating/pair.hpp"

namespace affine_levy {

struct TestFunction {
    std::function<double(double)> f;
    std::function<double(double)> df;
    std::function<double(double)> d2f;
};

// f(x) = e^{-lambda x}
TestFunction exponential_test_function(double lambda);

// Generator of the short rate in triplet form:
//   c x f'' + [a x + b + int_(1,inf) (1-v) m(dv)] f' + int [f(x+v) - f(x) - f'(x)(1 ^ v)] m(dv)
// with m = nu0 + x mu.
double generator_apply(const ProjectionTriplet& triplet, const DriftSpec& drift, const TestFunction& f, double x,
                       const QuadOptions& opts = {});

// The same generator computed straight from the pair: Wiener coefficient
// 1/2 <Q G(x), G(x)> and jump measure nu_{G(x)}, with no decomposition.
double pair_generator_apply(const GeneratingPair& pair, const TestFunction& f, double x, const QuadOptions& opts = {});

}  // namespace affine_levy
