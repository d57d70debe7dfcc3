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

#include <stdexcept>
#include <string>

namespace affine_levy {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error { using Error::Error; };
struct QuadratureError : Error { using Error::Error; };
struct DivergenceError : Error { using Error::Error; };
struct FitFailure : Error { using Error::Error; };
struct ConstraintViolation : Error { using Error::Error; };
struct StepUnderflow : Error { using Error::Error; };
struct OutOfGridError : Error { using Error::Error; };
struct HypothesisViolation : Error { using Error::Error; };
struct InconsistencyError : Error { using Error::Error; };
struct NoConvergenceError : Error { using Error::Error; };
struct SchemaError : Error { using Error::Error; };
struct MissingResultError : Error { using Error::Error; };

struct NonlinearityError : Error {
    NonlinearityError(const std::string& what, double r) : Error(what), residual(r) {}
    double residual;
};

struct IrrationalitySuspect : Error {
    IrrationalitySuspect(const std::string& what, long long h, long long k)
        : Error(what), numerator(h), denominator(k) {}
    long long numerator;
    long long denominator;
};

}  // namespace affine_levy
