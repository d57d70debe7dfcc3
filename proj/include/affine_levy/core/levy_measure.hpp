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
#include <limits>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "affine_levy/core/quadrature.hpp"

namespace affine_levy {

enum class Variation { finite, infinite, unknown };

const char* to_string(Variation v);

// A Levy measure on (0, inf).
class LevyMeasure1D {
public:
    struct Zero {};
    struct Stable {
        double alpha;  // density scale * v^{-1-alpha}
        double scale;
    };
    struct Density {
        std::function<double(double)> f;
        double support_hi;
        std::vector<double> breakpoints;
    };
    struct Atoms {
        std::vector<std::pair<double, double>> atoms;  // (location, weight)
    };
    struct Sum {
        std::shared_ptr<const std::vector<LevyMeasure1D>> parts;
    };
    using Kind = std::variant<Zero, Stable, Density, Atoms, Sum>;

    LevyMeasure1D() = default;

    static LevyMeasure1D zero() { return {}; }
    static LevyMeasure1D stable(double alpha, double scale);
    static LevyMeasure1D density(std::function<double(double)> f,
                                 double support_hi = std::numeric_limits<double>::infinity(),
                                 std::vector<double> breakpoints = {},
                                 Variation hint = Variation::unknown);
    static LevyMeasure1D atoms(std::vector<std::pair<double, double>> atoms);
    static LevyMeasure1D sum(std::vector<LevyMeasure1D> parts);

    const Kind& kind() const { return kind_; }
    Variation variation_hint() const { return hint_; }
    bool is_zero() const;
    std::string describe() const;

private:
    Kind kind_{Zero{}};
    Variation hint_ = Variation::finite;
};

// Integral of g against rho over (0, inf).  Extra breakpoints are passed to
// the quadrature for integrands with kinks or jumps.
double integrate_measure(const LevyMeasure1D& rho, const Integrand& g, const QuadOptions& opts = {},
                         const std::vector<double>& extra_breakpoints = {});

// Image of rho under v -> s v, s > 0.
LevyMeasure1D scaled(const LevyMeasure1D& rho, double s);

// w * rho, w >= 0.
LevyMeasure1D weighted(const LevyMeasure1D& rho, double w);

// sup of the support (inf when unbounded); 0 for the zero measure.
double support_sup(const LevyMeasure1D& rho);

// int_{(1,inf)} (v - 1) rho(dv)
double tail_excess(const LevyMeasure1D& rho, const QuadOptions& opts = {});

// int_{(eps,inf)} rho(dv)
double mass_above(const LevyMeasure1D& rho, double eps, const QuadOptions& opts = {});

// int_{(eps,inf)} v rho(dv)
double first_moment_above(const LevyMeasure1D& rho, double eps, const QuadOptions& opts = {});

// int_{(0,eps]} v^2 rho(dv)
double second_moment_below(const LevyMeasure1D& rho, double eps, const QuadOptions& opts = {});

struct VariationCheck {
    bool finite;
    double value;  // int v rho(dv) when finite, inf otherwise
};

// Numerically decides whether int v rho(dv) < inf.
VariationCheck first_moment_check(const LevyMeasure1D& rho);

// int (v^2 ^ v) rho(dv); throws DivergenceError when not finite.
double integrability_constant(const LevyMeasure1D& rho);

}  // namespace affine_levy
