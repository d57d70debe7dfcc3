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
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "affine_levy/core/levy_measure.hpp"

namespace affine_levy {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct SphericalMeasure {
    std::vector<std::pair<Vec, double>> directions;  // (unit vector, weight)
    LevyMeasure1D radial;

    void validate(int dim) const;
};

// A half-line {r * direction : r > 0} carrying a radial measure.
struct Ray {
    Vec direction;
    LevyMeasure1D measure;
};

struct IndependentCoord {
    LevyMeasure1D measure;
    double q = 0.0;
};

class LevyModel {
public:
    struct Independent {
        std::vector<IndependentCoord> coords;
    };
    struct Spherical {
        SphericalMeasure sm;
    };
    struct Custom {
        std::vector<Ray> rays;
    };
    using Noise = std::variant<Independent, Spherical, Custom>;

    static LevyModel independent(std::vector<IndependentCoord> coords);
    static LevyModel spherical(SphericalMeasure sm, const Mat& Q);
    static LevyModel custom(int dim, std::vector<Ray> rays, const Mat& Q);

    int dim() const { return dim_; }
    const Mat& Q() const { return Q_; }
    const Noise& noise() const { return noise_; }
    const char* kind_name() const;

    // Every jump of the model lies on one of these rays.  Rays with zero
    // measure are omitted.
    const std::vector<Ray>& rays() const { return rays_; }

private:
    LevyModel(int dim, Mat Q, Noise noise);
    void validate() const;

    int dim_ = 0;
    Mat Q_;
    Noise noise_;
    std::vector<Ray> rays_;
};

// x -> G(x) in R^d
class GFunction {
public:
    struct PowerTerm {
        double coef;
        double alpha;  // contributes coef * x^{1/alpha} to coordinate `axis`
        int axis;
    };
    struct PowerSum {
        std::vector<PowerTerm> terms;
    };
    struct AffinePowerCoord {
        double c0;
        double c1;
        double alpha;
    };
    struct AffinePower {
        std::vector<AffinePowerCoord> coords;
    };
    struct StableCone {
        Vec direction;
        double coef;
        double alpha;
    };
    struct Tabulated {
        std::vector<double> x;
        std::vector<Vec> values;
    };
    struct Callable {
        std::function<Vec(double)> fn;
        std::string label;
    };
    using Kind = std::variant<PowerSum, AffinePower, StableCone, Tabulated, Callable>;

    // G(x) = sum_k x^{p_k} u_k
    using PowerForm = std::vector<std::pair<double, Vec>>;

    static GFunction power_sum(int dim, std::vector<PowerTerm> terms);
    static GFunction affine_power(std::vector<AffinePowerCoord> coords);
    static GFunction stable_cone(Vec direction, double coef, double alpha);
    static GFunction tabulated(std::vector<double> x, std::vector<Vec> values);
    static GFunction callable(int dim, std::function<Vec(double)> fn, std::string label = "callable");

    int dim() const { return dim_; }
    const Kind& kind() const { return kind_; }
    const char* kind_name() const;

    Vec operator()(double x) const;

    // Available for the closed-form kinds; lets the simulator evaluate the
    // noise coefficient with a handful of powers per step.
    std::optional<PowerForm> power_form() const;

private:
    GFunction(int dim, Kind kind) : dim_(dim), kind_(std::move(kind)) {}
    int dim_ = 0;
    Kind kind_;
};

// Direction of G at the origin: G(0)/|G(0)|, or the normalized value at a
// tiny x when G(0) = 0.  Zero vector if G vanishes there too.
Vec limit_direction(const GFunction& g);

}  // namespace affine_levy
