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

#include <vector>

#include "affine_levy/core/levy_model.hpp"
#include "affine_levy/simulate/rng.hpp"

namespace affine_levy {

// One increment over dt of the compensated spectrally positive stable
// process with Laplace exponent scale * C_alpha * b^alpha (Chambers-Mallows-Stuck).
double sample_stable_increment(double alpha, double scale, double dt, Rng& rng);

// Mean-zero increment over a fixed dt of the pure-jump martingale with Levy
// measure rho.  Stable parts are sampled exactly, atoms as exact compound
// Poisson; density parts use compound Poisson above eps (inverse CDF on a
// log-spaced tail table) plus a Gaussian for the jumps below eps.
class MeasureSampler {
public:
    MeasureSampler() = default;
    MeasureSampler(const LevyMeasure1D& rho, double dt, double eps = 1e-3);

    double operator()(Rng& rng) const;

    double dt() const { return dt_; }
    bool is_zero() const;

private:
    struct StablePart {
        double alpha, sigma;
    };
    struct AtomPart {
        double location, mean_count;
    };
    struct TablePart {
        double mean_count;
        std::vector<double> grid;  // eps = grid[0] < ... ; tail[j] = rho((grid[j], inf))
        std::vector<double> tail;
        std::vector<double> neg_log_tail;  // increasing
        std::vector<double> slope;         // d log v / d log tail per cell
        double kappa;                      // Pareto index used beyond grid.back()
    };

    void add(const LevyMeasure1D& rho, double eps);
    static double table_jump(const TablePart& t, double u);

    double dt_ = 0.0;
    std::vector<StablePart> stable_;
    std::vector<AtomPart> atoms_;
    std::vector<TablePart> tables_;
    double gauss_sd_ = 0.0;
    double compensation_ = 0.0;
};

// Increment of a d-dimensional Levy model: Gaussian part from Q plus one
// MeasureSampler per ray.
class ModelSampler {
public:
    ModelSampler(const LevyModel& model, double dt, double eps = 1e-3);

    int dim() const { return dim_; }
    void sample(Rng& rng, double* out) const;  // writes dim() values
    Vec operator()(Rng& rng) const;

private:
    int dim_;
    Mat gauss_factor_;  // Z_gauss = factor * N(0, I)
    bool has_gauss_;
    std::vector<Vec> directions_;
    std::vector<MeasureSampler> radial_;
};

// Convenience wrappers that prepare a sampler per call.
double sample_levy_increment(const LevyMeasure1D& rho, double dt, double eps, Rng& rng);
Vec sample_spherical_increment(const SphericalMeasure& sm, double dt, double eps, Rng& rng);

}  // namespace affine_levy
