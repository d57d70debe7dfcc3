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

#include <cstdint>
#include <string>
#include <vector>

#include "affine_levy/generating/canonical.hpp"
#include "affine_levy/generating/pair.hpp"

namespace affine_levy {

struct PathConfig {
    double T = 1.0;
    double dt = 1.0 / 250.0;
    std::size_t n_paths = 1000;
    std::uint64_t seed = 42;
    double truncation_eps = 1e-3;
    std::size_t record_every = 1;  // keep every k-th step (the last step is always kept)

    void validate() const;
    std::size_t n_steps() const;  // ceil(T / dt); the effective step is T / n_steps
};

// Row-major n_paths x n_records; integrals hold the trapezoid rule for
// int_0^t R ds at the same record times.
struct ShortRatePaths {
    std::vector<double> times;
    std::vector<double> values;
    std::vector<double> integrals;
    std::size_t n_paths = 0;
    std::uint64_t seed_used = 0;
    std::string scheme_tag;
    std::uint64_t clamp_count = 0;
    std::uint64_t step_count = 0;

    std::size_t n_records() const { return times.size(); }
    double value(std::size_t path, std::size_t rec) const { return values[path * times.size() + rec]; }
    double integral(std::size_t path, std::size_t rec) const { return integrals[path * times.size() + rec]; }
    double clamp_rate() const { return step_count ? static_cast<double>(clamp_count) / static_cast<double>(step_count) : 0.0; }
};

// AFFINE_LEVY_THREADS when set, else the hardware concurrency.
unsigned thread_count();

// Full-truncation Euler for dR = F(R) dt + <G(R-), dZ>: coefficients at
// max(R, 0), then R <- max(R, 0).  Paths depend only on (seed, path index),
// so any thread count gives the same output.  threads = 0 means thread_count().
ShortRatePaths simulate_short_rate(const GeneratingPair& pair, double x0, const PathConfig& cfg, unsigned threads = 0);
ShortRatePaths simulate_short_rate(const CanonicalSde& sde, double x0, const PathConfig& cfg, unsigned threads = 0);

}  // namespace affine_levy
