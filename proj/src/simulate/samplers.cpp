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

#include "affine_levy/simulate/samplers.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "affine_levy/core/errors.hpp"
#include "affine_levy/core/special.hpp"

namespace affine_levy {

namespace {

constexpr int kPerDecade = 32;
constexpr double kTailCut = 1e-13;

// Standard S(alpha, 1, 1, 0) variate.
double cms_unit(double alpha, Rng& rng) {
    std::uniform_real_distribution<double> uni(-0.5 * std::numbers::pi, 0.5 * std::numbers::pi);
    std::exponential_distribution<double> expo(1.0);
    const double V = uni(rng);
    const double W = expo(rng);
    const double t = std::tan(0.5 * std::numbers::pi * alpha);
    const double B = std::atan(t) / alpha;
    const double S = std::pow(1.0 + t * t, 0.5 / alpha);
    const double a = alpha * (V + B);
    return S * std::sin(a) / std::pow(std::cos(V), 1.0 / alpha) * std::pow(std::cos(V - a) / W, (1.0 - alpha) / alpha);
}

double stable_sigma(double alpha, double scale, double dt) {
    return std::pow(scale * stable_constant(alpha) * dt * std::abs(std::cos(0.5 * std::numbers::pi * alpha)), 1.0 / alpha);
}

long long poisson(double mean, Rng& rng) {
    if (!(mean > 0.0)) return 0;
    std::poisson_distribution<long long> p(mean);
    return p(rng);
}

}  // namespace

double sample_stable_increment(double alpha, double scale, double dt, Rng& rng) {
    if (!(alpha > 1.0 && alpha < 2.0)) throw DomainError("stable index must lie in (1,2)");
    if (!(scale > 0.0) || !(dt > 0.0)) throw DomainError("stable scale and dt must be positive");
    return stable_sigma(alpha, scale, dt) * cms_unit(alpha, rng);
}

MeasureSampler::MeasureSampler(const LevyMeasure1D& rho, double dt, double eps) : dt_(dt) {
    if (!(dt > 0.0)) throw DomainError("sampler dt must be positive");
    if (!(eps > 0.0 && eps < 1.0)) throw DomainError("truncation eps must lie in (0,1)");
    add(rho, eps);
    gauss_sd_ = std::sqrt(gauss_sd_);  // accumulated as a variance
}

bool MeasureSampler::is_zero() const { return stable_.empty() && atoms_.empty() && tables_.empty() && gauss_sd_ == 0.0; }

void MeasureSampler::add(const LevyMeasure1D& rho, double eps) {
    std::visit(
        [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, LevyMeasure1D::Zero>) {
            } else if constexpr (std::is_same_v<K, LevyMeasure1D::Stable>) {
                stable_.push_back({k.alpha, stable_sigma(k.alpha, k.scale, dt_)});
            } else if constexpr (std::is_same_v<K, LevyMeasure1D::Atoms>) {
                for (const auto& [loc, w] : k.atoms)
                    if (w > 0.0) atoms_.push_back({loc, w * dt_});
            } else if constexpr (std::is_same_v<K, LevyMeasure1D::Sum>) {
                for (const auto& p : *k.parts) add(p, eps);
            } else {
                QuadOptions q;
                q.abs_tol = 0.0;
                q.rel_tol = 1e-10;
                q.max_intervals = 20000;
                gauss_sd_ += dt_ * second_moment_below(rho, eps, q);
                const double lambda = mass_above(rho, eps, q);
                if (!(lambda > 0.0)) return;
                compensation_ += dt_ * first_moment_above(rho, eps, q);
                q.abs_tol = kTailCut * lambda;

                std::vector<double> grid;
                const double hi = k.support_hi;
                const double top = std::isfinite(hi) ? hi : eps * 1e20;
                for (int j = 0;; ++j) {
                    const double g = eps * std::pow(10.0, static_cast<double>(j) / kPerDecade);
                    if (g >= top) break;
                    grid.push_back(g);
                }
                for (double bp : k.breakpoints)
                    if (bp > eps && bp < top) grid.push_back(bp);
                if (std::isfinite(hi)) grid.push_back(hi);
                std::sort(grid.begin(), grid.end());
                grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

                TablePart t;
                t.mean_count = lambda * dt_;
                for (double g : grid) {
                    const double m = t.tail.empty() ? lambda : mass_above(rho, g, q);
                    t.grid.push_back(g);
                    t.tail.push_back(std::max(m, 0.0));
                    if (m < kTailCut * lambda) break;
                }
                // enforce monotone tail against quadrature noise
                for (std::size_t j = 1; j < t.tail.size(); ++j) t.tail[j] = std::min(t.tail[j], t.tail[j - 1]);
                const std::size_t n = t.tail.size();
                t.kappa = 2.0;
                if (n >= 2 && t.tail[n - 1] > 0.0 && t.tail[n - 2] > t.tail[n - 1])
                    t.kappa = std::max(1.01, std::log(t.tail[n - 2] / t.tail[n - 1]) / std::log(t.grid[n - 1] / t.grid[n - 2]));
                for (std::size_t j = 0; j < n; ++j) t.neg_log_tail.push_back(t.tail[j] > 0.0 ? -std::log(t.tail[j]) : HUGE_VAL);
                for (std::size_t j = 0; j + 1 < n; ++j)
                    t.slope.push_back(t.tail[j + 1] > 0.0 && t.tail[j + 1] < t.tail[j]
                                          ? std::log(t.grid[j + 1] / t.grid[j]) / std::log(t.tail[j + 1] / t.tail[j])
                                          : 0.0);
                tables_.push_back(std::move(t));
            }
        },
        rho.kind());
}

double MeasureSampler::table_jump(const TablePart& t, double u) {
    // u in (0, tail[0]]; cell j has tail[j+1] < u <= tail[j]
    const std::size_t n = t.tail.size();
    if (u <= t.tail[n - 1]) return t.grid[n - 1] * std::pow(u / t.tail[n - 1], -1.0 / t.kappa);
    const double nlu = -std::log(u);
    const auto it = std::lower_bound(t.neg_log_tail.begin(), t.neg_log_tail.end(), nlu);
    const std::size_t hi = static_cast<std::size_t>(it - t.neg_log_tail.begin());
    const std::size_t lo = hi == 0 ? 0 : hi - 1;
    if (t.tail[lo + 1] > 0.0) return t.grid[lo] * std::exp(t.slope[lo] * (t.neg_log_tail[lo] - nlu));
    return t.grid[lo] + (t.tail[lo] - u) / t.tail[lo] * (t.grid[lo + 1] - t.grid[lo]);
}

double MeasureSampler::operator()(Rng& rng) const {
    double x = 0.0;
    for (const auto& s : stable_) x += s.sigma * cms_unit(s.alpha, rng);
    for (const auto& a : atoms_) x += a.location * (static_cast<double>(poisson(a.mean_count, rng)) - a.mean_count);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (const auto& t : tables_) {
        const long long count = poisson(t.mean_count, rng);
        for (long long c = 0; c < count; ++c) {
            const double u = (1.0 - uni(rng)) * t.tail[0];  // (0, tail[0]]
            x += table_jump(t, u);
        }
    }
    if (gauss_sd_ > 0.0) {
        std::normal_distribution<double> nd(0.0, gauss_sd_);
        x += nd(rng);
    }
    return x - compensation_;
}

ModelSampler::ModelSampler(const LevyModel& model, double dt, double eps) : dim_(model.dim()) {
    Eigen::SelfAdjointEigenSolver<Mat> es(model.Q());
    const Vec ev = es.eigenvalues().cwiseMax(0.0);
    gauss_factor_ = es.eigenvectors() * (ev * dt).cwiseSqrt().asDiagonal();
    has_gauss_ = ev.maxCoeff() > 0.0;
    for (const auto& ray : model.rays()) {
        directions_.push_back(ray.direction);
        radial_.emplace_back(ray.measure, dt, eps);
    }
}

void ModelSampler::sample(Rng& rng, double* out) const {
    Eigen::Map<Vec> z(out, dim_);
    z.setZero();
    if (has_gauss_) {
        std::normal_distribution<double> nd;
        Vec n(dim_);
        for (int i = 0; i < dim_; ++i) n[i] = nd(rng);
        z += gauss_factor_ * n;
    }
    for (std::size_t j = 0; j < radial_.size(); ++j) z += radial_[j](rng) * directions_[j];
}

Vec ModelSampler::operator()(Rng& rng) const {
    Vec z(dim_);
    sample(rng, z.data());
    return z;
}

double sample_levy_increment(const LevyMeasure1D& rho, double dt, double eps, Rng& rng) {
    return MeasureSampler(rho, dt, eps)(rng);
}

Vec sample_spherical_increment(const SphericalMeasure& sm, double dt, double eps, Rng& rng) {
    if (sm.directions.empty()) throw DomainError("spherical measure needs at least one direction");
    const auto d = static_cast<int>(sm.directions.front().first.size());
    return ModelSampler(LevyModel::spherical(sm, Mat::Zero(d, d)), dt, eps)(rng);
}

}  // namespace affine_levy
