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

#include "affine_levy/core/levy_model.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "affine_levy/core/errors.hpp"

namespace affine_levy {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kTol = 1e-12;

void check_q(const Mat& Q, int dim) {
    if (Q.rows() != dim || Q.cols() != dim) throw DomainError("Q must be a d x d matrix");
    if (!Q.allFinite()) throw DomainError("Q must be finite");
    if ((Q - Q.transpose()).cwiseAbs().maxCoeff() > kTol * std::max(1.0, Q.cwiseAbs().maxCoeff()))
        throw DomainError("Q must be symmetric");
    if (dim > 0) {
        Eigen::SelfAdjointEigenSolver<Mat> es(Q);
        if (es.eigenvalues().minCoeff() < -1e-10) throw DomainError("Q must be nonnegative definite");
    }
}

}  // namespace

void SphericalMeasure::validate(int dim) const {
    if (directions.empty()) throw DomainError("spherical measure needs at least one direction");
    for (const auto& [xi, w] : directions) {
        if (xi.size() != dim) throw DomainError("spherical direction has the wrong dimension");
        if (std::abs(xi.norm() - 1.0) > kTol) throw DomainError("spherical directions must be unit vectors");
        if (!(w > 0.0) || !std::isfinite(w)) throw DomainError("spherical weights must be positive and finite");
    }
    if (support_sup(radial) > 1.0) {
        try {
            first_moment_above(radial, 1.0);
        } catch (const QuadratureError&) {
            throw DomainError("radial measure must satisfy int_1^inf r gamma(dr) < inf");
        }
    }
}

LevyModel::LevyModel(int dim, Mat Q, Noise noise) : dim_(dim), Q_(std::move(Q)), noise_(std::move(noise)) {
    std::visit(overloaded{
                   [&](const Independent& ind) {
                       for (int i = 0; i < dim_; ++i) {
                           const auto& c = ind.coords[static_cast<std::size_t>(i)];
                           if (c.measure.is_zero()) continue;
                           rays_.push_back({Vec::Unit(dim_, i), c.measure});
                       }
                   },
                   [&](const Spherical& sp) {
                       for (const auto& [xi, w] : sp.sm.directions) {
                           auto m = weighted(sp.sm.radial, w);
                           if (!m.is_zero()) rays_.push_back({xi, std::move(m)});
                       }
                   },
                   [&](const Custom& cu) {
                       for (const auto& r : cu.rays)
                           if (!r.measure.is_zero()) rays_.push_back(r);
                   },
               },
               noise_);
    validate();
}

void LevyModel::validate() const {
    if (dim_ < 1) throw DomainError("model dimension must be positive");
    check_q(Q_, dim_);
    std::visit(overloaded{
                   [&](const Independent& ind) {
                       if (static_cast<int>(ind.coords.size()) != dim_)
                           throw DomainError("independent model needs one coordinate per dimension");
                   },
                   [&](const Spherical& sp) { sp.sm.validate(dim_); },
                   [&](const Custom& cu) {
                       for (const auto& r : cu.rays) {
                           if (r.direction.size() != dim_) throw DomainError("ray direction has the wrong dimension");
                           if (!(r.direction.norm() > 0.0)) throw DomainError("ray direction must be nonzero");
                       }
                   },
               },
               noise_);
}

LevyModel LevyModel::independent(std::vector<IndependentCoord> coords) {
    const int d = static_cast<int>(coords.size());
    Mat Q = Mat::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        const double q = coords[static_cast<std::size_t>(i)].q;
        if (!(q >= 0.0) || !std::isfinite(q)) throw DomainError("q_ii must be finite and nonnegative");
        Q(i, i) = q;
    }
    return LevyModel(d, std::move(Q), Independent{std::move(coords)});
}

LevyModel LevyModel::spherical(SphericalMeasure sm, const Mat& Q) {
    const int d = sm.directions.empty() ? static_cast<int>(Q.rows()) : static_cast<int>(sm.directions.front().first.size());
    return LevyModel(d, Q, Spherical{std::move(sm)});
}

LevyModel LevyModel::custom(int dim, std::vector<Ray> rays, const Mat& Q) {
    return LevyModel(dim, Q, Custom{std::move(rays)});
}

const char* LevyModel::kind_name() const {
    return std::visit(overloaded{
                          [](const Independent&) { return "independent"; },
                          [](const Spherical&) { return "spherical"; },
                          [](const Custom&) { return "custom"; },
                      },
                      noise_);
}

GFunction GFunction::power_sum(int dim, std::vector<PowerTerm> terms) {
    for (const auto& t : terms) {
        if (t.axis < 0 || t.axis >= dim) throw DomainError("power_sum term axis out of range");
        if (!(t.alpha > 1.0 && t.alpha <= 2.0)) throw DomainError("power_sum exponents need alpha in (1,2]");
    }
    return GFunction(dim, PowerSum{std::move(terms)});
}

GFunction GFunction::affine_power(std::vector<AffinePowerCoord> coords) {
    for (const auto& c : coords)
        if (!(c.alpha > 0.0)) throw DomainError("affine_power needs alpha > 0");
    const int d = static_cast<int>(coords.size());
    return GFunction(d, AffinePower{std::move(coords)});
}

GFunction GFunction::stable_cone(Vec direction, double coef, double alpha) {
    if (!(alpha > 0.0)) throw DomainError("stable_cone needs alpha > 0");
    const int d = static_cast<int>(direction.size());
    return GFunction(d, StableCone{std::move(direction), coef, alpha});
}

GFunction GFunction::tabulated(std::vector<double> x, std::vector<Vec> values) {
    if (x.size() < 2 || x.size() != values.size()) throw DomainError("tabulated G needs matching grids of size >= 2");
    for (std::size_t i = 1; i < x.size(); ++i)
        if (!(x[i] > x[i - 1])) throw DomainError("tabulated G grid must be increasing");
    if (x.front() > 0.0) throw DomainError("tabulated G grid must start at 0");
    const int d = static_cast<int>(values.front().size());
    for (const auto& v : values)
        if (v.size() != d || !v.allFinite()) throw DomainError("tabulated G values must be finite and of equal size");
    return GFunction(d, Tabulated{std::move(x), std::move(values)});
}

GFunction GFunction::callable(int dim, std::function<Vec(double)> fn, std::string label) {
    if (!fn) throw DomainError("callable G needs a function");
    return GFunction(dim, Callable{std::move(fn), std::move(label)});
}

const char* GFunction::kind_name() const {
    return std::visit(overloaded{
                          [](const PowerSum&) { return "power_sum"; },
                          [](const AffinePower&) { return "affine_power"; },
                          [](const StableCone&) { return "stable_cone"; },
                          [](const Tabulated&) { return "tabulated"; },
                          [](const Callable&) { return "callable"; },
                      },
                      kind_);
}

Vec GFunction::operator()(double x) const {
    if (!(x >= 0.0)) throw DomainError("G is defined on [0,inf)");
    return std::visit(overloaded{
                          [&](const PowerSum& p) {
                              Vec g = Vec::Zero(dim_);
                              for (const auto& t : p.terms) g[t.axis] += t.coef * std::pow(x, 1.0 / t.alpha);
                              return g;
                          },
                          [&](const AffinePower& a) {
                              Vec g(dim_);
                              for (int i = 0; i < dim_; ++i) {
                                  const auto& c = a.coords[static_cast<std::size_t>(i)];
                                  g[i] = c.c0 + c.c1 * std::pow(x, 1.0 / c.alpha);
                              }
                              return g;
                          },
                          [&](const StableCone& s) { return Vec(s.coef * std::pow(x, 1.0 / s.alpha) * s.direction); },
                          [&](const Tabulated& t) {
                              if (x >= t.x.back()) return t.values.back();
                              auto it = std::upper_bound(t.x.begin(), t.x.end(), x);
                              const std::size_t j = static_cast<std::size_t>(it - t.x.begin());
                              const double w = (x - t.x[j - 1]) / (t.x[j] - t.x[j - 1]);
                              return Vec((1.0 - w) * t.values[j - 1] + w * t.values[j]);
                          },
                          [&](const Callable& c) {
                              Vec g = c.fn(x);
                              if (g.size() != dim_) throw DomainError("callable G returned the wrong dimension");
                              return g;
                          },
                      },
                      kind_);
}

std::optional<GFunction::PowerForm> GFunction::power_form() const {
    std::map<double, Vec> acc;
    auto add = [&](double p, const Vec& u) {
        auto it = acc.find(p);
        if (it == acc.end()) acc.emplace(p, u);
        else it->second += u;
    };
    const bool ok = std::visit(overloaded{
                                   [&](const PowerSum& p) {
                                       for (const auto& t : p.terms)
                                           add(1.0 / t.alpha, t.coef * Vec::Unit(dim_, t.axis));
                                       return true;
                                   },
                                   [&](const AffinePower& a) {
                                       for (int i = 0; i < dim_; ++i) {
                                           const auto& c = a.coords[static_cast<std::size_t>(i)];
                                           add(0.0, c.c0 * Vec::Unit(dim_, i));
                                           add(1.0 / c.alpha, c.c1 * Vec::Unit(dim_, i));
                                       }
                                       return true;
                                   },
                                   [&](const StableCone& s) {
                                       add(1.0 / s.alpha, s.coef * s.direction);
                                       return true;
                                   },
                                   [](const Tabulated&) { return false; },
                                   [](const Callable&) { return false; },
                               },
                               kind_);
    if (!ok) return std::nullopt;
    PowerForm out;
    for (auto& [p, u] : acc)
        if (u.cwiseAbs().maxCoeff() > 0.0) out.emplace_back(p, u);
    return out;
}

Vec limit_direction(const GFunction& g) {
    for (double x : {0.0, 1e-12, 1e-8}) {
        Vec v = g(x);
        const double n = v.norm();
        if (n > 0.0) return v / n;
    }
    return Vec::Zero(g.dim());
}

}  // namespace affine_levy
