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

#include "affine_levy/generating/power_fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <unsupported/Eigen/NonLinearOptimization>
#include <unsupported/Eigen/NumericalDiff>

namespace affine_levy {

namespace {

constexpr double kMerge = 0.01;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Samples {
    const std::vector<double>& b;
    const std::vector<double>& y;
    int n() const { return static_cast<int>(b.size()); }
};

// Weighted least squares for the weights at fixed exponents.  Rows are
// scaled by 1/y so that the misfit is relative.
bool solve_weights(const Samples& s, const std::vector<double>& alphas, Eigen::VectorXd& eta, double& sse) {
    const int n = s.n(), g = static_cast<int>(alphas.size());
    Eigen::MatrixXd A(n, g);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < g; ++k) A(i, k) = std::pow(s.b[static_cast<std::size_t>(i)], alphas[static_cast<std::size_t>(k)]) / s.y[static_cast<std::size_t>(i)];
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
    eta = A.colPivHouseholderQr().solve(ones);
    if (!eta.allFinite() || (eta.array() <= 0.0).any()) return false;
    sse = (A * eta - ones).squaredNorm();
    return true;
}

double max_relative(const Samples& s, const std::vector<CanonicalTerm>& terms) {
    double worst = 0.0;
    for (int i = 0; i < s.n(); ++i) {
        double f = 0.0;
        for (const auto& t : terms) f += t.eta * std::pow(s.b[static_cast<std::size_t>(i)], t.alpha);
        const double y = s.y[static_cast<std::size_t>(i)];
        worst = std::max(worst, std::abs(f - y) / std::abs(y));
    }
    return worst;
}

// Parameters: alpha_1..alpha_g, log eta_1..log eta_g.
struct LmFunctor {
    using Scalar = double;
    enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
    using InputType = Eigen::VectorXd;
    using ValueType = Eigen::VectorXd;
    using JacobianType = Eigen::MatrixXd;

    const Samples* s;
    int g;

    int inputs() const { return 2 * g; }
    int values() const { return s->n(); }

    int operator()(const Eigen::VectorXd& p, Eigen::VectorXd& f) const {
        for (int i = 0; i < s->n(); ++i) {
            const double b = s->b[static_cast<std::size_t>(i)];
            double v = 0.0;
            for (int k = 0; k < g; ++k) v += std::exp(p[g + k]) * std::pow(b, p[k]);
            f[i] = v / s->y[static_cast<std::size_t>(i)] - 1.0;
        }
        return 0;
    }

    int df(const Eigen::VectorXd& p, Eigen::MatrixXd& J) const {
        for (int i = 0; i < s->n(); ++i) {
            const double b = s->b[static_cast<std::size_t>(i)];
            const double y = s->y[static_cast<std::size_t>(i)];
            for (int k = 0; k < g; ++k) {
                const double term = std::exp(p[g + k]) * std::pow(b, p[k]) / y;
                J(i, k) = term * std::log(b);
                J(i, g + k) = term;
            }
        }
        return 0;
    }
};

// Variable projection: residual as a function of the exponents alone, the
// weights solved linearly at each evaluation.
struct VarProFunctor {
    using Scalar = double;
    enum { InputsAtCompileTime = Eigen::Dynamic, ValuesAtCompileTime = Eigen::Dynamic };
    using InputType = Eigen::VectorXd;
    using ValueType = Eigen::VectorXd;
    using JacobianType = Eigen::MatrixXd;

    const Samples* s;
    int g;

    int inputs() const { return g; }
    int values() const { return s->n(); }

    int operator()(const Eigen::VectorXd& a, Eigen::VectorXd& f) const {
        const int n = s->n();
        Eigen::MatrixXd A(n, g);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < g; ++k) A(i, k) = std::pow(s->b[static_cast<std::size_t>(i)], a[k]) / s->y[static_cast<std::size_t>(i)];
        const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
        const Eigen::VectorXd eta = A.colPivHouseholderQr().solve(ones);
        f = A * eta - ones;
        return 0;
    }
};

struct Candidate {
    std::vector<double> alphas;
    double sse;
};

void enumerate(const std::vector<double>& grid, int g, std::size_t start, std::vector<double>& cur,
               const Samples& s, std::vector<Candidate>& best, std::size_t keep) {
    if (static_cast<int>(cur.size()) == g) {
        Eigen::VectorXd eta;
        double sse;
        if (!solve_weights(s, cur, eta, sse)) return;
        if (best.size() < keep || sse < best.back().sse) {
            best.push_back({cur, sse});
            std::sort(best.begin(), best.end(), [](const Candidate& a, const Candidate& b) { return a.sse < b.sse; });
            if (best.size() > keep) best.pop_back();
        }
        return;
    }
    for (std::size_t i = start; i < grid.size(); ++i) {
        if (!cur.empty() && cur.back() - grid[i] < 2.0 * kMerge) continue;
        cur.push_back(grid[i]);
        enumerate(grid, g, i + 1, cur, s, best, keep);
        cur.pop_back();
    }
}

// Local slope of log y against log b over the first or last three samples.
double end_slope(const Samples& s, bool high) {
    const int n = s.n();
    if (n < 3) return 1.5;
    const int i0 = high ? n - 3 : 0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = i0; i < i0 + 3; ++i) {
        const double lx = std::log(s.b[static_cast<std::size_t>(i)]);
        const double ly = std::log(s.y[static_cast<std::size_t>(i)]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
}

// Polishes one candidate; returns a fit with residual inf when the result
// leaves the admissible set.
PowerFit refine(const Samples& s, const std::vector<double>& start) {
    const int g = static_cast<int>(start.size());
    Eigen::VectorXd a0 = Eigen::Map<const Eigen::VectorXd>(start.data(), g);
    {
        Eigen::NumericalDiff<VarProFunctor, Eigen::Central> vp(VarProFunctor{&s, g});
        Eigen::LevenbergMarquardt<decltype(vp)> lm(vp);
        lm.parameters.ftol = 1e-15;
        lm.parameters.xtol = 1e-15;
        lm.parameters.maxfev = 2000;
        Eigen::VectorXd a = a0;
        lm.minimize(a);
        if (a.allFinite()) a0 = a;
    }
    std::vector<double> a_start(a0.data(), a0.data() + g);
    Eigen::VectorXd eta;
    double sse;
    if (!solve_weights(s, a_start, eta, sse)) {
        a_start = start;
        if (!solve_weights(s, a_start, eta, sse)) return {{}, kInf};
    }
    Eigen::VectorXd p(2 * g);
    for (int k = 0; k < g; ++k) {
        p[k] = a_start[static_cast<std::size_t>(k)];
        p[g + k] = std::log(eta[k]);
    }
    LmFunctor fn{&s, g};
    Eigen::LevenbergMarquardt<LmFunctor> lm(fn);
    lm.parameters.ftol = 1e-15;
    lm.parameters.xtol = 1e-15;
    lm.parameters.maxfev = 4000;
    lm.minimize(p);

    std::vector<double> alphas(static_cast<std::size_t>(g));
    for (int k = 0; k < g; ++k) {
        double a = p[k];
        if (!std::isfinite(a) || a <= 1.0) return {{}, kInf};
        if (a > 2.0) a = 2.0;
        alphas[static_cast<std::size_t>(k)] = a;
    }
    std::sort(alphas.begin(), alphas.end(), std::greater<>());
    for (int k = 1; k < g; ++k)
        if (alphas[static_cast<std::size_t>(k - 1)] - alphas[static_cast<std::size_t>(k)] < kMerge) return {{}, kInf};
    if (!solve_weights(s, alphas, eta, sse)) return {{}, kInf};

    PowerFit out;
    for (int k = 0; k < g; ++k) out.terms.push_back({alphas[static_cast<std::size_t>(k)], eta[k]});
    out.residual = max_relative(s, out.terms);
    return out;
}

}  // namespace

PowerFit fit_power_sum(const std::vector<double>& b, const std::vector<double>& y, int max_terms, double target) {
    if (b.size() != y.size() || b.empty()) return {{}, kInf};
    bool all_zero = true;
    for (double v : y) {
        if (v != 0.0) all_zero = false;
        if (!(v >= 0.0) || !std::isfinite(v)) return {{}, kInf};
    }
    if (all_zero) return {{}, 0.0};
    for (double v : y)
        if (v == 0.0) return {{}, kInf};

    const Samples s{b, y};
    std::vector<double> grid;
    for (int i = 1; i <= 50; ++i) grid.push_back(1.0 + 0.02 * i);
    for (bool high : {true, false}) {
        const double e = end_slope(s, high);
        if (e > 1.0 && e <= 2.0) grid.push_back(e);
    }
    std::sort(grid.begin(), grid.end(), std::greater<>());

    PowerFit best{{}, kInf};
    for (int g = 1; g <= max_terms; ++g) {
        std::vector<Candidate> cands;
        std::vector<double> cur;
        enumerate(grid, g, 0, cur, s, cands, 16);
        // stop once a start fits to rounding
        for (const auto& c : cands) {
            PowerFit f = refine(s, c.alphas);
            if (f.residual < best.residual) best = f;
            if (best.residual < 1e-12) break;
        }
        if (best.residual < target) break;
    }
    return best;
}

}  // namespace affine_levy
