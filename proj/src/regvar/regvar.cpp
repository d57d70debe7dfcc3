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

#include "affine_levy/regvar/regvar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "affine_levy/core/errors.hpp"
#include "affine_levy/core/laplace.hpp"

namespace affine_levy {

namespace {

constexpr int kDepth = 4;
constexpr double kJump = 0.05;

// Richardson table over a geometric sequence with ratio 10, assuming
// integer-order corrections; falls back to the last raw value when the
// extrapolation is less settled than the raw sequence.
IndexEstimate extrapolate(std::vector<double> raw) {
    IndexEstimate out;
    out.raw = raw;
    const std::size_t n = raw.size();
    const double raw_step = std::abs(raw[n - 1] - raw[n - 2]);
    if (raw_step > kJump) {
        std::ostringstream os;
        os << "successive estimates differ by " << raw_step << " (> " << kJump << ")";
        throw NoConvergenceError(os.str());
    }
    std::vector<std::vector<double>> T(n, std::vector<double>(kDepth + 1, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        T[k][0] = raw[k];
        for (int j = 1; j <= kDepth && static_cast<std::size_t>(j) <= k; ++j) {
            const double f = std::pow(10.0, j);
            T[k][static_cast<std::size_t>(j)] = (f * T[k][static_cast<std::size_t>(j - 1)] - T[k - 1][static_cast<std::size_t>(j - 1)]) / (f - 1.0);
        }
    }
    const double best = T[n - 1][kDepth];
    const double step = std::abs(T[n - 1][kDepth] - T[n - 2][kDepth]);
    if (std::isfinite(best) && step <= raw_step) {
        out.alpha = best;
        out.diagnostic = step;
    } else {
        out.alpha = raw[n - 1];
        out.diagnostic = raw_step;
    }
    return out;
}

// Mean over b in {2,4,8} of log(f(b y)/f(y))/log b at the largest probe
// where f is positive and finite at y and 8y.
IndexEstimate tail_slope(const RealFn& f, const std::vector<double>& y_grid) {
    IndexEstimate out;
    double last = std::numeric_limits<double>::quiet_NaN();
    double spread = 0.0;
    for (double y : y_grid) {
        const double fy = f(y);
        if (!(fy > 0.0) || !std::isfinite(fy)) continue;
        double sum = 0.0, lo = 1e300, hi = -1e300;
        bool ok = true;
        for (double b : {2.0, 4.0, 8.0}) {
            const double fb = f(b * y);
            if (!(fb > 0.0) || !std::isfinite(fb)) {
                ok = false;
                break;
            }
            const double s = std::log(fb / fy) / std::log(b);
            sum += s;
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        if (!ok) continue;
        last = sum / 3.0;
        spread = hi - lo;
        out.raw.push_back(last);
    }
    if (out.raw.empty()) throw NoConvergenceError("no probe point where the function is positive and finite");
    out.alpha = last;
    const std::size_t n = out.raw.size();
    out.diagnostic = std::max(spread, n > 1 ? std::abs(out.raw[n - 1] - out.raw[n - 2]) : 0.0);
    if (n > 1 && std::abs(out.raw[n - 1] - out.raw[n - 2]) > kJump) {
        std::ostringstream os;
        os << "tail log-slopes still moving by " << std::abs(out.raw[n - 1] - out.raw[n - 2]) << " at the largest probes";
        throw NoConvergenceError(os.str());
    }
    return out;
}

double log_integral(const RealFn& h, double lo, double hi) {
    QuadOptions q;
    q.abs_tol = 0.0;
    q.rel_tol = 1e-10;
    return integrate_interval([&](double u) {
               const double v = std::exp(u);
               return v * h(v);
           },
                              std::log(lo), std::log(hi), q)
        .value;
}

}  // namespace

std::vector<double> default_probe_grid() {
    std::vector<double> y;
    for (int k = 2; k <= 8; ++k) y.push_back(std::pow(10.0, k));
    return y;
}

IndexEstimate rv_index_from_laplace(const RealFn& J, double b_probe) {
    if (!(b_probe > 0.0) || b_probe == 1.0) throw DomainError("b_probe must be positive and != 1");
    std::vector<double> raw;
    for (int k = 1; k <= 8; ++k) {
        const double x = std::pow(10.0, -k);
        const double jx = J(x), jbx = J(b_probe * x);
        if (!(jx > 0.0) || !(jbx > 0.0)) throw DomainError("J must be positive on (0, inf)");
        raw.push_back(std::log(jbx / jx) / std::log(b_probe));
    }
    return extrapolate(std::move(raw));
}

IndexEstimate rv_index_from_density(const RealFn& g, const std::vector<double>& y_grid) {
    const double i4 = log_integral([&](double v) { return v * v * g(v); }, 1.0, 1e4);
    const double i8 = i4 + log_integral([&](double v) { return v * v * g(v); }, 1e4, 1e8);
    if (!(i8 > (1.0 + 1e-3) * i4))
        throw DivergenceError("int v^2 g(v) dv appears finite; the density route to the index does not apply");
    IndexEstimate e = tail_slope(g, y_grid);
    e.alpha = -1.0 - e.alpha;
    for (auto& r : e.raw) r = -1.0 - r;
    return e;
}

IndexEstimate rv_index_from_tail(const RealFn& F_tilde, const std::vector<double>& y_grid) {
    IndexEstimate e = tail_slope(F_tilde, y_grid);
    e.alpha = 2.0 - e.alpha;
    for (auto& r : e.raw) r = 2.0 - r;
    return e;
}

RealFn laplace_function(const LevyMeasure1D& rho) {
    return [rho](double b) {
        QuadOptions q;
        q.abs_tol = 0.0;
        q.rel_tol = 1e-11;
        q.max_intervals = 20000;
        return laplace_exponent_1d(rho, b, q);
    };
}

RealFn tail_function(const LevyMeasure1D& rho) {
    return [rho](double v) {
        QuadOptions q;
        q.abs_tol = 0.0;
        q.rel_tol = 1e-11;
        q.max_intervals = 20000;
        return second_moment_below(rho, v, q);
    };
}

ScalingRelationEvidence measure_scaling(const RealFn& J, double beta, double gamma) {
    ScalingRelationEvidence ev;
    ev.beta = beta;
    ev.gamma = gamma;
    const double j1 = J(1.0);
    ev.eta = J(beta) / j1;
    ev.theta = J(gamma) / j1;
    for (int i = 0; i < 50; ++i) {
        const double b = std::pow(10.0, -3.0 + 6.0 * i / 49.0);
        const double jb = J(b);
        ev.residual = std::max({ev.residual, std::abs(J(beta * b) - ev.eta * jb) / jb,
                                std::abs(J(gamma * b) - ev.theta * jb) / jb});
    }
    return ev;
}

RationalMatch rational_match(double r, long long max_den) {
    RationalMatch out;
    if (!std::isfinite(r)) return out;
    long double x = r;
    long long h0 = 1, h1 = 0, k0 = 0, k1 = 1;  // h_{-1}, h_{-2}, k_{-1}, k_{-2}
    for (int it = 0; it < 64; ++it) {
        const long double a = std::floor(x);
        if (std::abs(a) > 9e15) break;
        const long long ai = static_cast<long long>(a);
        const long long h = ai * h0 + h1;
        const long long k = ai * k0 + k1;
        if (k > max_den) break;
        if (std::abs(r - static_cast<double>(h) / static_cast<double>(k)) <= 4e-16 * std::max(1.0, std::abs(r))) {
            out.matched = true;
            out.numerator = h;
            out.denominator = k;
            return out;
        }
        h1 = h0;
        h0 = h;
        k1 = k0;
        k0 = k;
        const long double frac = x - a;
        if (frac == 0.0L) break;
        x = 1.0L / frac;
    }
    return out;
}

PowerLaw power_law_detect(const RealFn& J, const ScalingRelationEvidence& ev) {
    if (!(ev.beta > 1.0 && ev.gamma > 1.0 && ev.eta > 1.0 && ev.theta > 1.0))
        throw HypothesisViolation("scaling relations need beta, gamma, eta, theta > 1");
    const auto rm = rational_match(std::log(ev.beta) / std::log(ev.gamma), 1000);
    if (rm.matched) throw HypothesisViolation("ln(beta)/ln(gamma) looks rational; the scaling relations do not pin the power");

    double worst = 0.0;
    std::vector<double> grid;
    for (int i = 0; i < 50; ++i) grid.push_back(std::pow(10.0, -3.0 + 6.0 * i / 49.0));
    for (double b : grid) {
        const double jb = J(b);
        worst = std::max({worst, std::abs(J(ev.beta * b) - ev.eta * jb) / jb, std::abs(J(ev.gamma * b) - ev.theta * jb) / jb});
    }
    if (!(worst <= 1e-8)) {
        std::ostringstream os;
        os << "scaling relations J(beta b) = eta J(b), J(gamma b) = theta J(b) fail on the grid (worst " << worst << ")";
        throw HypothesisViolation(os.str());
    }
    const double a1 = std::log(ev.eta) / std::log(ev.beta);
    const double a2 = std::log(ev.theta) / std::log(ev.gamma);
    if (std::abs(a1 - a2) > 1e-6) {
        std::ostringstream os;
        os << "log-ratios disagree: ln eta/ln beta = " << a1 << ", ln theta/ln gamma = " << a2;
        throw InconsistencyError(os.str());
    }
    const PowerLaw out{J(1.0), a1};
    for (double b : grid) {
        const double model = out.C * std::pow(b, out.alpha);
        if (std::abs(J(b) - model) > 1e-6 * model) throw InconsistencyError("J is not C b^alpha on the grid");
    }
    if (!(out.alpha > 1.0 && out.alpha < 2.0)) {
        std::ostringstream os;
        os << "detected exponent " << out.alpha << " lies outside (1,2)";
        throw HypothesisViolation(os.str());
    }
    return out;
}

}  // namespace affine_levy
