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

#include "affine_levy/pricing/affine_solution.hpp"

#include <algorithm>
#include <array>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <fstream>
#include <sstream>

#include "affine_levy/core/errors.hpp"
#include "affine_levy/core/laplace.hpp"
#include "affine_levy/generating/decompose.hpp"

namespace affine_levy {

namespace odeint = boost::numeric::odeint;

namespace {

constexpr double kGrading = 0.004;
// The midpoint residual differences neighbouring nodes, so node values need
// to sit well below the requested tolerance.
constexpr double kInnerTol = 1e-3;

}  // namespace

BGrid solve_B(double a, double c, const ScalarFn& J_mu, double v_max, double tol, double h) {
    if (!(v_max > 0.0)) throw DomainError("v_max must be positive");
    if (!(tol > 0.0) || !(h > 0.0)) throw DomainError("tolerance and grid step must be positive");
    if (!(c >= 0.0)) throw DomainError("diffusion coefficient c must be nonnegative");
    BGrid out;
    out.a = a;
    out.c = c;
    out.J_mu = J_mu;
    // Geometric cells near 0, where B - v behaves like v^{1+alpha}, then
    // uniform cells of size h.
    out.v.push_back(0.0);
    for (double x = std::min(1e-9, h);;) {
        if (x >= v_max * (1.0 - 1e-12)) break;
        out.v.push_back(x);
        x = std::min(x * (1.0 + kGrading), x + h);
    }
    out.v.push_back(v_max);

    auto rhs = [&](double B) { return a * B - 0.5 * c * B * B - J_mu(B) + 1.0; };
    using State = std::array<double, 1>;
    auto system = [&](const State& x, State& dxdt, double) {
        if (!std::isfinite(x[0])) throw StepUnderflow("B left the finite range; the Riccati equation blows up");
        dxdt[0] = rhs(x[0]);
    };
    State x{0.0};
    try {
        const double itol = tol * kInnerTol;
        auto stepper = odeint::make_controlled(itol, itol, odeint::runge_kutta_dopri5<State>());
        out.B.push_back(0.0);
        double step = out.v[1];
        for (std::size_t k = 0; k + 1 < out.v.size(); ++k) {
            step = std::min(step, out.v[k + 1] - out.v[k]);
            odeint::integrate_adaptive(stepper, system, x, out.v[k], out.v[k + 1], step);
            out.B.push_back(x[0]);
        }
    } catch (const StepUnderflow&) {
        throw;
    } catch (const std::exception& e) {
        throw StepUnderflow(std::string("B integration failed: ") + e.what());
    }
    if (out.B.size() != out.v.size()) throw StepUnderflow("B integration stopped early");
    out.B[0] = 0.0;
    out.dB.reserve(out.B.size());
    for (double B : out.B) {
        if (!std::isfinite(B)) throw StepUnderflow("B is not finite on the grid");
        out.dB.push_back(rhs(B));
    }
    return out;
}

std::size_t AffineSolution::cell(double s) const {
    const auto it = std::upper_bound(v.begin(), v.end(), s);
    if (it == v.begin()) return 0;
    return std::min(static_cast<std::size_t>(it - v.begin()) - 1, v.size() - 2);
}

namespace {

double hermite(double y0, double y1, double d0, double d1, double h, double t) {
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * h * d0 + (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * h * d1;
}

double hermite_slope(double y0, double y1, double d0, double d1, double h, double t) {
    const double t2 = t * t;
    return ((6 * t2 - 6 * t) * y0 + (-6 * t2 + 6 * t) * y1) / h + (3 * t2 - 4 * t + 1) * d0 + (3 * t2 - 2 * t) * d1;
}

double lagrange4(const std::vector<double>& x, const std::vector<double>& y, std::size_t i, double s) {
    const std::size_t n = x.size();
    std::size_t lo = i == 0 ? 0 : i - 1;
    if (lo + 4 > n) lo = n >= 4 ? n - 4 : 0;
    const std::size_t hi = std::min(lo + 4, n);
    double sum = 0.0;
    for (std::size_t j = lo; j < hi; ++j) {
        double w = 1.0;
        for (std::size_t k = lo; k < hi; ++k)
            if (k != j) w *= (s - x[k]) / (x[j] - x[k]);
        sum += w * y[j];
    }
    return sum;
}

}  // namespace

double AffineSolution::B_at(double s) const {
    const std::size_t i = cell(s);
    const double h = v[i + 1] - v[i];
    return hermite(B[i], B[i + 1], dB[i], dB[i + 1], h, (s - v[i]) / h);
}

double AffineSolution::A_at(double s) const {
    const std::size_t i = cell(s);
    const double h = v[i + 1] - v[i];
    return hermite(A[i], A[i + 1], dA[i], dA[i + 1], h, (s - v[i]) / h);
}

double AffineSolution::dB_hermite(double s) const {
    const std::size_t i = cell(s);
    const double h = v[i + 1] - v[i];
    return hermite_slope(B[i], B[i + 1], dB[i], dB[i + 1], h, (s - v[i]) / h);
}

double AffineSolution::dB_at(double s) const { return lagrange4(v, dB, cell(s), s); }
double AffineSolution::dA_at(double s) const { return lagrange4(v, dA, cell(s), s); }

double AffineSolution::midpoint_residual() const {
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const double m = 0.5 * (v[i] + v[i + 1]);
        worst = std::max(worst, std::abs(dB_hermite(m) - B_rhs(B_at(m))));
    }
    return worst;
}

void AffineSolution::write_csv(const std::string& file) const {
    std::ofstream os(file, std::ios::binary);
    if (!os) throw Error("cannot open " + file + " for writing");
    os.precision(17);
    os << "v,B,A\n";
    for (std::size_t i = 0; i < v.size(); ++i) os << v[i] << ',' << B[i] << ',' << A[i] << '\n';
}

AffineSolution solve_A(double b, const ScalarFn& J_nu0, const BGrid& grid) {
    AffineSolution s;
    s.v = grid.v;
    s.B = grid.B;
    s.dB = grid.dB;
    s.a = grid.a;
    s.b = b;
    s.c = grid.c;
    s.J_mu = grid.J_mu;
    s.J_nu0 = J_nu0;
    const std::size_t n = s.v.size();
    s.A.assign(n, 0.0);
    s.dA.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        s.dA[i] = s.A_rhs(s.B[i]);
        if (s.B[i] < 0.0) s.B_nonneg = false;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double h = s.v[i + 1] - s.v[i];
        const double Bm = hermite(s.B[i], s.B[i + 1], s.dB[i], s.dB[i + 1], h, 0.5);
        s.A[i + 1] = s.A[i] + h / 6.0 * (s.dA[i] + 4.0 * s.A_rhs(Bm) + s.dA[i + 1]);
    }
    return s;
}

AffineSolution affine_solution(const ProjectionTriplet& triplet, const DriftSpec& drift, double v_max, double tol) {
    ScalarFn J_mu = [mu = triplet.mu](double x) { return laplace_exponent_1d(mu, x); };
    ScalarFn J_nu0 = [nu0 = triplet.nu0](double x) { return laplace_exponent_1d(nu0, x); };
    const double c = 2.0 * triplet.c;
    const BGrid grid = solve_B(drift.a, c, J_mu, v_max, tol);
    return solve_A(drift.b, J_nu0, grid);
}

AffineSolution affine_solution(const GeneratingPair& pair, double v_max, double tol) {
    return affine_solution(projection_triplet(pair), pair.drift, v_max, tol);
}

double bond_price(const AffineSolution& sol, double t, double T, double R_t) {
    if (!(T >= t)) throw DomainError("bond maturity precedes the valuation time");
    if (T == t) return 1.0;
    const double tau = T - t;
    if (tau > sol.v_max() * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "time to maturity " << tau << " exceeds the solution grid (v_max = " << sol.v_max() << ")";
        throw OutOfGridError(os.str());
    }
    return std::exp(-sol.A_at(tau) - sol.B_at(tau) * R_t);
}

double hjm_residual(const GeneratingPair& pair, const AffineSolution& sol, const std::vector<double>& v_grid,
                    const std::vector<double>& x_grid) {
    double worst = 0.0;
    for (double s : v_grid) {
        if (s > sol.v_max() * (1.0 + 1e-12)) throw OutOfGridError("HJM grid extends past the solution grid");
        const double Bv = sol.B_at(s), dB = sol.dB_at(s), dA = sol.dA_at(s);
        for (double x : x_grid) {
            const Vec lam = Bv * pair.gfun(x);
            const double J = laplace_exponent_multi(pair.model, lam);
            const double r = J + dA + (dB - 1.0) * x - Bv * pair.drift(x);
            if (!std::isfinite(r)) throw DivergenceError("HJM residual is not finite");
            worst = std::max(worst, std::abs(r));
        }
    }
    return worst;
}

AffineSolution perturbed_B(const AffineSolution& sol, double factor) {
    AffineSolution s = sol;
    for (auto& x : s.B) x *= factor;
    for (auto& x : s.dB) x *= factor;
    return s;
}

AffineSolution biased_A(const AffineSolution& sol, double slope) {
    AffineSolution s = sol;
    for (std::size_t i = 0; i < s.v.size(); ++i) {
        s.A[i] += slope * s.v[i];
        s.dA[i] += slope;
    }
    return s;
}

}  // namespace affine_levy
