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
#include <string>
#include <vector>

#include "affine_levy/generating/pair.hpp"

namespace affine_levy {

using ScalarFn = std::function<double(double)>;

// B on a grid over [0, v_max] (geometric near 0, then steps of h) with its derivative from the ODE
// right side at each node.
struct BGrid {
    std::vector<double> v;
    std::vector<double> B;
    std::vector<double> dB;
    double a = 0.0, c = 0.0;
    ScalarFn J_mu;
};

// B' = a B - c B^2 / 2 - J_mu(B) + 1, B(0) = 0, by Dormand-Prince 5(4) with
// dense output.  Throws StepUnderflow when the integrator stalls or B blows up.
BGrid solve_B(double a, double c, const ScalarFn& J_mu, double v_max = 30.0, double tol = 1e-10, double h = 0.0025);

// P(t,T) = exp(-A(T-t) - B(T-t) R(t)) on the B grid; cubic Hermite between nodes.
class AffineSolution {
public:
    std::vector<double> v, B, dB, A, dA;
    double a = 0.0, b = 0.0, c = 0.0;  // c as it enters the B equation
    ScalarFn J_mu, J_nu0;
    bool B_nonneg = true;

    double v_max() const { return v.empty() ? 0.0 : v.back(); }
    double B_at(double s) const;
    double A_at(double s) const;
    double dB_at(double s) const;  // four-node Lagrange through the stored derivatives
    double dA_at(double s) const;
    double dB_hermite(double s) const;  // derivative of the Hermite interpolant of B

    double B_rhs(double Bv) const { return a * Bv - 0.5 * c * Bv * Bv - J_mu(Bv) + 1.0; }
    double A_rhs(double Bv) const { return b * Bv - J_nu0(Bv); }

    // max |dB_hermite - B_rhs(B_at)| over the cell midpoints
    double midpoint_residual() const;

    void write_csv(const std::string& file) const;  // v,B,A

private:
    std::size_t cell(double s) const;
};

// A(v) = int_0^v (b B - J_nu0(B)) by composite Simpson on the B grid.
AffineSolution solve_A(double b, const ScalarFn& J_nu0, const BGrid& B);

// Solution for a projection triplet; the triplet's c multiplies b^2 x in J,
// so the B equation sees 2c.
AffineSolution affine_solution(const ProjectionTriplet& triplet, const DriftSpec& drift, double v_max = 30.0,
                               double tol = 1e-10);
AffineSolution affine_solution(const GeneratingPair& pair, double v_max = 30.0, double tol = 1e-10);

// Throws OutOfGridError when T - t exceeds the grid.
double bond_price(const AffineSolution& sol, double t, double T, double R_t);

// max |J_Z(B(v) G(x)) + A'(v) + (B'(v) - 1) x - B(v) F(x)| over the grids,
// A' and B' taken from the stored derivatives.
double hjm_residual(const GeneratingPair& pair, const AffineSolution& sol, const std::vector<double>& v_grid,
                    const std::vector<double>& x_grid);

// B and B' scaled by factor.
AffineSolution perturbed_B(const AffineSolution& sol, double factor);
// A + slope v, A' + slope.
AffineSolution biased_A(const AffineSolution& sol, double slope);

}  // namespace affine_levy
