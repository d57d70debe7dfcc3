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

#include "affine_levy/pricing/martingale.hpp"

#include <cmath>
#include <sstream>

#include "affine_levy/core/errors.hpp"
#include "affine_levy/kernels/kernels.hpp"

namespace affine_levy {

MartingaleReport martingale_check(const ShortRatePaths& paths, const AffineSolution& sol, double T,
                                  const std::vector<double>& checkpoints) {
    if (paths.n_paths == 0 || paths.n_records() == 0) throw DomainError("no paths to check");
    if (!(T > 0.0) || T > paths.times.back() * (1.0 + 1e-12)) throw DomainError("maturity must lie within the simulated horizon");
    MartingaleReport rep;
    rep.T = T;
    {
        // through the batch kernel so the t = 0 row reproduces it bit for bit
        const double r0 = paths.value(0, 0), zero = 0.0;
        bond_price(sol, 0.0, T, r0);
        kernels::discounted_price(&r0, &zero, 1, sol.A_at(T), sol.B_at(T), &rep.P0);
    }

    const std::size_t N = paths.n_paths, n_rec = paths.n_records();
    std::vector<double> r(N), integ(N), p(N), sq(N);
    for (double t : checkpoints) {
        std::size_t k = n_rec;
        for (std::size_t j = 0; j < n_rec; ++j)
            if (std::abs(paths.times[j] - t) <= 1e-9 * std::max(1.0, T)) k = j;
        if (k == n_rec) {
            std::ostringstream os;
            os << "checkpoint t = " << t << " is not a recorded time of the paths";
            throw DomainError(os.str());
        }
        for (std::size_t i = 0; i < N; ++i) {
            r[i] = paths.value(i, k);
            integ[i] = paths.integral(i, k);
        }
        const double tau = T - paths.times[k];
        kernels::discounted_price(r.data(), integ.data(), N, sol.A_at(tau), sol.B_at(tau), p.data());
        // centred on P0 so the deterministic t = 0 row is exact
        for (std::size_t i = 0; i < N; ++i) p[i] -= rep.P0;
        const double dev = kernels::pairwise_sum(p.data(), N) / static_cast<double>(N);
        for (std::size_t i = 0; i < N; ++i) sq[i] = (p[i] - dev) * (p[i] - dev);
        const double var = N > 1 ? kernels::pairwise_sum(sq.data(), N) / static_cast<double>(N - 1) : 0.0;
        const double se = std::sqrt(var / static_cast<double>(N));
        rep.times.push_back(paths.times[k]);
        rep.means.push_back(rep.P0 + dev);
        rep.std_errors.push_back(se);
        if (se > 0.0) rep.max_deviation_se = std::max(rep.max_deviation_se, std::abs(dev) / se);
    }
    return rep;
}

}  // namespace affine_levy
