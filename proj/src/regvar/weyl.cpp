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

#include "affine_levy/regvar/weyl.hpp"

#include <cmath>
#include <sstream>

#include "affine_levy/core/errors.hpp"
#include "affine_levy/regvar/regvar.hpp"

namespace affine_levy {

namespace {

double miss(double p, double q, double x, long long m, long long n) {
    const long double g = static_cast<long double>(m) * p + static_cast<long double>(n) * q;
    return static_cast<double>(std::abs(static_cast<long double>(x) - g));
}

}  // namespace

WeylResult weyl_approximate(double p, double q, double x, double delta) {
    if (!(p > 0.0 && q > 0.0)) throw DomainError("weyl_approximate needs p, q > 0");
    if (!(delta > 0.0)) throw DomainError("weyl_approximate needs delta > 0");
    const auto rm = rational_match(p / q, 999);
    if (rm.matched) {
        std::ostringstream os;
        os << "p/q = " << rm.numerator << "/" << rm.denominator << " is rational; the lattice mZ + nqZ is not dense";
        throw IrrationalitySuspect(os.str(), rm.numerator, rm.denominator);
    }

    // Nearest multiple of p first.
    const double t = x / p;
    const long long m0 = std::llround(t);
    if (miss(p, q, x, m0, 0) <= delta) return {m0, 0, miss(p, q, x, m0, 0)};

    // Greedy descent over the convergents h/k of theta = q/p: each step
    // trades j copies of (k, -h), which moves the remainder by j (k theta - h).
    const long double theta = static_cast<long double>(q) / static_cast<long double>(p);
    long long m = m0, n = 0;
    long double xcf = theta;
    long long h0 = 1, h1 = 0, k0 = 0, k1 = 1;
    for (int it = 0; it < 60; ++it) {
        const long double a = std::floor(xcf);
        const long long ai = static_cast<long long>(a);
        const long long h = ai * h0 + h1;
        const long long k = ai * k0 + k1;
        if (k > 4000000000LL) break;
        const long double e = static_cast<long double>(k) * theta - static_cast<long double>(h);
        if (e != 0.0L) {
            const long double r = (static_cast<long double>(x) - (static_cast<long double>(m) * p + static_cast<long double>(n) * q)) / p;
            const long long j = std::llround(static_cast<double>(r / e));
            m -= j * h;
            n += j * k;
            const double err = miss(p, q, x, m, n);
            if (err <= delta) return {m, n, err};
        }
        h1 = h0;
        h0 = h;
        k1 = k0;
        k0 = k;
        const long double frac = xcf - a;
        if (frac == 0.0L) break;
        xcf = 1.0L / frac;
    }

    // Exhaustive search with a doubling bound on |n|.
    for (long long M = 16; M <= (1LL << 26); M *= 2) {
        for (long long n = -M; n <= M; ++n) {
            const long long m = std::llround(static_cast<double>((x - static_cast<long double>(n) * q) / p));
            const double err = miss(p, q, x, m, n);
            if (err <= delta) return {m, n, err};
        }
    }
    throw NoConvergenceError("no lattice point within delta found");
}

}  // namespace affine_levy
