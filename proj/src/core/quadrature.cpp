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

#include "affine_levy/core/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "affine_levy/core/errors.hpp"

namespace affine_levy {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
using Gauss7 = boost::math::quadrature::gauss<double, 7>;
using Gauss8 = boost::math::quadrature::gauss<double, 8>;

struct Segment {
    double a, b, value, error;
    int piece;
    bool operator<(const Segment& o) const { return error < o.error; }
};

// Pieces are integrated in a transformed variable t over [a, b].
struct Piece {
    Integrand g;
    double a, b;
};

Segment gk15(const Piece& p, int idx, double a, double b) {
    const auto& xk = Kronrod::abscissa();
    const auto& wk = Kronrod::weights();
    const auto& wg = Gauss7::weights();
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double f0 = p.g(c);
    double kron = wk[0] * f0;
    double gauss = wg[0] * f0;
    for (std::size_t i = 1; i < xk.size(); ++i) {
        const double fs = p.g(c - h * xk[i]) + p.g(c + h * xk[i]);
        kron += wk[i] * fs;
        if (i % 2 == 0) gauss += wg[i / 2] * fs;
    }
    kron *= h;
    gauss *= h;
    double err = std::abs(kron - gauss);
    if (!std::isfinite(kron)) err = std::numeric_limits<double>::infinity();
    return {a, b, kron, err, idx};
}

QuadResult drive(const std::vector<Piece>& pieces, const QuadOptions& opts) {
    std::priority_queue<Segment> heap;
    double total = 0.0, total_err = 0.0, settled = 0.0, settled_err = 0.0;
    int count = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& p = pieces[i];
        if (!(p.b > p.a)) continue;
        Segment s = gk15(p, static_cast<int>(i), p.a, p.b);
        total += s.value;
        total_err += s.error;
        heap.push(s);
        ++count;
    }
    auto target = [&] { return std::max(opts.abs_tol, opts.rel_tol * std::abs(total)); };
    while (!heap.empty() && total_err > target()) {
        if (count >= opts.max_intervals || !std::isfinite(total_err)) {
            std::ostringstream msg;
            msg << "adaptive quadrature did not converge: estimate " << total << ", error "
                << total_err << " after " << count << " intervals";
            throw QuadratureError(msg.str());
        }
        Segment s = heap.top();
        heap.pop();
        const double mid = 0.5 * (s.a + s.b);
        if (!(mid > s.a && mid < s.b) || (s.b - s.a) < 1e-14 * std::max(1.0, std::abs(mid))) {
            // cannot split further; accept the segment as is
            settled += s.value;
            settled_err += s.error;
            total_err -= s.error;
            continue;
        }
        const Piece& p = pieces[static_cast<std::size_t>(s.piece)];
        Segment l = gk15(p, s.piece, s.a, mid);
        Segment r = gk15(p, s.piece, mid, s.b);
        total += l.value + r.value - s.value;
        total_err += l.error + r.error - s.error;
        heap.push(l);
        heap.push(r);
        ++count;
    }
    // Recompute the sums from scratch to avoid drift from the running updates.
    double value = settled, err = settled_err;
    while (!heap.empty()) {
        value += heap.top().value;
        err += heap.top().error;
        heap.pop();
    }
    if (!std::isfinite(value)) throw QuadratureError("adaptive quadrature produced a non-finite value");
    return {value, err, count};
}

double safe(const Integrand& f, double v) {
    if (!(v > 0.0) || std::isinf(v)) return 0.0;
    const double y = f(v);
    return y;
}

// v = p e^{-s} (toward 0) or v = p e^{s} (toward infinity), s = t / (1 - t).
Piece log_piece(const Integrand& f, double p, bool toward_zero) {
    Piece out;
    out.a = 0.0;
    out.b = 1.0;
    out.g = [f, p, toward_zero](double t) {
        if (t >= 1.0) return 0.0;
        const double s = t / (1.0 - t);
        const double v = toward_zero ? p * std::exp(-s) : p * std::exp(s);
        const double jac = v / ((1.0 - t) * (1.0 - t));
        if (!(v > 0.0) || std::isinf(v) || std::isinf(jac)) return 0.0;
        const double y = safe(f, v);
        if (y == 0.0) return 0.0;
        // Far out in the log coordinate the integrand is a product of an
        // overflowing and an underflowing factor; its true value is negligible.
        if (!std::isfinite(y * jac) && s > 30.0) return 0.0;
        return y * jac;
    };
    return out;
}

}  // namespace

QuadResult integrate_interval(const Integrand& f, double a, double b, const QuadOptions& opts) {
    if (a == b) return {};
    if (a > b) {
        QuadResult r = integrate_interval(f, b, a, opts);
        r.value = -r.value;
        return r;
    }
    return drive({Piece{f, a, b}}, opts);
}

QuadResult integrate_half_line(const Integrand& f, double hi, const std::vector<double>& breakpoints,
                               const QuadOptions& opts) {
    if (!(hi > 0.0)) return {};
    std::vector<double> cuts;
    if (1.0 < hi) cuts.push_back(1.0);
    for (double c : breakpoints)
        if (c > 0.0 && c < hi && std::isfinite(c)) cuts.push_back(c);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Piece> pieces;
    if (cuts.empty()) {
        if (std::isinf(hi)) {
            pieces.push_back(log_piece(f, 1.0, true));
            pieces.push_back(log_piece(f, 1.0, false));
        } else {
            pieces.push_back(log_piece(f, hi, true));
        }
        return drive(pieces, opts);
    }
    pieces.push_back(log_piece(f, cuts.front(), true));
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) pieces.push_back(Piece{f, cuts[i], cuts[i + 1]});
    if (std::isinf(hi))
        pieces.push_back(log_piece(f, cuts.back(), false));
    else
        pieces.push_back(Piece{f, cuts.back(), hi});
    return drive(pieces, opts);
}

double gauss_legendre8(const Integrand& f, double a, double b) {
    const auto& x = Gauss8::abscissa();
    const auto& w = Gauss8::weights();
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) sum += w[i] * (f(c - h * x[i]) + f(c + h * x[i]));
    return h * sum;
}

}  // namespace affine_levy
