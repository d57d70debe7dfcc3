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

#include "affine_levy/core/levy_measure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "affine_levy/core/errors.hpp"

namespace affine_levy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::vector<double> merged(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

const char* to_string(Variation v) {
    switch (v) {
        case Variation::finite: return "finite";
        case Variation::infinite: return "infinite";
        default: return "unknown";
    }
}

LevyMeasure1D LevyMeasure1D::stable(double alpha, double scale) {
    if (!(alpha > 1.0 && alpha < 2.0)) throw DomainError("stable measure requires alpha in (1,2)");
    if (!(scale >= 0.0) || !std::isfinite(scale)) throw DomainError("stable measure requires a finite scale >= 0");
    LevyMeasure1D m;
    if (scale == 0.0) return m;
    m.kind_ = Stable{alpha, scale};
    m.hint_ = Variation::infinite;
    return m;
}

LevyMeasure1D LevyMeasure1D::density(std::function<double(double)> f, double support_hi,
                                     std::vector<double> breakpoints, Variation hint) {
    if (!f) throw DomainError("density measure requires a callable");
    if (!(support_hi > 0.0)) throw DomainError("density support must be a subset of (0,inf)");
    LevyMeasure1D m;
    m.kind_ = Density{std::move(f), support_hi, std::move(breakpoints)};
    m.hint_ = hint;
    return m;
}

LevyMeasure1D LevyMeasure1D::atoms(std::vector<std::pair<double, double>> atoms) {
    std::vector<std::pair<double, double>> kept;
    for (const auto& [v, w] : atoms) {
        if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("atom locations must lie in (0,inf)");
        if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("atom weights must be finite and nonnegative");
        if (w > 0.0) kept.emplace_back(v, w);
    }
    LevyMeasure1D m;
    if (kept.empty()) return m;
    m.kind_ = Atoms{std::move(kept)};
    m.hint_ = Variation::finite;
    return m;
}

LevyMeasure1D LevyMeasure1D::sum(std::vector<LevyMeasure1D> parts) {
    std::vector<LevyMeasure1D> kept;
    Variation hint = Variation::finite;
    for (auto& p : parts) {
        if (p.is_zero()) continue;
        if (p.hint_ == Variation::infinite) hint = Variation::infinite;
        else if (p.hint_ == Variation::unknown && hint != Variation::infinite) hint = Variation::unknown;
        kept.push_back(std::move(p));
    }
    if (kept.empty()) return {};
    if (kept.size() == 1) return kept.front();
    LevyMeasure1D m;
    m.kind_ = Sum{std::make_shared<const std::vector<LevyMeasure1D>>(std::move(kept))};
    m.hint_ = hint;
    return m;
}

bool LevyMeasure1D::is_zero() const { return std::holds_alternative<Zero>(kind_); }

std::string LevyMeasure1D::describe() const {
    std::ostringstream os;
    std::visit(overloaded{
                   [&](const Zero&) { os << "zero"; },
                   [&](const Stable& s) { os << "stable(alpha=" << s.alpha << ", scale=" << s.scale << ")"; },
                   [&](const Density& d) { os << "density(support_hi=" << d.support_hi << ")"; },
                   [&](const Atoms& a) { os << "atoms(" << a.atoms.size() << ")"; },
                   [&](const Sum& s) {
                       os << "sum(";
                       for (std::size_t i = 0; i < s.parts->size(); ++i)
                           os << (i ? ", " : "") << (*s.parts)[i].describe();
                       os << ")";
                   },
               },
               kind_);
    return os.str();
}

double integrate_measure(const LevyMeasure1D& rho, const Integrand& g, const QuadOptions& opts,
                         const std::vector<double>& extra) {
    return std::visit(
        overloaded{
            [&](const LevyMeasure1D::Zero&) { return 0.0; },
            [&](const LevyMeasure1D::Stable& s) {
                const double a = s.alpha, c = s.scale;
                Integrand f = [&](double v) {
                    const double gv = g(v);
                    if (gv == 0.0) return 0.0;
                    const double y = c * std::pow(v, -1.0 - a) * gv;
                    if (std::isfinite(y) && y != 0.0) return y;
                    return std::copysign(std::exp(std::log(c) - (1.0 + a) * std::log(v) + std::log(std::abs(gv))), gv);
                };
                return integrate_half_line(f, kInf, extra, opts).value;
            },
            [&](const LevyMeasure1D::Density& d) {
                Integrand f = [&](double v) {
                    const double w = d.f(v);
                    return w == 0.0 ? 0.0 : w * g(v);
                };
                return integrate_half_line(f, d.support_hi, merged(d.breakpoints, extra), opts).value;
            },
            [&](const LevyMeasure1D::Atoms& a) {
                double s = 0.0;
                for (const auto& [v, w] : a.atoms) s += w * g(v);
                return s;
            },
            [&](const LevyMeasure1D::Sum& s) {
                double acc = 0.0;
                for (const auto& p : *s.parts) acc += integrate_measure(p, g, opts, extra);
                return acc;
            },
        },
        rho.kind());
}

LevyMeasure1D scaled(const LevyMeasure1D& rho, double s) {
    if (!(s > 0.0)) throw DomainError("scaled: factor must be positive");
    return std::visit(
        overloaded{
            [&](const LevyMeasure1D::Zero&) { return LevyMeasure1D::zero(); },
            [&](const LevyMeasure1D::Stable& st) {
                return LevyMeasure1D::stable(st.alpha, st.scale * std::pow(s, st.alpha));
            },
            [&](const LevyMeasure1D::Density& d) {
                auto f = d.f;
                std::vector<double> bps;
                for (double b : d.breakpoints) bps.push_back(b * s);
                return LevyMeasure1D::density([f, s](double w) { return f(w / s) / s; }, d.support_hi * s,
                                              std::move(bps), rho.variation_hint());
            },
            [&](const LevyMeasure1D::Atoms& a) {
                auto at = a.atoms;
                for (auto& p : at) p.first *= s;
                return LevyMeasure1D::atoms(std::move(at));
            },
            [&](const LevyMeasure1D::Sum& sm) {
                std::vector<LevyMeasure1D> parts;
                for (const auto& p : *sm.parts) parts.push_back(scaled(p, s));
                return LevyMeasure1D::sum(std::move(parts));
            },
        },
        rho.kind());
}

LevyMeasure1D weighted(const LevyMeasure1D& rho, double w) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw DomainError("weighted: weight must be finite and nonnegative");
    if (w == 0.0) return LevyMeasure1D::zero();
    return std::visit(
        overloaded{
            [&](const LevyMeasure1D::Zero&) { return LevyMeasure1D::zero(); },
            [&](const LevyMeasure1D::Stable& st) { return LevyMeasure1D::stable(st.alpha, st.scale * w); },
            [&](const LevyMeasure1D::Density& d) {
                auto f = d.f;
                return LevyMeasure1D::density([f, w](double v) { return w * f(v); }, d.support_hi, d.breakpoints,
                                              rho.variation_hint());
            },
            [&](const LevyMeasure1D::Atoms& a) {
                auto at = a.atoms;
                for (auto& p : at) p.second *= w;
                return LevyMeasure1D::atoms(std::move(at));
            },
            [&](const LevyMeasure1D::Sum& sm) {
                std::vector<LevyMeasure1D> parts;
                for (const auto& p : *sm.parts) parts.push_back(weighted(p, w));
                return LevyMeasure1D::sum(std::move(parts));
            },
        },
        rho.kind());
}

double support_sup(const LevyMeasure1D& rho) {
    return std::visit(overloaded{
                          [](const LevyMeasure1D::Zero&) { return 0.0; },
                          [](const LevyMeasure1D::Stable&) { return kInf; },
                          [](const LevyMeasure1D::Density& d) { return d.support_hi; },
                          [](const LevyMeasure1D::Atoms& a) {
                              double m = 0.0;
                              for (const auto& p : a.atoms) m = std::max(m, p.first);
                              return m;
                          },
                          [](const LevyMeasure1D::Sum& s) {
                              double m = 0.0;
                              for (const auto& p : *s.parts) m = std::max(m, support_sup(p));
                              return m;
                          },
                      },
                      rho.kind());
}

double tail_excess(const LevyMeasure1D& rho, const QuadOptions& opts) {
    if (const auto* s = std::get_if<LevyMeasure1D::Stable>(&rho.kind()))
        return s->scale / (s->alpha * (s->alpha - 1.0));
    if (const auto* sm = std::get_if<LevyMeasure1D::Sum>(&rho.kind())) {
        double acc = 0.0;
        for (const auto& p : *sm->parts) acc += tail_excess(p, opts);
        return acc;
    }
    return integrate_measure(rho, [](double v) { return v > 1.0 ? v - 1.0 : 0.0; }, opts, {1.0});
}

double mass_above(const LevyMeasure1D& rho, double eps, const QuadOptions& opts) {
    if (const auto* s = std::get_if<LevyMeasure1D::Stable>(&rho.kind()))
        return s->scale * std::pow(eps, -s->alpha) / s->alpha;
    if (const auto* sm = std::get_if<LevyMeasure1D::Sum>(&rho.kind())) {
        double acc = 0.0;
        for (const auto& p : *sm->parts) acc += mass_above(p, eps, opts);
        return acc;
    }
    return integrate_measure(rho, [eps](double v) { return v > eps ? 1.0 : 0.0; }, opts, {eps});
}

double first_moment_above(const LevyMeasure1D& rho, double eps, const QuadOptions& opts) {
    if (const auto* s = std::get_if<LevyMeasure1D::Stable>(&rho.kind()))
        return s->scale * std::pow(eps, 1.0 - s->alpha) / (s->alpha - 1.0);
    if (const auto* sm = std::get_if<LevyMeasure1D::Sum>(&rho.kind())) {
        double acc = 0.0;
        for (const auto& p : *sm->parts) acc += first_moment_above(p, eps, opts);
        return acc;
    }
    return integrate_measure(rho, [eps](double v) { return v > eps ? v : 0.0; }, opts, {eps});
}

double second_moment_below(const LevyMeasure1D& rho, double eps, const QuadOptions& opts) {
    if (const auto* s = std::get_if<LevyMeasure1D::Stable>(&rho.kind()))
        return s->scale * std::pow(eps, 2.0 - s->alpha) / (2.0 - s->alpha);
    if (const auto* sm = std::get_if<LevyMeasure1D::Sum>(&rho.kind())) {
        double acc = 0.0;
        for (const auto& p : *sm->parts) acc += second_moment_below(p, eps, opts);
        return acc;
    }
    return integrate_measure(rho, [eps](double v) { return v <= eps ? v * v : 0.0; }, opts, {eps});
}

VariationCheck first_moment_check(const LevyMeasure1D& rho) {
    return std::visit(
        overloaded{
            [](const LevyMeasure1D::Zero&) { return VariationCheck{true, 0.0}; },
            [](const LevyMeasure1D::Stable&) { return VariationCheck{false, kInf}; },
            [](const LevyMeasure1D::Atoms& a) {
                double s = 0.0;
                for (const auto& [v, w] : a.atoms) s += v * w;
                return VariationCheck{true, s};
            },
            [](const LevyMeasure1D::Sum& sm) {
                double s = 0.0;
                for (const auto& p : *sm.parts) {
                    auto c = first_moment_check(p);
                    if (!c.finite) return VariationCheck{false, kInf};
                    s += c.value;
                }
                return VariationCheck{true, s};
            },
            [&](const LevyMeasure1D::Density& d) {
                if (rho.variation_hint() == Variation::infinite) return VariationCheck{false, kInf};
                const double top = std::min(1.0, d.support_hi);
                double large = 0.0;
                if (d.support_hi > 1.0) {
                    try {
                        large = integrate_half_line([&](double v) { return v > 1.0 ? v * d.f(v) : 0.0; },
                                                    d.support_hi, d.breakpoints)
                                    .value;
                    } catch (const QuadratureError&) {
                        return VariationCheck{false, kInf};
                    }
                }
                // Truncated small-jump integrals over [delta, top] in log coordinates.
                auto truncated = [&](double delta) {
                    std::vector<double> cuts{std::log(delta)};
                    for (double b : d.breakpoints)
                        if (b > delta && b < top) cuts.push_back(std::log(b));
                    cuts.push_back(std::log(top));
                    std::sort(cuts.begin(), cuts.end());
                    double s = 0.0;
                    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
                        s += integrate_interval([&](double u) {
                                 const double v = std::exp(u);
                                 return v * v * d.f(v);
                             },
                                                cuts[i], cuts[i + 1])
                                 .value;
                    return s;
                };
                try {
                    const double i4 = truncated(1e-4), i8 = truncated(1e-8), i12 = truncated(1e-12);
                    const double d1 = i8 - i4, d2 = i12 - i8;
                    if (d1 <= 1e-14 * std::max(1.0, std::abs(i12))) return VariationCheck{true, i12 + large};
                    const double r = d2 / d1;
                    if (r > 0.9) return VariationCheck{false, kInf};
                    return VariationCheck{true, i12 + d2 * r / (1.0 - r) + large};
                } catch (const QuadratureError&) {
                    return VariationCheck{false, kInf};
                }
            },
        },
        rho.kind());
}

namespace {

// Increments of int (v^2 ^ v) f over [1e-4, 1e4], [1e-8, 1e8], [1e-12, 1e12] in
// log coordinates; a logarithmic divergence shows up as non-shrinking steps.
bool density_diverges(const LevyMeasure1D& rho) {
    if (const auto* sm = std::get_if<LevyMeasure1D::Sum>(&rho.kind())) {
        for (const auto& p : *sm->parts)
            if (density_diverges(p)) return true;
        return false;
    }
    const auto* d = std::get_if<LevyMeasure1D::Density>(&rho.kind());
    if (!d) return false;
    auto piece = [&](double lo, double hi) {
        hi = std::min(hi, d->support_hi);
        if (!(hi > lo)) return 0.0;
        return integrate_interval([&](double u) {
                   const double v = std::exp(u);
                   return std::min(v * v, v) * v * d->f(v);
               },
                                  std::log(lo), std::log(hi))
            .value;
    };
    try {
        for (bool upper : {false, true}) {
            auto span = [&](double e) { return upper ? piece(1.0, std::pow(10.0, e)) : piece(std::pow(10.0, -e), 1.0); };
            const double i4 = span(4), i8 = span(8), i12 = span(12);
            const double d1 = i8 - i4, d2 = i12 - i8;
            if (d1 > 1e-14 * std::max(1.0, std::abs(i12)) && d2 / d1 > 0.9) return true;
        }
    } catch (const QuadratureError&) {
        return true;
    }
    return false;
}

}  // namespace

double integrability_constant(const LevyMeasure1D& rho) {
    if (const auto* s = std::get_if<LevyMeasure1D::Stable>(&rho.kind()))
        return s->scale * (1.0 / (2.0 - s->alpha) + 1.0 / (s->alpha - 1.0));
    if (density_diverges(rho)) throw DivergenceError("int (v^2 ^ v) rho(dv) appears infinite");
    try {
        return integrate_measure(rho, [](double v) { return std::min(v * v, v); });
    } catch (const QuadratureError& e) {
        throw DivergenceError(std::string("int (v^2 ^ v) rho(dv) appears infinite: ") + e.what());
    }
}

}  // namespace affine_levy
