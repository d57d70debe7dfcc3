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

#include "affine_levy/simulate/short_rate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <thread>

#include "affine_levy/core/errors.hpp"
#include "affine_levy/kernels/kernels.hpp"
#include "affine_levy/simulate/samplers.hpp"

namespace affine_levy {

namespace {

constexpr std::size_t kBlock = 512;

struct Plan {
    const GeneratingPair* pair;
    std::optional<GFunction::PowerForm> form;
    ModelSampler sampler;
    std::size_t n_steps;
    double dt;
    std::vector<std::size_t> record_steps;
};

// Simulates paths [begin, end) and writes their records; returns clamps.
std::uint64_t run_block(const Plan& plan, double x0, const PathConfig& cfg, std::size_t begin, std::size_t end,
                        ShortRatePaths& out) {
    const std::size_t n = end - begin;
    const std::size_t n_rec = plan.record_steps.size();
    const int d = plan.sampler.dim();
    std::vector<Rng> rngs;
    rngs.reserve(n);
    for (std::size_t i = begin; i < end; ++i) rngs.push_back(substream(cfg.seed, i));
    std::vector<double> r(n, x0), integ(n, 0.0), dz(static_cast<std::size_t>(d));
    std::uint64_t clamps = 0;

    auto record = [&](std::size_t rec) {
        for (std::size_t i = 0; i < n; ++i) {
            out.values[(begin + i) * n_rec + rec] = r[i];
            out.integrals[(begin + i) * n_rec + rec] = integ[i];
        }
    };
    std::size_t next_rec = 0;
    if (plan.record_steps[0] == 0) record(next_rec++);

    if (plan.form) {
        const auto& form = *plan.form;
        const std::size_t K = form.size();
        std::vector<double> powers(K), noise(K * n);
        for (std::size_t k = 0; k < K; ++k) powers[k] = form[k].first;
        const kernels::StepArgs args{plan.pair->drift.a, plan.pair->drift.b, plan.dt, powers.data(), K, noise.data(), n};
        for (std::size_t s = 1; s <= plan.n_steps; ++s) {
            for (std::size_t i = 0; i < n; ++i) {
                plan.sampler.sample(rngs[i], dz.data());
                const Eigen::Map<const Vec> z(dz.data(), d);
                for (std::size_t k = 0; k < K; ++k) noise[k * n + i] = form[k].second.dot(z);
            }
            clamps += kernels::euler_power_step(r.data(), integ.data(), n, args);
            if (next_rec < n_rec && plan.record_steps[next_rec] == s) record(next_rec++);
        }
    } else {
        const auto& g = plan.pair->gfun;
        const auto& F = plan.pair->drift;
        for (std::size_t s = 1; s <= plan.n_steps; ++s) {
            for (std::size_t i = 0; i < n; ++i) {
                plan.sampler.sample(rngs[i], dz.data());
                const Eigen::Map<const Vec> z(dz.data(), d);
                const double r0 = r[i];
                const double rp = std::max(r0, 0.0);
                double r1 = r0 + F(rp) * plan.dt + g(rp).dot(z);
                if (r1 < 0.0) {
                    r1 = 0.0;
                    ++clamps;
                }
                r[i] = r1;
                integ[i] += 0.5 * plan.dt * (r0 + r1);
            }
            if (next_rec < n_rec && plan.record_steps[next_rec] == s) record(next_rec++);
        }
    }
    return clamps;
}

}  // namespace

void PathConfig::validate() const {
    if (!(T > 0.0)) throw DomainError("path horizon T must be positive");
    if (!(dt > 0.0 && dt < T)) throw DomainError("path step dt must lie in (0, T)");
    if (n_paths < 1) throw DomainError("n_paths must be at least 1");
    if (!(truncation_eps > 0.0 && truncation_eps < 1.0)) throw DomainError("truncation_eps must lie in (0,1)");
    if (record_every < 1) throw DomainError("record_every must be at least 1");
}

std::size_t PathConfig::n_steps() const { return static_cast<std::size_t>(std::ceil(T / dt - 1e-9)); }

unsigned thread_count() {
    if (const char* env = std::getenv("AFFINE_LEVY_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

ShortRatePaths simulate_short_rate(const GeneratingPair& pair, double x0, const PathConfig& cfg, unsigned threads) {
    cfg.validate();
    if (!(x0 >= 0.0)) throw DomainError("initial short rate must be nonnegative");
    const std::size_t n_steps = cfg.n_steps();
    const double dt = cfg.T / static_cast<double>(n_steps);
    Plan plan{&pair, pair.gfun.power_form(), ModelSampler(pair.model, dt, cfg.truncation_eps), n_steps, dt, {}};
    for (std::size_t s = 0; s <= n_steps; s += cfg.record_every) plan.record_steps.push_back(s);
    if (plan.record_steps.back() != n_steps) plan.record_steps.push_back(n_steps);

    ShortRatePaths out;
    out.n_paths = cfg.n_paths;
    out.seed_used = cfg.seed;
    for (std::size_t s : plan.record_steps) out.times.push_back(static_cast<double>(s) * dt);
    out.times.back() = cfg.T;
    out.values.assign(cfg.n_paths * out.times.size(), 0.0);
    out.integrals.assign(cfg.n_paths * out.times.size(), 0.0);

    const std::size_t n_blocks = (cfg.n_paths + kBlock - 1) / kBlock;
    std::vector<std::uint64_t> clamps(n_blocks, 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t b; (b = next.fetch_add(1)) < n_blocks;) {
            const std::size_t begin = b * kBlock;
            clamps[b] = run_block(plan, x0, cfg, begin, std::min(begin + kBlock, cfg.n_paths), out);
        }
    };
    const unsigned nt = std::min<std::size_t>(threads ? threads : thread_count(), n_blocks);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nt; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    for (auto c : clamps) out.clamp_count += c;
    out.step_count = static_cast<std::uint64_t>(cfg.n_paths) * n_steps;
    std::ostringstream tag;
    tag << "full-truncation-euler/" << (plan.form ? kernels::to_string(kernels::active_isa()) : "generic");
    out.scheme_tag = tag.str();
    return out;
}

ShortRatePaths simulate_short_rate(const CanonicalSde& sde, double x0, const PathConfig& cfg, unsigned threads) {
    return simulate_short_rate(canonical_pair(sde), x0, cfg, threads);
}

}  // namespace affine_levy
