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

#include "affine_levy/cli/plot.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "affine_levy/core/errors.hpp"
#include "affine_levy/simulate/path_io.hpp"

namespace affine_levy {

namespace fs = std::filesystem;

namespace {

fs::path need(const fs::path& dir, const std::string& name, const std::string& which) {
    const fs::path p = dir / name;
    if (!fs::exists(p)) throw MissingResultError(which + " plot needs " + name + " in " + dir.string() + "; run the matching analysis first");
    return p;
}

// Copies a CSV through, checking the header.
std::string pass_through(const fs::path& in, const fs::path& out, const std::string& header) {
    std::ifstream is(in, std::ios::binary);
    std::string line;
    std::getline(is, line);
    if (line != header) throw MissingResultError(in.string() + " has an unexpected header");
    std::ofstream os(out, std::ios::binary);
    os << header << '\n';
    while (std::getline(is, line))
        if (!line.empty()) os << line << '\n';
    return out.string();
}

double quantile_sorted(const std::vector<double>& x, double q) {
    const double pos = q * static_cast<double>(x.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, x.size() - 1);
    return x[lo] + (pos - static_cast<double>(lo)) * (x[hi] - x[lo]);
}

}  // namespace

const std::vector<std::string>& plot_kinds() {
    static const std::vector<std::string> k = {"laplace", "term-structure", "path-fan", "canon-fit"};
    return k;
}

std::string emit_plot_data(const std::string& result_dir, const std::string& which) {
    const fs::path dir(result_dir);
    const fs::path out = dir / ("plot_" + which + ".csv");
    if (which == "laplace") return pass_through(need(dir, "laplace.csv", which), out, "x,b,J");
    if (which == "term-structure") return pass_through(need(dir, "term_structure.csv", which), out, "T,P,yield");
    if (which == "canon-fit") return pass_through(need(dir, "canonical_fit.csv", which), out, "b,observed,fitted");
    if (which == "path-fan") {
        const ShortRatePaths p = read_paths_binary(need(dir, "paths.bin", which).string());
        std::ofstream os(out, std::ios::binary);
        os.precision(17);
        os << "t,q05,q25,q50,q75,q95\n";
        std::vector<double> col(p.n_paths);
        for (std::size_t k = 0; k < p.n_records(); ++k) {
            for (std::size_t i = 0; i < p.n_paths; ++i) col[i] = p.value(i, k);
            std::sort(col.begin(), col.end());
            os << p.times[k];
            for (double q : {0.05, 0.25, 0.5, 0.75, 0.95}) os << ',' << quantile_sorted(col, q);
            os << '\n';
        }
        return out.string();
    }
    std::ostringstream msg;
    msg << "unknown plot kind \"" << which << "\"; expected one of";
    for (const auto& k : plot_kinds()) msg << ' ' << k;
    throw DomainError(msg.str());
}

}  // namespace affine_levy
