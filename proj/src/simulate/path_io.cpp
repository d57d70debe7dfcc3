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

#include "affine_levy/simulate/path_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>

#include "affine_levy/core/errors.hpp"

namespace affine_levy {

namespace {

constexpr char kMagic[8] = {'A', 'L', 'P', 'A', 'T', 'H', 'S', '1'};

template <class T>
void put(std::ofstream& os, const T* data, std::size_t n) {
    os.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(n * sizeof(T)));
}

template <class T>
void get(std::ifstream& is, T* data, std::size_t n) {
    is.read(reinterpret_cast<char*>(data), static_cast<std::streamsize>(n * sizeof(T)));
    if (!is) throw Error("truncated path file");
}

}  // namespace

void write_paths_csv(const ShortRatePaths& paths, const std::string& file) {
    std::ofstream os(file, std::ios::binary);
    if (!os) throw Error("cannot open " + file + " for writing");
    os << "path_id,t,R\n";
    os.precision(17);
    for (std::size_t p = 0; p < paths.n_paths; ++p)
        for (std::size_t k = 0; k < paths.n_records(); ++k) os << p << ',' << paths.times[k] << ',' << paths.value(p, k) << '\n';
}

void write_paths_binary(const ShortRatePaths& paths, const std::string& file) {
    std::ofstream os(file, std::ios::binary);
    if (!os) throw Error("cannot open " + file + " for writing");
    os.write(kMagic, sizeof kMagic);
    const std::uint64_t header[3] = {paths.n_paths, paths.n_records(), paths.seed_used};
    put(os, header, 3);
    put(os, paths.times.data(), paths.times.size());
    put(os, paths.values.data(), paths.values.size());
    put(os, paths.integrals.data(), paths.integrals.size());
}

ShortRatePaths read_paths_binary(const std::string& file) {
    std::ifstream is(file, std::ios::binary);
    if (!is) throw Error("cannot open " + file);
    char magic[8];
    get(is, magic, 8);
    if (std::memcmp(magic, kMagic, 8) != 0) throw Error(file + " is not a path dump");
    std::uint64_t header[3];
    get(is, header, 3);
    ShortRatePaths p;
    p.n_paths = header[0];
    p.seed_used = header[2];
    p.times.resize(header[1]);
    p.values.resize(header[0] * header[1]);
    p.integrals.resize(p.values.size());
    get(is, p.times.data(), p.times.size());
    get(is, p.values.data(), p.values.size());
    get(is, p.integrals.data(), p.integrals.size());
    return p;
}

}  // namespace affine_levy
