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

#include <string>

#include "affine_levy/simulate/short_rate.hpp"

namespace affine_levy {

// path_id,t,R
void write_paths_csv(const ShortRatePaths& paths, const std::string& file);

// Columnar dump: magic "ALPATHS1", u64 n_paths, u64 n_records, u64 seed,
// then times[n_records], values[n_paths * n_records], integrals[...] as
// little-endian doubles.
void write_paths_binary(const ShortRatePaths& paths, const std::string& file);
ShortRatePaths read_paths_binary(const std::string& file);

}  // namespace affine_levy
