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
#include <vector>

namespace affine_levy {

const std::vector<std::string>& plot_kinds();  // laplace, term-structure, path-fan, canon-fit

// Reads the run artifacts in result_dir and writes plot_<kind>.csv there;
// returns its path.  Throws MissingResultError when the run did not produce
// the needed input.
std::string emit_plot_data(const std::string& result_dir, const std::string& which);

}  // namespace affine_levy
