// Copyright 2026 The zassucc Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <optional>
#include <string>
#include <utility>

#include "zassucc/params.hpp"

namespace zassucc {

/// Malformed parameter input.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// {"mu_pair": {"1,2": 0.2}, "mu_single": {"1": 0.1}, "blocks": 3}. Indices
/// are 1-based, pair keys need i < j, "blocks" is optional and defaults to the
/// largest index seen.
ClusterParams parse_params_json(const std::string &text);
ClusterParams load_params_file(const std::string &path);
std::string params_to_json(const ClusterParams &params);

/// {"n_orb": 4, "n_occ": 2, "mu": {"1,3": 0.1}}.
struct T1Input {
    int n_orb = 0;
    int n_occ = 0;
    std::map<std::pair<int, int>, double> mu;
};

/// {"mu": {"1,2,3,4": 0.1}} with keys p1,p2,q1,q2.
struct T2Input {
    std::map<std::array<int, 4>, double> mu;
};

T1Input parse_t1_json(const std::string &text);
T2Input parse_t2_json(const std::string &text);

std::string read_text_file(const std::string &path);

} // namespace zassucc
