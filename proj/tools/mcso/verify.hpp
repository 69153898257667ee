// Copyright 2026 The mcso Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "mcso/params.hpp"

namespace mcso::cli {

struct SuiteReport {
  int checks = 0;
  int failures = 0;
  double max_relative = 0.0;  // max |closed - oracle| / max(|oracle|, 1e-10 / 1e-8)
  std::vector<std::string> failure_lines;
  double seconds = 0.0;
};

/// The parameter grid of the cross-check: m in 0..4, theta in {pi/8, pi/4, pi/3},
/// phi in {0, pi/4, pi/2}, alpha0 in {0.3, 1, 1+i, 2}.
std::vector<SuperpositionParams> oracle_grid(Parity parity = Parity::odd);

/// Closed forms against the Fock oracle on oracle_grid(): normalization,
/// <a^dag a>, <a^2 a^dag^2>, <a^dag^2>, fidelity (odd only) and P(n <= 20) at
/// xi in {0.2, 0.9}. A check passes when |diff| <= 1e-8 |oracle| + 1e-10.
SuiteReport run_oracle_suite(Parity parity = Parity::odd, unsigned threads = 0);

}  // namespace mcso::cli
