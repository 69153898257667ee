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

#include "config.hpp"

namespace mcso::cli {

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Column index by name; throws std::out_of_range when absent.
  std::size_t column(const std::string& name) const;
  std::string to_csv() const;
};

struct ComputeResult {
  Table table;
  bool oracle_checked = false;
  double max_oracle_diff = 0.0;
  int oracle_failures = 0;  // rows with |diff| > 1e-6 |oracle| + 1e-10
};

/// Evaluates the sweep. Rows follow the lexicographic order of the axes
/// (m, theta, phi, alpha0, xi | kappa_t, nbar, then n or grid point).
ComputeResult run_compute(const SweepConfig& config, unsigned threads = 0);

/// Relative-with-floor acceptance used for every oracle comparison.
bool oracle_agrees(double closed_form, double oracle);

}  // namespace mcso::cli
