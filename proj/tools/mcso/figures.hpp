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

#include "compute.hpp"

namespace mcso::cli {

struct Verdict {
  std::string claim;
  bool pass = false;
  std::string detail;

  /// "<figure>: <claim>: PASS" or "...: FAIL (<detail>)"
  std::string line(const std::string& figure) const;
};

struct FigureOutcome {
  std::string name;
  std::string csv_path;
  ComputeResult result;
  std::vector<Verdict> verdicts;
};

/// fig1a .. fig10d
const std::vector<std::string>& figure_names();

/// The sweep config behind a preset, as JSON text (output field omitted).
std::string figure_config(const std::string& name);

/// Runs a preset, writes <out_dir>/<name>.csv and evaluates the qualitative
/// claims attached to that panel. Throws ConfigError for unknown names.
FigureOutcome run_figure(const std::string& name, const std::string& out_dir,
                         unsigned threads = 0);

}  // namespace mcso::cli
