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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcso/phasespace.hpp"
#include "mcso/state.hpp"

namespace mcso::cli {

/// Bad configuration; the message names the offending field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Quantity {
  normalization,
  fidelity,
  mandel_q,
  squeezing,
  photocount,
  wigner,
  negativity,
  evolved_wigner,
};

std::string to_string(Quantity q);
Quantity parse_quantity(const std::string& s);

/// One sweep axis. A scalar field becomes a single-valued axis that is not
/// reported as a CSV column.
template <typename T>
struct Axis {
  std::vector<T> values;
  bool swept = false;
};

struct SweepConfig {
  Quantity quantity = Quantity::normalization;
  Axis<int> m;
  Axis<double> theta;
  Axis<double> phi;
  Axis<Complex> alpha0;
  Parity parity = Parity::odd;

  // photocount
  Axis<double> xi;
  int n_max = 0;
  // wigner, evolved_wigner
  GridSpec grid;
  // evolved_wigner
  Axis<double> kappa_t;
  Axis<double> nbar;
  // negativity
  QuadratureSettings quadrature;

  std::optional<std::string> output;
  bool oracle_check = false;
};

/// Parses and validates a JSON config. Throws ConfigError.
SweepConfig parse_config(const std::string& text);

}  // namespace mcso::cli
