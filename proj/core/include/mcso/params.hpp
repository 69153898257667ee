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
#include <string_view>

#include "mcso/special.hpp"

namespace mcso {

/// Sign of the cat superposition the operator acts on:
/// odd = |a0> - |-a0>, even = |a0> + |-a0>.
enum class Parity { odd, even };

std::string_view to_string(Parity p);
/// Parses "odd" / "even"; throws ArgumentError otherwise.
Parity parse_parity(std::string_view s);

/// State Omega^m (|a0> -/+ |-a0>) with Omega = a cos(theta) + a^dag e^{i phi} sin(theta).
struct SuperpositionParams {
  int m = 0;
  double theta = 0.7853981633974483;
  double phi = 0.0;
  Complex alpha0 = 1.0;
  Parity parity = Parity::odd;

  /// +1 for the even cat, -1 for the odd cat: the weight of the |a0><-a0|
  /// cross terms in every closed form.
  double cross_sign() const { return parity == Parity::odd ? -1.0 : 1.0; }
};

/// Throws ArgumentError unless 0 <= m, 0 < theta < pi/2, all fields finite,
/// and alpha0 != 0 for the odd cat.
void validate(const SuperpositionParams& p);

/// Markovian thermal channel; kappa_t is the dimensionless product kappa * t.
struct ThermalChannel {
  double kappa_t = 0.0;
  double nbar = 0.0;

  /// 1 - e^{-2 kappa t}
  double gamma() const;
};

void validate(const ThermalChannel& ch);

}  // namespace mcso
