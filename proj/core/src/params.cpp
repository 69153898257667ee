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

#include "mcso/params.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mcso/errors.hpp"

namespace mcso {

std::string_view to_string(Parity p) { return p == Parity::odd ? "odd" : "even"; }

Parity parse_parity(std::string_view s) {
  if (s == "odd") return Parity::odd;
  if (s == "even") return Parity::even;
  throw ArgumentError("parity must be \"odd\" or \"even\", got \"" + std::string(s) + "\"");
}

void validate(const SuperpositionParams& p) {
  if (p.m < 0) throw ArgumentError("m must be non-negative");
  if (!std::isfinite(p.theta) || !(p.theta > 0.0) || !(p.theta < std::numbers::pi / 2)) {
    throw ArgumentError("theta must lie strictly inside (0, pi/2)");
  }
  if (!std::isfinite(p.phi)) throw ArgumentError("phi must be finite");
  if (!std::isfinite(p.alpha0.real()) || !std::isfinite(p.alpha0.imag())) {
    throw ArgumentError("alpha0 must be finite");
  }
  if (p.parity == Parity::odd && p.alpha0 == Complex{}) {
    throw ArgumentError("the odd cat vanishes at alpha0 = 0");
  }
}

double ThermalChannel::gamma() const { return -std::expm1(-2.0 * kappa_t); }

void validate(const ThermalChannel& ch) {
  if (!std::isfinite(ch.kappa_t) || ch.kappa_t < 0.0) {
    throw ArgumentError("kappa_t must be finite and non-negative");
  }
  if (!std::isfinite(ch.nbar) || ch.nbar < 0.0) {
    throw ArgumentError("nbar must be finite and non-negative");
  }
}

}  // namespace mcso
