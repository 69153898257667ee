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

#include <vector>

#include "mcso/params.hpp"

namespace mcso {

/// Largest photon number accepted by photocount().
inline constexpr int kDefaultPhotocountMax = 128;

/// Scalars shared by the closed forms. With s = sin(theta), c = cos(theta):
///   B   = i sqrt(e^{-i phi} s / 2c) a0 + i sqrt(e^{i phi} c / 2s) a0*
///   C   = i sqrt(e^{-i phi} c / 2s) a0 - i sqrt(e^{i phi} s / 2c) a0*
///   chi = -s c / 2
///   R   = i sqrt(2 e^{-i phi} s / c)          (|R|^2 = 2 tan theta)
///   K   = i sqrt(2 e^{-i phi} c / s) a0
/// Square roots of e^{+-i phi} use the principal branch e^{+-i phi / 2}.
struct ClosedFormCoefficients {
  Complex B;
  Complex C;
  double chi = 0.0;
  Complex R;
  Complex K;

  static ClosedFormCoefficients from(const SuperpositionParams& p);
};

/// A_k = (2 tan theta)^k / k! * (m! / (m-k)!)^2, the contraction weight that
/// appears in the normalization and the Wigner function.
double contraction_weight(int m, int k, double theta);

/// Squared norm <psi_m|psi_m> of the unnormalized state.
/// Throws ConsistencyError if the result is not finite and positive.
double normalization(const SuperpositionParams& p);

/// Tr(rho_m rho_0) / Tr(rho_0^2) against the m = 0 odd cat.
/// Throws UnsupportedOperationError for the even cat.
double fidelity(const SuperpositionParams& p);

/// <a^dag a>
double mean_photon(const SuperpositionParams& p);

/// <a^2 a^dag^2>, extracted as a mixed derivative of a generating function
/// in (t, s, lambda, eta) with caps (m, m, 1, 1).
double moment_a2ad2(const SuperpositionParams& p);

/// <a^dag^2>, extracted from a generating function in (t, s) with caps (m, m).
Complex mean_ad2(const SuperpositionParams& p);

/// Mandel Q = <a^dag^2 a^2> / <a^dag a> - <a^dag a>, using
/// <a^dag^2 a^2> = <a^2 a^dag^2> - 4 <a^dag a> - 2.
/// Throws UndefinedQuantityError when <a^dag a> vanishes.
double mandel_q(const SuperpositionParams& p);

/// Minimum normally ordered quadrature variance, -2|<a^dag^2>| + 2<a^dag a>
/// (the first moments vanish for this state family).
double squeezing(const SuperpositionParams& p);

/// Probability of n counts at detector efficiency xi in (0, 1].
/// xi = 1 returns the photon-number distribution computed in the number
/// basis. Throws ArgumentError for xi outside (0, 1] or n outside
/// [0, n_max], ConsistencyError when the result is below -1e-10.
double photocount(const SuperpositionParams& p, double xi, int n,
                  int n_max = kDefaultPhotocountMax);

/// P(0..n_last) in one call; shares the per-state setup across n.
std::vector<double> photocount_distribution(const SuperpositionParams& p, double xi, int n_last,
                                            int n_max = kDefaultPhotocountMax);

}  // namespace mcso
