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

namespace mcso {

/// Largest number-basis cutoff the oracle will allocate.
inline constexpr int kMaxCutoff = 2048;

/// Amplitudes <n|psi> for n = 0..cutoff (not necessarily normalized).
struct FockVector {
  int cutoff = 0;
  std::vector<Complex> amps;

  double norm_squared() const;
};

/// Density matrix on n = 0..cutoff, row-major, dimension cutoff + 1.
struct FockDensity {
  int cutoff = 0;
  std::vector<Complex> matrix;

  explicit FockDensity(int cutoff_ = 0);
  static FockDensity from_pure(const FockVector& v);  // normalized |v><v| / <v|v>

  int dim() const { return cutoff + 1; }
  Complex& operator()(int i, int j) { return matrix[static_cast<std::size_t>(i) * dim() + j]; }
  Complex operator()(int i, int j) const { return matrix[static_cast<std::size_t>(i) * dim() + j]; }
  Complex trace() const;
  /// max |rho_ij - conj(rho_ji)|
  double hermiticity_error() const;
  double min_diagonal() const;
};

/// Unnormalized coherent state e^{-|a|^2/2} sum a^n / sqrt(n!) |n>.
FockVector coherent_state(Complex alpha, int cutoff);

/// Unnormalized Omega^m (|a0> -/+ |-a0>) truncated at the cutoff. Built on a
/// basis padded by m levels so every retained amplitude is exact.
/// Throws ResourceError when |amps[cutoff]|^2 > 1e-14 * <psi|psi>.
FockVector build_state(const SuperpositionParams& p, int cutoff);

/// Smallest cutoff 32 * 2^k whose top 8 amplitudes carry relative weight
/// below tol. Throws ArgumentError for tol <= 0, ResourceError past 2048.
int cutoff_select(const SuperpositionParams& p, double tol = 1e-14);

/// build_state at cutoff_select(p)
FockVector build_state(const SuperpositionParams& p);

/// <a^dag^j a^k> in the normalized state. Requires j + k <= cutoff / 2.
Complex oracle_moment(const FockVector& v, int j, int k);

/// P(n) = sum_{k >= n} C(k, n) xi^n (1 - xi)^{k - n} |psi_k|^2 / <psi|psi>.
double oracle_photocount(const FockVector& v, double xi, int n);

/// Displaced-parity Wigner value (2/pi) <psi| D(a) P D(a)^dag |psi> / <psi|psi>,
/// applying D(-a) by a scaled truncated Taylor series on a padded basis.
/// Requires |alpha| <= sqrt(cutoff) / 2.
double oracle_wigner(const FockVector& v, Complex alpha);

/// Displaced-parity Wigner value of a density matrix (spectral decomposition,
/// then the pure-state path per eigenvector).
double oracle_wigner(const FockDensity& rho, Complex alpha);

/// Same as oracle_wigner(rho, alpha) with the eigendecomposition done once.
class DensityWignerOracle {
 public:
  explicit DensityWignerOracle(const FockDensity& rho);
  double operator()(Complex alpha) const;

 private:
  std::vector<double> weights_;
  std::vector<FockVector> vectors_;
};

/// Fewest RK4 steps satisfying kappa dt (2 nbar + 1) cutoff <= 0.1.
int master_steps(const ThermalChannel& ch, int cutoff);

/// Fixed-step RK4 integration of the thermal master equation over kappa t.
/// Throws ArgumentError when steps violates the stiffness guard and
/// IntegrationError when the trace drifts by more than 1e-6.
FockDensity evolve_master(const FockDensity& rho, const ThermalChannel& ch, int steps);

/// {"cutoff": n, "amps": [re0, im0, re1, im1, ...]}
std::string to_json(const FockVector& v);
FockVector fock_vector_from_json(const std::string& text);
/// {"cutoff": n, "matrix": [re, im, ...]} row-major
std::string to_json(const FockDensity& rho);
FockDensity fock_density_from_json(const std::string& text);

}  // namespace mcso
