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

#include <functional>
#include <string>
#include <vector>

#include "mcso/params.hpp"

namespace mcso {

/// Rectangular sampling region of the complex plane. Samples sit at cell
/// centres, so sums over a grid are midpoint-rule integrals.
struct GridSpec {
  double re_min = -4.0;
  double re_max = 4.0;
  double im_min = -4.0;
  double im_max = 4.0;
  int nx = 101;
  int ny = 101;

  double dx() const { return (re_max - re_min) / nx; }
  double dy() const { return (im_max - im_min) / ny; }
  double cell_area() const { return dx() * dy(); }
  Complex point(int ix, int iy) const;
};

/// Throws ArgumentError unless bounds are ordered and nx, ny >= 2.
void validate(const GridSpec& spec);

/// Real samples over a GridSpec, row-major in x: values[ix * ny + iy].
struct WignerGrid {
  GridSpec spec;
  std::vector<double> values;

  double at(int ix, int iy) const { return values[static_cast<std::size_t>(ix) * spec.ny + iy]; }
  Complex point(int ix, int iy) const { return spec.point(ix, iy); }
  /// sum(values) * cell area
  double integral() const;
  double min() const;
  double max() const;
};

/// Evaluates W for one state. Construction does the per-state work
/// (normalization and coefficient tables) so repeated calls stay cheap.
class WignerEvaluator {
 public:
  explicit WignerEvaluator(const SuperpositionParams& p);
  double operator()(Complex alpha) const;
  double normalization() const { return norm_; }

 private:
  SuperpositionParams p_;
  double norm_ = 0.0;
  Complex B_, C_, R_;
  std::vector<double> weights_;  // 2/pi N^-1 (s c / 2)^m A_k
};

/// W(alpha) for the normalized state.
double wigner(const SuperpositionParams& p, Complex alpha);

/// Samples any real function of the phase-space point on a grid.
/// threads = 0 uses std::thread::hardware_concurrency().
WignerGrid sample_grid(const std::function<double(Complex)>& f, const GridSpec& spec,
                       unsigned threads = 0);

WignerGrid wigner_grid(const SuperpositionParams& p, const GridSpec& spec, unsigned threads = 0);

/// Settings for the negative-volume quadrature.
struct QuadratureSettings {
  /// Half-width of the initial integration square; <= 0 selects |a0| + 6.
  double half_width = 0.0;
  /// Convergence target for successive extrapolated estimates.
  double tolerance = 1e-4;
  /// The square grows until its outermost unit-wide frame carries less
  /// than this much of the integral of |W|.
  double frame_tolerance = 1e-6;
  int initial_cells = 64;
  int max_refinements = 6;
  int max_growth_steps = 8;
  unsigned threads = 0;
};

struct NegativeVolume {
  double value = 0.0;         // delta = (integral |W| - integral W) / 2
  double integral_abs = 0.0;  // extrapolated integral of |W|
  double integral = 0.0;      // extrapolated integral of W
  double half_width = 0.0;
  int cells = 0;              // cells per side at the finest level
  bool clamped = false;       // extrapolation fell below zero within tolerance
};

/// delta = (integral |W| d^2 alpha - 1) / 2 by composite midpoint sums on a
/// square centred at the origin, refined by cell doubling with Richardson
/// extrapolation. Throws ConvergenceError carrying the last two estimates.
NegativeVolume negative_volume(const std::function<double(Complex)>& w,
                               const QuadratureSettings& settings);
NegativeVolume negative_volume(const SuperpositionParams& p, QuadratureSettings settings = {});

/// Thermal-channel evolution of W, closed form in the channel parameters
/// V = 1 / (2 nbar Gamma + 1) and U = 1 - e^{-2 kappa t} V.
class EvolvedWignerEvaluator {
 public:
  EvolvedWignerEvaluator(const SuperpositionParams& p, const ThermalChannel& ch);
  double operator()(Complex gamma) const;

 private:
  SuperpositionParams p_;
  ThermalChannel ch_;
  double decay_ = 1.0;  // e^{-kappa t}
  double V_ = 1.0;
  double U_ = 0.0;
  Complex B_, C_, R_;
  // weights_[k * (m + 1) + l] = 2/pi N^-1 * M_{k,l} * V * U^l; zero where k + l > m.
  std::vector<double> weights_;
};

double wigner_evolved(const SuperpositionParams& p, const ThermalChannel& ch, Complex gamma);

WignerGrid wigner_evolved_grid(const SuperpositionParams& p, const ThermalChannel& ch,
                               const GridSpec& spec, unsigned threads = 0);

/// Steady state of the channel: 2 / (pi (2 nbar + 1)) exp(-2|gamma|^2 / (2 nbar + 1)).
double thermal_wigner(double nbar, Complex gamma);

/// CSV with header "re,im,w", one row per sample, in storage order.
std::string to_csv(const WignerGrid& grid);
/// {"re_min":..,"re_max":..,"im_min":..,"im_max":..,"nx":..,"ny":..,"values":[...]}
std::string to_json(const WignerGrid& grid);
WignerGrid wigner_grid_from_json(const std::string& text);

}  // namespace mcso
