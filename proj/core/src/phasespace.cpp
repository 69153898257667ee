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

#include "mcso/phasespace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mcso/errors.hpp"
#include "mcso/parallel.hpp"
#include "mcso/state.hpp"

namespace mcso {
namespace {

constexpr double kTwoOverPi = 2.0 / std::numbers::pi;

double checked_real(const char* what, Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw ConsistencyError(std::string(what) + ": non-finite value");
  }
  if (std::abs(z.imag()) > 1e-10 * (1.0 + std::abs(z.real()))) {
    throw ConsistencyError(std::string(what) + ": residual imaginary part");
  }
  return z.real();
}

// H_0..H_n(z) into a caller-owned buffer; n is tiny, so no allocation games.
void fill_hermite(int n, Complex z, std::vector<Complex>& h) {
  h.resize(static_cast<std::size_t>(n) + 1);
  hermite_table(n, z, h, std::max(n, kDefaultMaxOrder));
}

}  // namespace

Complex GridSpec::point(int ix, int iy) const {
  return {re_min + (ix + 0.5) * dx(), im_min + (iy + 0.5) * dy()};
}

void validate(const GridSpec& spec) {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(spec.re_min) || !finite(spec.re_max) || !finite(spec.im_min) ||
      !finite(spec.im_max)) {
    throw ArgumentError("grid bounds must be finite");
  }
  if (!(spec.re_min < spec.re_max) || !(spec.im_min < spec.im_max)) {
    throw ArgumentError("grid bounds must be ordered (min < max)");
  }
  if (spec.nx < 2 || spec.ny < 2) throw ArgumentError("grid needs nx, ny >= 2");
}

double WignerGrid::integral() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s * spec.cell_area();
}

double WignerGrid::min() const { return *std::min_element(values.begin(), values.end()); }
double WignerGrid::max() const { return *std::max_element(values.begin(), values.end()); }

WignerEvaluator::WignerEvaluator(const SuperpositionParams& p) : p_(p) {
  validate(p);
  norm_ = mcso::normalization(p);
  const auto k = ClosedFormCoefficients::from(p);
  B_ = k.B;
  C_ = k.C;
  R_ = k.R;
  const double s = std::sin(p.theta);
  const double c = std::cos(p.theta);
  const double pre = kTwoOverPi / norm_ * std::pow(0.5 * s * c, p.m);
  weights_.resize(static_cast<std::size_t>(p.m) + 1);
  for (int j = 0; j <= p.m; ++j) weights_[j] = pre * contraction_weight(p.m, j, p.theta);
}

double WignerEvaluator::operator()(Complex g) const {
  const int m = p_.m;
  const Complex a0 = p_.alpha0;
  const Complex gc = std::conj(g);
  thread_local std::vector<Complex> h1, h2, h3, h4;
  // diagonal pieces at +a0 and -a0 (C flips sign with a0)
  fill_hermite(m, -std::conj(C_) + R_ * g, h1);
  fill_hermite(m, std::conj(C_) + R_ * g, h2);
  // overlap piece at +a0; the -a0 piece is its conjugate
  fill_hermite(m, std::conj(B_) - std::conj(R_) * gc, h3);
  fill_hermite(m, B_ + R_ * g, h4);
  const double ep = std::exp(-2.0 * std::norm(g - a0));
  const double em = std::exp(-2.0 * std::norm(g + a0));
  const Complex ex = std::exp(2.0 * std::conj(a0) * g - 2.0 * gc * a0 - 2.0 * std::norm(g));
  double diag = 0.0;
  Complex over = 0.0;
  for (int j = 0; j <= m; ++j) {
    const int r = m - j;
    const double w = weights_[j];
    diag += (j % 2 ? -w : w) * (ep * std::norm(h1[r]) + em * std::norm(h2[r]));
    over += w * h3[r] * h4[r];
  }
  over *= (m % 2 ? -1.0 : 1.0) * ex;
  return checked_real("wigner", diag + p_.cross_sign() * (over + std::conj(over)));
}

double wigner(const SuperpositionParams& p, Complex alpha) { return WignerEvaluator(p)(alpha); }

WignerGrid sample_grid(const std::function<double(Complex)>& f, const GridSpec& spec,
                       unsigned threads) {
  validate(spec);
  WignerGrid grid{spec, std::vector<double>(static_cast<std::size_t>(spec.nx) * spec.ny)};
  parallel_for(
      static_cast<std::size_t>(spec.nx),
      [&](std::size_t ix) {
        for (int iy = 0; iy < spec.ny; ++iy) {
          grid.values[ix * spec.ny + iy] = f(spec.point(static_cast<int>(ix), iy));
        }
      },
      threads);
  return grid;
}

WignerGrid wigner_grid(const SuperpositionParams& p, const GridSpec& spec, unsigned threads) {
  const WignerEvaluator w(p);
  return sample_grid([&](Complex a) { return w(a); }, spec, threads);
}

namespace {

struct Sums {
  double abs = 0.0;
  double plain = 0.0;
  double frame_abs = 0.0;
};

Sums midpoint_sums(const std::function<double(Complex)>& w, double half, int cells,
                   unsigned threads) {
  const double h = 2.0 * half / cells;
  std::vector<Sums> rows(static_cast<std::size_t>(cells));
  parallel_for(
      rows.size(),
      [&](std::size_t ix) {
        const double x = -half + (static_cast<double>(ix) + 0.5) * h;
        Sums r;
        for (int iy = 0; iy < cells; ++iy) {
          const double y = -half + (iy + 0.5) * h;
          const double v = w({x, y});
          if (!std::isfinite(v)) throw ConsistencyError("negative_volume: non-finite integrand");
          r.abs += std::abs(v);
          r.plain += v;
          if (std::max(std::abs(x), std::abs(y)) > half - 1.0) r.frame_abs += std::abs(v);
        }
        rows[ix] = r;
      },
      threads);
  Sums s;
  for (const auto& r : rows) {
    s.abs += r.abs;
    s.plain += r.plain;
    s.frame_abs += r.frame_abs;
  }
  const double area = h * h;
  s.abs *= area;
  s.plain *= area;
  s.frame_abs *= area;
  return s;
}

}  // namespace

NegativeVolume negative_volume(const std::function<double(Complex)>& w,
                               const QuadratureSettings& settings) {
  if (!(settings.tolerance > 0.0) || !(settings.frame_tolerance > 0.0) ||
      settings.initial_cells < 2 || settings.max_refinements < 1 ||
      settings.max_growth_steps < 0) {
    throw ArgumentError("negative_volume: invalid quadrature settings");
  }
  double half = settings.half_width > 0.0 ? settings.half_width : 6.0;
  for (int growth = 0;; ++growth) {
    int cells = settings.initial_cells;
    Sums coarse = midpoint_sums(w, half, cells, settings.threads);
    double prev_delta = 0.0;
    double last_delta = 0.0;
    bool have_prev = false;
    bool converged = false;
    NegativeVolume out;
    Sums fine;
    for (int level = 0; level < settings.max_refinements; ++level) {
      cells *= 2;
      fine = midpoint_sums(w, half, cells, settings.threads);
      const double ia = (4.0 * fine.abs - coarse.abs) / 3.0;
      const double ip = (4.0 * fine.plain - coarse.plain) / 3.0;
      const double delta = 0.5 * (ia - ip);
      out = {delta, ia, ip, half, cells, false};
      if (have_prev) prev_delta = last_delta;
      if (have_prev && std::abs(delta - last_delta) <= settings.tolerance) {
        converged = true;
        break;
      }
      last_delta = delta;
      have_prev = true;
      coarse = fine;
    }
    if (!converged) {
      throw ConvergenceError("negative_volume: no convergence after " +
                                 std::to_string(settings.max_refinements) + " refinements",
                             out.value, prev_delta);
    }
    if (fine.frame_abs > settings.frame_tolerance * fine.abs) {
      if (growth >= settings.max_growth_steps) {
        throw ConvergenceError("negative_volume: integration square kept growing",
                               out.value, prev_delta);
      }
      half += 2.0;
      continue;
    }
    if (out.value < 0.0) {
      if (out.value < -settings.tolerance) {
        throw ConsistencyError("negative_volume: estimate " + std::to_string(out.value) +
                               " is negative beyond tolerance");
      }
      out.value = 0.0;
      out.clamped = true;
    }
    return out;
  }
}

NegativeVolume negative_volume(const SuperpositionParams& p, QuadratureSettings settings) {
  if (settings.half_width <= 0.0) settings.half_width = std::abs(p.alpha0) + 6.0;
  const WignerEvaluator w(p);
  return negative_volume([&](Complex a) { return w(a); }, settings);
}

EvolvedWignerEvaluator::EvolvedWignerEvaluator(const SuperpositionParams& p,
                                               const ThermalChannel& ch)
    : p_(p), ch_(ch) {
  validate(p);
  validate(ch);
  const int m = p.m;
  decay_ = std::exp(-ch.kappa_t);
  V_ = 1.0 / (2.0 * ch.nbar * ch.gamma() + 1.0);
  U_ = 1.0 - decay_ * decay_ * V_;
  const auto k = ClosedFormCoefficients::from(p);
  B_ = k.B;
  C_ = k.C;
  R_ = k.R;
  const double s = std::sin(p.theta);
  const double c = std::cos(p.theta);
  const double pre = kTwoOverPi / normalization(p) * factorial(m) * factorial(m) * V_;
  weights_.assign(static_cast<std::size_t>(m + 1) * (m + 1), 0.0);
  for (int j = 0; j <= m; ++j) {
    for (int l = 0; j + l <= m; ++l) {
      const double r = factorial(m - j - l);
      weights_[j * (m + 1) + l] = pre * (j % 2 ? -1.0 : 1.0) * std::pow(2.0, 2 * l + j - m) /
                                  (factorial(j) * factorial(l) * r * r) *
                                  std::pow(s, j + l + m) / std::pow(c, j + l - m) *
                                  std::pow(U_, l);
    }
  }
}

double EvolvedWignerEvaluator::operator()(Complex g) const {
  const int m = p_.m;
  const Complex a0 = p_.alpha0;
  const Complex ac = std::conj(a0);
  const Complex gc = std::conj(g);
  const Complex Rc = std::conj(R_);
  const double ev = decay_ * V_;
  thread_local std::vector<Complex> h1, h2, h3, h4;
  fill_hermite(m, -std::conj(C_) + R_ * a0 * U_ + R_ * g * ev, h1);
  // at -a0: C -> -C, a0 -> -a0
  fill_hermite(m, std::conj(C_) - R_ * a0 * U_ + R_ * g * ev, h2);
  fill_hermite(m, -std::conj(B_) + Rc * ac * U_ + Rc * gc * ev, h3);
  fill_hermite(m, B_ - R_ * a0 * U_ + R_ * g * ev, h4);
  const double ep = std::exp(-2.0 * V_ * std::norm(g - a0 * decay_));
  const double em = std::exp(-2.0 * V_ * std::norm(g + a0 * decay_));
  const Complex ex = std::exp(-2.0 * std::norm(g) * V_ - 2.0 * std::norm(a0) * U_ +
                              2.0 * ev * (g * ac - gc * a0));
  double diag = 0.0;
  Complex over = 0.0;
  for (int j = 0; j <= m; ++j) {
    for (int l = 0; j + l <= m; ++l) {
      const int r = m - j - l;
      const double w = weights_[j * (m + 1) + l];
      diag += w * (ep * std::norm(h1[r]) + em * std::norm(h2[r]));
      over += w * h3[r] * h4[r];
    }
  }
  over *= ex;
  return checked_real("wigner_evolved", diag + p_.cross_sign() * (over + std::conj(over)));
}

double wigner_evolved(const SuperpositionParams& p, const ThermalChannel& ch, Complex gamma) {
  return EvolvedWignerEvaluator(p, ch)(gamma);
}

WignerGrid wigner_evolved_grid(const SuperpositionParams& p, const ThermalChannel& ch,
                               const GridSpec& spec, unsigned threads) {
  const EvolvedWignerEvaluator w(p, ch);
  return sample_grid([&](Complex a) { return w(a); }, spec, threads);
}

double thermal_wigner(double nbar, Complex gamma) {
  const double d = 2.0 * nbar + 1.0;
  return kTwoOverPi / d * std::exp(-2.0 * std::norm(gamma) / d);
}

}  // namespace mcso
