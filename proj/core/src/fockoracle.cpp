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

#include "mcso/fockoracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mcso/errors.hpp"

namespace mcso {
namespace {

// coherent amplitudes on 0..dim-1, signed for the cat, then Omega applied m times;
// entries below dim - m are exact
std::vector<Complex> raw_state(const SuperpositionParams& p, int dim) {
  std::vector<Complex> v(static_cast<std::size_t>(dim));
  const Complex a = p.alpha0;
  const double keep_even = p.parity == Parity::odd ? 0.0 : 2.0;
  const double keep_odd = p.parity == Parity::odd ? 2.0 : 0.0;
  // log magnitudes, so large |a0| does not underflow e^{-|a0|^2/2}
  const double r = std::abs(a);
  const double arg = std::arg(a);
  for (int n = 0; n < dim; ++n) {
    double mag = 0.0;
    if (r > 0.0) {
      mag = std::exp(-0.5 * r * r + n * std::log(r) - 0.5 * std::lgamma(n + 1.0));
    } else if (n == 0) {
      mag = 1.0;
    }
    v[n] = std::polar(mag, n * arg) * (n % 2 ? keep_odd : keep_even);
  }
  const double ct = std::cos(p.theta);
  const Complex st = std::polar(std::sin(p.theta), p.phi);
  std::vector<Complex> w(v.size());
  for (int step = 0; step < p.m; ++step) {
    for (int n = 0; n < dim; ++n) {
      Complex x = 0.0;
      if (n + 1 < dim) x += ct * std::sqrt(n + 1.0) * v[n + 1];
      if (n > 0) x += st * std::sqrt(static_cast<double>(n)) * v[n - 1];
      w[n] = x;
    }
    v.swap(w);
  }
  return v;
}

double sum_norm(const std::vector<Complex>& v, std::size_t from, std::size_t to) {
  double s = 0.0;
  for (std::size_t i = from; i < to; ++i) s += std::norm(v[i]);
  return s;
}

// |phi> = D(-alpha)|psi> = exp(-alpha a^dag + alpha* a)|psi>, Taylor series in substeps
std::vector<Complex> displace(const std::vector<Complex>& psi, Complex alpha) {
  const std::size_t dim = psi.size();
  std::vector<double> root(dim + 1);
  for (std::size_t n = 0; n <= dim; ++n) root[n] = std::sqrt(static_cast<double>(n));
  const double gen_norm = 2.0 * std::abs(alpha) * root[dim];
  const int substeps = std::max(1, static_cast<int>(std::ceil(gen_norm / 6.0)));
  const Complex x = -alpha / static_cast<double>(substeps);
  const Complex xc = std::conj(alpha) / static_cast<double>(substeps);
  std::vector<Complex> v = psi;
  std::vector<Complex> term(dim), next(dim), acc(dim);
  const double base = std::sqrt(sum_norm(psi, 0, dim));
  for (int s = 0; s < substeps; ++s) {
    term = v;
    acc = v;
    for (int k = 1; k < 200; ++k) {
      for (std::size_t n = 0; n < dim; ++n) {
        Complex y = 0.0;
        if (n > 0) y += x * root[n] * term[n - 1];
        if (n + 1 < dim) y += xc * root[n + 1] * term[n + 1];
        next[n] = y / static_cast<double>(k);
      }
      term.swap(next);
      double tn = 0.0;
      for (std::size_t n = 0; n < dim; ++n) {
        acc[n] += term[n];
        tn += std::norm(term[n]);
      }
      if (std::sqrt(tn) < 1e-17 * base) break;
    }
    v.swap(acc);
  }
  return v;
}

double parity_sum(const std::vector<Complex>& v) {
  double s = 0.0;
  for (std::size_t n = 0; n < v.size(); ++n) s += (n % 2 ? -1.0 : 1.0) * std::norm(v[n]);
  return s;
}

double wigner_of_amplitudes(const std::vector<Complex>& amps, int cutoff, Complex alpha) {
  if (std::abs(alpha) > std::sqrt(static_cast<double>(cutoff)) / 2.0 + 1e-12) {
    throw ArgumentError("oracle_wigner: |alpha| exceeds sqrt(cutoff) / 2");
  }
  const double norm = sum_norm(amps, 0, amps.size());
  if (!(norm > 0.0)) throw ArgumentError("oracle_wigner: zero vector");
  // drop the numerically empty top of the basis, then pad for the shift
  std::size_t support = amps.size();
  double tail = 0.0;
  while (support > 1 && tail + std::norm(amps[support - 1]) <= 1e-17 * norm) {
    tail += std::norm(amps[--support]);
  }
  const double reach = std::sqrt(static_cast<double>(support)) + std::abs(alpha) + 6.0;
  std::size_t dim = static_cast<std::size_t>(std::ceil(reach * reach)) + 16;
  for (int attempt = 0; attempt < 4; ++attempt, dim *= 2) {
    std::vector<Complex> padded(dim, Complex{});
    std::copy(amps.begin(), amps.begin() + static_cast<std::ptrdiff_t>(support), padded.begin());
    const auto d = displace(padded, alpha);
    if (sum_norm(d, dim - 8, dim) <= 1e-14 * norm) {
      return 2.0 / std::numbers::pi * parity_sum(d) / norm;
    }
  }
  throw ConsistencyError("oracle_wigner: displaced state reaches the padded basis edge");
}

}  // namespace

double FockVector::norm_squared() const { return sum_norm(amps, 0, amps.size()); }

FockDensity::FockDensity(int cutoff_)
    : cutoff(cutoff_),
      matrix(static_cast<std::size_t>(cutoff_ + 1) * static_cast<std::size_t>(cutoff_ + 1)) {}

FockDensity FockDensity::from_pure(const FockVector& v) {
  FockDensity rho(v.cutoff);
  const double norm = v.norm_squared();
  if (!(norm > 0.0)) throw ArgumentError("from_pure: zero vector");
  for (int i = 0; i <= v.cutoff; ++i) {
    for (int j = 0; j <= v.cutoff; ++j) rho(i, j) = v.amps[i] * std::conj(v.amps[j]) / norm;
  }
  return rho;
}

Complex FockDensity::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < dim(); ++i) t += (*this)(i, i);
  return t;
}

double FockDensity::hermiticity_error() const {
  double e = 0.0;
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j <= i; ++j) e = std::max(e, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  }
  return e;
}

double FockDensity::min_diagonal() const {
  double mn = (*this)(0, 0).real();
  for (int i = 1; i < dim(); ++i) mn = std::min(mn, (*this)(i, i).real());
  return mn;
}

FockVector coherent_state(Complex alpha, int cutoff) {
  if (cutoff < 1 || cutoff > kMaxCutoff) throw ArgumentError("coherent_state: bad cutoff");
  FockVector v{cutoff, std::vector<Complex>(static_cast<std::size_t>(cutoff) + 1)};
  Complex c = std::exp(-0.5 * std::norm(alpha));
  for (int n = 0; n <= cutoff; ++n) {
    if (n > 0) c *= alpha / std::sqrt(static_cast<double>(n));
    v.amps[n] = c;
  }
  return v;
}

FockVector build_state(const SuperpositionParams& p, int cutoff) {
  validate(p);
  if (cutoff < 1 || cutoff > kMaxCutoff) {
    throw ArgumentError("build_state: cutoff must lie in [1, " + std::to_string(kMaxCutoff) + "]");
  }
  auto raw = raw_state(p, cutoff + p.m + 1);
  raw.resize(static_cast<std::size_t>(cutoff) + 1);
  FockVector v{cutoff, std::move(raw)};
  const double total = v.norm_squared();
  // the top two levels, since one of them is empty by parity
  const double tail = sum_norm(v.amps, cutoff > 0 ? cutoff - 1 : 0, v.amps.size());
  if (tail > 1e-14 * total) {
    throw ResourceError("build_state: cutoff " + std::to_string(cutoff) +
                        " too small for this state");
  }
  return v;
}

int cutoff_select(const SuperpositionParams& p, double tol) {
  validate(p);
  if (!(tol > 0.0)) throw ArgumentError("cutoff_select: tol must be positive");
  for (int cutoff = 32; cutoff <= kMaxCutoff; cutoff *= 2) {
    auto raw = raw_state(p, cutoff + p.m + 1);
    raw.resize(static_cast<std::size_t>(cutoff) + 1);
    const double total = sum_norm(raw, 0, raw.size());
    if (sum_norm(raw, raw.size() - 8, raw.size()) < tol * total) return cutoff;
  }
  throw ResourceError("cutoff_select: state needs a cutoff beyond " +
                      std::to_string(kMaxCutoff));
}

FockVector build_state(const SuperpositionParams& p) { return build_state(p, cutoff_select(p)); }

Complex oracle_moment(const FockVector& v, int j, int k) {
  if (j < 0 || k < 0 || j + k > v.cutoff / 2) {
    throw ArgumentError("oracle_moment: need 0 <= j, k and j + k <= cutoff / 2");
  }
  auto lower = [](std::vector<Complex> x, int times) {
    for (int t = 0; t < times; ++t) {
      for (std::size_t n = 0; n + 1 < x.size(); ++n) x[n] = std::sqrt(n + 1.0) * x[n + 1];
      x.back() = 0.0;
    }
    return x;
  };
  const auto left = lower(v.amps, j);
  const auto right = lower(v.amps, k);
  Complex s = 0.0;
  for (std::size_t n = 0; n < left.size(); ++n) s += std::conj(left[n]) * right[n];
  return s / v.norm_squared();
}

double oracle_photocount(const FockVector& v, double xi, int n) {
  if (!(xi > 0.0) || !(xi <= 1.0)) throw ArgumentError("oracle_photocount: xi outside (0, 1]");
  if (n < 0 || n > v.cutoff) throw ArgumentError("oracle_photocount: n outside [0, cutoff]");
  const double norm = v.norm_squared();
  if (xi == 1.0) return std::norm(v.amps[n]) / norm;
  const double lx = std::log(xi);
  const double l1 = std::log1p(-xi);
  double s = 0.0;
  for (int k = n; k <= v.cutoff; ++k) {
    const double lb = std::lgamma(k + 1.0) - std::lgamma(n + 1.0) - std::lgamma(k - n + 1.0);
    s += std::exp(lb + n * lx + (k - n) * l1) * std::norm(v.amps[k]);
  }
  return s / norm;
}

double oracle_wigner(const FockVector& v, Complex alpha) {
  return wigner_of_amplitudes(v.amps, v.cutoff, alpha);
}

DensityWignerOracle::DensityWignerOracle(const FockDensity& rho) {
  const int d = rho.dim();
  Eigen::MatrixXcd m(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m(i, j) = rho(i, j);
  }
  // symmetrize away rounding so the solver sees an exactly Hermitian matrix
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  if (es.info() != Eigen::Success) throw ConsistencyError("oracle_wigner: eigensolver failed");
  for (int i = 0; i < d; ++i) {
    const double lambda = es.eigenvalues()(i);
    if (std::abs(lambda) < 1e-15) continue;
    FockVector v{rho.cutoff, std::vector<Complex>(static_cast<std::size_t>(d))};
    for (int n = 0; n < d; ++n) v.amps[n] = es.eigenvectors()(n, i);
    weights_.push_back(lambda);
    vectors_.push_back(std::move(v));
  }
}

double DensityWignerOracle::operator()(Complex alpha) const {
  double w = 0.0;
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    w += weights_[i] * oracle_wigner(vectors_[i], alpha);
  }
  return w;
}

double oracle_wigner(const FockDensity& rho, Complex alpha) {
  return DensityWignerOracle(rho)(alpha);
}

int master_steps(const ThermalChannel& ch, int cutoff) {
  validate(ch);
  if (cutoff < 1) throw ArgumentError("master_steps: cutoff must be positive");
  return static_cast<int>(std::ceil(ch.kappa_t * (2.0 * ch.nbar + 1.0) * cutoff / 0.1 - 1e-9));
}

FockDensity evolve_master(const FockDensity& rho, const ThermalChannel& ch, int steps) {
  validate(ch);
  if (steps < 0) throw ArgumentError("evolve_master: negative step count");
  if (steps == 0) {
    if (ch.kappa_t != 0.0) throw ArgumentError("evolve_master: zero steps for nonzero kappa_t");
    return rho;
  }
  const double dt = ch.kappa_t / steps;
  if (dt * (2.0 * ch.nbar + 1.0) * rho.cutoff > 0.1 * (1.0 + 1e-12)) {
    throw ArgumentError("evolve_master: step too large, use at least " +
                        std::to_string(master_steps(ch, rho.cutoff)) + " steps");
  }
  const int d = rho.dim();
  const double up = ch.nbar + 1.0;
  const double dn = ch.nbar;
  std::vector<double> root(static_cast<std::size_t>(d) + 1);
  for (int n = 0; n <= d; ++n) root[n] = std::sqrt(static_cast<double>(n));
  auto deriv = [&](const FockDensity& r, FockDensity& out) {
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        Complex v = -(up * (i + j) + dn * (i + j + 2)) * r(i, j);
        if (i + 1 < d && j + 1 < d) v += 2.0 * up * root[i + 1] * root[j + 1] * r(i + 1, j + 1);
        if (i > 0 && j > 0) v += 2.0 * dn * root[i] * root[j] * r(i - 1, j - 1);
        out(i, j) = v;
      }
    }
  };
  auto axpy = [](const FockDensity& a, double s, const FockDensity& b, FockDensity& out) {
    for (std::size_t i = 0; i < out.matrix.size(); ++i) out.matrix[i] = a.matrix[i] + s * b.matrix[i];
  };
  FockDensity cur = rho;
  FockDensity k1(rho.cutoff), k2(rho.cutoff), k3(rho.cutoff), k4(rho.cutoff), tmp(rho.cutoff);
  const Complex t0 = rho.trace();
  for (int s = 0; s < steps; ++s) {
    deriv(cur, k1);
    axpy(cur, 0.5 * dt, k1, tmp);
    deriv(tmp, k2);
    axpy(cur, 0.5 * dt, k2, tmp);
    deriv(tmp, k3);
    axpy(cur, dt, k3, tmp);
    deriv(tmp, k4);
    for (std::size_t i = 0; i < cur.matrix.size(); ++i) {
      cur.matrix[i] += dt / 6.0 * (k1.matrix[i] + 2.0 * k2.matrix[i] + 2.0 * k3.matrix[i] + k4.matrix[i]);
    }
  }
  if (std::abs(cur.trace() - t0) > 1e-6) {
    throw IntegrationError("evolve_master: trace drifted by " +
                           std::to_string(std::abs(cur.trace() - t0)) +
                           "; raise the cutoff or the step count");
  }
  return cur;
}

}  // namespace mcso
