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

#include "mcso/state.hpp"

#include <array>
#include <cmath>
#include <string>

#include "mcso/errors.hpp"
#include "mcso/fockoracle.hpp"
#include "mcso/series.hpp"

namespace mcso {
namespace {

struct Trig {
  double s;
  double c;
  explicit Trig(double theta) : s(std::sin(theta)), c(std::cos(theta)) {}
};

// 2 chi^m (-1)^m = 2 (s c / 2)^m
double half_sc_pow(const Trig& t, int m) { return std::pow(0.5 * t.s * t.c, m); }

double real_part(const char* what, Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw ConsistencyError(std::string(what) + ": non-finite result");
  }
  if (std::abs(z.imag()) > 1e-10 * (1.0 + std::abs(z.real()))) {
    throw ConsistencyError(std::string(what) + ": residual imaginary part " +
                           std::to_string(z.imag()));
  }
  return z.real();
}

std::vector<Complex> hermite_row(int n, Complex z) {
  std::vector<Complex> h(static_cast<std::size_t>(n) + 1);
  hermite_table(n, z, h, std::max(n, kDefaultMaxOrder));
  return h;
}

SuperpositionParams flipped(const SuperpositionParams& p) {
  SuperpositionParams q = p;
  q.alpha0 = -p.alpha0;
  return q;
}

// chi^m * d^{2m+2}/dt^m ds^m dlambda deta of the generating function for
// <a^2 a^dag^2>; cross = false gives the diagonal piece, true the overlap piece.
Complex f_a2ad2(const SuperpositionParams& p, bool cross) {
  const auto k = ClosedFormCoefficients::from(p);
  const int m = p.m;
  const std::vector<std::string> vars{"t", "s", "lambda", "eta"};
  const std::vector<int> caps{m, m, 1, 1};
  const MultiSeries one = MultiSeries::constant(vars, caps, 1.0);
  const MultiSeries t = one.variable_like("t");
  const MultiSeries s = one.variable_like("s");
  const MultiSeries lam = one.variable_like("lambda");
  const MultiSeries eta = one.variable_like("eta");
  const Complex a0 = p.alpha0;
  const Complex ac = std::conj(a0);
  const Complex R = k.R;
  const Complex Rc = std::conj(R);
  const double x = std::norm(a0);

  const MultiSeries ts = t * s;
  const MultiSeries le = lam * eta;
  const MultiSeries hs = -std::norm(R) * ts + R * R * (t * t * eta) + ac * ac * eta +
                         a0 * a0 * lam + Rc * Rc * (s * s * lam);
  const MultiSeries inv = one + 4.0 * le;
  const MultiSeries isq = one + 2.0 * le;
  MultiSeries e = one.zero_like();
  if (!cross) {
    const MultiSeries h0 = R * a0 * t - Rc * ac * s + 2.0 * R * ac * (t * eta) -
                           2.0 * Rc * a0 * (lam * s);
    e = (-x) * one - std::conj(k.K) * t + k.K * s - s * s - t * t + (hs + h0 + x) * inv;
  } else {
    const MultiSeries l0 = R * a0 * t + Rc * ac * s - 2.0 * R * ac * (t * eta) -
                           2.0 * Rc * a0 * (lam * s);
    e = (-x) * one - std::conj(k.K) * t - k.K * s - s * s - t * t + (hs - l0 - x) * inv;
  }
  const std::array<int, 4> orders{m, m, 1, 1};
  return std::pow(k.chi, m) * derivative_at_zero(isq * series_exp(e), orders);
}

// chi^m * d^{2m}/dt^m ds^m of the generating function for <a^dag^2>.
Complex f_ad2(const SuperpositionParams& p, bool cross) {
  const auto k = ClosedFormCoefficients::from(p);
  const int m = p.m;
  const std::vector<std::string> vars{"t", "s"};
  const std::vector<int> caps{m, m};
  const MultiSeries one = MultiSeries::constant(vars, caps, 1.0);
  const MultiSeries t = one.variable_like("t");
  const MultiSeries s = one.variable_like("s");
  const Complex ac = std::conj(p.alpha0);
  const MultiSeries lin = k.R * t + ac;
  const MultiSeries quad = -1.0 * (t * t) - s * s - std::norm(k.R) * (s * t);
  MultiSeries e = quad;
  if (!cross) {
    e += 2.0 * k.B * t - 2.0 * std::conj(k.B) * s;
  } else {
    e += -2.0 * std::conj(k.C) * t - 2.0 * k.C * s + Complex(-2.0 * std::norm(p.alpha0));
  }
  const std::array<int, 2> orders{m, m};
  return std::pow(k.chi, m) * derivative_at_zero(lin * lin * series_exp(e), orders);
}

}  // namespace

ClosedFormCoefficients ClosedFormCoefficients::from(const SuperpositionParams& p) {
  const Trig tr(p.theta);
  const Complex i(0.0, 1.0);
  const Complex em = std::polar(1.0, -0.5 * p.phi);  // sqrt(e^{-i phi})
  const Complex ep = std::polar(1.0, 0.5 * p.phi);   // sqrt(e^{i phi})
  const Complex a0 = p.alpha0;
  const Complex ac = std::conj(a0);
  const double rs = std::sqrt(tr.s / (2.0 * tr.c));
  const double rc = std::sqrt(tr.c / (2.0 * tr.s));
  ClosedFormCoefficients k;
  k.B = i * em * rs * a0 + i * ep * rc * ac;
  k.C = i * em * rc * a0 - i * ep * rs * ac;
  k.chi = -0.5 * tr.s * tr.c;
  k.R = i * em * std::sqrt(2.0 * tr.s / tr.c);
  k.K = i * em * std::sqrt(2.0 * tr.c / tr.s) * a0;
  return k;
}

double contraction_weight(int m, int k, double theta) {
  const double f = factorial(m) / factorial(m - k);
  return std::pow(2.0 * std::tan(theta), k) / factorial(k) * f * f;
}

double normalization(const SuperpositionParams& p) {
  validate(p);
  const auto k = ClosedFormCoefficients::from(p);
  const int m = p.m;
  const auto hb = hermite_row(m, k.B);
  const auto hc = hermite_row(m, k.C);
  double sb = 0.0;
  double sc = 0.0;
  for (int j = 0; j <= m; ++j) {
    const double a = contraction_weight(m, j, p.theta);
    sb += a * std::norm(hb[m - j]);
    sc += (j % 2 ? -a : a) * std::norm(hc[m - j]);
  }
  const double e = std::exp(-2.0 * std::norm(p.alpha0));
  const double sign = (m % 2 ? -1.0 : 1.0) * p.cross_sign();
  const double n = 2.0 * half_sc_pow(Trig(p.theta), m) * (sb + sign * sc * e);
  if (!std::isfinite(n) || !(n > 0.0)) {
    throw ConsistencyError("normalization: non-positive norm " + std::to_string(n));
  }
  return n;
}

double fidelity(const SuperpositionParams& p) {
  validate(p);
  if (p.parity == Parity::even) {
    throw UnsupportedOperationError("fidelity is defined against the odd cat only");
  }
  if (p.m == 0) return 1.0;
  if (p.m % 2) return 0.0;
  const auto k = ClosedFormCoefficients::from(p);
  const double e = std::exp(-2.0 * std::norm(p.alpha0));
  const Complex amp = 2.0 * (hermite(p.m, std::conj(k.B)) - e * hermite(p.m, k.C));
  const double f = std::pow(k.chi, p.m) * std::norm(amp) /
                   (normalization(p) * 2.0 * -std::expm1(-2.0 * std::norm(p.alpha0)));
  if (!std::isfinite(f)) throw ConsistencyError("fidelity: non-finite result");
  return f;
}

double mean_photon(const SuperpositionParams& p) {
  validate(p);
  const auto k = ClosedFormCoefficients::from(p);
  const int m = p.m;
  const double x = std::norm(p.alpha0);
  const double e = std::exp(-2.0 * x);
  const double r2 = std::norm(k.R);
  const Complex rca = std::conj(k.R) * std::conj(p.alpha0);
  const auto hb = hermite_row(m, k.B);
  const auto hbm = hermite_row(m, -k.B);
  const auto hbc = hermite_row(m, std::conj(k.B));
  const auto hc = hermite_row(m, k.C);
  const auto hcc = hermite_row(m, std::conj(k.C));
  const double cross = -p.cross_sign();
  double total = 0.0;
  for (int j = 0; j <= m; ++j) {
    const int r = m - j;
    const double f = factorial(m) / factorial(r);
    const double w = 2.0 / factorial(j) * f * f * std::pow(-r2, j);
    double b = ((r % 2) ? -1.0 : 1.0) * (j + 1 + x) * std::norm(hb[r]) -
               cross * (j + 1 - x) * std::norm(hc[r]) * e;
    if (r > 0) {
      b += 2.0 * std::real(rca * static_cast<double>(r) * hbm[r] * hbc[r - 1]);
      b -= cross * 2.0 * std::real(rca * static_cast<double>(r) * hcc[r] * hc[r - 1] * e);
    }
    total += w * b;
  }
  const double n = std::pow(k.chi, m) * total / normalization(p) - 1.0;
  if (!std::isfinite(n)) throw ConsistencyError("mean_photon: non-finite result");
  return n;
}

double moment_a2ad2(const SuperpositionParams& p) {
  validate(p);
  const SuperpositionParams q = flipped(p);
  const Complex direct = f_a2ad2(p, false) + f_a2ad2(q, false);
  const Complex cross = f_a2ad2(p, true) + f_a2ad2(q, true);
  return real_part("moment_a2ad2", (direct + p.cross_sign() * cross) / normalization(p));
}

Complex mean_ad2(const SuperpositionParams& p) {
  validate(p);
  const SuperpositionParams q = flipped(p);
  const Complex direct = f_ad2(p, false) + f_ad2(q, false);
  const Complex cross = f_ad2(p, true) + f_ad2(q, true);
  const Complex v = (direct + p.cross_sign() * cross) / normalization(p);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw ConsistencyError("mean_ad2: non-finite result");
  }
  return v;
}

double mandel_q(const SuperpositionParams& p) {
  const double n = mean_photon(p);
  if (!(n > 0.0)) throw UndefinedQuantityError("Mandel Q needs a nonzero mean photon number");
  const double ad2a2 = moment_a2ad2(p) - 4.0 * n - 2.0;
  return ad2a2 / n - n;
}

double squeezing(const SuperpositionParams& p) {
  const double s = -2.0 * std::abs(mean_ad2(p)) + 2.0 * mean_photon(p);
  if (s < -1.0 - 1e-9) {
    throw ConsistencyError("squeezing: S = " + std::to_string(s) + " violates S >= -1");
  }
  return s;
}

namespace {

class PhotocountKernel {
 public:
  PhotocountKernel(const SuperpositionParams& p, double xi) : p_(p), xi_(xi) {
    const auto k = ClosedFormCoefficients::from(p);
    const int m = p.m;
    x_ = std::norm(p.alpha0);
    R_ = k.R;
    const Complex J = (1.0 - xi) * k.R * p.alpha0;
    h1_ = hermite_row(m, 0.5 * (k.K - std::conj(J)));
    h2_ = hermite_row(m, 0.5 * (J - std::conj(k.K)));
    h3_ = hermite_row(m, 0.5 * (k.K + std::conj(J)));
    h4_ = hermite_row(m, 0.5 * (std::conj(k.K) + J));
    prefactor_ = 2.0 * std::pow(k.chi, m) * factorial(m) * factorial(m) / normalization(p);
  }

  double operator()(int n) const {
    const int m = p_.m;
    const Complex a0 = p_.alpha0;
    const Complex rc = -std::conj(R_);
    const Complex r = -R_;
    const double d1 = std::exp(-xi_ * x_);
    const double d2 = std::exp((xi_ - 2.0) * x_);
    const double log_xi = std::log(xi_);
    const double log_a = x_ > 0.0 ? 0.5 * std::log(x_) : 0.0;
    const double arg = std::arg(a0);
    Complex total = 0.0;
    for (int j = 0; j <= m; ++j) {
      const double pj = std::pow(1.0 - xi_, j);
      for (int l = 0; l <= std::min(n, m - j); ++l) {
        for (int k = 0; k <= std::min(n, m - j); ++k) {
          // xi^n n! a0^{n-l} a0*^{n-k} / ((n-l)! (n-k)!) in log-magnitude form
          const int el = n - l;
          const int ek = n - k;
          if (x_ == 0.0 && (el > 0 || ek > 0)) continue;
          const double logmag = n * log_xi + (el + ek) * log_a + std::lgamma(n + 1.0) -
                                std::lgamma(el + 1.0) - std::lgamma(ek + 1.0);
          const Complex moment = std::polar(std::exp(logmag), (el - ek) * arg);
          const Complex coeff = ((j + k) % 2 ? -1.0 : 1.0) * std::pow(rc, j + l) *
                                std::pow(r, j + k) * moment * pj /
                                (factorial(l) * factorial(j) * factorial(k) *
                                 factorial(m - l - j) * factorial(m - j - k));
          const Complex t1 = d1 * h1_[m - l - j] * h2_[m - j - k];
          const Complex t2 = (ek % 2 ? -1.0 : 1.0) * d2 * h3_[m - l - j] * h4_[m - j - k];
          total += coeff * (t1 + p_.cross_sign() * t2);
        }
      }
    }
    double v = real_part("photocount", prefactor_ * total);
    if (v < -1e-10) {
      throw ConsistencyError("photocount: negative probability " + std::to_string(v));
    }
    return std::max(v, 0.0);
  }

 private:
  SuperpositionParams p_;
  double xi_;
  double x_ = 0.0;
  Complex R_;
  std::vector<Complex> h1_, h2_, h3_, h4_;
  double prefactor_ = 0.0;
};

void check_photocount_args(double xi, int n, int n_max) {
  if (!(xi > 0.0) || !(xi <= 1.0)) throw ArgumentError("xi must lie in (0, 1]");
  if (n < 0 || n > n_max) {
    throw ArgumentError("photon number " + std::to_string(n) + " outside [0, " +
                        std::to_string(n_max) + "]");
  }
}

std::vector<double> number_distribution(const SuperpositionParams& p, int n_last) {
  const FockVector v = build_state(p);
  const double norm = normalization(p);
  std::vector<double> out(static_cast<std::size_t>(n_last) + 1, 0.0);
  for (int n = 0; n <= n_last && n <= v.cutoff; ++n) out[n] = std::norm(v.amps[n]) / norm;
  return out;
}

}  // namespace

double photocount(const SuperpositionParams& p, double xi, int n, int n_max) {
  validate(p);
  check_photocount_args(xi, n, n_max);
  if (xi == 1.0) return number_distribution(p, n)[n];
  return PhotocountKernel(p, xi)(n);
}

std::vector<double> photocount_distribution(const SuperpositionParams& p, double xi, int n_last,
                                            int n_max) {
  validate(p);
  check_photocount_args(xi, n_last, n_max);
  if (xi == 1.0) return number_distribution(p, n_last);
  const PhotocountKernel kernel(p, xi);
  std::vector<double> out(static_cast<std::size_t>(n_last) + 1);
  for (int n = 0; n <= n_last; ++n) out[n] = kernel(n);
  return out;
}

}  // namespace mcso
