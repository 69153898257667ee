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

#include "mcso/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mcso/errors.hpp"

namespace mcso {

MultiSeries::MultiSeries(std::vector<std::string> vars, std::vector<int> caps)
    : vars_(std::move(vars)), caps_(std::move(caps)) {
  if (vars_.size() != caps_.size()) {
    throw ArgumentError("MultiSeries: variable and cap counts differ");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (caps_[i] < 0) throw ArgumentError("MultiSeries: negative cap for " + vars_[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (vars_[i] == vars_[j]) throw ArgumentError("MultiSeries: duplicate variable " + vars_[i]);
    }
  }
  const std::size_t d = vars_.size();
  strides_.assign(d, 1);
  std::size_t total = 1;
  for (std::size_t j = d; j-- > 0;) {
    strides_[j] = total;
    total *= static_cast<std::size_t>(caps_[j]) + 1;
  }
  coeffs_.assign(total, Complex{});
  exponents_.resize(total * d);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t r = i;
    for (std::size_t j = 0; j < d; ++j) {
      exponents_[i * d + j] = static_cast<int>(r / strides_[j]);
      r %= strides_[j];
    }
  }
}

MultiSeries MultiSeries::constant(std::vector<std::string> vars, std::vector<int> caps,
                                  Complex c) {
  MultiSeries s(std::move(vars), std::move(caps));
  s.coeffs_[0] = c;
  return s;
}

MultiSeries MultiSeries::variable(std::vector<std::string> vars, std::vector<int> caps,
                                  std::string_view name, Complex coeff) {
  MultiSeries s(std::move(vars), std::move(caps));
  return s.variable_like(name, coeff);
}

MultiSeries MultiSeries::zero_like() const {
  MultiSeries s = *this;
  std::fill(s.coeffs_.begin(), s.coeffs_.end(), Complex{});
  return s;
}

MultiSeries MultiSeries::constant_like(Complex c) const {
  MultiSeries s = zero_like();
  s.coeffs_[0] = c;
  return s;
}

MultiSeries MultiSeries::variable_like(std::string_view name, Complex coeff) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw ArgumentError("MultiSeries: unknown variable " + std::string(name));
  MultiSeries s = zero_like();
  const auto j = static_cast<std::size_t>(it - vars_.begin());
  // a variable with cap 0 truncates to nothing
  if (caps_[j] >= 1) s.coeffs_[strides_[j]] = coeff;
  return s;
}

std::size_t MultiSeries::index_of(std::span<const int> exponents) const {
  if (exponents.size() != vars_.size()) {
    throw ArgumentError("MultiSeries: exponent tuple has wrong length");
  }
  std::size_t idx = 0;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (exponents[j] < 0) throw ArgumentError("MultiSeries: negative exponent");
    if (exponents[j] > caps_[j]) return coeffs_.size();
    idx += static_cast<std::size_t>(exponents[j]) * strides_[j];
  }
  return idx;
}

Complex MultiSeries::coeff(std::span<const int> exponents) const {
  const std::size_t idx = index_of(exponents);
  return idx < coeffs_.size() ? coeffs_[idx] : Complex{};
}

void MultiSeries::set_coeff(std::span<const int> exponents, Complex value) {
  const std::size_t idx = index_of(exponents);
  if (idx >= coeffs_.size()) throw ArgumentError("MultiSeries: exponent exceeds cap");
  coeffs_[idx] = value;
}

bool MultiSeries::same_shape(const MultiSeries& other) const {
  return vars_ == other.vars_ && caps_ == other.caps_;
}

void MultiSeries::require_same_shape(const MultiSeries& other, const char* op) const {
  if (!same_shape(other)) {
    throw ArgumentError(std::string("MultiSeries ") + op + ": operands differ in variables or caps");
  }
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& other) {
  require_same_shape(other, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& other) {
  require_same_shape(other, "sub");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

MultiSeries& MultiSeries::operator*=(Complex c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

MultiSeries& MultiSeries::operator+=(Complex c) {
  coeffs_[0] += c;
  return *this;
}

MultiSeries MultiSeries::operator-() const {
  MultiSeries s = *this;
  for (auto& x : s.coeffs_) x = -x;
  return s;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  a.require_same_shape(b, "mul");
  MultiSeries out = a.zero_like();
  const std::size_t d = a.vars_.size();
  const std::size_t n = a.coeffs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Complex ai = a.coeffs_[i];
    if (ai == Complex{}) continue;
    const int* ei = &a.exponents_[i * d];
    for (std::size_t k = 0; k < n; ++k) {
      const Complex bk = b.coeffs_[k];
      if (bk == Complex{}) continue;
      const int* ek = &a.exponents_[k * d];
      bool keep = true;
      for (std::size_t j = 0; j < d; ++j) {
        if (ei[j] + ek[j] > a.caps_[j]) {
          keep = false;
          break;
        }
      }
      // i + k is the dense index of the summed exponent when nothing overflows
      if (keep) out.coeffs_[i + k] += ai * bk;
    }
  }
  return out;
}

MultiSeries series_add(const MultiSeries& a, const MultiSeries& b) { return a + b; }

MultiSeries series_mul(const MultiSeries& a, const MultiSeries& b) { return a * b; }

MultiSeries series_exp(const MultiSeries& a) {
  const Complex a0 = a.constant_term();
  MultiSeries u = a;
  u += -a0;
  const int degree = std::accumulate(a.caps().begin(), a.caps().end(), 0);
  MultiSeries sum = a.constant_like(1.0);
  MultiSeries term = a.constant_like(1.0);
  for (int k = 1; k <= degree; ++k) {
    term = term * u;
    term *= 1.0 / k;
    sum += term;
  }
  sum *= std::exp(a0);
  return sum;
}

MultiSeries series_inv_sqrt(const MultiSeries& a) {
  if (a.constant_term() != Complex(1.0)) {
    throw ArgumentError("series_inv_sqrt: constant term must be 1");
  }
  MultiSeries u = a;
  u += -1.0;
  const int degree = std::accumulate(a.caps().begin(), a.caps().end(), 0);
  MultiSeries sum = a.constant_like(1.0);
  MultiSeries term = a.constant_like(1.0);
  // (1 + u)^{-1/2} = sum_k binom(-1/2, k) u^k
  double c = 1.0;
  for (int k = 1; k <= degree; ++k) {
    c *= (-0.5 - (k - 1)) / k;
    term = term * u;
    sum += c * term;
  }
  return sum;
}

Complex derivative_at_zero(const MultiSeries& a, std::span<const int> orders) {
  if (orders.size() != a.vars().size()) {
    throw ArgumentError("derivative_at_zero: orders has wrong length");
  }
  double scale = 1.0;
  for (std::size_t j = 0; j < orders.size(); ++j) {
    if (orders[j] < 0 || orders[j] > a.caps()[j]) {
      throw ArgumentError("derivative_at_zero: order exceeds cap for " + a.vars()[j]);
    }
    scale *= factorial(orders[j]);
  }
  return a.coeff(orders) * scale;
}

}  // namespace mcso
