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

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcso/special.hpp"

namespace mcso {

/// Truncated multivariate power series with complex coefficients.
///
/// The variable list and per-variable degree caps are fixed at construction
/// and every binary operation requires both operands to agree on them.
/// Coefficients are stored densely in mixed-radix order (first variable
/// varies slowest), so the series for caps (c_1, ..., c_d) holds
/// prod(c_i + 1) entries. All arithmetic is exact modulo truncation: terms
/// whose exponent exceeds a cap in any variable are dropped.
class MultiSeries {
 public:
  MultiSeries(std::vector<std::string> vars, std::vector<int> caps);

  static MultiSeries constant(std::vector<std::string> vars, std::vector<int> caps, Complex c);
  /// coeff * vars[name]
  static MultiSeries variable(std::vector<std::string> vars, std::vector<int> caps,
                              std::string_view name, Complex coeff = 1.0);

  /// Same variables and caps, all coefficients zero.
  MultiSeries zero_like() const;
  MultiSeries constant_like(Complex c) const;
  MultiSeries variable_like(std::string_view name, Complex coeff = 1.0) const;

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<int>& caps() const { return caps_; }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient at an exponent tuple; zero when the tuple exceeds the caps.
  Complex coeff(std::span<const int> exponents) const;
  void set_coeff(std::span<const int> exponents, Complex value);
  Complex constant_term() const { return coeffs_.front(); }

  bool same_shape(const MultiSeries& other) const;

  MultiSeries& operator+=(const MultiSeries& other);
  MultiSeries& operator-=(const MultiSeries& other);
  MultiSeries& operator*=(Complex c);
  MultiSeries& operator+=(Complex c);

  friend MultiSeries operator+(MultiSeries a, const MultiSeries& b) { return a += b; }
  friend MultiSeries operator-(MultiSeries a, const MultiSeries& b) { return a -= b; }
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
  friend MultiSeries operator*(MultiSeries a, Complex c) { return a *= c; }
  friend MultiSeries operator*(Complex c, MultiSeries a) { return a *= c; }
  friend MultiSeries operator+(MultiSeries a, Complex c) { return a += c; }
  friend MultiSeries operator+(Complex c, MultiSeries a) { return a += c; }
  friend MultiSeries operator-(MultiSeries a, Complex c) { return a += -c; }
  MultiSeries operator-() const;

 private:
  std::size_t index_of(std::span<const int> exponents) const;
  void require_same_shape(const MultiSeries& other, const char* op) const;

  std::vector<std::string> vars_;
  std::vector<int> caps_;
  std::vector<std::size_t> strides_;
  // exponents_[i * d + j]: exponent of variable j at dense index i.
  std::vector<int> exponents_;
  std::vector<Complex> coeffs_;
};

/// Coefficientwise sum. Throws ArgumentError when vars or caps differ.
MultiSeries series_add(const MultiSeries& a, const MultiSeries& b);

/// Truncated Cauchy product. Throws ArgumentError when vars or caps differ.
MultiSeries series_mul(const MultiSeries& a, const MultiSeries& b);

/// exp(a) = e^{a_0} * sum_k (a - a_0)^k / k!, the sum running to the total
/// degree sum(caps), beyond which every term vanishes under truncation.
MultiSeries series_exp(const MultiSeries& a);

/// a^{-1/2} for a series with constant term exactly 1, via the binomial
/// series of (1 + u)^{-1/2}. Throws ArgumentError otherwise.
MultiSeries series_inv_sqrt(const MultiSeries& a);

/// Mixed partial derivative at the origin: coeff(orders) * prod(orders_i!).
/// Throws ArgumentError when orders has the wrong length or exceeds the caps.
Complex derivative_at_zero(const MultiSeries& a, std::span<const int> orders);

}  // namespace mcso
