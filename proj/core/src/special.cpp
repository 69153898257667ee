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

#include "mcso/special.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "mcso/errors.hpp"

namespace mcso {
namespace {

void check_order(const char* fn, int n, int max_order) {
  if (n < 0 || n > max_order) {
    throw ArgumentError(std::string(fn) + ": order " + std::to_string(n) +
                        " outside [0, " + std::to_string(max_order) + "]");
  }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_argument(const char* fn, Complex z) {
  if (!finite(z)) throw ArgumentError(std::string(fn) + ": non-finite argument");
}

Complex checked(const char* fn, Complex value) {
  if (!finite(value)) throw ConsistencyError(std::string(fn) + ": result overflowed");
  return value;
}

constexpr int kMaxFactorial = 170;

const std::array<double, kMaxFactorial + 1>& factorial_table() {
  static const auto table = [] {
    std::array<double, kMaxFactorial + 1> t{};
    t[0] = 1.0;
    for (int i = 1; i <= kMaxFactorial; ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  return table;
}

}  // namespace

void hermite_table(int n, Complex z, std::span<Complex> out, int max_order) {
  check_order("hermite", n, max_order);
  check_argument("hermite", z);
  if (out.size() < static_cast<std::size_t>(n) + 1) {
    throw ArgumentError("hermite_table: output span too small");
  }
  out[0] = 1.0;
  if (n == 0) return;
  out[1] = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    out[k + 1] = 2.0 * z * out[k] - 2.0 * k * out[k - 1];
  }
  checked("hermite", out[n]);
}

Complex hermite(int n, Complex z, int max_order) {
  check_order("hermite", n, max_order);
  check_argument("hermite", z);
  Complex prev = 1.0;
  if (n == 0) return prev;
  Complex cur = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    Complex next = 2.0 * z * cur - 2.0 * k * prev;
    prev = cur;
    cur = next;
  }
  return checked("hermite", cur);
}

Complex laguerre(int n, Complex x, int max_order) {
  check_order("laguerre", n, max_order);
  check_argument("laguerre", x);
  Complex prev = 1.0;
  if (n == 0) return prev;
  Complex cur = 1.0 - x;
  for (int k = 1; k < n; ++k) {
    Complex next = ((2.0 * k + 1.0 - x) * cur - static_cast<double>(k) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return checked("laguerre", cur);
}

Complex hermite2(int m, int n, Complex z, Complex w, int max_order) {
  check_order("hermite2", m, max_order);
  check_order("hermite2", n, max_order);
  check_argument("hermite2", z);
  check_argument("hermite2", w);
  // row[j] = H_{i,j}(z, w) for the current i, starting from H_{0,j} = w^j.
  std::vector<Complex> row(n + 1);
  row[0] = 1.0;
  for (int j = 1; j <= n; ++j) row[j] = row[j - 1] * w;
  for (int i = 0; i < m; ++i) {
    for (int j = n; j >= 1; --j) row[j] = z * row[j] - static_cast<double>(j) * row[j - 1];
    row[0] = z * row[0];
  }
  return checked("hermite2", row[n]);
}

double factorial(int n) {
  if (n < 0 || n > kMaxFactorial) {
    throw ArgumentError("factorial: argument " + std::to_string(n) + " out of range");
  }
  return factorial_table()[n];
}

double binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r < 9e15 ? std::round(r) : r;
}

}  // namespace mcso
