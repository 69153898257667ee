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

#include <complex>
#include <span>

namespace mcso {

using Complex = std::complex<double>;

/// Default upper bound on polynomial orders accepted by the special functions.
inline constexpr int kDefaultMaxOrder = 64;

/// Hermite polynomial H_n(z) (physicists' convention), evaluated by the
/// three-term recurrence H_{n+1} = 2z H_n - 2n H_{n-1}.
/// Throws ArgumentError when n < 0 or n > max_order.
Complex hermite(int n, Complex z, int max_order = kDefaultMaxOrder);

/// Laguerre polynomial L_n(x) via (n+1) L_{n+1} = (2n+1-x) L_n - n L_{n-1}.
Complex laguerre(int n, Complex x, int max_order = kDefaultMaxOrder);

/// Two-variable Hermite polynomial
///   H_{m,n}(z, w) = sum_l (-1)^l m! n! z^{m-l} w^{n-l} / (l! (m-l)! (n-l)!),
/// evaluated through H_{m+1,n} = z H_{m,n} - n H_{m,n-1}.
Complex hermite2(int m, int n, Complex z, Complex w, int max_order = kDefaultMaxOrder);

/// Fills out[0..n] with H_0(z)..H_n(z); out must hold n + 1 entries.
void hermite_table(int n, Complex z, std::span<Complex> out, int max_order = kDefaultMaxOrder);

/// n! as a double (exact up to 22!, correctly rounded beyond).
double factorial(int n);

/// Binomial coefficient C(n, k) as a double; zero outside 0 <= k <= n.
double binomial(int n, int k);

}  // namespace mcso
