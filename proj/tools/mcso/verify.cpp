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

#include "verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mcso/mcso.hpp"

namespace mcso::cli {
namespace {

constexpr double kRel = 1e-8;
constexpr double kAbs = 1e-10;

std::string describe(const SuperpositionParams& p) {
  std::ostringstream s;
  s << "m=" << p.m << " theta=" << p.theta << " phi=" << p.phi << " alpha0=(" << p.alpha0.real()
    << "," << p.alpha0.imag() << ") " << to_string(p.parity);
  return s.str();
}

struct Local {
  int checks = 0;
  double max_relative = 0.0;
  std::vector<std::string> failures;

  void compare(const std::string& what, const SuperpositionParams& p, Complex closed,
               Complex oracle) {
    ++checks;
    const double diff = std::abs(closed - oracle);
    max_relative = std::max(max_relative, diff / std::max(std::abs(oracle), kAbs / kRel));
    if (diff > kRel * std::abs(oracle) + kAbs) {
      std::ostringstream s;
      s.precision(17);
      s << what << " " << describe(p) << ": closed " << closed << " oracle " << oracle;
      failures.push_back(s.str());
    }
  }
};

void check_point(const SuperpositionParams& p, Local& out) {
  const FockVector v = build_state(p);
  out.compare("normalization", p, normalization(p), v.norm_squared());
  const double n = oracle_moment(v, 1, 1).real();
  out.compare("mean_photon", p, mean_photon(p), n);
  out.compare("moment_a2ad2", p, moment_a2ad2(p), oracle_moment(v, 2, 2).real() + 4.0 * n + 2.0);
  out.compare("mean_ad2", p, mean_ad2(p), oracle_moment(v, 2, 0));
  if (p.parity == Parity::odd) {
    SuperpositionParams p0 = p;
    p0.m = 0;
    const FockVector v0 = build_state(p0, v.cutoff);
    Complex overlap = 0.0;
    for (int k = 0; k <= v.cutoff; ++k) overlap += std::conj(v0.amps[k]) * v.amps[k];
    out.compare("fidelity", p, fidelity(p),
                std::norm(overlap) / (v.norm_squared() * v0.norm_squared()));
  }
  for (double xi : {0.2, 0.9}) {
    const auto dist = photocount_distribution(p, xi, 20);
    for (int k = 0; k <= 20; ++k) {
      out.compare("photocount(xi=" + std::to_string(xi) + ",n=" + std::to_string(k) + ")", p,
                  dist[k], oracle_photocount(v, xi, k));
    }
  }
}

}  // namespace

std::vector<SuperpositionParams> oracle_grid(Parity parity) {
  const double pi = std::numbers::pi;
  std::vector<SuperpositionParams> g;
  for (int m = 0; m <= 4; ++m) {
    for (double th : {pi / 8, pi / 4, pi / 3}) {
      for (double ph : {0.0, pi / 4, pi / 2}) {
        for (Complex a : {Complex(0.3), Complex(1.0), Complex(1.0, 1.0), Complex(2.0)}) {
          g.push_back({m, th, ph, a, parity});
        }
      }
    }
  }
  return g;
}

SuiteReport run_oracle_suite(Parity parity, unsigned threads) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto grid = oracle_grid(parity);
  std::vector<Local> locals(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) { check_point(grid[i], locals[i]); }, threads);
  SuiteReport r;
  for (const auto& l : locals) {
    r.checks += l.checks;
    r.max_relative = std::max(r.max_relative, l.max_relative);
    r.failure_lines.insert(r.failure_lines.end(), l.failures.begin(), l.failures.end());
  }
  r.failures = static_cast<int>(r.failure_lines.size());
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace mcso::cli
