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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "mcso/errors.hpp"
#include "mcso/fockoracle.hpp"
#include "mcso/phasespace.hpp"
#include "reference.hpp"

namespace {

using mcso::Complex;
using mcso::GridSpec;
using mcso::SuperpositionParams;
using mcso::ThermalChannel;
constexpr double kPi = std::numbers::pi;
constexpr double kTwoOverPi = 2.0 / std::numbers::pi;

SuperpositionParams params(int m, double theta, double phi, Complex a0) {
  SuperpositionParams p;
  p.m = m;
  p.theta = theta;
  p.phi = phi;
  p.alpha0 = a0;
  return p;
}

GridSpec square(double half, int n) { return {-half, half, -half, half, n, n}; }

std::vector<Complex> ref_points() {
  std::vector<Complex> pts;
  for (const auto& j : mcso::test::ref_node({"wigner", "points"})) {
    pts.emplace_back(mcso::test::to_double(j[0]), mcso::test::to_double(j[1]));
  }
  return pts;
}

void expect_matches_reference(const std::function<double(Complex)>& w, const char* key,
                              double tol) {
  const auto pts = ref_points();
  const auto& want = mcso::test::ref_node({"wigner", key});
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_NEAR(w(pts[i]), mcso::test::to_double(want[i]), tol) << key << " at " << pts[i];
  }
}

TEST(Wigner, OriginOfOddCat) {
  for (Complex a : {Complex{0.1, 0.0}, Complex{1.0, 1.0}, Complex{-2.0, 0.5}}) {
    EXPECT_NEAR(mcso::wigner(params(0, 0.7, 0.0, a), 0.0), -kTwoOverPi, 1e-12);
  }
}

TEST(Wigner, AgreesWithReference) {
  const mcso::WignerEvaluator w2(params(2, kPi / 3, 0.0, {1.0, 1.0}));
  expect_matches_reference([&](Complex a) { return w2(a); }, "m2_pi3_a1p1i", 1e-12);
  const mcso::WignerEvaluator w1(params(1, kPi / 3, 0.0, {1.0, 1.0}));
  expect_matches_reference([&](Complex a) { return w1(a); }, "m1_pi3_a1p1i", 1e-12);
}

TEST(Wigner, AgreesWithOracleAtRandomPoints) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    SuperpositionParams p = params(trial % 4, 0.2 + 1.2 * std::abs(u(rng)), 3.0 * std::abs(u(rng)),
                                   {1.5 * u(rng), 1.5 * u(rng)});
    p.parity = trial % 3 == 0 ? mcso::Parity::even : mcso::Parity::odd;
    const auto v = mcso::build_state(p, 128);
    const mcso::WignerEvaluator w(p);
    for (int k = 0; k < 4; ++k) {
      const Complex a{2.0 * u(rng), 2.0 * u(rng)};
      const double o = mcso::oracle_wigner(v, a);
      EXPECT_NEAR(w(a), o, 1e-8 * std::max(1.0, std::abs(o)));
    }
  }
}

TEST(WignerGrid, MinimumAtCentreForEvenM) {
  const auto g = mcso::wigner_grid(params(2, kPi / 3, 0.0, {1.0, 1.0}), square(4.0, 101));
  EXPECT_EQ(g.min(), g.at(50, 50));
  EXPECT_NEAR(std::abs(g.point(50, 50)), 0.0, 1e-12);
}

TEST(WignerGrid, SymmetryAndDistinctness) {
  const auto g0 = mcso::wigner_grid(params(0, 0.8, 0.0, {1.0, 0.5}), square(3.0, 40));
  const auto g1 = mcso::wigner_grid(params(1, 0.8, 0.0, {1.0, 0.5}), square(3.0, 40));
  double asym = 0.0, diff = 0.0;
  for (int i = 0; i < 40; ++i)
    for (int j = 0; j < 40; ++j) {
      asym = std::max(asym, std::abs(g0.at(i, j) - g0.at(39 - i, 39 - j)));
      diff = std::max(diff, std::abs(g0.at(i, j) - g1.at(i, j)));
    }
  EXPECT_LT(asym, 1e-12);
  EXPECT_GT(diff, 1e-2);
}

TEST(WignerGrid, Normalization) {
  for (int m = 0; m <= 3; ++m)
    for (Complex a : {Complex{0.3, 0.0}, Complex{1.0, 1.0}, Complex{2.0, 0.0}}) {
      const auto g = mcso::wigner_grid(params(m, 0.9, 0.4, a), square(6.0, 256));
      EXPECT_NEAR(g.integral(), 1.0, 1e-3) << "m=" << m << " a=" << a;
    }
}

TEST(WignerGrid, RejectsBadSpec) {
  EXPECT_THROW(mcso::wigner_grid(params(0, 0.5, 0.0, 1.0), {1.0, -1.0, -1.0, 1.0, 4, 4}),
               mcso::ArgumentError);
  EXPECT_THROW(mcso::wigner_grid(params(0, 0.5, 0.0, 1.0), square(1.0, 1)), mcso::ArgumentError);
}

TEST(WignerGrid, SerializationRoundTrip) {
  const auto g = mcso::wigner_grid(params(1, 0.5, 0.2, {0.3, 0.7}), {-2.0, 2.0, -1.0, 1.5, 7, 5});
  const auto back = mcso::wigner_grid_from_json(mcso::to_json(g));
  EXPECT_EQ(back.spec.nx, 7);
  EXPECT_EQ(back.spec.ny, 5);
  EXPECT_EQ(back.spec.im_max, 1.5);
  EXPECT_EQ(back.values, g.values);
  const std::string csv = mcso::to_csv(g);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "re,im,w");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 36);
}

TEST(NegativeVolume, OddCatIsNegative) {
  EXPECT_GT(mcso::negative_volume(params(0, 0.5, 0.0, 0.1)).value, 0.1);
}

TEST(NegativeVolume, GrowsWithTheta) {
  const auto hi = mcso::negative_volume(params(1, kPi / 3, 0.0, 0.1));
  const auto lo = mcso::negative_volume(params(1, kPi / 8, 0.0, 0.1));
  EXPECT_GT(hi.value, lo.value);
  EXPECT_NEAR(hi.integral, 1.0, 1e-6);
}

TEST(NegativeVolume, CoherentFixtureIsZero) {
  const auto v = mcso::fock_vector_from_json(mcso::test::read_fixture("coherent_1p0.5i.json"));
  ASSERT_EQ(v.cutoff, 512);
  const Complex alpha{1.0, 0.5};
  EXPECT_NEAR(mcso::oracle_wigner(v, alpha), kTwoOverPi, 1e-10);
  mcso::QuadratureSettings q;
  q.half_width = std::abs(alpha) + 6.0;
  q.initial_cells = 16;
  const auto r = mcso::negative_volume([&](Complex a) { return mcso::oracle_wigner(v, a); }, q);
  EXPECT_NEAR(r.value, 0.0, 1e-4);
  EXPECT_NEAR(r.integral, 1.0, 1e-6);
}

TEST(NegativeVolume, ReportsLastEstimatesOnFailure) {
  mcso::QuadratureSettings q;
  q.max_refinements = 2;
  q.tolerance = 1e-14;
  const mcso::WignerEvaluator w(params(1, 0.7, 0.0, 1.0));
  try {
    mcso::negative_volume([&](Complex a) { return w(a); }, q);
    FAIL() << "expected a convergence error";
  } catch (const mcso::ConvergenceError& e) {
    EXPECT_GT(e.last_estimate(), 0.0);
    EXPECT_GT(e.previous_estimate(), 0.0);
    EXPECT_NE(e.last_estimate(), e.previous_estimate());
  }
}

TEST(EvolvedWigner, ZeroTimeIsStatic) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = params(trial % 5, 0.2 + 1.2 * std::abs(u(rng)), 3.0 * std::abs(u(rng)),
                          {1.5 * u(rng), 1.5 * u(rng)});
    const ThermalChannel ch{0.0, 0.3 * trial};
    for (int k = 0; k < 5; ++k) {
      const Complex g{2.0 * u(rng), 2.0 * u(rng)};
      EXPECT_NEAR(mcso::wigner_evolved(p, ch, g), mcso::wigner(p, g), 1e-10);
    }
  }
}

TEST(EvolvedWigner, AgreesWithReferenceChannel) {
  const auto p = params(1, kPi / 3, 0.0, {1.0, 1.0});
  const mcso::EvolvedWignerEvaluator a(p, {0.05, 0.2});
  expect_matches_reference([&](Complex g) { return a(g); }, "evolved_m1_pi3_a1p1i_kt0p05_nbar0p2",
                           1e-9);
  const mcso::EvolvedWignerEvaluator b(p, {0.1, 0.2});
  expect_matches_reference([&](Complex g) { return b(g); }, "evolved_m1_pi3_a1p1i_kt0p1_nbar0p2",
                           1e-9);
}

TEST(EvolvedWigner, TracePreserved) {
  const auto p = params(1, kPi / 3, 0.0, {1.0, 1.0});
  for (double kt : {0.0, 0.05, 0.1, 3.0}) {
    const auto g = mcso::wigner_evolved_grid(p, {kt, 0.2}, square(6.0, 200));
    EXPECT_NEAR(g.integral(), 1.0, 1e-3) << "kappa_t=" << kt;
  }
}

TEST(EvolvedWigner, NegativityDecays) {
  const auto p = params(1, kPi / 3, 0.0, {1.0, 1.0});
  double prev = 1.0;
  for (double kt : {0.001, 0.05, 0.1, 3.0}) {
    const mcso::EvolvedWignerEvaluator w(p, {kt, 0.2});
    mcso::QuadratureSettings q;
    q.half_width = std::abs(p.alpha0) + 6.0;
    const double d = mcso::negative_volume([&](Complex g) { return w(g); }, q).value;
    EXPECT_LE(d, prev + 1e-4) << "kappa_t=" << kt;
    prev = d;
  }
  EXPECT_LT(prev, 1e-4);
}

TEST(EvolvedWigner, HotterBathWashesOutFaster) {
  const auto p = params(1, kPi / 3, 0.0, {1.0, 1.0});
  double prev = -1.0;
  for (double nbar : {0.0, 0.5, 2.0, 8.0}) {
    const double mn = mcso::wigner_evolved_grid(p, {0.05, nbar}, square(4.0, 101)).min();
    EXPECT_GE(mn, prev);
    prev = mn;
  }
}

TEST(EvolvedWigner, ApproachesThermalState) {
  const auto p = params(1, kPi / 3, 0.0, {1.0, 1.0});
  const auto g = mcso::wigner_evolved_grid(p, {8.0, 0.2}, square(4.0, 101));
  double d = 0.0;
  for (int i = 0; i < 101; ++i)
    for (int j = 0; j < 101; ++j) d = std::max(d, std::abs(g.at(i, j) - mcso::thermal_wigner(0.2, g.point(i, j))));
  EXPECT_LT(d, 1e-6);
  EXPECT_NEAR(mcso::thermal_wigner(0.2, 0.0), kTwoOverPi / 1.4, 1e-15);
}

TEST(EvolvedWigner, RejectsNegativeTime) {
  EXPECT_THROW(mcso::wigner_evolved(params(1, 0.5, 0.0, 1.0), {-0.1, 0.0}, 0.0), mcso::ArgumentError);
  EXPECT_THROW(mcso::wigner_evolved(params(1, 0.5, 0.0, 1.0), {0.1, -1.0}, 0.0), mcso::ArgumentError);
}

}  // namespace
