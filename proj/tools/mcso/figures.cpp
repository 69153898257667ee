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

#include "figures.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>

#include "json.hpp"
#include "mcso/phasespace.hpp"

namespace mcso::cli {
namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;

json cplx(double re, double im) { return json::array({re, im}); }
json values(std::vector<double> v) { return {{"values", v}}; }
json ivalues(std::vector<int> v) { return {{"values", v}}; }
json range(double a, double b, int n) { return {{"start", a}, {"stop", b}, {"count", n}}; }
json crange(double a, double b, int n) {
  return {{"start", cplx(a, 0.0)}, {"stop", cplx(b, 0.0)}, {"count", n}};
}
json cvalues(std::vector<double> re) {
  json a = json::array();
  for (double r : re) a.push_back(cplx(r, 0.0));
  return {{"values", a}};
}
json grid(double half, int n) {
  return {{"re", {-half, half}}, {"im", {-half, half}}, {"nx", n}, {"ny", n}};
}

json params(json m, json theta, json phi, json alpha0) {
  return {{"m", m}, {"theta", theta}, {"phi", phi}, {"alpha0", alpha0}};
}

// rows grouped by the value in one column, in first-seen order
std::vector<std::pair<double, std::vector<const std::vector<double>*>>> group_by(
    const Table& t, const std::string& col) {
  std::vector<std::pair<double, std::vector<const std::vector<double>*>>> out;
  const std::size_t c = t.column(col);
  for (const auto& r : t.rows) {
    if (out.empty() || out.back().first != r[c]) out.push_back({r[c], {}});
    out.back().second.push_back(&r);
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

using Check = std::function<std::vector<Verdict>(const Table&)>;

struct Preset {
  json config;
  Check check;
};

Verdict fidelity_m0_is_one(const Table& t) {
  const std::size_t f = t.column("fidelity");
  double worst = 0.0;
  for (const auto& [m, rows] : group_by(t, "m")) {
    if (m != 0.0) continue;
    for (auto* r : rows) worst = std::max(worst, std::abs((*r)[f] - 1.0));
  }
  return {"m=0 fidelity identically 1", worst == 0.0, "max |F-1| = " + num(worst)};
}

std::vector<Verdict> check_fig1a(const Table& t) {
  std::vector<Verdict> v{fidelity_m0_is_one(t)};
  const std::size_t f = t.column("fidelity");
  std::map<int, std::vector<double>> curves;
  for (const auto& [m, rows] : group_by(t, "m")) {
    for (auto* r : rows) curves[static_cast<int>(m)].push_back((*r)[f]);
  }
  double odd = 0.0;
  for (int m : {1, 3}) {
    for (double x : curves[m]) odd = std::max(odd, std::abs(x));
  }
  v.push_back({"odd m fidelity 0", odd <= 1e-14, "max |F| = " + num(odd)});
  for (int m : {2, 4}) {
    bool mono = true;
    for (std::size_t i = 1; i < curves[m].size(); ++i) mono &= curves[m][i] >= curves[m][i - 1];
    v.push_back({"m=" + std::to_string(m) + " fidelity nondecreasing in alpha0", mono, "not monotone"});
  }
  bool order = true;
  for (std::size_t i = 0; i < curves[2].size(); ++i) order &= curves[2][i] >= curves[4][i];
  v.push_back({"F(m=2) >= F(m=4)", order, "violated at some alpha0"});
  return v;
}

std::vector<Verdict> check_fig1b(const Table& t) {
  const std::size_t f = t.column("fidelity");
  const auto g = group_by(t, "theta");
  bool ok = true;
  for (std::size_t c = 1; c < g.size(); ++c) {
    for (std::size_t i = 0; i < g[c].second.size(); ++i) {
      ok &= (*g[c].second[i])[f] <= (*g[c - 1].second[i])[f];
    }
  }
  return {{"fidelity decreases as theta increases", ok, "ordering violated"}};
}

double nearest_q(const std::vector<const std::vector<double>*>& rows, std::size_t a, std::size_t q,
                 double target) {
  const std::vector<double>* best = rows.front();
  for (auto* r : rows) {
    if (std::abs((*r)[a] - target) < std::abs((*best)[a] - target)) best = r;
  }
  return (*best)[q];
}

std::vector<Verdict> check_fig2a(const Table& t) {
  const std::size_t q = t.column("q");
  const std::size_t a = t.column("alpha0_re");
  double worst = -1e300;
  for (const auto& r : t.rows) worst = std::max(worst, r[q]);
  bool decay = true;
  std::string detail;
  for (const auto& [m, rows] : group_by(t, "m")) {
    const double q05 = std::abs(nearest_q(rows, a, q, 0.5));
    const double q3 = std::abs(nearest_q(rows, a, q, 3.0));
    if (!(q3 < q05)) {
      decay = false;
      detail = "m=" + num(m) + ": |Q(3)|=" + num(q3) + " |Q(0.5)|=" + num(q05);
    }
  }
  return {{"every q < 0", worst < 0.0, "max q = " + num(worst)},
          {"|Q| at alpha0=3 below |Q| at alpha0=0.5 for each m", decay, detail}};
}

std::vector<Verdict> check_fig2b(const Table& t) {
  const std::size_t q = t.column("q");
  double hi = -1e300;
  double lo = 1e300;
  for (const auto& r : t.rows) {
    hi = std::max(hi, r[q]);
    lo = std::min(lo, r[q]);
  }
  return {{"some q > 0", hi > 0.0, "max q = " + num(hi)},
          {"q within [-1, 0.5]", lo >= -1.0 && hi <= 0.5,
           "range [" + num(lo) + ", " + num(hi) + "]"}};
}

std::vector<Verdict> check_fig3a(const Table& t) {
  const std::size_t s = t.column("s");
  bool all = true;
  std::string detail;
  for (const auto& [m, rows] : group_by(t, "m")) {
    double lo = 1e300;
    for (auto* r : rows) lo = std::min(lo, (*r)[s]);
    if (!(lo < -1e-10)) {
      all = false;
      detail = "m=" + num(m) + " min S = " + num(lo);
    }
  }
  return {{"odd m squeezes (S < 0) below a threshold theta", all, detail}};
}

std::vector<Verdict> check_fig3b(const Table& t) {
  const std::size_t s = t.column("s");
  double lo = 1e300;
  for (const auto& r : t.rows) lo = std::min(lo, r[s]);
  return {{"even m never squeezes (S >= 0)", lo >= -1e-10, "min S = " + num(lo)}};
}

Check peak_at(int expected) {
  return [expected](const Table& t) {
    const std::size_t n = t.column("n");
    const std::size_t p = t.column("p");
    const std::vector<double>* best = &t.rows.front();
    for (const auto& r : t.rows) {
      if (r[p] > (*best)[p]) best = &r;
    }
    const int peak = static_cast<int>((*best)[n]);
    return std::vector<Verdict>{{"peak at n=" + std::to_string(expected), peak == expected,
                                 "peak at n=" + std::to_string(peak)}};
  };
}

std::vector<Verdict> check_min_at_centre(const Table& t) {
  const std::size_t w = t.column("w");
  const std::size_t re = t.column("re");
  const std::size_t im = t.column("im");
  const std::vector<double>* best = &t.rows.front();
  for (const auto& r : t.rows) {
    if (r[w] < (*best)[w]) best = &r;
  }
  const bool ok = std::abs((*best)[re]) < 1e-9 && std::abs((*best)[im]) < 1e-9;
  return {{"minimum at the centre", ok, "minimum at (" + num((*best)[re]) + ", " + num((*best)[im]) + ")"}};
}

Verdict has_negative_region(const Table& t) {
  const std::size_t w = t.column("w");
  double lo = 1e300;
  for (const auto& r : t.rows) lo = std::min(lo, r[w]);
  return {"W has a negative region", lo < 0.0, "min W = " + num(lo)};
}

std::vector<Verdict> check_negative(const Table& t) { return {has_negative_region(t)}; }

std::vector<Verdict> check_fig6_even(const Table& t) {
  auto v = check_min_at_centre(t);
  v.push_back(has_negative_region(t));
  return v;
}

std::vector<Verdict> check_fig8a(const Table& t) {
  const std::size_t d = t.column("delta");
  const std::size_t th = t.column("theta");
  bool ok = true;
  std::string detail;
  for (const auto& [m, rows] : group_by(t, "m")) {
    if (m < 1) continue;
    double prev = -1.0;
    for (auto* r : rows) {
      const double theta = (*r)[th];
      if (theta < kPi / 8 - 1e-12 || theta > kPi / 3 + 1e-12) continue;
      if ((*r)[d] <= prev) {
        ok = false;
        detail = "m=" + num(m) + " decreases near theta=" + num(theta);
      }
      prev = (*r)[d];
    }
  }
  return {{"m>=1 delta increasing on theta in [pi/8, pi/3]", ok, detail}};
}

std::vector<Verdict> check_fig9d(const Table& t) {
  const std::size_t w = t.column("w");
  const std::size_t re = t.column("re");
  const std::size_t im = t.column("im");
  double lo = 1e300;
  double sup = 0.0;
  for (const auto& r : t.rows) {
    lo = std::min(lo, r[w]);
    sup = std::max(sup, std::abs(r[w] - thermal_wigner(0.2, {r[re], r[im]})));
  }
  return {{"grid minimum >= -1e-4", lo >= -1e-4, "min W = " + num(lo)},
          {"sup-distance to thermal Gaussian < 5e-3", sup < 5e-3, "sup-distance " + num(sup)}};
}

const std::map<std::string, Preset>& presets() {
  static const std::map<std::string, Preset> table = [] {
    std::map<std::string, Preset> p;
    const json alpha_fid = crange(0.2, 4.0, 39);
    p["fig1a"] = {{{"quantity", "fidelity"},
                   {"params", params(ivalues({0, 1, 2, 3, 4}), kPi / 3, 0.0, alpha_fid)}},
                  check_fig1a};
    p["fig1b"] = {{{"quantity", "fidelity"},
                   {"params", params(2, values({kPi / 8, kPi / 4, kPi / 3}), 0.0, alpha_fid)}},
                  check_fig1b};
    p["fig1c"] = {{{"quantity", "fidelity"},
                   {"params", params(2, kPi / 3, values({0.0, kPi / 6, kPi / 3, kPi / 2}), alpha_fid)}},
                  nullptr};
    const json alpha_q = crange(0.1, 3.0, 60);
    p["fig2a"] = {{{"quantity", "mandel_q"},
                   {"params", params(ivalues({1, 2, 3, 4}), kPi / 4, 0.0, alpha_q)}},
                  check_fig2a};
    p["fig2b"] = {{{"quantity", "mandel_q"},
                   {"params", params(ivalues({1, 2, 3, 4}), kPi / 8, 0.0, alpha_q)}},
                  check_fig2b};
    p["fig2c"] = {{{"quantity", "mandel_q"},
                   {"params", params(1, values({kPi / 8, kPi / 4, kPi / 3, kPi / 2.1}), 0.0, alpha_q)}},
                  nullptr};
    p["fig2d"] = {{{"quantity", "mandel_q"},
                   {"params", params(1, kPi / 4, values({kPi / 3, kPi / 4, kPi / 6, 0.0}), alpha_q)}},
                  nullptr};
    const json theta_s = range(0.01, kPi / 2 - 0.01, 80);
    p["fig3a"] = {{{"quantity", "squeezing"},
                   {"params", params(ivalues({1, 3, 5, 7}), theta_s, 0.0, cplx(0.1, 0.0))}},
                  check_fig3a};
    p["fig3b"] = {{{"quantity", "squeezing"},
                   {"params", params(ivalues({0, 2, 4, 10}), theta_s, 0.0, cplx(0.1, 0.0))}},
                  check_fig3b};
    p["fig3c"] = {{{"quantity", "squeezing"},
                   {"params", params(1, theta_s, 0.0, cvalues({0.1, 0.5, 1.0, 1.5}))}},
                  nullptr};
    p["fig3d"] = {{{"quantity", "squeezing"},
                   {"params", params(1, theta_s, values({0.0, kPi / 4, kPi / 2}), cplx(0.1, 0.0))}},
                  nullptr};
    auto pc = [](int m, double theta, double phi, double xi) {
      return json{{"quantity", "photocount"},
                  {"params", params(m, theta, phi, cplx(0.5, 0.5))},
                  {"extras", {{"xi", xi}, {"n_max", 20}}}};
    };
    p["fig4a"] = {pc(4, kPi / 4, 0.0, 0.2), peak_at(1)};
    p["fig4b"] = {pc(4, kPi / 4, 0.0, 0.9), peak_at(4)};
    p["fig4c"] = {pc(1, kPi / 4, 0.0, 0.2), nullptr};
    p["fig5a"] = {pc(4, kPi / 8, 0.0, 0.9), nullptr};
    p["fig5b"] = {pc(4, kPi / 8, kPi / 2, 0.9), nullptr};
    auto wg = [](int m, double theta, json alpha0, double half) {
      return json{{"quantity", "wigner"},
                  {"params", params(m, theta, 0.0, alpha0)},
                  {"extras", {{"grid", grid(half, 101)}}}};
    };
    p["fig6a"] = {wg(0, kPi / 3, cplx(1, 1), 4.0), check_fig6_even};
    p["fig6b"] = {wg(1, kPi / 3, cplx(1, 1), 4.0), check_negative};
    p["fig6c"] = {wg(2, kPi / 3, cplx(1, 1), 4.0), check_fig6_even};
    p["fig6d"] = {wg(3, kPi / 3, cplx(1, 1), 4.0), check_negative};
    p["fig7a"] = {wg(2, kPi / 8, cplx(1, 1), 4.0), check_negative};
    p["fig7b"] = {wg(2, kPi / 3, cplx(2, 2), 6.0), check_negative};
    const json theta_d = range(kPi / 24, 11 * kPi / 24, 11);
    p["fig8a"] = {{{"quantity", "negativity"},
                   {"params", params(ivalues({0, 1, 2, 3}), theta_d, 0.0, cplx(0.1, 0.0))}},
                  check_fig8a};
    p["fig8b"] = {{{"quantity", "negativity"},
                   {"params", params(1, theta_d, 0.0, cvalues({0.1, 0.5, 1.0, 1.5}))}},
                  nullptr};
    auto ev = [](double kt, double nbar) {
      return json{{"quantity", "evolved_wigner"},
                  {"params", params(1, kPi / 3, 0.0, cplx(1, 1))},
                  {"extras", {{"grid", grid(4.0, 101)}, {"channel", {{"kappa_t", kt}, {"nbar", nbar}}}}}};
    };
    p["fig9a"] = {ev(0.001, 0.2), check_negative};
    p["fig9b"] = {ev(0.05, 0.2), nullptr};
    p["fig9c"] = {ev(0.1, 0.2), nullptr};
    p["fig9d"] = {ev(3.0, 0.2), check_fig9d};
    p["fig10a"] = {ev(0.05, 0.0), nullptr};
    p["fig10b"] = {ev(0.05, 0.5), nullptr};
    p["fig10c"] = {ev(0.05, 2.0), nullptr};
    p["fig10d"] = {ev(0.05, 8.0), nullptr};
    return p;
  }();
  return table;
}

const Preset& preset(const std::string& name) {
  const auto it = presets().find(name);
  if (it == presets().end()) throw ConfigError("figure: unknown preset \"" + name + "\"");
  return it->second;
}

}  // namespace

std::string Verdict::line(const std::string& figure) const {
  return figure + ": " + claim + ": " + (pass ? "PASS" : "FAIL (" + detail + ")");
}

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const char* f : {"fig1a", "fig1b", "fig1c", "fig2a", "fig2b", "fig2c", "fig2d", "fig3a",
                          "fig3b", "fig3c", "fig3d", "fig4a", "fig4b", "fig4c", "fig5a", "fig5b",
                          "fig6a", "fig6b", "fig6c", "fig6d", "fig7a", "fig7b", "fig8a", "fig8b",
                          "fig9a", "fig9b", "fig9c", "fig9d", "fig10a", "fig10b", "fig10c",
                          "fig10d"}) {
      n.emplace_back(f);
    }
    return n;
  }();
  return names;
}

std::string figure_config(const std::string& name) { return preset(name).config.dump(2); }

FigureOutcome run_figure(const std::string& name, const std::string& out_dir, unsigned threads) {
  const Preset& p = preset(name);
  FigureOutcome out;
  out.name = name;
  out.result = run_compute(parse_config(p.config.dump()), threads);
  std::filesystem::create_directories(out_dir);
  out.csv_path = (std::filesystem::path(out_dir) / (name + ".csv")).string();
  std::ofstream f(out.csv_path, std::ios::binary);
  if (!f) throw ConfigError("figure: cannot write " + out.csv_path);
  f << out.result.table.to_csv();
  if (!f) throw ConfigError("figure: write failed for " + out.csv_path);
  if (p.check) out.verdicts = p.check(out.result.table);
  return out;
}

}  // namespace mcso::cli
