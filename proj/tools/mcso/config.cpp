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

#include "config.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "json.hpp"
#include "mcso/errors.hpp"

namespace mcso::cli {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& msg) {
  throw ConfigError(field + ": " + msg);
}

void only_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) fail(where + "." + it.key(), "unknown field");
  }
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail(field, "must be finite");
  return v;
}

int integer(const json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  return j.get<int>();
}

Complex complex_value(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2) fail(field, "expected a two-element array [re, im]");
  return {number(j[0], field + "[0]"), number(j[1], field + "[1]")};
}

int range_count(const json& j, const std::string& field) {
  const int count = integer(j.at("count"), field + ".count");
  if (count < 1) fail(field + ".count", "must be >= 1");
  return count;
}

// scalar | {start, stop, count} | {values: [...]}
template <typename T, typename Scalar, typename Lerp>
Axis<T> axis(const json& j, const std::string& field, Scalar scalar, Lerp lerp) {
  Axis<T> a;
  if (j.is_object() && j.contains("values")) {
    only_keys(j, field, {"values"});
    const json& vs = j.at("values");
    if (!vs.is_array() || vs.empty()) fail(field + ".values", "expected a non-empty array");
    for (std::size_t i = 0; i < vs.size(); ++i) {
      a.values.push_back(scalar(vs[i], field + ".values[" + std::to_string(i) + "]"));
    }
    a.swept = true;
  } else if (j.is_object()) {
    only_keys(j, field, {"start", "stop", "count"});
    for (const char* k : {"start", "stop", "count"}) {
      if (!j.contains(k)) fail(field + "." + k, "missing");
    }
    const T start = scalar(j.at("start"), field + ".start");
    const T stop = scalar(j.at("stop"), field + ".stop");
    const int count = range_count(j, field);
    for (int i = 0; i < count; ++i) {
      const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
      a.values.push_back(i == count - 1 ? stop : lerp(start, stop, f));
    }
    a.swept = true;
  } else {
    a.values.push_back(scalar(j, field));
  }
  return a;
}

Axis<double> real_axis(const json& j, const std::string& field) {
  return axis<double>(j, field, number, [](double a, double b, double f) { return a + (b - a) * f; });
}

Axis<Complex> complex_axis(const json& j, const std::string& field) {
  return axis<Complex>(j, field, complex_value,
                       [](Complex a, Complex b, double f) { return a + (b - a) * f; });
}

Axis<int> int_axis(const json& j, const std::string& field) {
  return axis<int>(j, field, integer, [&](int a, int b, double f) {
    const double v = a + (b - a) * f;
    if (std::abs(v - std::round(v)) > 1e-9) fail(field, "range does not land on integers");
    return static_cast<int>(std::round(v));
  });
}

const json& required(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key)) fail(where + "." + key, "missing");
  return obj.at(key);
}

GridSpec parse_grid(const json& g) {
  if (!g.is_object()) fail("extras.grid", "expected an object");
  only_keys(g, "extras.grid", {"re", "im", "nx", "ny"});
  GridSpec s;
  auto bounds = [&](const char* key, double& lo, double& hi) {
    const std::string field = std::string("extras.grid.") + key;
    const json& b = required(g, "extras.grid", key);
    if (!b.is_array() || b.size() != 2) fail(field, "expected [min, max]");
    lo = number(b[0], field + "[0]");
    hi = number(b[1], field + "[1]");
  };
  bounds("re", s.re_min, s.re_max);
  bounds("im", s.im_min, s.im_max);
  s.nx = integer(required(g, "extras.grid", "nx"), "extras.grid.nx");
  s.ny = integer(required(g, "extras.grid", "ny"), "extras.grid.ny");
  try {
    validate(s);
  } catch (const mcso::Error& e) {
    fail("extras.grid", e.what());
  }
  return s;
}

QuadratureSettings parse_quadrature(const json& q) {
  if (!q.is_object()) fail("extras.quadrature", "expected an object");
  only_keys(q, "extras.quadrature",
            {"half_width", "tolerance", "frame_tolerance", "initial_cells", "max_refinements",
             "max_growth_steps"});
  QuadratureSettings s;
  const std::string w = "extras.quadrature.";
  if (q.contains("half_width")) s.half_width = number(q["half_width"], w + "half_width");
  if (q.contains("tolerance")) s.tolerance = number(q["tolerance"], w + "tolerance");
  if (q.contains("frame_tolerance")) {
    s.frame_tolerance = number(q["frame_tolerance"], w + "frame_tolerance");
  }
  if (q.contains("initial_cells")) s.initial_cells = integer(q["initial_cells"], w + "initial_cells");
  if (q.contains("max_refinements")) {
    s.max_refinements = integer(q["max_refinements"], w + "max_refinements");
  }
  if (q.contains("max_growth_steps")) {
    s.max_growth_steps = integer(q["max_growth_steps"], w + "max_growth_steps");
  }
  if (!(s.tolerance > 0.0)) fail(w + "tolerance", "must be positive");
  if (!(s.frame_tolerance > 0.0)) fail(w + "frame_tolerance", "must be positive");
  if (s.initial_cells < 2) fail(w + "initial_cells", "must be >= 2");
  if (s.max_refinements < 1) fail(w + "max_refinements", "must be >= 1");
  if (s.max_growth_steps < 0) fail(w + "max_growth_steps", "must be >= 0");
  return s;
}

}  // namespace

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::normalization: return "normalization";
    case Quantity::fidelity: return "fidelity";
    case Quantity::mandel_q: return "mandel_q";
    case Quantity::squeezing: return "squeezing";
    case Quantity::photocount: return "photocount";
    case Quantity::wigner: return "wigner";
    case Quantity::negativity: return "negativity";
    case Quantity::evolved_wigner: return "evolved_wigner";
  }
  return "?";
}

Quantity parse_quantity(const std::string& s) {
  for (Quantity q : {Quantity::normalization, Quantity::fidelity, Quantity::mandel_q,
                     Quantity::squeezing, Quantity::photocount, Quantity::wigner,
                     Quantity::negativity, Quantity::evolved_wigner}) {
    if (to_string(q) == s) return q;
  }
  fail("quantity", "unknown quantity \"" + s + "\"");
}

SweepConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail("config", "top level must be an object");
  only_keys(doc, "config", {"quantity", "params", "extras", "output", "oracle_check"});

  SweepConfig c;
  const json& q = required(doc, "config", "quantity");
  if (!q.is_string()) fail("quantity", "expected a string");
  c.quantity = parse_quantity(q.get<std::string>());

  const json& p = required(doc, "config", "params");
  if (!p.is_object()) fail("params", "expected an object");
  only_keys(p, "params", {"m", "theta", "phi", "alpha0", "parity"});
  c.m = int_axis(required(p, "params", "m"), "params.m");
  c.theta = real_axis(required(p, "params", "theta"), "params.theta");
  c.phi = real_axis(required(p, "params", "phi"), "params.phi");
  c.alpha0 = complex_axis(required(p, "params", "alpha0"), "params.alpha0");
  if (p.contains("parity")) {
    if (!p["parity"].is_string()) fail("params.parity", "expected \"odd\" or \"even\"");
    try {
      c.parity = parse_parity(p["parity"].get<std::string>());
    } catch (const mcso::Error& e) {
      fail("params.parity", e.what());
    }
  }
  for (int m : c.m.values) {
    if (m < 0 || m > kDefaultMaxOrder) fail("params.m", "must lie in [0, 64]");
  }
  for (double t : c.theta.values) {
    if (!(t > 0.0) || !(t < std::numbers::pi / 2)) fail("params.theta", "must lie in (0, pi/2)");
  }
  for (Complex a : c.alpha0.values) {
    if (c.parity == Parity::odd && a == Complex{}) {
      fail("params.alpha0", "the odd cat vanishes at alpha0 = 0");
    }
  }
  if (c.quantity == Quantity::fidelity && c.parity == Parity::even) {
    fail("params.parity", "fidelity is defined for the odd cat only");
  }

  const json empty = json::object();
  const json& ex = doc.contains("extras") ? doc["extras"] : empty;
  if (!ex.is_object()) fail("extras", "expected an object");
  switch (c.quantity) {
    case Quantity::photocount:
      only_keys(ex, "extras", {"xi", "n_max"});
      c.xi = real_axis(required(ex, "extras", "xi"), "extras.xi");
      for (double x : c.xi.values) {
        if (!(x > 0.0) || !(x <= 1.0)) fail("extras.xi", "must lie in (0, 1]");
      }
      c.n_max = integer(required(ex, "extras", "n_max"), "extras.n_max");
      if (c.n_max < 0 || c.n_max > kDefaultPhotocountMax) fail("extras.n_max", "must lie in [0, 128]");
      break;
    case Quantity::wigner:
      only_keys(ex, "extras", {"grid"});
      c.grid = parse_grid(required(ex, "extras", "grid"));
      break;
    case Quantity::evolved_wigner: {
      only_keys(ex, "extras", {"grid", "channel"});
      c.grid = parse_grid(required(ex, "extras", "grid"));
      const json& ch = required(ex, "extras", "channel");
      if (!ch.is_object()) fail("extras.channel", "expected an object");
      only_keys(ch, "extras.channel", {"kappa_t", "nbar"});
      c.kappa_t = real_axis(required(ch, "extras.channel", "kappa_t"), "extras.channel.kappa_t");
      c.nbar = real_axis(required(ch, "extras.channel", "nbar"), "extras.channel.nbar");
      for (double v : c.kappa_t.values) {
        if (v < 0.0) fail("extras.channel.kappa_t", "must be non-negative");
      }
      for (double v : c.nbar.values) {
        if (v < 0.0) fail("extras.channel.nbar", "must be non-negative");
      }
      break;
    }
    case Quantity::negativity:
      only_keys(ex, "extras", {"quadrature"});
      if (ex.contains("quadrature")) c.quadrature = parse_quadrature(ex["quadrature"]);
      break;
    default:
      only_keys(ex, "extras", {});
      break;
  }

  if (doc.contains("output")) {
    if (!doc["output"].is_string()) fail("output", "expected a file path string");
    c.output = doc["output"].get<std::string>();
  }
  if (doc.contains("oracle_check")) {
    if (!doc["oracle_check"].is_boolean()) fail("oracle_check", "expected true or false");
    c.oracle_check = doc["oracle_check"].get<bool>();
  }
  return c;
}

}  // namespace mcso::cli
