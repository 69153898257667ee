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

#include <charconv>
#include <cmath>
#include <string>

#include "json.hpp"
#include "mcso/errors.hpp"
#include "mcso/fockoracle.hpp"
#include "mcso/format.hpp"
#include "mcso/phasespace.hpp"

namespace mcso {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string to_csv(const WignerGrid& grid) {
  std::string out = "re,im,w\n";
  for (int ix = 0; ix < grid.spec.nx; ++ix) {
    for (int iy = 0; iy < grid.spec.ny; ++iy) {
      const Complex a = grid.point(ix, iy);
      out += format_double(a.real());
      out += ',';
      out += format_double(a.imag());
      out += ',';
      out += format_double(grid.at(ix, iy));
      out += '\n';
    }
  }
  return out;
}

std::string to_json(const WignerGrid& grid) {
  json j = {{"re_min", grid.spec.re_min}, {"re_max", grid.spec.re_max},
            {"im_min", grid.spec.im_min}, {"im_max", grid.spec.im_max},
            {"nx", grid.spec.nx},         {"ny", grid.spec.ny},
            {"values", grid.values}};
  return j.dump();
}

WignerGrid wigner_grid_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    WignerGrid g;
    g.spec.re_min = j.at("re_min").get<double>();
    g.spec.re_max = j.at("re_max").get<double>();
    g.spec.im_min = j.at("im_min").get<double>();
    g.spec.im_max = j.at("im_max").get<double>();
    g.spec.nx = j.at("nx").get<int>();
    g.spec.ny = j.at("ny").get<int>();
    validate(g.spec);
    g.values = j.at("values").get<std::vector<double>>();
    if (g.values.size() != static_cast<std::size_t>(g.spec.nx) * g.spec.ny) {
      throw ArgumentError("wigner grid JSON: values has wrong length");
    }
    for (double v : g.values) {
      if (!std::isfinite(v)) throw ArgumentError("wigner grid JSON: non-finite value");
    }
    return g;
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("wigner grid JSON: ") + e.what());
  }
}

namespace {

json interleave(const std::vector<Complex>& z) {
  json a = json::array();
  for (const auto& c : z) {
    a.push_back(c.real());
    a.push_back(c.imag());
  }
  return a;
}

std::vector<Complex> deinterleave(const json& a, std::size_t expected, const char* what) {
  const auto flat = a.get<std::vector<double>>();
  if (flat.size() != 2 * expected) {
    throw ArgumentError(std::string(what) + ": expected " + std::to_string(2 * expected) +
                        " numbers, got " + std::to_string(flat.size()));
  }
  std::vector<Complex> z(expected);
  for (std::size_t i = 0; i < expected; ++i) z[i] = {flat[2 * i], flat[2 * i + 1]};
  return z;
}

int read_cutoff(const json& j, const char* what) {
  const int c = j.at("cutoff").get<int>();
  if (c < 1 || c > kMaxCutoff) throw ArgumentError(std::string(what) + ": cutoff out of range");
  return c;
}

}  // namespace

std::string to_json(const FockVector& v) {
  return json{{"cutoff", v.cutoff}, {"amps", interleave(v.amps)}}.dump();
}

FockVector fock_vector_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    FockVector v;
    v.cutoff = read_cutoff(j, "fock vector JSON");
    v.amps = deinterleave(j.at("amps"), static_cast<std::size_t>(v.cutoff) + 1,
                          "fock vector JSON");
    return v;
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("fock vector JSON: ") + e.what());
  }
}

std::string to_json(const FockDensity& rho) {
  return json{{"cutoff", rho.cutoff}, {"matrix", interleave(rho.matrix)}}.dump();
}

FockDensity fock_density_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    FockDensity rho(read_cutoff(j, "fock density JSON"));
    rho.matrix = deinterleave(j.at("matrix"), rho.matrix.size(), "fock density JSON");
    return rho;
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("fock density JSON: ") + e.what());
  }
}

}  // namespace mcso
