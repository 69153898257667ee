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

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "mcso/special.hpp"

namespace mcso::test {

inline std::string fixture_path(const std::string& name) {
  return std::string(MCSO_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream f(fixture_path(name), std::ios::binary);
  if (!f) throw std::runtime_error("missing fixture " + name);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

inline const nlohmann::json& reference() {
  static const nlohmann::json j = nlohmann::json::parse(read_fixture("reference.json"));
  return j;
}

inline const nlohmann::json& ref_node(std::initializer_list<const char*> path) {
  const nlohmann::json* j = &reference();
  for (const char* key : path) j = &j->at(key);
  return *j;
}

inline double to_double(const nlohmann::json& j) { return std::stod(j.get<std::string>()); }

inline double ref_real(std::initializer_list<const char*> path) { return to_double(ref_node(path)); }

inline Complex ref_complex(std::initializer_list<const char*> path) {
  const auto& j = ref_node(path);
  return {to_double(j.at(0)), to_double(j.at(1))};
}

}  // namespace mcso::test
