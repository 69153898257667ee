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

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "compute.hpp"
#include "config.hpp"
#include "figures.hpp"

namespace {

namespace fs = std::filesystem;
using mcso::cli::ConfigError;
using mcso::cli::parse_config;
using mcso::cli::Quantity;

const char* kWignerConfig = R"({
  "quantity": "wigner",
  "params": {"m": 0, "theta": 0.5, "phi": 0.0, "alpha0": [1.0, 0.0]},
  "extras": {"grid": {"re": [-4, 4], "im": [-4, 4], "nx": 101, "ny": 101}}
})";

struct Run {
  int code = -1;
  std::string out;
};

fs::path scratch_dir() {
  const fs::path d = fs::temp_directory_path() / ("mcso_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path write_file(const std::string& name, const std::string& text) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(MCSO_BINARY) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

TEST(Config, ParsesScalarsRangesAndLists) {
  const auto c = parse_config(R"({
    "quantity": "mandel_q",
    "params": {"m": {"values": [1, 3]}, "theta": {"start": 0.1, "stop": 0.5, "count": 5},
               "phi": 0, "alpha0": {"values": [[0.5, 0.5], [2, 0]]}}
  })");
  EXPECT_EQ(c.quantity, Quantity::mandel_q);
  EXPECT_EQ(c.m.values, (std::vector<int>{1, 3}));
  EXPECT_TRUE(c.m.swept);
  ASSERT_EQ(c.theta.values.size(), 5u);
  EXPECT_DOUBLE_EQ(c.theta.values.back(), 0.5);
  EXPECT_FALSE(c.phi.swept);
  EXPECT_EQ(c.alpha0.values[0], mcso::Complex(0.5, 0.5));
  EXPECT_EQ(c.alpha0.values[1], mcso::Complex(2.0, 0.0));
  EXPECT_THROW(parse_config(R"({"quantity": "normalization", "params": {"m": 1, "theta": 0.5, "phi": 0, "alpha0": 1}})"),
               ConfigError);
}

TEST(Config, RejectsBadInput) {
  const std::string base = R"("params": {"m": 1, "theta": 0.5, "phi": 0, "alpha0": [1, 0]})";
  auto bad = [&](const std::string& body, const std::string& field) {
    try {
      parse_config(body);
      ADD_FAILURE() << "accepted: " << body;
    } catch (const ConfigError& e) {
      EXPECT_NE(std::string(e.what()).find(field), std::string::npos) << e.what();
    }
  };
  bad("{\"quantity\": \"normalization\", " + base + ", \"colour\": 1}", "colour");
  bad("{\"quantity\": \"entropy\", " + base + "}", "quantity");
  bad(R"({"quantity": "normalization", "params": {"m": 1, "theta": 2.0, "phi": 0, "alpha0": [1, 0]}})",
      "params.theta");
  bad(R"({"quantity": "normalization", "params": {"m": 65, "theta": 0.5, "phi": 0, "alpha0": [1, 0]}})",
      "params.m");
  bad(R"({"quantity": "normalization", "params": {"m": 1.5, "theta": 0.5, "phi": 0, "alpha0": [1, 0]}})",
      "params.m");
  bad(R"({"quantity": "normalization", "params": {"m": 1, "theta": 0.5, "phi": 0, "alpha0": [0, 0]}})",
      "params.alpha0");
  bad(R"({"quantity": "normalization", "params": {"m": 1, "theta": {"start": 0.1, "stop": 0.2, "count": 0}, "phi": 0, "alpha0": [1, 0]}})",
      "params.theta");
  bad(R"({"quantity": "fidelity", "params": {"m": 1, "theta": 0.5, "phi": 0, "alpha0": [1, 0], "parity": "even"}})",
      "params.parity");
  bad("{\"quantity\": \"photocount\", " + base + ", \"extras\": {\"n_max\": 4}}", "extras.xi");
  bad("{\"quantity\": \"photocount\", " + base + ", \"extras\": {\"xi\": 0, \"n_max\": 4}}", "extras.xi");
  bad("{\"quantity\": \"wigner\", " + base + "}", "extras");
  bad("{\"quantity\": \"normalization\", " + base + ", \"extras\": {\"xi\": 0.5}}", "extras");
  bad("{\"quantity\": \"normalization\", " + base, "JSON");
}

TEST(Compute, SubPoissonianPreset) {
  const auto c = parse_config(mcso::cli::figure_config("fig2a"));
  const auto r = mcso::cli::run_compute(c, 1);
  EXPECT_EQ(r.table.rows.size(), 4u * 60u);
  const auto q = r.table.column("q");
  for (const auto& row : r.table.rows) EXPECT_LT(row[q], 0.0);
}

TEST(Compute, FidelityPresetOriginalStateRow) {
  const auto r = mcso::cli::run_compute(parse_config(mcso::cli::figure_config("fig1a")), 1);
  const auto m = r.table.column("m"), f = r.table.column("fidelity");
  int seen = 0;
  for (const auto& row : r.table.rows) {
    if (row[m] == 0.0) {
      EXPECT_EQ(row[f], 1.0);
      ++seen;
    }
  }
  EXPECT_GT(seen, 0);
}

TEST(Compute, WignerCentreCell) {
  const auto r = mcso::cli::run_compute(parse_config(kWignerConfig), 1);
  ASSERT_EQ(r.table.rows.size(), 101u * 101u);
  const auto& centre = r.table.rows[50 * 101 + 50];
  EXPECT_NEAR(centre[r.table.column("re")], 0.0, 1e-12);
  EXPECT_NEAR(centre[r.table.column("w")], -2.0 / std::numbers::pi, 1e-12);
}

TEST(Compute, ColumnOrderAndOracleColumn) {
  const auto c = parse_config(R"({
    "quantity": "photocount",
    "params": {"m": 2, "theta": {"values": [0.3, 0.9]}, "phi": 0, "alpha0": [0.5, 0.5]},
    "extras": {"xi": {"values": [0.2, 0.9]}, "n_max": 3},
    "oracle_check": true
  })");
  const auto r = mcso::cli::run_compute(c, 2);
  EXPECT_EQ(r.table.columns, (std::vector<std::string>{"theta", "xi", "n", "p", "oracle_abs_diff"}));
  EXPECT_EQ(r.table.rows.size(), 2u * 2u * 4u);
  EXPECT_TRUE(r.oracle_checked);
  EXPECT_EQ(r.oracle_failures, 0);
  EXPECT_LT(r.max_oracle_diff, 1e-12);
  EXPECT_LT(r.table.rows[0][0], r.table.rows.back()[0]);
}

TEST(Compute, OracleAgreementRule) {
  EXPECT_TRUE(mcso::cli::oracle_agrees(1.0 + 5e-7, 1.0));
  EXPECT_FALSE(mcso::cli::oracle_agrees(1.0 + 2e-6, 1.0));
  EXPECT_TRUE(mcso::cli::oracle_agrees(5e-11, 0.0));
  EXPECT_FALSE(mcso::cli::oracle_agrees(1e-9, 0.0));
}

TEST(Cli, DeterministicAcrossRunsAndThreads) {
  const auto cfg = write_file("det.json", R"({
    "quantity": "squeezing",
    "params": {"m": {"values": [1, 2, 3]}, "theta": {"start": 0.05, "stop": 1.5, "count": 40},
               "phi": 0.3, "alpha0": [0.4, -0.2]}
  })");
  const auto a = scratch_dir() / "a.csv", b = scratch_dir() / "b.csv";
  ASSERT_EQ(run_cli("--threads 1 compute -c " + cfg.string() + " -o " + a.string()).code, 0);
  ASSERT_EQ(run_cli("--threads 4 compute -c " + cfg.string() + " -o " + b.string()).code, 0);
  const auto sa = slurp(a);
  EXPECT_FALSE(sa.empty());
  EXPECT_EQ(sa, slurp(b));
  EXPECT_EQ(sa.substr(0, sa.find('\n')), "m,theta,s");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("compute -c " + write_file("w.json", kWignerConfig).string() + " -o " +
                    (scratch_dir() / "w.csv").string())
                .code,
            0);
  const auto bad = run_cli("compute -c " + write_file("bad.json", "{\"quantity\": 3}").string());
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.out.find("quantity"), std::string::npos);
  EXPECT_EQ(run_cli("compute -c /nonexistent/config.json").code, 2);
  EXPECT_EQ(run_cli("compute").code, 2);
  EXPECT_EQ(run_cli("figure fig99 -o " + scratch_dir().string()).code, 2);
  const auto numerical = run_cli("compute -c " + write_file("nv.json", R"({
    "quantity": "negativity",
    "params": {"m": 1, "theta": 0.7, "phi": 0, "alpha0": [1, 0]},
    "extras": {"quadrature": {"tolerance": 1e-14, "max_refinements": 2}}
  })").string());
  EXPECT_EQ(numerical.code, 3);
  EXPECT_NE(numerical.out.find("last estimate"), std::string::npos);
  EXPECT_EQ(run_cli("--help").code, 0);
}

TEST(Cli, OracleCheckPasses) {
  const auto cfg = write_file("oc.json", R"({
    "quantity": "mandel_q",
    "params": {"m": {"values": [0, 1, 2, 3]}, "theta": 0.6, "phi": 0.2, "alpha0": [0.8, 0.3]},
    "oracle_check": true
  })");
  const auto r = run_cli("compute -c " + cfg.string());
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("oracle_abs_diff"), std::string::npos);
  EXPECT_NE(r.out.find("0 beyond"), std::string::npos);
}

TEST(Cli, FigureWritesCsvAndVerdict) {
  const auto dir = scratch_dir() / "figs";
  fs::create_directories(dir);
  const auto r = run_cli("figure fig1a -o " + dir.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(fs::exists(dir / "fig1a.csv"));
  EXPECT_NE(r.out.find("fig1a: m=0 fidelity identically 1: PASS"), std::string::npos) << r.out;
  const auto list = run_cli("figure --list");
  EXPECT_NE(list.out.find("fig10d"), std::string::npos);
}

}  // namespace
