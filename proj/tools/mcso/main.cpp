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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "compute.hpp"
#include "figures.hpp"
#include "mcso/errors.hpp"
#include "mcso/format.hpp"
#include "verify.hpp"

namespace {

enum Exit { kOk = 0, kConfig = 2, kNumerical = 3, kOracle = 4 };

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw mcso::cli::ConfigError(path + ": cannot open config");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

int do_compute(const std::string& config_path, const std::string& out_override, unsigned threads) {
  const auto cfg = mcso::cli::parse_config(read_file(config_path));
  const auto res = mcso::cli::run_compute(cfg, threads);
  const std::string csv = res.table.to_csv();
  const std::string out = out_override.empty() ? cfg.output.value_or("") : out_override;
  if (out.empty()) {
    std::cout << csv;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f || !(f << csv)) throw mcso::cli::ConfigError("output: cannot write " + out);
  }
  if (res.oracle_checked) {
    std::cerr << "oracle check: " << res.table.rows.size() << " rows, max |diff| "
              << mcso::format_double(res.max_oracle_diff) << ", " << res.oracle_failures
              << " beyond 1e-6 relative\n";
    if (res.oracle_failures > 0) return kOracle;
  }
  return kOk;
}

int do_figure(const std::string& name, const std::string& out_dir, unsigned threads) {
  std::vector<std::string> names;
  if (name == "all") {
    names = mcso::cli::figure_names();
  } else {
    names.push_back(name);
  }
  for (const auto& n : names) {
    const auto o = mcso::cli::run_figure(n, out_dir, threads);
    std::cout << n << ": wrote " << o.csv_path << " (" << o.result.table.rows.size() << " rows)\n";
    for (const auto& v : o.verdicts) std::cout << v.line(n) << "\n";
  }
  return kOk;
}

int do_verify(const std::string& parity, unsigned threads) {
  const auto p = mcso::parse_parity(parity);
  const auto r = mcso::cli::run_oracle_suite(p, threads);
  for (const auto& line : r.failure_lines) std::cout << "MISMATCH " << line << "\n";
  std::cout << "verify (" << parity << "): " << r.checks << " checks, " << r.failures
            << " failures, max relative deviation " << mcso::format_double(r.max_relative)
            << ", " << r.seconds << " s\n";
  return r.failures ? kOracle : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mcso: closed forms and Fock-space oracle for the operated odd cat"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = all cores)");

  auto* compute = app.add_subcommand("compute", "evaluate a JSON sweep config to CSV");
  std::string config_path;
  std::string out_override;
  compute->add_option("-c,--config", config_path, "config file")->required();
  compute->add_option("-o,--output", out_override, "CSV path (overrides the config)");

  auto* figure = app.add_subcommand("figure", "write the CSV for a figure preset");
  std::string fig_name;
  std::string fig_dir = ".";
  bool list = false;
  bool show = false;
  figure->add_option("name", fig_name, "preset name (fig1a..fig10d) or all");
  figure->add_option("-o,--out-dir", fig_dir, "output directory");
  figure->add_flag("--list", list, "print preset names");
  figure->add_flag("--show-config", show, "print the preset's sweep config");

  auto* verify = app.add_subcommand("verify", "run the closed-form vs oracle cross-check grid");
  std::string parity = "odd";
  verify->add_option("--parity", parity, "odd or even");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (*compute) return do_compute(config_path, out_override, threads);
    if (*figure) {
      if (list) {
        for (const auto& n : mcso::cli::figure_names()) std::cout << n << "\n";
        return kOk;
      }
      if (fig_name.empty()) throw mcso::cli::ConfigError("figure: preset name required");
      if (show) {
        std::cout << mcso::cli::figure_config(fig_name) << "\n";
        return kOk;
      }
      return do_figure(fig_name, fig_dir, threads);
    }
    if (*verify) return do_verify(parity, threads);
  } catch (const mcso::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const mcso::ArgumentError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const mcso::UnsupportedOperationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const mcso::ConvergenceError& e) {
    std::cerr << "numerical error: " << e.what() << " (last estimate "
              << mcso::format_double(e.last_estimate()) << ", previous "
              << mcso::format_double(e.previous_estimate()) << ")\n";
    return kNumerical;
  } catch (const mcso::Error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kNumerical;
  }
  return kOk;
}
