// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
//
// optospin <dynamics|spectrum|scan-j1|exchange> — configuration-driven
// entry point. Exit codes: 0 success, 2 configuration/schema error,
// 3 numerical failure, 4 I/O or internal error.
#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "optospin/commands.hpp"
#include "optospin/config.hpp"
#include "optospin/dynamics.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

int resolve_workers(const optospin::RunConfig& cfg, int flag_workers) {
  // precedence: --workers flag, OPTOSPIN_WORKERS, config, hardware
  if (flag_workers > 0) return flag_workers;
  if (const char* env = std::getenv("OPTOSPIN_WORKERS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return cfg.powder.workers;
}

void print_written(const optospin::CommandResult& result) {
  for (const std::string& f : result.files_written) std::cout << "wrote " << f << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optically driven radical-pair / triplet-coupler spin dynamics and TREPR spectra"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("optospin ") + optospin::kVersion);

  std::string config_path, out_dir, exchange_unit = "K";
  int workers = 0;
  bool weighted = false;
  std::vector<std::string> table_paths;

  auto add_common = [&](CLI::App* sub, bool needs_config) {
    if (needs_config) sub->add_option("--config", config_path, "run configuration (JSON)")->required();
    sub->add_option("--out", out_dir, "output directory (overrides config)");
    sub->add_option("--workers", workers, "worker threads for powder/scan jobs");
    sub->add_flag("--weighted-powder", weighted, "apply sin(theta) weighting to the powder average");
  };

  CLI::App* dynamics = app.add_subcommand("dynamics", "propagate the density matrix, export observables");
  add_common(dynamics, true);
  CLI::App* spectrum = app.add_subcommand("spectrum", "single-orientation or powder TREPR spectrum");
  add_common(spectrum, true);
  CLI::App* scan = app.add_subcommand("scan-j1", "spectra for a list of radical-coupler exchange values");
  add_common(scan, true);
  CLI::App* exchange = app.add_subcommand("exchange", "exchange couplings from energy tables");
  exchange->add_option("tables", table_paths, "energy table files")->required();
  exchange->add_option("--unit", exchange_unit, "output energy unit (default K)");
  exchange->add_option("--out", out_dir, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (exchange->parsed()) {
      const auto unit = optospin::units::parse_unit(exchange_unit);
      print_written(optospin::cmd_exchange(table_paths, out_dir.empty() ? "out" : out_dir, unit));
      return 0;
    }

    optospin::RunConfig cfg = optospin::RunConfig::load_file(config_path);
    cfg.powder.workers = resolve_workers(cfg, workers);
    if (weighted) cfg.powder.sin_theta_weight = true;
    const std::string dir = out_dir.empty() ? cfg.output.directory : out_dir;

    if (dynamics->parsed()) {
      print_written(optospin::cmd_dynamics(cfg, dir));
    } else if (spectrum->parsed()) {
      print_written(optospin::cmd_spectrum(cfg, dir));
    } else if (scan->parsed()) {
      print_written(optospin::cmd_scan_j1(cfg, dir));
    }
    return 0;
  } catch (const optospin::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const optospin::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    // powder failures arrive nested: orientation context + cause
    std::string message = e.what();
    try {
      std::rethrow_if_nested(e);
    } catch (const optospin::NumericalError& inner) {
      std::cerr << "numerical error: " << message << ": " << inner.what() << "\n";
      return kExitNumerical;
    } catch (...) {
    }
    std::cerr << "error: " << message << "\n";
    return kExitIo;
  }
}
