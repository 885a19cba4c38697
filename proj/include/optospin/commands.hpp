// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
//
// Implementations behind the CLI subcommands. Each writes tab-separated
// files with a provenance header (artifact version + resolved config) into
// the output directory. Exit-code mapping happens in the CLI driver.
#pragma once

#include <string>
#include <vector>

#include "optospin/config.hpp"
#include "optospin/exchange.hpp"
#include "optospin/spectra.hpp"

namespace optospin {

inline constexpr const char* kVersion = "0.1.0";

struct CommandResult {
  std::vector<std::string> files_written;
};

CommandResult cmd_dynamics(const RunConfig& cfg, const std::string& out_dir);
CommandResult cmd_spectrum(const RunConfig& cfg, const std::string& out_dir);
CommandResult cmd_scan_j1(const RunConfig& cfg, const std::string& out_dir);
CommandResult cmd_exchange(const std::vector<std::string>& table_paths, const std::string& out_dir,
                           units::EnergyUnit output_unit);

// Serialization helpers shared with tests.
std::string spectrum_to_tsv(const Spectrum& spec, const RunConfig& cfg, const std::string& command);
std::string format_double(double v);

}  // namespace optospin
