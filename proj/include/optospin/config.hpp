// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
//
// Versioned JSON run configuration. Sections: model, rates, initial_state,
// time_grid, dynamics, spectrum, powder, scan, output. Energies take a unit
// suffix (_K, _mT, _MHz, _rad_per_ns), exactly one per parameter. Unknown
// keys are rejected; every resolved value (defaults included) is echoed into
// the provenance header of each output file.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "optospin/params.hpp"
#include "optospin/spectra.hpp"

namespace optospin {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InitialStateSpec {
  std::string kind = "mixed_s0";  // mixed_s0 | thermal_s0 | basis
  double temperature_K = 0.0;     // thermal_s0 only
  int basis_index = 0;            // basis only
};

struct TimeGridSpec {
  double t_start_ns = 0.0;
  double t_end_ns = 10.0;
  int points = 201;

  std::vector<double> grid() const;
};

struct DynamicsSpec {
  int coherence_bra = 2;
  int coherence_ket = 3;
  std::vector<std::string> population_labels{"+1/2,+1,-1/2"};
  std::vector<double> tomography_times_ns{0.0062};
};

struct SpectrumSpec {
  double omega_min = 30.0;  // rad/ns
  double omega_max = 90.0;
  int omega_points = 100;
  double time_ns = 0.0062;
  std::optional<Orientation> orientation;  // single-orientation runs
};

struct ScanSpec {
  std::vector<double> j1_values;  // rad/ns, resolved
  std::string j1_unit = "mT";     // unit the values were given in (for filenames)
  std::vector<double> j1_values_as_given;
  bool tie_j2 = true;
};

struct OutputSpec {
  std::string directory = "out";
};

struct RunConfig {
  int schema_version = 1;
  long long seed = 0;  // reserved
  std::vector<std::string> notes;
  ModelParams model;
  RateParams rates;
  InitialStateSpec initial_state;
  TimeGridSpec time_grid;
  DynamicsSpec dynamics;
  SpectrumSpec spectrum;
  PowderOptions powder;
  ScanSpec scan;
  OutputSpec output;

  static RunConfig load_file(const std::string& path);
  static RunConfig load_text(const std::string& text, const std::string& source_name);

  Matrix initial_state_matrix(const Orientation& orient) const;
  SpectrumGrid spectrum_grid() const;

  // Flattened `key = value` lines, sorted; deterministic across runs and
  // worker counts (worker count deliberately excluded).
  std::vector<std::string> canonical_lines() const;
};

}  // namespace optospin
