// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
#include "optospin/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "optospin/dynamics.hpp"

namespace optospin {

namespace fs = std::filesystem;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string short_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

void write_provenance(std::ostream& os, const RunConfig& cfg, const std::string& command) {
  os << "# optospin " << kVersion << "\n";
  os << "# command = " << command << "\n";
  for (const std::string& line : cfg.canonical_lines()) os << "# " << line << "\n";
}

std::string write_file(const std::string& out_dir, const std::string& name, const std::string& content) {
  fs::create_directories(out_dir);
  const fs::path path = fs::path(out_dir) / name;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
  f << content;
  if (!f) throw std::runtime_error("short write to '" + path.string() + "'");
  return path.string();
}

Orientation single_run_orientation(const RunConfig& cfg) {
  if (cfg.spectrum.orientation) return *cfg.spectrum.orientation;
  return powder_orientations(1, 1).front();
}

}  // namespace

std::string spectrum_to_tsv(const Spectrum& spec, const RunConfig& cfg, const std::string& command) {
  std::ostringstream os;
  write_provenance(os, cfg, command);
  os << "# snapshot_time_ns = " << format_double(spec.grid.time) << "\n";
  if (spec.orientation) {
    os << "# orientation = theta " << format_double(spec.orientation->theta) << " phi "
       << format_double(spec.orientation->phi) << "\n";
  } else {
    os << "# orientation = powder\n";
  }
  os << "omega_rad_per_ns\tintensity\n";
  for (size_t i = 0; i < spec.grid.omegas.size(); ++i) {
    os << format_double(spec.grid.omegas[i]) << "\t" << format_double(spec.intensities[i]) << "\n";
  }
  return os.str();
}

CommandResult cmd_dynamics(const RunConfig& cfg, const std::string& out_dir) {
  CommandResult result;
  const Orientation orient = cfg.spectrum.orientation.value_or(Orientation{});
  const Matrix rho0 = cfg.initial_state_matrix(orient);
  // tomography snapshot times join the stored grid so "nearest point" is
  // the requested time itself whenever it lies inside the window
  std::vector<double> times = cfg.time_grid.grid();
  for (double t : cfg.dynamics.tomography_times_ns) {
    if (t > times.front() && t < times.back()) times.push_back(t);
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end(),
                          [](double a, double b) { return std::abs(a - b) < 1e-12; }),
              times.end());
  const Trajectory traj = propagate(cfg.model, cfg.rates, orient, rho0, times);

  const auto coherence = coherence_trace(traj, cfg.dynamics.coherence_bra, cfg.dynamics.coherence_ket);
  std::vector<std::vector<double>> populations;
  for (const std::string& label : cfg.dynamics.population_labels) {
    populations.push_back(population_trace(traj, parse_t1_label(label)));
  }

  std::ostringstream os;
  write_provenance(os, cfg, "dynamics");
  os << "time_ns";
  for (const std::string& label : cfg.dynamics.population_labels) os << "\tpop[" << label << "]";
  os << "\tcoh_re\tcoh_im\tcoh_abs\n";
  for (size_t i = 0; i < traj.times.size(); ++i) {
    os << format_double(traj.times[i]);
    for (const auto& pop : populations) os << "\t" << format_double(pop[i]);
    os << "\t" << format_double(coherence[i].real()) << "\t" << format_double(coherence[i].imag())
       << "\t" << format_double(std::abs(coherence[i])) << "\n";
  }
  result.files_written.push_back(write_file(out_dir, "trajectory.tsv", os.str()));

  for (double t : cfg.dynamics.tomography_times_ns) {
    const Tomography tomo = tomography_snapshot(traj, t);
    std::ostringstream ts;
    write_provenance(ts, cfg, "dynamics");
    ts << "# requested_time_ns = " << format_double(t) << "\n";
    ts << "# grid_time_ns = " << format_double(tomo.time) << "\n";
    ts << "# basis: |1>=|++>, |2>=|+->, |3>=|-+>, |4>=|--> (radical1, radical2)\n";
    ts << "row\t|1|\t|2|\t|3|\t|4|\n";
    for (int r = 0; r < 4; ++r) {
      ts << "|" << (r + 1) << ">";
      for (int c = 0; c < 4; ++c) ts << "\t" << format_double(tomo.magnitudes(r, c));
      ts << "\n";
    }
    ts << "row\tcol\trdm_re\trdm_im\n";
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        ts << (r + 1) << "\t" << (c + 1) << "\t" << format_double(tomo.rdm(r, c).real()) << "\t"
           << format_double(tomo.rdm(r, c).imag()) << "\n";
      }
    }
    result.files_written.push_back(
        write_file(out_dir, "tomography_t" + short_double(t) + ".tsv", ts.str()));
  }
  return result;
}

CommandResult cmd_spectrum(const RunConfig& cfg, const std::string& out_dir) {
  CommandResult result;
  const SpectrumGrid grid = cfg.spectrum_grid();
  const bool powder = cfg.powder.n_theta * cfg.powder.n_phi > 1;
  if (!powder) {
    const Orientation orient = single_run_orientation(cfg);
    const Matrix rho0 = cfg.initial_state_matrix(orient);
    const Matrix rho_t = evolve_to(cfg.model, cfg.rates, orient, rho0, 0.0, grid.time);
    const Spectrum spec = spectrum_single(rho_t, cfg.model, cfg.rates, orient, grid);
    result.files_written.push_back(
        write_file(out_dir, "spectrum_single.tsv", spectrum_to_tsv(spec, cfg, "spectrum")));
    return result;
  }

  const Matrix rho0 = cfg.initial_state_matrix(Orientation{});
  const auto tic = std::chrono::steady_clock::now();
  const Spectrum spec = powder_average(cfg.model, cfg.rates, rho0, grid, cfg.powder);
  const double total_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - tic).count();
  result.files_written.push_back(
      write_file(out_dir, "spectrum_powder.tsv", spectrum_to_tsv(spec, cfg, "spectrum")));

  // Timing sidecar; not part of the deterministic-output contract.
  std::ostringstream ts;
  write_provenance(ts, cfg, "spectrum");
  ts << "# workers = " << cfg.powder.workers << "\n";
  ts << "# wall_ms_total = " << format_double(total_ms) << "\n";
  ts << "orientation_index\ttheta_rad\tphi_rad\twall_ms\n";
  const auto orientations = powder_orientations(cfg.powder.n_theta, cfg.powder.n_phi);
  for (size_t k = 0; k < spec.orientation_ms.size(); ++k) {
    ts << k << "\t" << format_double(orientations[k].theta) << "\t" << format_double(orientations[k].phi)
       << "\t" << format_double(spec.orientation_ms[k]) << "\n";
  }
  result.files_written.push_back(write_file(out_dir, "spectrum_powder_timing.tsv", ts.str()));
  return result;
}

CommandResult cmd_scan_j1(const RunConfig& cfg, const std::string& out_dir) {
  if (cfg.scan.j1_values.empty()) {
    throw ConfigError("scan command needs a non-empty scan.j1_<unit> list");
  }
  // Deduplicate, preserving first occurrence.
  std::vector<double> values, values_as_given;
  std::set<double> seen;
  for (size_t i = 0; i < cfg.scan.j1_values.size(); ++i) {
    if (seen.insert(cfg.scan.j1_values[i]).second) {
      values.push_back(cfg.scan.j1_values[i]);
      values_as_given.push_back(cfg.scan.j1_values_as_given[i]);
    } else {
      std::fprintf(stderr, "warning: duplicate scan value %s %s dropped\n",
                   short_double(cfg.scan.j1_values_as_given[i]).c_str(), cfg.scan.j1_unit.c_str());
    }
  }

  const Matrix rho0 = cfg.initial_state_matrix(Orientation{});
  const std::vector<Spectrum> spectra =
      spectrum_scan_j1(values, cfg.model, cfg.rates, rho0, cfg.spectrum_grid(), cfg.powder, cfg.scan.tie_j2);

  CommandResult result;
  for (size_t i = 0; i < spectra.size(); ++i) {
    RunConfig annotated = cfg;
    annotated.model.j1 = values[i];
    if (cfg.scan.tie_j2) annotated.model.j2 = values[i];
    const std::string name =
        "spectrum_j1_" + std::to_string(i) + "_" + short_double(values_as_given[i]) + cfg.scan.j1_unit + ".tsv";
    result.files_written.push_back(
        write_file(out_dir, name, spectrum_to_tsv(spectra[i], annotated, "scan-j1")));
  }
  return result;
}

CommandResult cmd_exchange(const std::vector<std::string>& table_paths, const std::string& out_dir,
                           units::EnergyUnit output_unit) {
  if (table_paths.empty()) throw ConfigError("exchange command needs at least one table file");
  std::vector<EnergyTable> tables;
  for (const std::string& path : table_paths) {
    for (EnergyTable& t : parse_energy_tables_file(path)) {
      // mixed units within a table are converted up front
      tables.push_back(t.converted(output_unit));
    }
  }
  // Single tables without angles are processed standalone.
  const bool scan_mode = tables.size() > 1 || tables.front().dihedral_deg.has_value();
  std::vector<ScanRow> rows;
  if (scan_mode) {
    rows = scan_process(tables);
  } else {
    ScanRow row;
    row.result = j123_from_energies(tables.front());
    rows.push_back(row);
  }

  std::ostringstream os;
  os << "# optospin " << kVersion << "\n";
  os << "# command = exchange\n";
  for (const std::string& p : table_paths) os << "# input = " << p << "\n";
  os << "# unit = " << units::unit_name(output_unit) << "\n";
  os << "angle_deg\tj0\tj0_sign\tj1\tj1_sign\tj2\tj2_sign\tj3\tj3_sign\tj3_negligible\n";
  for (const ScanRow& row : rows) {
    os << format_double(row.angle_deg) << "\t";
    if (row.result.j0) {
      os << format_double(row.result.j0->value.value) << "\t" << coupling_name(row.result.j0->sign);
    } else {
      os << "nan\tnone";
    }
    for (const TaggedJ* j : {&row.result.j1, &row.result.j2, &row.result.j3}) {
      os << "\t" << format_double(j->value.value) << "\t" << coupling_name(j->sign);
    }
    os << "\t" << (row.j3_negligible ? "yes" : "no") << "\n";
  }
  CommandResult result;
  result.files_written.push_back(write_file(out_dir, "exchange_couplings.tsv", os.str()));
  return result;
}

}  // namespace optospin
