// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
#include "optospin/config.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "optospin/dynamics.hpp"

namespace optospin {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Tracks key consumption within one JSON object so leftovers can be named.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError("'" + path_ + "' must be an object");
  }

  bool has(const std::string& key) {
    used_.insert(key);
    return j_.contains(key);
  }

  template <typename T>
  T get(const std::string& key, const T& fallback) {
    if (!has(key)) return fallback;
    return read<T>(key);
  }

  template <typename T>
  T require(const std::string& key) {
    if (!has(key)) throw ConfigError("missing required key '" + dotted(key) + "'");
    return read<T>(key);
  }

  const json& raw(const std::string& key) {
    used_.insert(key);
    return j_.at(key);
  }

  std::string dotted(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
  }

  void finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!used_.count(key)) throw ConfigError("unknown key '" + dotted(key) + "'");
    }
  }

 private:
  template <typename T>
  T read(const std::string& key) {
    try {
      return j_.at(key).get<T>();
    } catch (const json::exception&) {
      throw ConfigError("key '" + dotted(key) + "' has the wrong type");
    }
  }

  const json& j_;
  std::string path_;
  std::set<std::string> used_;
};

// Energy given as <name>_K / _mT / _MHz / _rad_per_ns; exactly one suffix.
double read_energy(Section& s, const std::string& name, double fallback_radns) {
  struct Suffix {
    const char* text;
    units::EnergyUnit unit;
  };
  static constexpr Suffix suffixes[] = {
      {"_K", units::EnergyUnit::Kelvin},
      {"_mT", units::EnergyUnit::MilliTesla},
      {"_MHz", units::EnergyUnit::MegaHertz},
      {"_rad_per_ns", units::EnergyUnit::Internal},
  };
  std::optional<double> result;
  std::string found;
  for (const Suffix& suf : suffixes) {
    const std::string key = name + suf.text;
    if (s.has(key)) {
      if (result) {
        throw ConfigError("'" + s.dotted(name) + "' given in two units ('" + found + "' and '" + key + "')");
      }
      double v;
      try {
        v = s.raw(key).get<double>();
      } catch (const json::exception&) {
        throw ConfigError("key '" + s.dotted(key) + "' has the wrong type");
      }
      result = units::Energy{v, suf.unit}.internal();
      found = key;
    }
  }
  return result.value_or(fallback_radns);
}

}  // namespace

std::vector<double> TimeGridSpec::grid() const {
  if (points < 2) throw ConfigError("time_grid.points must be >= 2");
  if (!(t_end_ns > t_start_ns)) throw ConfigError("time_grid requires t_end_ns > t_start_ns");
  std::vector<double> t(points);
  for (int i = 0; i < points; ++i) {
    t[i] = t_start_ns + (t_end_ns - t_start_ns) * i / (points - 1);
  }
  return t;
}

RunConfig RunConfig::load_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << f.rdbuf();
  return load_text(buf.str(), path);
}

RunConfig RunConfig::load_text(const std::string& text, const std::string& source_name) {
  json root_json;
  try {
    root_json = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(source_name + ": " + e.what());
  }

  RunConfig cfg;
  Section root(root_json, "");
  cfg.schema_version = root.require<int>("schema_version");
  if (cfg.schema_version != 1) {
    throw ConfigError("unsupported schema_version " + std::to_string(cfg.schema_version));
  }
  cfg.seed = root.get<long long>("seed", 0);
  cfg.notes = root.get<std::vector<std::string>>("notes", {});

  {
    if (!root.has("model")) throw ConfigError("missing required section 'model'");
    Section model(root.raw("model"), "model");
    cfg.model.j0 = read_energy(model, "j0", 0.0);
    cfg.model.j1 = read_energy(model, "j1", 0.0);
    cfg.model.j3 = read_energy(model, "j3", 0.0);
    const bool tie = model.get<bool>("tie_j2_to_j1", true);
    const double j2 = read_energy(model, "j2", tie ? cfg.model.j1 : 0.0);
    cfg.model.j2 = j2;
    cfg.model.zfs_d = read_energy(model, "zfs_d", 0.0);
    cfg.model.zfs_e = read_energy(model, "zfs_e", 0.0);
    cfg.model.g_radical = model.get<double>("g_radical", 2.0023);
    cfg.model.g_coupler = model.get<double>("g_coupler", 2.0023);
    cfg.model.b_field_mT = model.get<double>("b_mT", 0.0);
    cfg.model.drive = read_energy(model, "v", 0.0);
    cfg.model.pulse_on = model.get<double>("pulse_on_ns", 0.0);
    cfg.model.pulse_off = model.get<double>("pulse_off_ns", 0.0);
    model.finish();
    try {
      cfg.model.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("model: ") + e.what());
    }
  }

  {
    if (!root.has("rates")) throw ConfigError("missing required section 'rates'");
    Section rates(root.raw("rates"), "rates");
    cfg.rates.gamma_radical = rates.get<double>("gamma_radical_per_ns", 0.0);
    cfg.rates.gamma_triplet = rates.get<double>("gamma_triplet_per_ns", 0.0);
    cfg.rates.k_st = rates.get<double>("k_st_per_ns", 0.0);
    cfg.rates.k_tg = rates.get<double>("k_tg_per_ns", 0.0);
    cfg.rates.k_eg = rates.get<double>("k_eg_per_ns", 0.0);
    rates.finish();
    try {
      cfg.rates.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("rates: ") + e.what());
    }
  }

  if (root.has("initial_state")) {
    Section init(root.raw("initial_state"), "initial_state");
    cfg.initial_state.kind = init.get<std::string>("kind", "mixed_s0");
    cfg.initial_state.temperature_K = init.get<double>("temperature_K", 0.0);
    cfg.initial_state.basis_index = init.get<int>("basis_index", 0);
    init.finish();
    if (cfg.initial_state.kind != "mixed_s0" && cfg.initial_state.kind != "thermal_s0" &&
        cfg.initial_state.kind != "basis") {
      throw ConfigError("initial_state.kind must be mixed_s0, thermal_s0 or basis");
    }
    if (cfg.initial_state.kind == "thermal_s0" && !(cfg.initial_state.temperature_K > 0)) {
      throw ConfigError("initial_state.temperature_K must be > 0 for thermal_s0");
    }
    if (cfg.initial_state.kind == "basis" &&
        (cfg.initial_state.basis_index < 0 || cfg.initial_state.basis_index >= CompositeBasis::kDim)) {
      throw ConfigError("initial_state.basis_index out of range");
    }
  }

  if (root.has("time_grid")) {
    Section tg(root.raw("time_grid"), "time_grid");
    cfg.time_grid.t_start_ns = tg.get<double>("t_start_ns", 0.0);
    cfg.time_grid.t_end_ns = tg.get<double>("t_end_ns", 10.0);
    cfg.time_grid.points = tg.get<int>("points", 201);
    tg.finish();
  }

  if (root.has("dynamics")) {
    Section dyn(root.raw("dynamics"), "dynamics");
    cfg.dynamics.coherence_bra = dyn.get<int>("coherence_bra", 2);
    cfg.dynamics.coherence_ket = dyn.get<int>("coherence_ket", 3);
    cfg.dynamics.population_labels =
        dyn.get<std::vector<std::string>>("population_labels", cfg.dynamics.population_labels);
    cfg.dynamics.tomography_times_ns =
        dyn.get<std::vector<double>>("tomography_times_ns", cfg.dynamics.tomography_times_ns);
    dyn.finish();
    for (int v : {cfg.dynamics.coherence_bra, cfg.dynamics.coherence_ket}) {
      if (v < 1 || v > 4) throw ConfigError("dynamics coherence labels are 1..4");
    }
    for (const std::string& label : cfg.dynamics.population_labels) {
      try {
        parse_t1_label(label);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("dynamics.population_labels: ") + e.what());
      }
    }
  }

  if (root.has("spectrum")) {
    Section sp(root.raw("spectrum"), "spectrum");
    cfg.spectrum.omega_min = sp.get<double>("omega_min_rad_per_ns", 30.0);
    cfg.spectrum.omega_max = sp.get<double>("omega_max_rad_per_ns", 90.0);
    cfg.spectrum.omega_points = sp.get<int>("omega_points", 100);
    cfg.spectrum.time_ns = sp.get<double>("time_ns", 0.0062);
    if (sp.has("orientation")) {
      Section o(sp.raw("orientation"), "spectrum.orientation");
      Orientation orient;
      orient.theta = o.get<double>("theta_rad", units::kPi / 2);
      orient.phi = o.get<double>("phi_rad", 0.0);
      o.finish();
      try {
        orient.validate();
      } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("spectrum.orientation: ") + e.what());
      }
      cfg.spectrum.orientation = orient;
    }
    sp.finish();
    if (cfg.spectrum.omega_points < 1) throw ConfigError("spectrum.omega_points must be >= 1");
    if (cfg.spectrum.omega_points > 1 && !(cfg.spectrum.omega_max > cfg.spectrum.omega_min)) {
      throw ConfigError("spectrum requires omega_max > omega_min");
    }
  }

  if (root.has("powder")) {
    Section pw(root.raw("powder"), "powder");
    cfg.powder.n_theta = pw.get<int>("theta_points", 50);
    cfg.powder.n_phi = pw.get<int>("phi_points", 100);
    cfg.powder.sin_theta_weight = pw.get<bool>("sin_theta_weight", false);
    cfg.powder.workers = pw.get<int>("workers", 0);
    pw.finish();
    if (cfg.powder.n_theta < 1 || cfg.powder.n_phi < 1) {
      throw ConfigError("powder orientation counts must be >= 1");
    }
    if (cfg.powder.workers < 0) throw ConfigError("powder.workers must be >= 0");
  }

  if (root.has("scan")) {
    Section sc(root.raw("scan"), "scan");
    cfg.scan.tie_j2 = sc.get<bool>("tie_j2", true);
    std::optional<std::pair<std::string, units::EnergyUnit>> which;
    for (const auto& [suffix, unit] :
         std::vector<std::pair<std::string, units::EnergyUnit>>{{"j1_mT", units::EnergyUnit::MilliTesla},
                                                                 {"j1_K", units::EnergyUnit::Kelvin},
                                                                 {"j1_rad_per_ns", units::EnergyUnit::Internal}}) {
      if (sc.has(suffix)) {
        if (which) throw ConfigError("scan.j1 given in two units");
        which = {suffix, unit};
      }
    }
    if (which) {
      std::vector<double> values;
      try {
        values = sc.raw(which->first).get<std::vector<double>>();
      } catch (const json::exception&) {
        throw ConfigError("key 'scan." + which->first + "' has the wrong type");
      }
      if (values.empty()) throw ConfigError("scan." + which->first + " must not be empty");
      cfg.scan.j1_values_as_given = values;
      cfg.scan.j1_unit = which->first.substr(3);
      for (double v : values) {
        cfg.scan.j1_values.push_back(units::Energy{v, which->second}.internal());
      }
    }
    sc.finish();
  }

  if (root.has("output")) {
    Section out(root.raw("output"), "output");
    cfg.output.directory = out.get<std::string>("directory", "out");
    out.finish();
  }

  root.finish();
  return cfg;
}

Matrix RunConfig::initial_state_matrix(const Orientation& orient) const {
  if (initial_state.kind == "mixed_s0") return initial_state_mixed_s0();
  if (initial_state.kind == "thermal_s0") {
    return initial_state_thermal_s0(model, orient, initial_state.temperature_K);
  }
  Matrix rho = Matrix::Zero(CompositeBasis::kDim, CompositeBasis::kDim);
  rho(initial_state.basis_index, initial_state.basis_index) = 1.0;
  return rho;
}

SpectrumGrid RunConfig::spectrum_grid() const {
  SpectrumGrid grid;
  grid.omegas = SpectrumGrid::linspace(spectrum.omega_min, spectrum.omega_max, spectrum.omega_points);
  grid.b_field_mT = model.b_field_mT;
  grid.time = spectrum.time_ns;
  return grid;
}

std::vector<std::string> RunConfig::canonical_lines() const {
  std::vector<std::string> lines;
  auto add = [&](const std::string& key, const std::string& value) { lines.push_back(key + " = " + value); };
  add("schema_version", std::to_string(schema_version));
  add("seed", std::to_string(seed));
  for (size_t i = 0; i < notes.size(); ++i) add("notes." + std::to_string(i), notes[i]);

  add("model.j0_rad_per_ns", fmt(model.j0));
  add("model.j1_rad_per_ns", fmt(model.j1));
  add("model.j2_rad_per_ns", fmt(model.j2));
  add("model.j3_rad_per_ns", fmt(model.j3));
  add("model.zfs_d_rad_per_ns", fmt(model.zfs_d));
  add("model.zfs_e_rad_per_ns", fmt(model.zfs_e));
  add("model.g_radical", fmt(model.g_radical));
  add("model.g_coupler", fmt(model.g_coupler));
  add("model.b_mT", fmt(model.b_field_mT));
  add("model.v_rad_per_ns", fmt(model.drive));
  add("model.pulse_on_ns", fmt(model.pulse_on));
  add("model.pulse_off_ns", fmt(model.pulse_off));

  add("rates.gamma_radical_per_ns", fmt(rates.gamma_radical));
  add("rates.gamma_triplet_per_ns", fmt(rates.gamma_triplet));
  add("rates.k_st_per_ns", fmt(rates.k_st));
  add("rates.k_tg_per_ns", fmt(rates.k_tg));
  add("rates.k_eg_per_ns", fmt(rates.k_eg));

  add("initial_state.kind", initial_state.kind);
  if (initial_state.kind == "thermal_s0") add("initial_state.temperature_K", fmt(initial_state.temperature_K));
  if (initial_state.kind == "basis") add("initial_state.basis_index", std::to_string(initial_state.basis_index));

  add("time_grid.t_start_ns", fmt(time_grid.t_start_ns));
  add("time_grid.t_end_ns", fmt(time_grid.t_end_ns));
  add("time_grid.points", std::to_string(time_grid.points));

  add("dynamics.coherence_bra", std::to_string(dynamics.coherence_bra));
  add("dynamics.coherence_ket", std::to_string(dynamics.coherence_ket));
  for (size_t i = 0; i < dynamics.population_labels.size(); ++i) {
    add("dynamics.population_labels." + std::to_string(i), dynamics.population_labels[i]);
  }
  for (size_t i = 0; i < dynamics.tomography_times_ns.size(); ++i) {
    add("dynamics.tomography_times_ns." + std::to_string(i), fmt(dynamics.tomography_times_ns[i]));
  }

  add("spectrum.omega_min_rad_per_ns", fmt(spectrum.omega_min));
  add("spectrum.omega_max_rad_per_ns", fmt(spectrum.omega_max));
  add("spectrum.omega_points", std::to_string(spectrum.omega_points));
  add("spectrum.time_ns", fmt(spectrum.time_ns));
  if (spectrum.orientation) {
    add("spectrum.orientation.theta_rad", fmt(spectrum.orientation->theta));
    add("spectrum.orientation.phi_rad", fmt(spectrum.orientation->phi));
  }

  add("powder.theta_points", std::to_string(powder.n_theta));
  add("powder.phi_points", std::to_string(powder.n_phi));
  add("powder.sin_theta_weight", powder.sin_theta_weight ? "true" : "false");

  for (size_t i = 0; i < scan.j1_values_as_given.size(); ++i) {
    add("scan.j1_" + scan.j1_unit + "." + std::to_string(i), fmt(scan.j1_values_as_given[i]));
  }
  if (!scan.j1_values.empty()) add("scan.tie_j2", scan.tie_j2 ? "true" : "false");

  std::sort(lines.begin(), lines.end());
  return lines;
}

}  // namespace optospin
