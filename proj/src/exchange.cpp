// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
#include "optospin/exchange.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace optospin {

std::string spin_config_name(SpinConfig c) {
  switch (c) {
    case SpinConfig::a: return "a";
    case SpinConfig::b: return "b";
    case SpinConfig::c: return "c";
    case SpinConfig::d: return "d";
    case SpinConfig::triplet: return "triplet";
    case SpinConfig::broken_symmetry: return "broken_symmetry";
  }
  return "?";
}

SpinConfig parse_spin_config(const std::string& s) {
  if (s == "a") return SpinConfig::a;
  if (s == "b") return SpinConfig::b;
  if (s == "c") return SpinConfig::c;
  if (s == "d") return SpinConfig::d;
  if (s == "triplet") return SpinConfig::triplet;
  if (s == "broken_symmetry" || s == "bs") return SpinConfig::broken_symmetry;
  throw std::invalid_argument("unknown spin configuration label '" + s + "'");
}

const Energy& EnergyTable::at(SpinConfig c) const {
  auto it = entries.find(c);
  if (it == entries.end()) {
    throw std::invalid_argument("energy table is missing label '" + spin_config_name(c) + "'");
  }
  return it->second;
}

EnergyTable EnergyTable::converted(EnergyUnit u) const {
  EnergyTable out = *this;
  for (auto& [label, e] : out.entries) e = e.in(u);
  return out;
}

std::string coupling_name(Coupling c) {
  switch (c) {
    case Coupling::AFM: return "AFM";
    case Coupling::FM: return "FM";
    case Coupling::Zero: return "zero";
  }
  return "?";
}

Coupling classify(double j) {
  if (j > 0) return Coupling::AFM;
  if (j < 0) return Coupling::FM;
  return Coupling::Zero;
}

namespace {

void require_same_unit(std::initializer_list<const Energy*> energies) {
  const EnergyUnit u = (*energies.begin())->unit;
  for (const Energy* e : energies) {
    if (e->unit != u) {
      throw UnitMismatchError("energies mix units '" + units::unit_name(u) + "' and '" +
                              units::unit_name(e->unit) + "'; convert explicitly first");
    }
  }
}

TaggedJ tag(double value, EnergyUnit unit) { return {Energy{value, unit}, classify(value)}; }

}  // namespace

TaggedJ j0_from_energies(const Energy& e_triplet, const Energy& e_bs) {
  require_same_unit({&e_triplet, &e_bs});
  return tag(2.0 * (e_triplet.value - e_bs.value), e_triplet.unit);
}

ExchangeResult j123_from_energies(const EnergyTable& table) {
  const Energy& ea = table.at(SpinConfig::a);
  const Energy& eb = table.at(SpinConfig::b);
  const Energy& ec = table.at(SpinConfig::c);
  const Energy& ed = table.at(SpinConfig::d);
  require_same_unit({&ea, &eb, &ec, &ed});
  const EnergyUnit u = ea.unit;
  const double de_ac = ea.value - ec.value;
  const double de_bd = eb.value - ed.value;
  const double de_cd = ec.value - ed.value;
  const double de_ab = ea.value - eb.value;

  ExchangeResult r;
  r.j1 = tag((de_ac + de_bd) / 2.0, u);
  r.j2 = tag((de_ac - de_bd) / 2.0, u);
  r.j3 = tag(de_cd + de_ab, u);
  if (table.entries.count(SpinConfig::triplet) && table.entries.count(SpinConfig::broken_symmetry)) {
    const Energy et = table.at(SpinConfig::triplet).in(u);
    const Energy ebs = table.at(SpinConfig::broken_symmetry).in(u);
    r.j0 = j0_from_energies(et, ebs);
  }
  return r;
}

std::pair<TaggedJ, TaggedJ> j_symmetric(const Energy& ea, const Energy& eb, const Energy& ec) {
  require_same_unit({&ea, &eb, &ec});
  const EnergyUnit u = ea.unit;
  const TaggedJ j1 = tag((ea.value - ec.value) / 2.0, u);
  const TaggedJ j3 = tag((ec.value - eb.value) + (ea.value - eb.value), u);
  return {j1, j3};
}

std::vector<ScanRow> scan_process(const std::vector<EnergyTable>& tables, double j3_threshold) {
  std::set<double> seen;
  std::vector<ScanRow> rows;
  rows.reserve(tables.size());
  for (const EnergyTable& t : tables) {
    if (!t.dihedral_deg) throw std::invalid_argument("scan table lacks a dihedral angle");
    if (!seen.insert(*t.dihedral_deg).second) {
      throw std::invalid_argument("duplicate dihedral angle " + std::to_string(*t.dihedral_deg));
    }
    ScanRow row;
    row.angle_deg = *t.dihedral_deg;
    row.result = j123_from_energies(t);
    if (row.result.j0 && row.result.j0->value.value != 0.0) {
      row.j3_negligible =
          std::abs(row.result.j3.value.internal()) < j3_threshold * std::abs(row.result.j0->value.internal());
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(),
            [](const ScanRow& x, const ScanRow& y) { return x.angle_deg < y.angle_deg; });
  return rows;
}

namespace {

[[noreturn]] void parse_fail(const std::string& source, int line_no, const std::string& what) {
  throw std::invalid_argument(source + ":" + std::to_string(line_no) + ": " + what);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

EnergyTable parse_energy_table(const std::string& text, const std::string& source_name) {
  EnergyTable table;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string stripped = trim(line);
    if (stripped.empty()) continue;
    if (stripped[0] == '#') {
      // metadata comments
      const std::string body = trim(stripped.substr(1));
      if (body.rfind("dihedral_deg:", 0) == 0) {
        try {
          table.dihedral_deg = std::stod(trim(body.substr(13)));
        } catch (const std::exception&) {
          parse_fail(source_name, line_no, "bad dihedral_deg value");
        }
      } else if (body.rfind("molecule:", 0) == 0) {
        table.molecule = trim(body.substr(9));
      }
      continue;
    }
    std::istringstream fields(stripped);
    std::string label, unit_str;
    double value = 0.0;
    if (!(fields >> label >> value >> unit_str)) {
      parse_fail(source_name, line_no, "expected `label value unit`");
    }
    std::string extra;
    if (fields >> extra) parse_fail(source_name, line_no, "trailing field '" + extra + "'");
    try {
      const SpinConfig cfg = parse_spin_config(label);
      if (table.entries.count(cfg)) parse_fail(source_name, line_no, "duplicate label '" + label + "'");
      table.entries[cfg] = Energy{value, units::parse_unit(unit_str)};
    } catch (const std::invalid_argument& e) {
      parse_fail(source_name, line_no, e.what());
    }
  }
  if (table.entries.empty()) throw std::invalid_argument(source_name + ": no energy records found");
  return table;
}

std::vector<EnergyTable> parse_energy_tables_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open energy table file '" + path + "'");
  std::stringstream buffer;
  buffer << f.rdbuf();
  const std::string text = buffer.str();

  // Multi-angle tabular variant?
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> columns;
  EnergyUnit unit = EnergyUnit::Kelvin;
  bool has_columns = false, has_unit = false;
  std::string molecule;
  int line_no = 0;
  std::vector<EnergyTable> tables;
  while (std::getline(in, line)) {
    ++line_no;
    std::string stripped = trim(line);
    if (stripped.empty()) continue;
    if (stripped[0] == '#') {
      const std::string body = trim(stripped.substr(1));
      if (body.rfind("columns:", 0) == 0) {
        std::istringstream cols(body.substr(8));
        std::string c;
        while (cols >> c) columns.push_back(c);
        if (columns.empty() || columns.front() != "angle") {
          parse_fail(path, line_no, "columns header must start with 'angle'");
        }
        has_columns = true;
      } else if (body.rfind("unit:", 0) == 0) {
        try {
          unit = units::parse_unit(trim(body.substr(5)));
        } catch (const std::invalid_argument& e) {
          parse_fail(path, line_no, e.what());
        }
        has_unit = true;
      } else if (body.rfind("molecule:", 0) == 0) {
        molecule = trim(body.substr(9));
      }
      continue;
    }
    if (!has_columns) {
      // single-table format
      return {parse_energy_table(text, path)};
    }
    if (!has_unit) parse_fail(path, line_no, "tabular format needs a `# unit:` header before data");
    std::istringstream fields(stripped);
    EnergyTable t;
    t.molecule = molecule;
    double angle = 0.0;
    if (!(fields >> angle)) parse_fail(path, line_no, "expected a numeric angle");
    t.dihedral_deg = angle;
    for (size_t k = 1; k < columns.size(); ++k) {
      double v = 0.0;
      if (!(fields >> v)) parse_fail(path, line_no, "missing value for column '" + columns[k] + "'");
      try {
        t.entries[parse_spin_config(columns[k])] = Energy{v, unit};
      } catch (const std::invalid_argument& e) {
        parse_fail(path, line_no, e.what());
      }
    }
    std::string extra;
    if (fields >> extra) parse_fail(path, line_no, "trailing field '" + extra + "'");
    tables.push_back(std::move(t));
  }
  if (tables.empty()) throw std::invalid_argument(path + ": no energy records found");
  return tables;
}

}  // namespace optospin
