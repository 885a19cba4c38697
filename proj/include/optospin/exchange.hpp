// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
//
// Exchange couplings from quantum-chemistry total energies.
//
//   J0 = 2 (E_triplet - E_BS)
//   J1 = (dE_ac + dE_bd)/2,  J2 = (dE_ac - dE_bd)/2,  J3 = dE_cd + dE_ab
//
// with dE_ij = E_i - E_j over the spin configurations a..d of the triplet
// manifold, and the symmetric-molecule special case J1 = J2 = dE_ac/2,
// J3 = dE_cb + dE_ab. Positive J is antiferromagnetic, negative
// ferromagnetic.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "optospin/units.hpp"

namespace optospin {

using units::Energy;
using units::EnergyUnit;

enum class SpinConfig { a, b, c, d, triplet, broken_symmetry };

std::string spin_config_name(SpinConfig c);
SpinConfig parse_spin_config(const std::string& s);

struct UnitMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EnergyTable {
  std::map<SpinConfig, Energy> entries;
  std::optional<double> dihedral_deg;
  std::string molecule;

  const Energy& at(SpinConfig c) const;  // throws naming the missing label
  EnergyTable converted(EnergyUnit u) const;
};

enum class Coupling { AFM, FM, Zero };

std::string coupling_name(Coupling c);
Coupling classify(double j);

struct TaggedJ {
  Energy value;
  Coupling sign;
};

struct ExchangeResult {
  std::optional<TaggedJ> j0;  // present when the table has triplet/broken_symmetry entries
  TaggedJ j1, j2, j3;
};

// Both energies must carry the same unit (convert explicitly first).
TaggedJ j0_from_energies(const Energy& e_triplet, const Energy& e_bs);

// Requires labels a, b, c, d; adds J0 when triplet/broken_symmetry present.
ExchangeResult j123_from_energies(const EnergyTable& table);

// Symmetric molecule (E_b = E_d).
std::pair<TaggedJ, TaggedJ> j_symmetric(const Energy& ea, const Energy& eb, const Energy& ec);

struct ScanRow {
  double angle_deg = 0.0;
  ExchangeResult result;
  bool j3_negligible = false;
};

// Tables must be ordered by distinct dihedral angles. j3_threshold flags
// |J3| < threshold * |J0| as negligible (skipped when J0 is absent or zero).
std::vector<ScanRow> scan_process(const std::vector<EnergyTable>& tables, double j3_threshold = 1e-3);

// Text format, one record per line: `label value unit`, '#' comments.
// Metadata comments `# dihedral_deg: <x>` and `# molecule: <name>` are
// honored. The multi-angle variant starts with `# columns: angle <labels...>`
// and `# unit: <u>` followed by one row of numbers per angle.
EnergyTable parse_energy_table(const std::string& text, const std::string& source_name);
std::vector<EnergyTable> parse_energy_tables_file(const std::string& path);

}  // namespace optospin
