// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace optospin::units {

// All internal energies are angular frequencies in rad/ns (energy divided
// by hbar). CODATA values, 6 significant digits.
inline constexpr double kHbarJs = 1.05457e-34;        // J s
inline constexpr double kBoltzmannJperK = 1.38065e-23; // J/K
inline constexpr double kBohrMagnetonJperT = 9.27401e-24; // J/T
inline constexpr double kHartreeJ = 4.35974e-18;      // J
inline constexpr double kElectronVoltJ = 1.60218e-19; // J
inline constexpr double kPi = 3.14159265358979323846;

// rad/ns produced by one unit of each energy scale.
inline constexpr double kKelvinToRadPerNs = kBoltzmannJperK / kHbarJs * 1e-9;
// Zeeman frequency per mT and per g-factor unit.
inline constexpr double kMuBOverHbarRadPerNsPerMT = kBohrMagnetonJperT / kHbarJs * 1e-3 * 1e-9;
// "mT-equivalent" energies fold in an explicit g = 2: E(1 mT) = 2 mu_B (1 mT).
inline constexpr double kMilliTeslaToRadPerNs = 2.0 * kMuBOverHbarRadPerNsPerMT;
inline constexpr double kMegaHertzToRadPerNs = 2.0 * kPi * 1e6 * 1e-9;
inline constexpr double kHartreeToRadPerNs = kHartreeJ / kHbarJs * 1e-9;
inline constexpr double kElectronVoltToRadPerNs = kElectronVoltJ / kHbarJs * 1e-9;

enum class EnergyUnit { Hartree, ElectronVolt, Kelvin, MilliTesla, MegaHertz, Internal };

inline double to_internal_factor(EnergyUnit u) {
  switch (u) {
    case EnergyUnit::Hartree: return kHartreeToRadPerNs;
    case EnergyUnit::ElectronVolt: return kElectronVoltToRadPerNs;
    case EnergyUnit::Kelvin: return kKelvinToRadPerNs;
    case EnergyUnit::MilliTesla: return kMilliTeslaToRadPerNs;
    case EnergyUnit::MegaHertz: return kMegaHertzToRadPerNs;
    case EnergyUnit::Internal: return 1.0;
  }
  throw std::logic_error("unreachable energy unit");
}

inline std::string unit_name(EnergyUnit u) {
  switch (u) {
    case EnergyUnit::Hartree: return "Hartree";
    case EnergyUnit::ElectronVolt: return "eV";
    case EnergyUnit::Kelvin: return "K";
    case EnergyUnit::MilliTesla: return "mT";
    case EnergyUnit::MegaHertz: return "MHz";
    case EnergyUnit::Internal: return "rad/ns";
  }
  return "?";
}

// Accepts the names written in energy-table files and configs.
inline EnergyUnit parse_unit(const std::string& s) {
  if (s == "Hartree" || s == "hartree" || s == "Ha" || s == "au") return EnergyUnit::Hartree;
  if (s == "eV") return EnergyUnit::ElectronVolt;
  if (s == "K" || s == "kelvin") return EnergyUnit::Kelvin;
  if (s == "mT") return EnergyUnit::MilliTesla;
  if (s == "MHz") return EnergyUnit::MegaHertz;
  if (s == "rad/ns" || s == "internal") return EnergyUnit::Internal;
  throw std::invalid_argument("unknown energy unit '" + s + "'");
}

struct Energy {
  double value = 0.0;
  EnergyUnit unit = EnergyUnit::Internal;

  double internal() const { return value * to_internal_factor(unit); }
  Energy in(EnergyUnit target) const {
    return Energy{internal() / to_internal_factor(target), target};
  }
};

}  // namespace optospin::units
