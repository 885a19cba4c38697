// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "optospin/units.hpp"

namespace optospin {

// Field orientation in the molecular frame. The static field points along
// e_static = (sin t cos p, sin t sin p, cos t); the microwave field along
// e_mw = (-sin p, cos p, 0), perpendicular to it.
struct Orientation {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2 pi)

  Eigen::Vector3d static_dir() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
  }
  Eigen::Vector3d mw_dir() const { return {-std::sin(phi), std::cos(phi), 0.0}; }

  void validate() const {
    if (!(theta >= 0.0 && theta <= units::kPi)) throw std::invalid_argument("theta outside [0, pi]");
    if (!(phi >= 0.0 && phi < 2.0 * units::kPi)) throw std::invalid_argument("phi outside [0, 2 pi)");
  }
};

// All coherent-model parameters, already resolved to internal units
// (energies in rad/ns, field in mT, times in ns).
struct ModelParams {
  double j0 = 0.0;  // radical-radical exchange, ground manifolds
  double j1 = 0.0;  // radical1-coupler exchange, T1
  double j2 = 0.0;  // coupler-radical2 exchange, T1
  double j3 = 0.0;  // radical-radical exchange, T1
  double zfs_d = 0.0;
  double zfs_e = 0.0;
  double g_radical = 2.0023;
  double g_coupler = 2.0023;
  double b_field_mT = 0.0;
  double drive = 0.0;      // optical matrix element V, rad/ns
  double pulse_on = 0.0;   // ns
  double pulse_off = 0.0;  // ns

  // Half-open gate [pulse_on, pulse_off).
  bool drive_active(double t) const { return drive != 0.0 && t >= pulse_on && t < pulse_off; }

  double zeeman_radical() const { return g_radical * units::kMuBOverHbarRadPerNsPerMT * b_field_mT; }
  double zeeman_coupler() const { return g_coupler * units::kMuBOverHbarRadPerNsPerMT * b_field_mT; }

  void validate() const {
    for (double v : {j0, j1, j2, j3, zfs_d, zfs_e, g_radical, g_coupler, b_field_mT, drive, pulse_on, pulse_off}) {
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite model parameter");
    }
    if (b_field_mT < 0) throw std::invalid_argument("field magnitude must be >= 0");
    if (pulse_on > pulse_off) throw std::invalid_argument("pulse window requires t_on <= t_off");
  }
};

// One rate per incoherent channel, 1/ns.
struct RateParams {
  double gamma_radical = 0.0;
  double gamma_triplet = 0.0;
  double k_st = 0.0;
  double k_tg = 0.0;
  double k_eg = 0.0;

  void validate() const {
    for (double v : {gamma_radical, gamma_triplet, k_st, k_tg, k_eg}) {
      if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("rates must be finite and >= 0");
    }
  }
};

}  // namespace optospin
