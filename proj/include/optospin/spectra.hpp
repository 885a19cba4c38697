// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
//
// Time-resolved EPR intensities via resolvent linear solves,
//
//   I0(t, w, theta, phi) = | Tr{ rho(t) S_mw [iL(theta,phi) - wI]^-1 S_mw } |
//
// with S_mw the total spin along the microwave direction, and the powder
// average over a uniform (theta, phi) grid. Each (orientation, omega) point
// performs one dense LU factorization; the Liouvillian build and rho(t) are
// shared across omega at one orientation. Orientations are embarrassingly
// parallel; accumulation uses a fixed-order pairwise reduction so results
// are identical for any worker count.
#pragma once

#include <optional>
#include <vector>

#include "optospin/dynamics.hpp"
#include "optospin/lindblad.hpp"
#include "optospin/params.hpp"

namespace optospin {

struct SpectrumGrid {
  std::vector<double> omegas;  // rad/ns, strictly increasing
  double b_field_mT = 0.0;
  double time = 0.0;  // snapshot time, ns

  void validate() const;
  static std::vector<double> linspace(double lo, double hi, int n);
};

struct Spectrum {
  SpectrumGrid grid;
  std::vector<double> intensities;
  std::optional<Orientation> orientation;  // nullopt for powder
  std::vector<double> orientation_ms;      // powder only: per-orientation wall time
};

// Total spin along e_mw(phi); perpendicular to the static field direction.
Matrix mw_operator(const Orientation& orient);

// devectorize( (iL - wI)^{-1} vec(X) ). Reports singular or inconsistent
// solves with a reciprocal-condition estimate.
Matrix resolvent_apply(const Liouvillian& liou, double omega, const Matrix& x);

// Spectrum of one orientation; rho_t must be the state at grid.time evolved
// at this same orientation.
Spectrum spectrum_single(const Matrix& rho_t, const ModelParams& params, const RateParams& rates,
                         const Orientation& orient, const SpectrumGrid& grid);

struct PowderOptions {
  int n_theta = 50;
  int n_phi = 100;
  bool sin_theta_weight = false;  // default: plain uniform-grid average
  int workers = 0;                // 0 -> hardware concurrency
};

// theta midpoints of [0, pi], phi uniform on [0, 2 pi).
std::vector<Orientation> powder_orientations(int n_theta, int n_phi);

// Propagates rho0 (state at t = 0) to grid.time at every orientation and
// averages the single-orientation intensities.
Spectrum powder_average(const ModelParams& params, const RateParams& rates, const Matrix& rho0,
                        const SpectrumGrid& grid, const PowderOptions& opts);

// One spectrum per exchange value (replacing J1, and J2 when tie_j2). Powder
// when opts.n_theta * opts.n_phi > 1, single-orientation otherwise.
std::vector<Spectrum> spectrum_scan_j1(const std::vector<double>& j1_values_radns,
                                       const ModelParams& base, const RateParams& rates,
                                       const Matrix& rho0, const SpectrumGrid& grid,
                                       const PowderOptions& opts, bool tie_j2 = true);

// Fixed-order pairwise sum; the reduction used by the powder average.
double pairwise_sum(const double* data, size_t n);

}  // namespace optospin
