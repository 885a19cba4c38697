// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
//
// Density-matrix propagation under the Liouvillian, reduced two-radical
// states and observable extraction. Within each constant-drive segment the
// propagator is the exact exponential of L*dt; propagators are cached per
// (drive state, dt), so uniform grids cost one exponential per segment kind.
#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "optospin/lindblad.hpp"
#include "optospin/params.hpp"

namespace optospin {

// Numerical-integrity failure (trace/Hermiticity/positivity drift, solver
// breakdown). Never silently repaired.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DensityTolerances {
  double hermiticity = 1e-10;
  double trace = 1e-9;
  double min_eigenvalue = -1e-8;
};

// Throws NumericalError naming the time point on violation.
void check_density(const Matrix& rho, double t, const DensityTolerances& tol = {});

struct Trajectory {
  std::vector<double> times;   // ns, strictly increasing
  std::vector<Matrix> states;  // one 20x20 state per time
  ModelParams params;
  RateParams rates;
  Orientation orientation;
};

// rho0 is the state at times.front().
Trajectory propagate(const ModelParams& params, const RateParams& rates, const Orientation& orient,
                     const Matrix& rho0, const std::vector<double>& times);

// Single-target evolution used by the spectra pipeline (Taylor action of the
// segment exponentials; no intermediate storage, no integrity gate).
Matrix evolve_to(const ModelParams& params, const RateParams& rates, const Orientation& orient,
                 const Matrix& rho0, double t0, double t1);

// Partial trace over the electronic/coupler degrees of freedom. Basis
// |1>=|up,up>, |2>=|up,dn>, |3>=|dn,up>, |4>=|dn,dn>.
Eigen::Matrix4cd reduce_to_radicals(const Matrix& rho);

// Initial states on the S0 block.
Matrix initial_state_mixed_s0();
Matrix initial_state_thermal_s0(const ModelParams& params, const Orientation& orient, double temperature_K);

// RDM element (bra, ket), 1-based labels 1..4 as in the tomography basis.
std::vector<Complex> coherence_trace(const Trajectory& traj, int bra, int ket);

// A T1 product label "m1,mc,m2" with m in {+1/2,-1/2} for radicals and
// {+1,0,-1} for the coupler, e.g. "+1/2,+1,-1/2". Resolves to one global
// basis index.
int parse_t1_label(const std::string& label);

std::vector<double> population_trace(const Trajectory& traj, int basis_index);

struct Tomography {
  double time = 0.0;              // grid time actually used (nearest point)
  Eigen::Matrix4cd rdm;
  Eigen::Matrix4d magnitudes;
};

Tomography tomography_snapshot(const Trajectory& traj, double t);

}  // namespace optospin
