// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
#include "optospin/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "optospin/expm.hpp"

namespace optospin {

namespace {

// Constant-drive subsegments of [t0, t1] split at the pulse edges.
struct Segment {
  double t0, t1;
  bool drive_on;
};

std::vector<Segment> split_segments(const ModelParams& p, double t0, double t1) {
  std::vector<double> cuts{t0};
  for (double edge : {p.pulse_on, p.pulse_off}) {
    if (edge > t0 && edge < t1) cuts.push_back(edge);
  }
  cuts.push_back(t1);
  std::sort(cuts.begin(), cuts.end());
  std::vector<Segment> segs;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] > cuts[i]) {
      segs.push_back({cuts[i], cuts[i + 1], p.drive_active(cuts[i])});
    }
  }
  return segs;
}

std::string format_time(double t) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", t);
  return buf;
}

}  // namespace

void check_density(const Matrix& rho, double t, const DensityTolerances& tol) {
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol.hermiticity) {
    throw NumericalError("Hermiticity residual " + std::to_string(herm) + " at t=" + format_time(t));
  }
  const double trace_err = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (trace_err > tol.trace) {
    throw NumericalError("trace drift " + std::to_string(trace_err) + " at t=" + format_time(t));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < tol.min_eigenvalue) {
    throw NumericalError("negative eigenvalue " + std::to_string(min_eig) + " at t=" + format_time(t));
  }
}

Trajectory propagate(const ModelParams& params, const RateParams& rates, const Orientation& orient,
                     const Matrix& rho0, const std::vector<double>& times) {
  params.validate();
  rates.validate();
  if (times.empty()) throw std::invalid_argument("empty time grid");
  for (size_t i = 0; i + 1 < times.size(); ++i) {
    if (!(times[i + 1] > times[i])) throw std::invalid_argument("time grid must be strictly increasing");
  }
  check_density(rho0, times.front());

  // Generators for the two drive states; built lazily.
  std::optional<Matrix> gen_on, gen_off;
  auto generator = [&](bool drive_on) -> const Matrix& {
    auto& slot = drive_on ? gen_on : gen_off;
    if (!slot) {
      // representative times: pulse_on lies inside the half-open window,
      // pulse_off outside it
      const double t_repr = drive_on ? params.pulse_on : params.pulse_off;
      slot = build_liouvillian(params, rates, orient, t_repr).matrix;
    }
    return *slot;
  };

  // Propagator cache keyed on (drive state, exact dt bits).
  std::map<std::pair<bool, double>, Matrix> cache;
  auto propagator = [&](bool drive_on, double dt) -> const Matrix& {
    auto key = std::make_pair(drive_on, dt);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, expm(generator(drive_on) * dt)).first;
    }
    return it->second;
  };

  Trajectory traj;
  traj.times = times;
  traj.params = params;
  traj.rates = rates;
  traj.orientation = orient;
  traj.states.reserve(times.size());
  traj.states.push_back(rho0);

  Vector v = vectorize(rho0);
  for (size_t i = 0; i + 1 < times.size(); ++i) {
    for (const Segment& seg : split_segments(params, times[i], times[i + 1])) {
      v = propagator(seg.drive_on, seg.t1 - seg.t0) * v;
    }
    Matrix rho = devectorize(v);
    check_density(rho, times[i + 1]);
    traj.states.push_back(std::move(rho));
  }
  return traj;
}

Matrix evolve_to(const ModelParams& params, const RateParams& rates, const Orientation& orient,
                 const Matrix& rho0, double t0, double t1) {
  if (t1 < t0) throw std::invalid_argument("t1 < t0");
  if (t1 == t0) return rho0;
  Vector v = vectorize(rho0);
  std::optional<Matrix> gen_on, gen_off;
  for (const Segment& seg : split_segments(params, t0, t1)) {
    auto& slot = seg.drive_on ? gen_on : gen_off;
    if (!slot) slot = build_liouvillian(params, rates, orient, seg.t0).matrix;
    v = expm_multiply(*slot, seg.t1 - seg.t0, v);
  }
  return devectorize(v);
}

Eigen::Matrix4cd reduce_to_radicals(const Matrix& rho) {
  const auto& basis = CompositeBasis::instance();
  Eigen::Matrix4cd rdm = Eigen::Matrix4cd::Zero();
  const std::array<std::pair<int, int>, 4> configs{{{+1, +1}, {+1, -1}, {-1, +1}, {-1, -1}}};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      Complex sum = 0.0;
      for (Manifold m : {Manifold::S0, Manifold::S1}) {
        sum += rho(basis.index_of(m, configs[a].first, configs[a].second),
                   basis.index_of(m, configs[b].first, configs[b].second));
      }
      for (int c : {+2, 0, -2}) {
        sum += rho(basis.index_of(Manifold::T1, configs[a].first, configs[a].second, c),
                   basis.index_of(Manifold::T1, configs[b].first, configs[b].second, c));
      }
      rdm(a, b) = sum;
    }
  }
  return rdm;
}

Matrix initial_state_mixed_s0() {
  Matrix rho = Matrix::Zero(CompositeBasis::kDim, CompositeBasis::kDim);
  rho.block(0, 0, 4, 4) = 0.25 * Matrix::Identity(4, 4);
  return rho;
}

Matrix initial_state_thermal_s0(const ModelParams& params, const Orientation& orient,
                                double temperature_K) {
  if (!(temperature_K > 0.0)) throw std::invalid_argument("temperature must be > 0 K");
  const Matrix hg = h_ground(params, orient);
  const double beta = 1.0 / (temperature_K * units::kKelvinToRadPerNs);
  Eigen::SelfAdjointEigenSolver<Matrix> es(hg);
  // shift by the ground energy before exponentiating
  Eigen::VectorXd w = (-beta * (es.eigenvalues().array() - es.eigenvalues().minCoeff())).exp();
  w /= w.sum();
  Matrix block = es.eigenvectors() * w.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  Matrix rho = Matrix::Zero(CompositeBasis::kDim, CompositeBasis::kDim);
  rho.block(0, 0, 4, 4) = block;
  return rho;
}

std::vector<Complex> coherence_trace(const Trajectory& traj, int bra, int ket) {
  if (bra < 1 || bra > 4 || ket < 1 || ket > 4) {
    throw std::invalid_argument("radical configuration labels are 1..4");
  }
  std::vector<Complex> series;
  series.reserve(traj.states.size());
  for (const Matrix& rho : traj.states) {
    series.push_back(reduce_to_radicals(rho)(bra - 1, ket - 1));
  }
  return series;
}

int parse_t1_label(const std::string& label) {
  auto fail = [&] { throw std::invalid_argument("bad T1 label '" + label + "' (want e.g. +1/2,+1,-1/2)"); };
  std::vector<std::string> parts;
  std::stringstream ss(label);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3) fail();
  auto radical = [&](const std::string& s) {
    if (s == "+1/2" || s == "1/2") return +1;
    if (s == "-1/2") return -1;
    fail();
    return 0;
  };
  auto coupler = [&](const std::string& s) {
    if (s == "+1" || s == "1") return +2;
    if (s == "0") return 0;
    if (s == "-1") return -2;
    fail();
    return 0;
  };
  // reading: (radical1, coupler, radical2) projections
  return CompositeBasis::instance().index_of(Manifold::T1, radical(parts[0]), radical(parts[2]),
                                             coupler(parts[1]));
}

std::vector<double> population_trace(const Trajectory& traj, int basis_index) {
  if (basis_index < 0 || basis_index >= CompositeBasis::kDim) {
    throw std::invalid_argument("basis index out of range");
  }
  std::vector<double> series;
  series.reserve(traj.states.size());
  for (const Matrix& rho : traj.states) {
    series.push_back(rho(basis_index, basis_index).real());
  }
  return series;
}

Tomography tomography_snapshot(const Trajectory& traj, double t) {
  if (traj.times.empty()) throw std::invalid_argument("empty trajectory");
  size_t best = 0;
  for (size_t i = 1; i < traj.times.size(); ++i) {
    if (std::abs(traj.times[i] - t) < std::abs(traj.times[best] - t)) best = i;
  }
  Tomography tomo;
  tomo.time = traj.times[best];
  tomo.rdm = reduce_to_radicals(traj.states[best]);
  tomo.magnitudes = tomo.rdm.cwiseAbs();
  return tomo;
}

}  // namespace optospin
