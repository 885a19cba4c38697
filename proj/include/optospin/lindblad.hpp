// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
//
// Jump operators of the five incoherent channels and assembly of the total
// Liouvillian acting on the column-stacked density matrix:
//
//   drho/dt = -i[H, rho] + sum_i sum_mu gamma_i [ l rho l+ - {rho, l+ l}/2 ]
//
// Channels: radical spin relaxation (s-, s+, sz per radical), coupler
// triplet relaxation (eight Gell-Mann matrices on the T1 block), intersystem
// crossing S1 -> T1 and triplet decay T1 -> S0 (both conserving total S and
// Sz, hence seven rank-one operators each), and fluorescence S1 -> S0 (four
// operators). All operators within one channel share that channel's rate.
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "optospin/hamiltonian.hpp"
#include "optospin/params.hpp"
#include "optospin/spin_system.hpp"

namespace optospin {

struct JumpSet {
  std::vector<Matrix> operators;
  double rate = 1.0;
  int label = 0;  // 1 radicals, 2 triplet, 3 ISC, 4 triplet decay, 5 fluorescence
  std::string name;
};

JumpSet radical_jump_ops(Slot which);  // Radical1 or Radical2
JumpSet triplet_jump_ops();
JumpSet isc_ops();
JumpSet triplet_decay_ops();
JumpSet fluorescence_ops();

// Column stacking: vec(rho)[i + n*j] = rho(i, j).
Vector vectorize(const Matrix& rho);
Matrix devectorize(const Vector& v);

// Dissipator superoperator of one jump set (any Hilbert dimension n):
// sum_mu rate [ conj(l) (x) l - (I (x) l+l + (l+l)^T (x) I) / 2 ].
Matrix lindblad_superop(const JumpSet& set);

// -i (I (x) H - H^T (x) I)
Matrix commutator_superop(const Matrix& h);

struct Liouvillian {
  Matrix matrix;  // n^2 x n^2
  Orientation orientation;
  double time = 0.0;
  bool drive_on = false;

  int hilbert_dim() const { return static_cast<int>(std::lround(std::sqrt(double(matrix.rows())))); }
};

// Full 400x400 generator at one orientation and time.
Liouvillian build_liouvillian(const ModelParams& params, const RateParams& rates,
                              const Orientation& orient, double t);

}  // namespace optospin
