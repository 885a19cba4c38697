// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
//
// Coherent Hamiltonian of the composite system. The ground and excited
// singlet manifolds carry the radical-radical Heisenberg term plus the
// radical Zeeman term; the triplet manifold adds the radical-coupler
// exchange, the coupler Zeeman term and the zero-field splitting; the
// optical drive V couples S0 and S1 states with identical radical
// projections. ZFS axes are molecule-fixed; the orientation rotates the
// lab field only.
#pragma once

#include "optospin/params.hpp"
#include "optospin/spin_system.hpp"

namespace optospin {

// 4x4 block on the radical product basis of S0 (and S1).
Matrix h_ground(const ModelParams& params, const Orientation& orient);

// 12x12 block on the T1 product basis.
Matrix h_triplet(const ModelParams& params, const Orientation& orient);

// Full 20x20 Hamiltonian at time t (rectangular drive gating).
Matrix h_total(const ModelParams& params, const Orientation& orient, double t);

}  // namespace optospin
