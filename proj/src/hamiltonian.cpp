// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
#include "optospin/hamiltonian.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace optospin {

namespace {

struct TwoSpinOps {
  // 4-dim product space of the two radicals, radical1 slowest, m descending.
  std::array<Matrix, 3> s1, s2;
};

const TwoSpinOps& two_spin_ops() {
  static const TwoSpinOps ops = [] {
    const SpinOps half = spin_matrices(0.5);
    const Matrix id2 = Matrix::Identity(2, 2);
    TwoSpinOps t;
    const std::array<Matrix, 3> comps{half.x, half.y, half.z};
    for (int a = 0; a < 3; ++a) {
      t.s1[a] = Eigen::kroneckerProduct(comps[a], id2);
      t.s2[a] = Eigen::kroneckerProduct(id2, comps[a]);
    }
    return t;
  }();
  return ops;
}

struct TripletSpinOps {
  // 12-dim product space: radical1 x radical2 x coupler, m descending each.
  std::array<Matrix, 3> s1, s2, sc;
};

const TripletSpinOps& triplet_spin_ops() {
  static const TripletSpinOps ops = [] {
    const SpinOps half = spin_matrices(0.5);
    const SpinOps one = spin_matrices(1.0);
    const Matrix id2 = Matrix::Identity(2, 2);
    const Matrix id3 = Matrix::Identity(3, 3);
    const Matrix id6 = Matrix::Identity(6, 6);
    TripletSpinOps t;
    const std::array<Matrix, 3> h{half.x, half.y, half.z};
    const std::array<Matrix, 3> o{one.x, one.y, one.z};
    for (int a = 0; a < 3; ++a) {
      t.s1[a] = Eigen::kroneckerProduct(h[a], id6);
      t.s2[a] = Eigen::kroneckerProduct(id2, Eigen::kroneckerProduct(h[a], id3).eval());
      t.sc[a] = Eigen::kroneckerProduct(Matrix(Matrix::Identity(4, 4)), o[a]);
    }
    return t;
  }();
  return ops;
}

Matrix dot(const std::array<Matrix, 3>& a, const std::array<Matrix, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Matrix along(const std::array<Matrix, 3>& a, const Eigen::Vector3d& dir) {
  return dir.x() * a[0] + dir.y() * a[1] + dir.z() * a[2];
}

}  // namespace

Matrix h_ground(const ModelParams& params, const Orientation& orient) {
  params.validate();
  const auto& ops = two_spin_ops();
  const Eigen::Vector3d b = orient.static_dir();
  Matrix h = params.j0 * dot(ops.s1, ops.s2);
  h += params.zeeman_radical() * (along(ops.s1, b) + along(ops.s2, b));
  return h;
}

Matrix h_triplet(const ModelParams& params, const Orientation& orient) {
  params.validate();
  const auto& ops = triplet_spin_ops();
  const Eigen::Vector3d b = orient.static_dir();
  Matrix h = params.j1 * dot(ops.s1, ops.sc) + params.j2 * dot(ops.sc, ops.s2) +
             params.j3 * dot(ops.s1, ops.s2);
  h += params.zeeman_radical() * (along(ops.s1, b) + along(ops.s2, b));
  h += params.zeeman_coupler() * along(ops.sc, b);
  // molecule-fixed ZFS
  h += params.zfs_d * ops.sc[2] * ops.sc[2] +
       params.zfs_e * (ops.sc[0] * ops.sc[0] - ops.sc[1] * ops.sc[1]);
  return h;
}

Matrix h_total(const ModelParams& params, const Orientation& orient, double t) {
  const auto& basis = CompositeBasis::instance();
  Matrix h = Matrix::Zero(CompositeBasis::kDim, CompositeBasis::kDim);
  const Matrix hg = h_ground(params, orient);
  // J0 is taken as unchanged in the excited singlet manifold.
  h.block(basis.offset(Manifold::S0), basis.offset(Manifold::S0), 4, 4) = hg;
  h.block(basis.offset(Manifold::S1), basis.offset(Manifold::S1), 4, 4) = hg;
  h.block(basis.offset(Manifold::T1), basis.offset(Manifold::T1), 12, 12) = h_triplet(params, orient);
  if (params.drive_active(t)) {
    // V connects S0 and S1 states with identical radical configuration.
    for (int i = 0; i < 4; ++i) {
      h(basis.offset(Manifold::S0) + i, basis.offset(Manifold::S1) + i) = params.drive;
      h(basis.offset(Manifold::S1) + i, basis.offset(Manifold::S0) + i) = params.drive;
    }
  }
  return h;
}

}  // namespace optospin
