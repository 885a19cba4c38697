// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>

#include "optospin/lindblad.hpp"
#include "test_helpers.hpp"

using namespace optospin;
using optospin::testing::max_abs;
using optospin::testing::random_complex;
using optospin::testing::random_hermitian;

TEST_CASE("jump operator counts per channel") {
  CHECK(radical_jump_ops(Slot::Radical1).operators.size() == 3);
  CHECK(radical_jump_ops(Slot::Radical2).operators.size() == 3);
  CHECK(triplet_jump_ops().operators.size() == 8);
  CHECK(isc_ops().operators.size() == 7);
  CHECK(triplet_decay_ops().operators.size() == 7);
  CHECK(fluorescence_ops().operators.size() == 4);
}

TEST_CASE("radical jump ops: lowering action and sz structure") {
  const auto& basis = CompositeBasis::instance();
  const JumpSet set = radical_jump_ops(Slot::Radical1);
  const Matrix& lower = set.operators[0];

  Vector all_up = Vector::Zero(20);
  all_up(basis.index_of(Manifold::S0, +1, +1)) = 1.0;
  const Vector flipped = lower * all_up;
  Vector expect = Vector::Zero(20);
  expect(basis.index_of(Manifold::S0, -1, +1)) = 1.0;
  CHECK((flipped - expect).norm() < 1e-15);

  const Matrix& sz = set.operators[2];
  CHECK(max_abs(sz - sz.adjoint()) < 1e-15);
  CHECK(max_abs(Matrix(sz - Matrix(sz.diagonal().asDiagonal()))) < 1e-15);
}

TEST_CASE("triplet jump ops: T1 support only, Hermitian") {
  for (const Matrix& op : triplet_jump_ops().operators) {
    CHECK(max_abs(op.block(0, 0, 8, 20)) == 0.0);
    CHECK(max_abs(op.block(0, 0, 20, 8)) == 0.0);
    CHECK(max_abs(op - op.adjoint()) < 1e-15);
  }
}

TEST_CASE("ISC ops: Sz conservation and unit norm") {
  const Matrix sz_tot = total_spin_ops().z;
  for (const Matrix& l : isc_ops().operators) {
    CHECK(std::abs((l.adjoint() * l).norm() - 1.0) < 1e-13);  // rank one, unit states
    // image of an Sz eigenstate keeps the eigenvalue
    CHECK(max_abs(sz_tot * l - l * sz_tot) < 1e-12);
  }
}

TEST_CASE("triplet decay ops: S=2 states are annihilated, composition reaches S0") {
  const auto decay = triplet_decay_ops();
  for (const CoupledState& cs : coupled_states(Manifold::T1)) {
    if (cs.s_total != 2) continue;
    for (const Matrix& l : decay.operators) {
      CHECK((l * cs.amplitudes).norm() < 1e-13);
    }
  }
  // l4(0,0) o l3(0,0) maps the S1 singlet to the S0 singlet up to a scalar
  const Matrix chain = decay.operators[0] * isc_ops().operators[0];
  const CoupledState& s1_singlet = coupled_states(Manifold::S1)[3];
  const CoupledState& s0_singlet = coupled_states(Manifold::S0)[3];
  const Vector image = chain * s1_singlet.amplitudes;
  const Complex overlap = s0_singlet.amplitudes.adjoint() * image;
  CHECK(std::abs(overlap - Complex(1, 0)) < 1e-12);
  CHECK((image - overlap * s0_singlet.amplitudes).norm() < 1e-12);
}

TEST_CASE("fluorescence ops: completeness on S1, annihilate T1") {
  const auto fluor = fluorescence_ops();
  Matrix sum = Matrix::Zero(20, 20);
  for (const Matrix& l : fluor.operators) {
    sum += l.adjoint() * l;
    for (const CoupledState& cs : coupled_states(Manifold::T1)) {
      CHECK((l * cs.amplitudes).norm() < 1e-14);
    }
  }
  Matrix s1_identity = Matrix::Zero(20, 20);
  s1_identity.block(4, 4, 4, 4) = Matrix::Identity(4, 4);
  CHECK(max_abs(sum - s1_identity) < 1e-13);
}

TEST_CASE("vectorize: round trip, norm, multiplication identity") {
  const Matrix rho = random_complex(20);
  CHECK(max_abs(devectorize(vectorize(rho)) - rho) < 1e-16);
  CHECK(std::abs(vectorize(Matrix::Identity(20, 20)).norm() - std::sqrt(20.0)) < 1e-14);

  for (int rep = 0; rep < 3; ++rep) {
    const Matrix a = random_complex(5), b = random_complex(5), x = random_complex(5);
    const Vector lhs = vectorize(a * x * b);
    const Matrix super = Eigen::kroneckerProduct(b.transpose(), a);
    CHECK((lhs - super * vectorize(x)).norm() < 1e-12);
  }
}

TEST_CASE("lindblad superoperator: zero rate, trace preservation, Hermiticity preservation") {
  JumpSet set = radical_jump_ops(Slot::Radical2);
  set.rate = 0.0;
  CHECK(max_abs(lindblad_superop(set)) == 0.0);

  set.rate = 0.8;
  const Matrix super = lindblad_superop(set);
  for (int rep = 0; rep < 20; ++rep) {
    const Matrix rho = random_hermitian(20);
    const Matrix drho = devectorize(super * vectorize(rho));
    CHECK(std::abs(drho.trace()) < 1e-12 * rho.cwiseAbs().maxCoeff() * 20);
    CHECK(max_abs(drho - drho.adjoint()) < 1e-12);
  }
}

TEST_CASE("lindblad superoperator: amplitude-damping toy decays as exp(-gamma t)") {
  // single sigma- on a 2-level system; exact populations known
  JumpSet toy;
  toy.rate = 0.6;
  Matrix sm = Matrix::Zero(2, 2);
  sm(1, 0) = 1.0;  // |1><0| lowers the excited state at index 0 (m descending)
  toy.operators.push_back(sm);
  const Matrix super = lindblad_superop(toy);

  Matrix rho = Matrix::Zero(2, 2);
  rho(0, 0) = 1.0;  // excited
  Vector v = vectorize(rho);
  const double t = 1.7;
  const Matrix prop = Matrix((super * t)).exp();
  const Matrix rho_t = devectorize(prop * v);
  CHECK(rho_t(0, 0).real() == doctest::Approx(std::exp(-0.6 * t)).epsilon(1e-10));
  CHECK(rho_t(1, 1).real() == doctest::Approx(1.0 - std::exp(-0.6 * t)).epsilon(1e-10));
}

TEST_CASE("liouvillian: dimensions and trivial limits") {
  ModelParams p;
  RateParams r;
  const Liouvillian liou = build_liouvillian(p, r, {}, 0.0);
  CHECK(liou.matrix.rows() == 400);
  CHECK(liou.matrix.cols() == 400);
  CHECK(liou.hilbert_dim() == 20);
  CHECK(max_abs(liou.matrix) == 0.0);  // H = 0, rates = 0
}

TEST_CASE("liouvillian: closed-system eigenvalues are +-i energy differences") {
  ModelParams p;
  p.j0 = 1.3;
  p.j1 = -0.4;
  p.j2 = -0.4;
  p.zfs_d = 0.9;
  p.b_field_mT = 30.0;
  RateParams r;  // all zero
  const Orientation o{1.0, 0.5};
  const Liouvillian liou = build_liouvillian(p, r, o, 0.0);

  Eigen::SelfAdjointEigenSolver<Matrix> es(h_total(p, o, 0.0));
  std::vector<double> expected;
  for (int a = 0; a < 20; ++a) {
    for (int b = 0; b < 20; ++b) expected.push_back(-(es.eigenvalues()(a) - es.eigenvalues()(b)));
  }
  std::sort(expected.begin(), expected.end());

  Eigen::ComplexEigenSolver<Matrix> les(liou.matrix);
  std::vector<double> got;
  for (int k = 0; k < 400; ++k) {
    CHECK(std::abs(les.eigenvalues()(k).real()) < 1e-9);
    got.push_back(les.eigenvalues()(k).imag());
  }
  std::sort(got.begin(), got.end());
  for (size_t k = 0; k < got.size(); ++k) {
    CHECK(std::abs(got[k] - expected[k]) < 1e-8);
  }
}

TEST_CASE("liouvillian: dissipative spectrum has no growing modes") {
  ModelParams p;
  p.j0 = 2.0;
  p.j1 = p.j2 = -1.5;
  p.zfs_d = 1.0;
  p.zfs_e = -0.2;
  p.b_field_mT = 120.0;
  p.drive = 1.0;
  p.pulse_off = 5.0;
  RateParams r{0.1, 0.2, 1.0, 0.05, 0.3};
  const Liouvillian liou = build_liouvillian(p, r, {0.8, 1.9}, 1.0);
  CHECK(liou.drive_on);
  Eigen::ComplexEigenSolver<Matrix> es(liou.matrix);
  for (int k = 0; k < 400; ++k) {
    CHECK(es.eigenvalues()(k).real() <= 1e-10);
  }
}

TEST_CASE("liouvillian: trace and Hermiticity preservation on random states") {
  ModelParams p;
  p.j0 = 0.5;
  p.j1 = p.j2 = -2.0;
  p.zfs_d = 3.0;
  p.b_field_mT = 350.0;
  p.drive = 2.0;
  p.pulse_off = 1.0;
  RateParams r{0.3, 0.1, 2.0, 0.02, 0.4};
  const Liouvillian liou = build_liouvillian(p, r, {0.3, 4.0}, 0.5);
  for (int rep = 0; rep < 20; ++rep) {
    const Matrix rho = random_hermitian(20);
    const Matrix drho = devectorize(liou.matrix * vectorize(rho));
    CHECK(std::abs(drho.trace()) < 1e-11 * std::max(1.0, rho.cwiseAbs().maxCoeff()) * 20);
    CHECK(max_abs(drho - drho.adjoint()) < 1e-11);
  }
}

TEST_CASE("liouvillian: channel support invariants") {
  ModelParams p;
  RateParams triplet_only;
  triplet_only.gamma_triplet = 1.0;
  const Matrix trip = build_liouvillian(p, triplet_only, {}, 0.0).matrix;
  // states supported on S0+S1 are untouched by the triplet dissipator
  for (int rep = 0; rep < 5; ++rep) {
    Matrix rho = Matrix::Zero(20, 20);
    rho.block(0, 0, 8, 8) = random_hermitian(8);
    CHECK(max_abs(devectorize(trip * vectorize(rho))) < 1e-13);
  }

  RateParams fluor_only;
  fluor_only.k_eg = 1.0;
  const Matrix fluor = build_liouvillian(p, fluor_only, {}, 0.0).matrix;
  for (int rep = 0; rep < 5; ++rep) {
    Matrix rho = Matrix::Zero(20, 20);
    rho.block(8, 8, 12, 12) = random_hermitian(12);
    CHECK(max_abs(devectorize(fluor * vectorize(rho))) < 1e-13);
  }
}

TEST_CASE("liouvillian: ISC preserves (S, m) support") {
  ModelParams p;
  RateParams isc_only;
  isc_only.k_st = 1.0;
  const Matrix isc = build_liouvillian(p, isc_only, {}, 0.0).matrix;
  const Matrix s2 = total_spin_ops().squared();
  const Matrix sz = total_spin_ops().z;

  for (const CoupledState& in : coupled_states(Manifold::S1)) {
    const Matrix rho = in.amplitudes * in.amplitudes.adjoint();
    const Matrix drho = devectorize(isc * vectorize(rho));
    // the T1-block image commutes with S^2 and Sz (same quantum numbers)
    const Matrix t1 = drho.block(8, 8, 12, 12);
    Matrix full = Matrix::Zero(20, 20);
    full.block(8, 8, 12, 12) = t1;
    CHECK(max_abs(s2 * full - full * s2) < 1e-12);
    CHECK(max_abs(sz * full - full * sz) < 1e-12);
    // recycling term stays within the S1 block
    Matrix off = drho;
    off.block(8, 8, 12, 12).setZero();
    off.block(4, 4, 4, 4).setZero();
    CHECK(max_abs(off) < 1e-13);
  }
}
