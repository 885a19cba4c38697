// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <unsupported/Eigen/KroneckerProduct>

#include "optospin/spin_system.hpp"
#include "test_helpers.hpp"

using namespace optospin;
using optospin::testing::max_abs;

namespace {
constexpr Complex kI{0.0, 1.0};
}

TEST_CASE("spin matrices: defining conventions") {
  const SpinOps half = spin_matrices(0.5);
  CHECK(half.z(0, 0) == Complex(0.5, 0));
  CHECK(half.z(1, 1) == Complex(-0.5, 0));
  CHECK(max_abs(half.casimir() - 0.75 * Matrix::Identity(2, 2)) < 1e-14);

  const SpinOps one = spin_matrices(1.0);
  CHECK(one.z(0, 0) == Complex(1, 0));
  CHECK(one.z(1, 1) == Complex(0, 0));
  CHECK(one.z(2, 2) == Complex(-1, 0));
}

TEST_CASE("spin matrices: algebra for s = 1/2, 1, 3/2") {
  for (double s : {0.5, 1.0, 1.5}) {
    CAPTURE(s);
    const SpinOps ops = spin_matrices(s);
    CHECK(max_abs(ops.x * ops.y - ops.y * ops.x - kI * ops.z) < 1e-14);
    CHECK(max_abs(ops.y * ops.z - ops.z * ops.y - kI * ops.x) < 1e-14);
    CHECK(max_abs(ops.z * ops.x - ops.x * ops.z - kI * ops.y) < 1e-14);
    const int dim = static_cast<int>(2 * s + 1);
    CHECK(max_abs(ops.casimir() - s * (s + 1) * Matrix::Identity(dim, dim)) < 1e-14);
    for (const Matrix* m : {&ops.x, &ops.y, &ops.z}) {
      CHECK(max_abs(*m - m->adjoint()) < 1e-14);
    }
  }
}

TEST_CASE("spin matrices: rejects bad quantum numbers") {
  CHECK_THROWS_AS(spin_matrices(-0.5), std::invalid_argument);
  CHECK_THROWS_AS(spin_matrices(0.3), std::invalid_argument);
}

TEST_CASE("Gell-Mann matrices: count, trace, orthogonality") {
  const auto& lambdas = gell_mann_matrices();
  CHECK(lambdas.size() == 8);
  for (const Matrix& l : lambdas) {
    CHECK(std::abs(l.trace()) < 1e-15);
    CHECK(max_abs(l - l.adjoint()) < 1e-15);
  }
  for (size_t i = 0; i < 8; ++i) {
    for (size_t j = 0; j < 8; ++j) {
      const Complex tr = (lambdas[i] * lambdas[j]).trace();
      CHECK(std::abs(tr - (i == j ? Complex(2, 0) : Complex(0, 0))) < 1e-14);
    }
  }
}

TEST_CASE("composite basis: layout") {
  const auto& basis = CompositeBasis::instance();
  CHECK(CompositeBasis::kDim == 20);
  CHECK(basis.offset(Manifold::S0) == 0);
  CHECK(basis.offset(Manifold::S1) == 4);
  CHECK(basis.offset(Manifold::T1) == 8);
  CHECK(basis.dim(Manifold::S0) == 4);
  CHECK(basis.dim(Manifold::T1) == 12);
  // first T1 state: both radicals up, coupler m=+1
  const BasisState& first = basis.state(8);
  CHECK(first.radical1_twice_m == 1);
  CHECK(first.radical2_twice_m == 1);
  CHECK(first.coupler_twice_m == 2);
  // coupler is the fastest index
  CHECK(basis.state(9).coupler_twice_m == 0);
  CHECK(basis.state(10).coupler_twice_m == -2);
  CHECK(basis.state(11).radical2_twice_m == -1);
}

TEST_CASE("embed: identity, diagonal action, errors") {
  const SpinOps half = spin_matrices(0.5);
  const SpinOps one = spin_matrices(1.0);
  const Matrix id2 = Matrix::Identity(2, 2);

  const Matrix embedded_id = embed(id2, Slot::Radical1, {Manifold::S0, Manifold::S1, Manifold::T1});
  CHECK(max_abs(embedded_id - Matrix::Identity(20, 20)) < 1e-15);

  const Matrix partial_id = embed(id2, Slot::Radical2, {Manifold::S1});
  Matrix expect = Matrix::Zero(20, 20);
  expect.block(4, 4, 4, 4) = Matrix::Identity(4, 4);
  CHECK(max_abs(partial_id - expect) < 1e-15);

  // radical1 sz on a radical1-up basis state
  const Matrix sz1 = embed_all(half.z, Slot::Radical1);
  Vector up = Vector::Zero(20);
  up(0) = 1.0;  // S0, both up
  CHECK(std::abs((up.adjoint() * sz1 * up)(0) - Complex(0.5, 0)) < 1e-15);

  CHECK_THROWS_AS(embed(one.z, Slot::Coupler, {Manifold::S0}), std::invalid_argument);
  CHECK_THROWS_AS(embed(half.z, Slot::Coupler, {Manifold::T1}), std::invalid_argument);
}

TEST_CASE("embed: coupler Sz pattern against direct tensor enumeration") {
  const SpinOps one = spin_matrices(1.0);
  const Matrix embedded = embed(one.z, Slot::Coupler, {Manifold::T1});
  // independent oracle: kron(I4, diag(1,0,-1)) in the T1 block
  Matrix oracle = Matrix::Zero(20, 20);
  Matrix dz = Matrix::Zero(3, 3);
  dz(0, 0) = 1;
  dz(2, 2) = -1;
  oracle.block(8, 8, 12, 12) = Eigen::kroneckerProduct(Matrix(Matrix::Identity(4, 4)), dz);
  CHECK(max_abs(embedded - oracle) < 1e-15);
}

TEST_CASE("embed: linearity and Hermiticity preservation") {
  for (int rep = 0; rep < 5; ++rep) {
    const Matrix a = optospin::testing::random_complex(2);
    const Matrix b = optospin::testing::random_complex(2);
    const Matrix lhs = embed(Matrix(2.0 * a + 3.0 * b), Slot::Radical2, {Manifold::T1});
    const Matrix rhs = 2.0 * embed(a, Slot::Radical2, {Manifold::T1}) +
                       3.0 * embed(b, Slot::Radical2, {Manifold::T1});
    CHECK(max_abs(lhs - rhs) < 1e-13);

    const Matrix h = optospin::testing::random_hermitian(3);
    const Matrix eh = embed(h, Slot::Coupler, {Manifold::T1});
    CHECK(max_abs(eh - eh.adjoint()) < 1e-14);
  }
}

TEST_CASE("total spin ops: Casimir expectations on |a>,|b>,|c>,|d>") {
  const auto& basis = CompositeBasis::instance();
  const Matrix s2 = total_spin_ops().squared();
  auto expectation = [&](int r1, int r2, int c) {
    Vector v = Vector::Zero(20);
    v(basis.index_of(Manifold::T1, r1, r2, c)) = 1.0;
    return (v.adjoint() * s2 * v)(0).real();
  };
  CHECK(expectation(+1, +1, +2) == doctest::Approx(6.0).epsilon(1e-12));  // |a> = |up Up up>
  CHECK(expectation(+1, -1, +2) == doctest::Approx(3.0).epsilon(1e-12));  // |b>
  CHECK(expectation(-1, -1, +2) == doctest::Approx(2.0).epsilon(1e-12));  // |c>
  CHECK(expectation(-1, +1, +2) == doctest::Approx(3.0).epsilon(1e-12));  // |d>
}

TEST_CASE("total spin ops: Sz on |dn Up dn>") {
  const auto& basis = CompositeBasis::instance();
  Vector v = Vector::Zero(20);
  v(basis.index_of(Manifold::T1, -1, -1, +2)) = 1.0;
  const Complex val = (v.adjoint() * total_spin_ops().z * v)(0);
  CHECK(std::abs(val - Complex(0, 0)) < 1e-14);
}

TEST_CASE("Clebsch-Gordan: frozen table values") {
  // 1/2 x 1/2
  CHECK(clebsch_gordan(1, 1, 1, -1, 0, 0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(clebsch_gordan(1, -1, 1, 1, 0, 0) == doctest::Approx(-1.0 / std::sqrt(2.0)));
  CHECK(clebsch_gordan(1, 1, 1, -1, 2, 0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(clebsch_gordan(1, 1, 1, 1, 2, 2) == doctest::Approx(1.0));
  // 1 x 1/2
  CHECK(clebsch_gordan(2, 0, 1, 1, 3, 1) == doctest::Approx(std::sqrt(2.0 / 3.0)));
  CHECK(clebsch_gordan(2, 2, 1, -1, 3, 1) == doctest::Approx(std::sqrt(1.0 / 3.0)));
  CHECK(clebsch_gordan(2, 2, 1, -1, 1, 1) == doctest::Approx(std::sqrt(2.0 / 3.0)));
  CHECK(clebsch_gordan(2, 0, 1, 1, 1, 1) == doctest::Approx(-std::sqrt(1.0 / 3.0)));
  // 1 x 1
  CHECK(clebsch_gordan(2, 2, 2, -2, 0, 0) == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(clebsch_gordan(2, 0, 2, 0, 0, 0) == doctest::Approx(-1.0 / std::sqrt(3.0)));
  CHECK(clebsch_gordan(2, 2, 2, 0, 4, 2) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(clebsch_gordan(2, 2, 2, -2, 2, 0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(clebsch_gordan(2, 0, 2, 0, 4, 0) == doctest::Approx(std::sqrt(2.0 / 3.0)));
  CHECK(clebsch_gordan(2, 2, 2, -2, 4, 0) == doctest::Approx(1.0 / std::sqrt(6.0)));
  // selection rules
  CHECK(clebsch_gordan(1, 1, 1, 1, 0, 0) == 0.0);
  CHECK(clebsch_gordan(2, 2, 1, 1, 1, 3) == 0.0);
}

TEST_CASE("coupled states: S0/S1 radical-pair states") {
  const auto& states = coupled_states(Manifold::S1);
  REQUIRE(states.size() == 4);
  CHECK(states[0].s_total == 1);
  CHECK(states[0].sz_total == 1);
  CHECK(states[3].s_total == 0);

  // singlet = (|ud> - |du>)/sqrt(2) on the S1 block
  const auto& basis = CompositeBasis::instance();
  const Vector& amp = states[3].amplitudes;
  CHECK(std::abs(amp(basis.index_of(Manifold::S1, +1, -1)) - Complex(1.0 / std::sqrt(2.0), 0)) < 1e-14);
  CHECK(std::abs(amp(basis.index_of(Manifold::S1, -1, +1)) + Complex(1.0 / std::sqrt(2.0), 0)) < 1e-14);
  for (int i = 0; i < 8; ++i) {
    if (i != basis.index_of(Manifold::S1, +1, -1) && i != basis.index_of(Manifold::S1, -1, +1)) {
      CHECK(std::abs(amp(i)) < 1e-15);
    }
  }
}

TEST_CASE("coupled states: T1 multiplet structure") {
  const auto& states = coupled_states(Manifold::T1);
  REQUIRE(states.size() == 12);
  int count_s2 = 0, count_s1 = 0, count_s0 = 0;
  for (const auto& cs : states) {
    if (cs.s_total == 2) ++count_s2;
    if (cs.s_total == 1) ++count_s1;
    if (cs.s_total == 0) ++count_s0;
  }
  CHECK(count_s2 == 5);
  CHECK(count_s1 == 6);
  CHECK(count_s0 == 1);
}

TEST_CASE("coupled states: eigenrelations, norms and orthonormality") {
  const auto& total = total_spin_ops();
  const Matrix s2 = total.squared();
  for (Manifold m : kAllManifolds) {
    CAPTURE(manifold_name(m));
    const auto& states = coupled_states(m);
    for (const auto& cs : states) {
      CAPTURE(cs.label());
      CHECK(std::abs(cs.amplitudes.norm() - 1.0) < 1e-14);
      const double s_eig = cs.s_total * (cs.s_total + 1.0);
      CHECK((s2 * cs.amplitudes - s_eig * cs.amplitudes).norm() < 1e-12);
      CHECK((total.z * cs.amplitudes - double(cs.sz_total) * cs.amplitudes).norm() < 1e-12);
    }
    // Gram matrix
    for (size_t i = 0; i < states.size(); ++i) {
      for (size_t j = 0; j < states.size(); ++j) {
        const Complex g = states[i].amplitudes.adjoint() * states[j].amplitudes;
        CHECK(std::abs(g - (i == j ? Complex(1, 0) : Complex(0, 0))) < 1e-12);
      }
    }
  }
}
