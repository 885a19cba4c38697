// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
//
// Spin-operator algebra and the composite 20-dimensional basis of the
// two-radical / spin-1 coupler model: two spin-1/2 radicals in each of the
// singlet manifolds S0 and S1 (4 + 4 states) and radicals plus the coupler
// triplet in T1 (12 states).
#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <string>
#include <vector>

namespace optospin {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Complex = std::complex<double>;

enum class Manifold { S0, S1, T1 };
enum class Slot { Radical1, Radical2, Coupler };

inline constexpr std::array<Manifold, 3> kAllManifolds{Manifold::S0, Manifold::S1, Manifold::T1};

std::string manifold_name(Manifold m);

// Angular-momentum matrices in the |s, m> basis ordered m = s ... -s,
// dimensionless (hbar = 1).
struct SpinOps {
  double s = 0.0;
  Matrix x, y, z;

  Matrix plus() const { return x + Complex(0, 1) * y; }
  Matrix minus() const { return x - Complex(0, 1) * y; }
  Matrix casimir() const { return x * x + y * y + z * z; }
};

// s must be a non-negative integer or half-integer.
SpinOps spin_matrices(double s);

// The standard Gell-Mann matrices lambda_1..lambda_8, Tr(li lj) = 2 dij.
const std::array<Matrix, 8>& gell_mann_matrices();

// One basis state of the composite space. Projections are stored doubled
// so that spin-1/2 values stay integral; coupler_twice_m is meaningful in
// T1 only.
struct BasisState {
  Manifold manifold;
  int radical1_twice_m;  // +1 or -1
  int radical2_twice_m;  // +1 or -1
  int coupler_twice_m;   // +2, 0 or -2 in T1; 0 in S0/S1
};

// Global ordering: S0 block (4), S1 block (4), T1 block (12). Within a
// block radical1 varies slowest, then radical2, then the coupler, each in
// descending m.
class CompositeBasis {
 public:
  static constexpr int kDim = 20;

  static const CompositeBasis& instance();

  const std::vector<BasisState>& states() const { return states_; }
  const BasisState& state(int i) const { return states_.at(i); }

  int offset(Manifold m) const;
  int dim(Manifold m) const { return m == Manifold::T1 ? 12 : 4; }

  // Index of a product state; coupler_twice_m ignored outside T1.
  int index_of(Manifold m, int r1_twice_m, int r2_twice_m, int coupler_twice_m = 0) const;

 private:
  CompositeBasis();
  std::vector<BasisState> states_;
};

// op acting on one slot, tensored with identities on the other slots of the
// listed manifolds and zero elsewhere. op must be 2x2 for a radical slot and
// 3x3 for the coupler; the coupler slot only exists in T1.
Matrix embed(const Matrix& op, Slot slot, const std::vector<Manifold>& manifolds);

Matrix embed_all(const Matrix& op, Slot slot);  // all manifolds valid for the slot

// Total spin on the 20-dim space: s1 + s2 in S0/S1, s1 + S + s2 in T1.
struct TotalSpinOps {
  Matrix x, y, z;
  Matrix squared() const { return x * x + y * y + z * z; }
  Matrix along(const Eigen::Vector3d& dir) const { return dir.x() * x + dir.y() * y + dir.z() * z; }
};

const TotalSpinOps& total_spin_ops();

// Simultaneous eigenstate of total S^2 and Sz within one manifold.
// `intermediate` is the spin of the radical pair (s12): it distinguishes the
// two S = 1 multiplets of T1 and equals s_total in S0/S1. Radicals are
// coupled to each other first, then to the coupler, Condon-Shortley phases
// throughout.
struct CoupledState {
  Manifold manifold;
  int s_total;
  int sz_total;
  int intermediate;
  Vector amplitudes;  // 20-dim, support restricted to the manifold block

  std::string label() const;
};

// S0/S1: the 4 radical-pair states [(1,1),(1,0),(1,-1),(0,0)].
// T1: the 12 states of 1/2 x 1/2 x 1 ordered by (S desc, intermediate asc,
// M desc): S=2 (5), S=1/s12=0 (3), S=1/s12=1 (3), S=0 (1).
const std::vector<CoupledState>& coupled_states(Manifold m);

// <j1 m1, j2 m2 | J M> with doubled arguments; zero outside the triangle
// and m-selection rules.
double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_J, int two_M);

}  // namespace optospin
