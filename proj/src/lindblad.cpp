// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
#include "optospin/lindblad.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <stdexcept>

namespace optospin {

namespace {

constexpr Complex kI{0.0, 1.0};

// Rank-one |to><from| on the 20-dim space.
Matrix transfer_op(const CoupledState& to, const CoupledState& from) {
  return to.amplitudes * from.amplitudes.adjoint();
}

const CoupledState& find_coupled(Manifold m, int s, int sz, int intermediate) {
  for (const CoupledState& cs : coupled_states(m)) {
    if (cs.s_total == s && cs.sz_total == sz && cs.intermediate == intermediate) return cs;
  }
  throw std::logic_error("coupled state not found");
}

}  // namespace

JumpSet radical_jump_ops(Slot which) {
  if (which == Slot::Coupler) throw std::invalid_argument("radical jump ops take a radical slot");
  const SpinOps half = spin_matrices(0.5);
  JumpSet set;
  set.label = 1;
  set.name = (which == Slot::Radical1) ? "radical1" : "radical2";
  set.operators.push_back(embed_all(half.minus(), which));
  set.operators.push_back(embed_all(half.plus(), which));
  set.operators.push_back(embed_all(half.z, which));
  return set;
}

JumpSet triplet_jump_ops() {
  JumpSet set;
  set.label = 2;
  set.name = "triplet";
  for (const Matrix& lambda : gell_mann_matrices()) {
    set.operators.push_back(embed(lambda, Slot::Coupler, {Manifold::T1}));
  }
  return set;
}

JumpSet isc_ops() {
  JumpSet set;
  set.label = 3;
  set.name = "isc";
  // Total S and Sz conserved: S1 singlet feeds the single T1 S=0 state;
  // each S1 triplet state feeds both T1 S=1 multiplets.
  set.operators.push_back(transfer_op(find_coupled(Manifold::T1, 0, 0, 1),
                                      find_coupled(Manifold::S1, 0, 0, 0)));
  for (int m : {-1, 0, 1}) {
    for (int s12 : {0, 1}) {
      set.operators.push_back(transfer_op(find_coupled(Manifold::T1, 1, m, s12),
                                          find_coupled(Manifold::S1, 1, m, 1)));
    }
  }
  return set;
}

JumpSet triplet_decay_ops() {
  JumpSet set;
  set.label = 4;
  set.name = "triplet_decay";
  // Mirror of ISC; the S=2 multiplet has no S0 partner and does not decay here.
  set.operators.push_back(transfer_op(find_coupled(Manifold::S0, 0, 0, 0),
                                      find_coupled(Manifold::T1, 0, 0, 1)));
  for (int m : {-1, 0, 1}) {
    for (int s12 : {0, 1}) {
      set.operators.push_back(transfer_op(find_coupled(Manifold::S0, 1, m, 1),
                                          find_coupled(Manifold::T1, 1, m, s12)));
    }
  }
  return set;
}

JumpSet fluorescence_ops() {
  JumpSet set;
  set.label = 5;
  set.name = "fluorescence";
  for (int s : {0, 1}) {
    for (int m = s; m >= -s; --m) {
      set.operators.push_back(transfer_op(find_coupled(Manifold::S0, s, m, s),
                                          find_coupled(Manifold::S1, s, m, s)));
    }
  }
  return set;
}

Vector vectorize(const Matrix& rho) {
  return Eigen::Map<const Vector>(rho.data(), rho.size());
}

Matrix devectorize(const Vector& v) {
  const auto n = static_cast<Eigen::Index>(std::lround(std::sqrt(double(v.size()))));
  if (n * n != v.size()) throw std::invalid_argument("vector length is not a perfect square");
  return Eigen::Map<const Matrix>(v.data(), n, n);
}

Matrix lindblad_superop(const JumpSet& set) {
  if (set.operators.empty()) throw std::invalid_argument("empty jump set");
  const Eigen::Index n = set.operators.front().rows();
  const Matrix id = Matrix::Identity(n, n);
  Matrix super = Matrix::Zero(n * n, n * n);
  for (const Matrix& l : set.operators) {
    if (l.rows() != n || l.cols() != n) throw std::invalid_argument("jump operators differ in size");
    const Matrix ldl = l.adjoint() * l;
    // vec(A rho B) = (B^T (x) A) vec(rho)
    super += Eigen::kroneckerProduct(l.conjugate(), l).eval();
    super -= 0.5 * Eigen::kroneckerProduct(id, ldl).eval();
    super -= 0.5 * Eigen::kroneckerProduct(ldl.transpose(), id).eval();
  }
  return set.rate * super;
}

Matrix commutator_superop(const Matrix& h) {
  const Eigen::Index n = h.rows();
  Matrix super = Matrix::Zero(n * n, n * n);
  // -i (I (x) H): H acting on the row index of each column block.
  for (Eigen::Index j = 0; j < n; ++j) {
    super.block(n * j, n * j, n, n) -= kI * h;
  }
  // +i (H^T (x) I)
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index bcol = 0; bcol < n; ++bcol) {
      const Complex v = h(bcol, a);  // (H^T)(a, bcol)
      if (v != 0.0) {
        super.block(n * a, n * bcol, n, n) += kI * v * Matrix::Identity(n, n);
      }
    }
  }
  return super;
}

namespace {

struct UnitDissipators {
  Matrix radicals;  // both radical channels, unit rate
  Matrix triplet;
  Matrix isc;
  Matrix decay;
  Matrix fluorescence;
};

const UnitDissipators& unit_dissipators() {
  static const UnitDissipators d = [] {
    UnitDissipators u;
    u.radicals = lindblad_superop(radical_jump_ops(Slot::Radical1)) +
                 lindblad_superop(radical_jump_ops(Slot::Radical2));
    u.triplet = lindblad_superop(triplet_jump_ops());
    u.isc = lindblad_superop(isc_ops());
    u.decay = lindblad_superop(triplet_decay_ops());
    u.fluorescence = lindblad_superop(fluorescence_ops());
    return u;
  }();
  return d;
}

}  // namespace

Liouvillian build_liouvillian(const ModelParams& params, const RateParams& rates,
                              const Orientation& orient, double t) {
  rates.validate();
  Liouvillian liou;
  liou.orientation = orient;
  liou.time = t;
  liou.drive_on = params.drive_active(t);
  liou.matrix = commutator_superop(h_total(params, orient, t));
  const UnitDissipators& d = unit_dissipators();
  if (rates.gamma_radical != 0.0) liou.matrix += rates.gamma_radical * d.radicals;
  if (rates.gamma_triplet != 0.0) liou.matrix += rates.gamma_triplet * d.triplet;
  if (rates.k_st != 0.0) liou.matrix += rates.k_st * d.isc;
  if (rates.k_tg != 0.0) liou.matrix += rates.k_tg * d.decay;
  if (rates.k_eg != 0.0) liou.matrix += rates.k_eg * d.fluorescence;
  return liou;
}

}  // namespace optospin
