// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
#include "optospin/spin_system.hpp"

#include <cmath>
#include <stdexcept>

namespace optospin {

namespace {

constexpr Complex kI{0.0, 1.0};

bool is_half_integer(double s) {
  const double twice = 2.0 * s;
  return std::abs(twice - std::round(twice)) < 1e-12;
}

double factorial(int n) {
  // n stays small (<= 2*(j1+j2+J)+1); doubles are exact far beyond that.
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

std::string manifold_name(Manifold m) {
  switch (m) {
    case Manifold::S0: return "S0";
    case Manifold::S1: return "S1";
    case Manifold::T1: return "T1";
  }
  return "?";
}

SpinOps spin_matrices(double s) {
  if (s < 0 || !is_half_integer(s)) {
    throw std::invalid_argument("spin quantum number must be a non-negative half-integer");
  }
  const int dim = static_cast<int>(std::lround(2 * s)) + 1;
  Matrix sz = Matrix::Zero(dim, dim);
  Matrix sp = Matrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    const double m = s - k;
    sz(k, k) = m;
    if (k > 0) {
      // <s, m+1| s+ |s, m> with m = s - k
      sp(k - 1, k) = std::sqrt(s * (s + 1) - m * (m + 1));
    }
  }
  const Matrix sm = sp.adjoint();
  SpinOps ops;
  ops.s = s;
  ops.x = 0.5 * (sp + sm);
  ops.y = -0.5 * kI * (sp - sm);
  ops.z = sz;
  return ops;
}

const std::array<Matrix, 8>& gell_mann_matrices() {
  static const std::array<Matrix, 8> lambdas = [] {
    std::array<Matrix, 8> l;
    for (auto& m : l) m = Matrix::Zero(3, 3);
    l[0](0, 1) = 1; l[0](1, 0) = 1;
    l[1](0, 1) = -kI; l[1](1, 0) = kI;
    l[2](0, 0) = 1; l[2](1, 1) = -1;
    l[3](0, 2) = 1; l[3](2, 0) = 1;
    l[4](0, 2) = -kI; l[4](2, 0) = kI;
    l[5](1, 2) = 1; l[5](2, 1) = 1;
    l[6](1, 2) = -kI; l[6](2, 1) = kI;
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    l[7](0, 0) = inv_sqrt3; l[7](1, 1) = inv_sqrt3; l[7](2, 2) = -2.0 * inv_sqrt3;
    return l;
  }();
  return lambdas;
}

CompositeBasis::CompositeBasis() {
  states_.reserve(kDim);
  for (Manifold m : {Manifold::S0, Manifold::S1}) {
    for (int r1 : {+1, -1}) {
      for (int r2 : {+1, -1}) {
        states_.push_back({m, r1, r2, 0});
      }
    }
  }
  for (int r1 : {+1, -1}) {
    for (int r2 : {+1, -1}) {
      for (int c : {+2, 0, -2}) {
        states_.push_back({Manifold::T1, r1, r2, c});
      }
    }
  }
}

const CompositeBasis& CompositeBasis::instance() {
  static const CompositeBasis basis;
  return basis;
}

int CompositeBasis::offset(Manifold m) const {
  switch (m) {
    case Manifold::S0: return 0;
    case Manifold::S1: return 4;
    case Manifold::T1: return 8;
  }
  return -1;
}

int CompositeBasis::index_of(Manifold m, int r1_twice_m, int r2_twice_m, int coupler_twice_m) const {
  const int i1 = (r1_twice_m == 1) ? 0 : 1;
  const int i2 = (r2_twice_m == 1) ? 0 : 1;
  if (std::abs(r1_twice_m) != 1 || std::abs(r2_twice_m) != 1) {
    throw std::invalid_argument("radical projection must be +-1/2");
  }
  if (m != Manifold::T1) return offset(m) + 2 * i1 + i2;
  if (coupler_twice_m != 2 && coupler_twice_m != 0 && coupler_twice_m != -2) {
    throw std::invalid_argument("coupler projection must be -1, 0 or +1");
  }
  const int ic = (2 - coupler_twice_m) / 2;
  return offset(m) + 6 * i1 + 3 * i2 + ic;
}

Matrix embed(const Matrix& op, Slot slot, const std::vector<Manifold>& manifolds) {
  const int expected = (slot == Slot::Coupler) ? 3 : 2;
  if (op.rows() != expected || op.cols() != expected) {
    throw std::invalid_argument("operator dimension does not match slot");
  }
  const auto& basis = CompositeBasis::instance();
  Matrix out = Matrix::Zero(CompositeBasis::kDim, CompositeBasis::kDim);
  for (Manifold m : manifolds) {
    if (slot == Slot::Coupler && m != Manifold::T1) {
      throw std::invalid_argument("coupler slot does not exist in manifold " + manifold_name(m));
    }
    const int off = basis.offset(m);
    const int dim = basis.dim(m);
    for (int p = 0; p < dim; ++p) {
      const BasisState& sp = basis.state(off + p);
      for (int q = 0; q < dim; ++q) {
        const BasisState& sq = basis.state(off + q);
        // identity on every slot other than the embedded one
        bool others_equal = true;
        int row = 0, col = 0;
        switch (slot) {
          case Slot::Radical1:
            others_equal = sp.radical2_twice_m == sq.radical2_twice_m &&
                           sp.coupler_twice_m == sq.coupler_twice_m;
            row = (sp.radical1_twice_m == 1) ? 0 : 1;
            col = (sq.radical1_twice_m == 1) ? 0 : 1;
            break;
          case Slot::Radical2:
            others_equal = sp.radical1_twice_m == sq.radical1_twice_m &&
                           sp.coupler_twice_m == sq.coupler_twice_m;
            row = (sp.radical2_twice_m == 1) ? 0 : 1;
            col = (sq.radical2_twice_m == 1) ? 0 : 1;
            break;
          case Slot::Coupler:
            others_equal = sp.radical1_twice_m == sq.radical1_twice_m &&
                           sp.radical2_twice_m == sq.radical2_twice_m;
            row = (2 - sp.coupler_twice_m) / 2;
            col = (2 - sq.coupler_twice_m) / 2;
            break;
        }
        if (others_equal) out(off + p, off + q) = op(row, col);
      }
    }
  }
  return out;
}

Matrix embed_all(const Matrix& op, Slot slot) {
  if (slot == Slot::Coupler) return embed(op, slot, {Manifold::T1});
  return embed(op, slot, {Manifold::S0, Manifold::S1, Manifold::T1});
}

const TotalSpinOps& total_spin_ops() {
  static const TotalSpinOps ops = [] {
    const SpinOps half = spin_matrices(0.5);
    const SpinOps one = spin_matrices(1.0);
    TotalSpinOps t;
    t.x = embed_all(half.x, Slot::Radical1) + embed_all(half.x, Slot::Radical2) + embed_all(one.x, Slot::Coupler);
    t.y = embed_all(half.y, Slot::Radical1) + embed_all(half.y, Slot::Radical2) + embed_all(one.y, Slot::Coupler);
    t.z = embed_all(half.z, Slot::Radical1) + embed_all(half.z, Slot::Radical2) + embed_all(one.z, Slot::Coupler);
    return t;
  }();
  return ops;
}

double clebsch_gordan(int two_j1, int two_m1, int two_j2, int two_m2, int two_J, int two_M) {
  if (two_M != two_m1 + two_m2) return 0.0;
  if (two_J < std::abs(two_j1 - two_j2) || two_J > two_j1 + two_j2) return 0.0;
  if ((two_j1 + two_j2 + two_J) % 2 != 0) return 0.0;  // integer perimeter required
  if (std::abs(two_m1) > two_j1 || std::abs(two_m2) > two_j2 || std::abs(two_M) > two_J) return 0.0;
  if ((two_j1 + two_m1) % 2 != 0 || (two_j2 + two_m2) % 2 != 0 || (two_J + two_M) % 2 != 0) return 0.0;

  // Racah's closed form; all factorial arguments below are true integers.
  auto f2 = [](int twice) { return factorial(twice / 2); };
  const double prefactor =
      std::sqrt((two_J + 1.0) *
                f2(two_J + two_j1 - two_j2) * f2(two_J - two_j1 + two_j2) * f2(two_j1 + two_j2 - two_J) /
                f2(two_j1 + two_j2 + two_J + 2)) *
      std::sqrt(f2(two_j1 + two_m1) * f2(two_j1 - two_m1) * f2(two_j2 + two_m2) * f2(two_j2 - two_m2) *
                f2(two_J + two_M) * f2(two_J - two_M));

  double sum = 0.0;
  const int k_min = std::max({0, (two_j2 - two_J - two_m1) / 2, (two_j1 + two_m2 - two_J) / 2});
  const int k_max = std::min({(two_j1 + two_j2 - two_J) / 2, (two_j1 - two_m1) / 2, (two_j2 + two_m2) / 2});
  for (int k = k_min; k <= k_max; ++k) {
    const double denom = factorial(k) *
                         f2(two_j1 + two_j2 - two_J - 2 * k) *
                         f2(two_j1 - two_m1 - 2 * k) *
                         f2(two_j2 + two_m2 - 2 * k) *
                         f2(two_J - two_j2 + two_m1 + 2 * k) *
                         f2(two_J - two_j1 - two_m2 + 2 * k);
    sum += ((k % 2 == 0) ? 1.0 : -1.0) / denom;
  }
  return prefactor * sum;
}

namespace {

std::vector<CoupledState> build_coupled_states(Manifold manifold) {
  const auto& basis = CompositeBasis::instance();
  std::vector<CoupledState> result;

  if (manifold != Manifold::T1) {
    // Radical pair only: S in {1, 0}, amplitudes from 1/2 x 1/2 CG.
    for (int s : {1, 0}) {
      for (int m = s; m >= -s; --m) {
        CoupledState cs;
        cs.manifold = manifold;
        cs.s_total = s;
        cs.sz_total = m;
        cs.intermediate = s;
        cs.amplitudes = Vector::Zero(CompositeBasis::kDim);
        for (int r1 : {+1, -1}) {
          for (int r2 : {+1, -1}) {
            const double c = clebsch_gordan(1, r1, 1, r2, 2 * s, 2 * m);
            if (c != 0.0) cs.amplitudes(basis.index_of(manifold, r1, r2)) = c;
          }
        }
        result.push_back(std::move(cs));
      }
    }
    return result;
  }

  // T1: radical1 with radical2 -> s12, then s12 with the coupler spin 1.
  struct Block { int s_total, s12; };
  std::vector<Block> blocks{{2, 1}, {1, 0}, {1, 1}, {0, 1}};
  for (const Block& blk : blocks) {
    for (int m = blk.s_total; m >= -blk.s_total; --m) {
      CoupledState cs;
      cs.manifold = Manifold::T1;
      cs.s_total = blk.s_total;
      cs.sz_total = m;
      cs.intermediate = blk.s12;
      cs.amplitudes = Vector::Zero(CompositeBasis::kDim);
      for (int r1 : {+1, -1}) {
        for (int r2 : {+1, -1}) {
          const int two_m12 = r1 + r2;
          for (int c : {+2, 0, -2}) {
            const double amp = clebsch_gordan(1, r1, 1, r2, 2 * blk.s12, two_m12) *
                               clebsch_gordan(2 * blk.s12, two_m12, 2, c, 2 * blk.s_total, 2 * m);
            if (amp != 0.0) cs.amplitudes(basis.index_of(Manifold::T1, r1, r2, c)) = amp;
          }
        }
      }
      result.push_back(std::move(cs));
    }
  }
  return result;
}

}  // namespace

std::string CoupledState::label() const {
  std::string s = manifold_name(manifold) + "|S=" + std::to_string(s_total) +
                  ",M=" + std::to_string(sz_total);
  if (manifold == Manifold::T1 && s_total == 1) s += ",s12=" + std::to_string(intermediate);
  return s + ">";
}

const std::vector<CoupledState>& coupled_states(Manifold m) {
  static const std::vector<CoupledState> s0 = build_coupled_states(Manifold::S0);
  static const std::vector<CoupledState> s1 = build_coupled_states(Manifold::S1);
  static const std::vector<CoupledState> t1 = build_coupled_states(Manifold::T1);
  switch (m) {
    case Manifold::S0: return s0;
    case Manifold::S1: return s1;
    case Manifold::T1: return t1;
  }
  throw std::invalid_argument("unknown manifold");
}

}  // namespace optospin
