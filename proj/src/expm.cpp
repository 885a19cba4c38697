// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
#include "optospin/expm.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>

namespace optospin {

Matrix expm(const Matrix& a) { return a.exp(); }

Vector expm_multiply(const Matrix& a, double t, const Vector& v) {
  if (t == 0.0) return v;
  // 1-norm of a*t decides the substep count; theta ~ 4 keeps each Taylor
  // partial sum free of destructive cancellation in double precision.
  const double norm1 = std::abs(t) * a.cwiseAbs().colwise().sum().maxCoeff();
  constexpr double kTheta = 4.0;
  constexpr int kMaxTerms = 64;
  const int steps = std::max(1, static_cast<int>(std::ceil(norm1 / kTheta)));
  const double dt = t / steps;

  Vector w = v;
  Vector term(v.size());
  for (int s = 0; s < steps; ++s) {
    term = w;
    double base = w.norm();
    for (int k = 1; k <= kMaxTerms; ++k) {
      term = (dt / k) * (a * term);
      w += term;
      if (term.norm() <= 1e-16 * std::max(base, w.norm())) break;
    }
  }
  return w;
}

}  // namespace optospin
