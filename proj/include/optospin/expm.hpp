// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "optospin/spin_system.hpp"

namespace optospin {

// Dense matrix exponential (Pade with scaling and squaring).
Matrix expm(const Matrix& a);

// exp(a*t) v without forming the exponential: scaled truncated Taylor with
// step count chosen from the 1-norm. Matches the dense route to ~1e-12 for
// the generator norms used here; preferred when only one action is needed.
Vector expm_multiply(const Matrix& a, double t, const Vector& v);

}  // namespace optospin
