// Copyright 2026 The Optospin Authors
// SPDX-License-Identifier: Apache-2.0
#include "optospin/spectra.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

namespace optospin {

void SpectrumGrid::validate() const {
  if (omegas.empty()) throw std::invalid_argument("empty frequency grid");
  for (size_t i = 0; i + 1 < omegas.size(); ++i) {
    if (!(omegas[i + 1] > omegas[i])) throw std::invalid_argument("frequency grid must be strictly increasing");
  }
  if (!(b_field_mT >= 0.0)) throw std::invalid_argument("field magnitude must be >= 0");
}

std::vector<double> SpectrumGrid::linspace(double lo, double hi, int n) {
  if (n < 1) throw std::invalid_argument("need at least one frequency point");
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = lo;
    return v;
  }
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  return v;
}

Matrix mw_operator(const Orientation& orient) {
  return total_spin_ops().along(orient.mw_dir());
}

namespace {

constexpr Complex kI{0.0, 1.0};

// Shared per-orientation scratch: iL is formed once, each omega reuses the
// factorization buffer.
struct ResolventWorkspace {
  Matrix il;       // i * L
  Matrix a;        // iL - w I, overwritten by the LU
  Vector rhs;
  Vector sol;

  void set_generator(const Matrix& liou) {
    il = kI * liou;
    a.resizeLike(il);
  }

  // Solves (iL - w I) sol = rhs in place.
  void solve(double omega) {
    a = il;
    a.diagonal().array() -= omega;
    Eigen::PartialPivLU<Eigen::Ref<Matrix>> lu(a);
    sol = lu.solve(rhs);
    if (!sol.allFinite()) {
      fail(omega);
    }
  }

  [[noreturn]] void fail(double omega) {
    // Reconstruct A for the condition estimate; this path is cold.
    Matrix fresh = il;
    fresh.diagonal().array() -= omega;
    const double rcond = Eigen::FullPivLU<Matrix>(fresh).rcond();
    char buf[128];
    std::snprintf(buf, sizeof(buf), "resolvent solve failed at omega=%g (rcond=%.3e)", omega, rcond);
    throw NumericalError(buf);
  }
};

double intensity_from_solution(const Matrix& rho_t, const Matrix& s_mw, const Matrix& resolved) {
  // |Tr(rho S R)| = |sum_ij (rho S)^T .* R|
  const Matrix m = (rho_t * s_mw).transpose();
  return std::abs(m.cwiseProduct(resolved).sum());
}

Spectrum spectrum_single_ws(ResolventWorkspace& ws, const Matrix& rho_t, const ModelParams& params,
                            const RateParams& rates, const Orientation& orient,
                            const SpectrumGrid& grid) {
  grid.validate();
  const Liouvillian liou = build_liouvillian(params, rates, orient, grid.time);
  const Matrix s_mw = mw_operator(orient);
  ws.set_generator(liou.matrix);
  ws.rhs = vectorize(s_mw);

  Spectrum spec;
  spec.grid = grid;
  spec.orientation = orient;
  spec.intensities.reserve(grid.omegas.size());
  for (double omega : grid.omegas) {
    ws.solve(omega);
    spec.intensities.push_back(intensity_from_solution(rho_t, s_mw, devectorize(ws.sol)));
  }
  return spec;
}

}  // namespace

Matrix resolvent_apply(const Liouvillian& liou, double omega, const Matrix& x) {
  const Eigen::Index n = x.rows();
  if (x.cols() != n || n * n != liou.matrix.rows()) {
    throw std::invalid_argument("operand dimension does not match the Liouvillian");
  }
  ResolventWorkspace ws;
  ws.set_generator(liou.matrix);
  ws.rhs = vectorize(x);
  ws.solve(omega);
  // solve-quality gate; LU of a near-singular shift can return finite garbage
  const double resid = (ws.il * ws.sol - omega * ws.sol - ws.rhs).norm();
  const double scale = ws.rhs.norm() + std::abs(omega) * ws.sol.norm();
  if (!(resid <= 1e-8 * std::max(scale, 1.0))) ws.fail(omega);
  return devectorize(ws.sol);
}

Spectrum spectrum_single(const Matrix& rho_t, const ModelParams& params, const RateParams& rates,
                         const Orientation& orient, const SpectrumGrid& grid) {
  ResolventWorkspace ws;
  return spectrum_single_ws(ws, rho_t, params, rates, orient, grid);
}

std::vector<Orientation> powder_orientations(int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1) throw std::invalid_argument("orientation counts must be >= 1");
  std::vector<Orientation> out;
  out.reserve(static_cast<size_t>(n_theta) * n_phi);
  for (int i = 0; i < n_theta; ++i) {
    const double theta = (i + 0.5) * units::kPi / n_theta;
    for (int j = 0; j < n_phi; ++j) {
      out.push_back({theta, 2.0 * units::kPi * j / n_phi});
    }
  }
  return out;
}

double pairwise_sum(const double* data, size_t n) {
  if (n == 0) return 0.0;
  if (n <= 8) {
    double s = data[0];
    for (size_t i = 1; i < n; ++i) s += data[i];
    return s;
  }
  const size_t half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

Spectrum powder_average(const ModelParams& params, const RateParams& rates, const Matrix& rho0,
                        const SpectrumGrid& grid, const PowderOptions& opts) {
  grid.validate();
  const std::vector<Orientation> orientations = powder_orientations(opts.n_theta, opts.n_phi);
  const size_t n_orient = orientations.size();
  const size_t n_omega = grid.omegas.size();

  std::vector<std::vector<double>> slots(n_orient);
  std::vector<double> timings(n_orient, 0.0);

  int workers = opts.workers > 0 ? opts.workers : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min<int>(workers, static_cast<int>(n_orient));

  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto run = [&] {
    ResolventWorkspace ws;
    while (!failed.load(std::memory_order_relaxed)) {
      const size_t k = next.fetch_add(1);
      if (k >= n_orient) break;
      const auto tic = std::chrono::steady_clock::now();
      try {
        const Matrix rho_t = evolve_to(params, rates, orientations[k], rho0, 0.0, grid.time);
        Spectrum s = spectrum_single_ws(ws, rho_t, params, rates, orientations[k], grid);
        slots[k] = std::move(s.intensities);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) {
          char buf[128];
          std::snprintf(buf, sizeof(buf), "powder orientation %zu (theta=%.6f, phi=%.6f) failed",
                        k, orientations[k].theta, orientations[k].phi);
          try {
            std::throw_with_nested(std::runtime_error(buf));
          } catch (...) {
            error = std::current_exception();
          }
        }
        return;
      }
      timings[k] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - tic).count();
    }
  };

  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) std::rethrow_exception(error);

  // Fixed-order reduction over orientation index: identical bytes for any
  // worker count.
  std::vector<double> weights(n_orient, 1.0);
  if (opts.sin_theta_weight) {
    for (size_t k = 0; k < n_orient; ++k) weights[k] = std::sin(orientations[k].theta);
  }
  const double weight_total = pairwise_sum(weights.data(), n_orient);

  Spectrum powder;
  powder.grid = grid;
  powder.orientation = std::nullopt;
  powder.intensities.resize(n_omega);
  std::vector<double> column(n_orient);
  for (size_t w = 0; w < n_omega; ++w) {
    for (size_t k = 0; k < n_orient; ++k) column[k] = weights[k] * slots[k][w];
    powder.intensities[w] = pairwise_sum(column.data(), n_orient) / weight_total;
  }
  powder.orientation_ms = std::move(timings);
  return powder;
}

std::vector<Spectrum> spectrum_scan_j1(const std::vector<double>& j1_values_radns,
                                       const ModelParams& base, const RateParams& rates,
                                       const Matrix& rho0, const SpectrumGrid& grid,
                                       const PowderOptions& opts, bool tie_j2) {
  if (j1_values_radns.empty()) throw std::invalid_argument("empty J1 scan list");
  std::vector<Spectrum> out;
  out.reserve(j1_values_radns.size());
  for (double j1 : j1_values_radns) {
    ModelParams p = base;
    p.j1 = j1;
    if (tie_j2) p.j2 = j1;
    if (opts.n_theta * opts.n_phi > 1) {
      out.push_back(powder_average(p, rates, rho0, grid, opts));
    } else {
      const Orientation orient = powder_orientations(1, 1).front();
      const Matrix rho_t = evolve_to(p, rates, orient, rho0, 0.0, grid.time);
      out.push_back(spectrum_single(rho_t, p, rates, orient, grid));
    }
  }
  return out;
}

}  // namespace optospin
