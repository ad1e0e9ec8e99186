#ifndef RULEBENCH_SIM_CURVES_HPP
#define RULEBENCH_SIM_CURVES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "rulebench/core/rng.hpp"
#include "rulebench/sim/trajectory.hpp"

namespace rulebench {

enum class CurveShapeKind { StrictlyDecreasing, StrictlyIncreasing, UShaped, Flat, Other };

inline const char* curve_shape_name(CurveShapeKind k) {
  switch (k) {
    case CurveShapeKind::StrictlyDecreasing: return "StrictlyDecreasing";
    case CurveShapeKind::StrictlyIncreasing: return "StrictlyIncreasing";
    case CurveShapeKind::UShaped: return "UShaped";
    case CurveShapeKind::Flat: return "Flat";
    case CurveShapeKind::Other: return "Other";
  }
  throw std::logic_error("curve_shape_name: bad shape");
}

struct ShapeReport {
  CurveShapeKind kind = CurveShapeKind::Flat;
  std::size_t argmin = 0;  // first global minimum
  int sign_changes = 0;    // over nonzero forward differences

  friend bool operator==(const ShapeReport&, const ShapeReport&) = default;
};

// Empirical shape classification from exact forward-difference signs. No
// tolerance: a zero difference is either everywhere (Flat) or disqualifying
// (Other), so the U-shape label is never handed out on numerical mush.
inline ShapeReport argmin_scan(const std::vector<double>& values) {
  if (values.size() < 2) throw std::invalid_argument("argmin_scan: need at least 2 points");

  ShapeReport report;
  double best = values[0];
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] < best) {
      best = values[i];
      report.argmin = i;
    }

  bool any_zero = false, all_zero = true;
  std::vector<int> signs;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const double diff = values[i + 1] - values[i];
    if (diff == 0.0) {
      any_zero = true;
    } else {
      all_zero = false;
      signs.push_back(diff > 0.0 ? 1 : -1);
    }
  }

  for (std::size_t i = 0; i + 1 < signs.size(); ++i)
    if (signs[i] != signs[i + 1]) ++report.sign_changes;

  if (all_zero) {
    report.kind = CurveShapeKind::Flat;
  } else if (any_zero) {
    report.kind = CurveShapeKind::Other;
  } else if (report.sign_changes == 0) {
    report.kind = signs.front() < 0 ? CurveShapeKind::StrictlyDecreasing
                                    : CurveShapeKind::StrictlyIncreasing;
  } else if (report.sign_changes == 1 && signs.front() < 0) {
    report.kind = CurveShapeKind::UShaped;
  } else {
    report.kind = CurveShapeKind::Other;
  }
  return report;
}

struct ErrorCurve {
  std::vector<double> values;           // E(0..N_max)
  std::vector<double> standard_errors;  // Monte Carlo only, else empty
  ShapeReport shape;
};

// E(N) = b0 * prod_{i<=N} f_i^2 + sigma^2 * sum_{i<=N} gamma_i^2 prod_{j>i} f_j^2,
// f_i = 1 - gamma_i*alpha_i. Computed by the forward recurrence
// E(N) = f_N^2 * E(N-1) + sigma^2 * gamma_N^2, which is algebraically equal
// and multiplies one bounded factor per step instead of forming long products.
inline ErrorCurve closed_form_error(const ReasoningParams& p) {
  validate_params(p);
  if (p.alpha.kind != AlphaModel::Kind::Deterministic)
    throw std::invalid_argument("closed_form_error: requires a deterministic alpha schedule");

  ErrorCurve curve;
  curve.values.reserve(static_cast<std::size_t>(p.N_max) + 1);
  double e = p.b0();
  curve.values.push_back(e);
  for (int k = 1; k <= p.N_max; ++k) {
    const double gamma = p.gamma_at(k);
    const double f = 1.0 - gamma * p.alpha_at(k);
    e = e * f * f + p.sigma * p.sigma * gamma * gamma;
    curve.values.push_back(e);
  }
  if (curve.values.size() >= 2) curve.shape = argmin_scan(curve.values);
  return curve;
}

// Constant-parameter expected error with rho = 1 - gamma*alpha_bar.
//   alpha_bar in (0,1): E(N) = b0*rho^{2N} + sigma^2 gamma^2 (1-rho^{2N})/(1-rho^2)
//   alpha_bar = 0:      E(N) = b0 + N * sigma^2 gamma^2        (rho = 1)
//   alpha_bar < 0:      rho > 1 form, strictly increasing
inline double geometric_error(double b0, double sigma, double gamma, double alpha_bar,
                              int num_steps) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("geometric_error: gamma must lie in (0,1)");
  if (!(alpha_bar >= -1.0 && alpha_bar < 1.0))
    throw std::invalid_argument("geometric_error: alpha_bar must lie in [-1,1)");
  if (num_steps < 0) throw std::invalid_argument("geometric_error: N must be >= 0");

  const double vg = sigma * sigma * gamma * gamma;
  if (alpha_bar == 0.0) return b0 + num_steps * vg;

  const double rho = 1.0 - gamma * alpha_bar;
  const double rho2n = std::pow(rho, 2.0 * num_steps);
  if (alpha_bar > 0.0) return b0 * rho2n + vg * (1.0 - rho2n) / (1.0 - rho * rho);
  return b0 * rho2n + vg * (rho2n - 1.0) / (rho * rho - 1.0);
}

// Fixed-point variance level C = sigma^2 gamma^2 / (1 - rho^2); the
// constant-parameter curve is rho^{2N} (b0 - C) + C.
inline double geometric_floor(double sigma, double gamma, double alpha_bar) {
  if (!(alpha_bar > 0.0 && alpha_bar < 1.0))
    throw std::invalid_argument("geometric_floor: alpha_bar must lie in (0,1)");
  const double rho = 1.0 - gamma * alpha_bar;
  return sigma * sigma * gamma * gamma / (1.0 - rho * rho);
}

enum class AlphaSign { Positive, Zero, Negative };

inline ErrorCurve regime_error(AlphaSign regime, double b0, double sigma, double gamma,
                               double alpha, int n_max) {
  switch (regime) {
    case AlphaSign::Positive:
      if (!(alpha > 0.0)) throw std::invalid_argument("regime_error: alpha not positive");
      break;
    case AlphaSign::Zero:
      if (alpha != 0.0) throw std::invalid_argument("regime_error: alpha not zero");
      break;
    case AlphaSign::Negative:
      if (!(alpha < 0.0)) throw std::invalid_argument("regime_error: alpha not negative");
      break;
  }
  ErrorCurve curve;
  curve.values.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) curve.values.push_back(geometric_error(b0, sigma, gamma, alpha, n));
  if (curve.values.size() >= 2) curve.shape = argmin_scan(curve.values);
  return curve;
}

// Literal optimal-depth formula for the constant-parameter curve:
//   t_star = ln(b0 (1-rho^2) / (sigma^2 gamma^2)) / (2 |ln rho|)
//   N_star = max(0, ceil(t_star))
// flagged means the formula had nothing to optimize (log argument <= 0, or
// t_star < 0 because b0 already sits below the variance floor); the result
// is then pinned to 0. The empirical argmin scan is the cross-check.
struct NStarResult {
  int n_star = 0;
  double t_star = 0.0;
  bool flagged = false;
};

inline NStarResult nstar_formula(double b0, double sigma, double gamma, double alpha_bar) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::invalid_argument("nstar_formula: gamma must lie in (0,1)");
  if (!(alpha_bar > 0.0 && alpha_bar < 1.0))
    throw std::invalid_argument("nstar_formula: alpha_bar must lie in (0,1)");
  if (!(sigma > 0.0)) throw std::invalid_argument("nstar_formula: sigma must be > 0");

  const double rho = 1.0 - gamma * alpha_bar;
  const double arg = b0 * (1.0 - rho * rho) / (sigma * sigma * gamma * gamma);

  NStarResult r;
  if (arg <= 0.0) {
    r.flagged = true;
    r.t_star = -std::numeric_limits<double>::infinity();
    return r;
  }
  r.t_star = std::log(arg) / (2.0 * std::fabs(std::log(rho)));
  if (r.t_star < 0.0) {
    r.flagged = true;
    return r;
  }
  r.n_star = static_cast<int>(std::ceil(r.t_star));
  return r;
}

namespace sim_detail {

// Compensated accumulator; chunk totals are combined in index order so the
// result does not depend on how trials are batched.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace sim_detail

// Monte Carlo expected-error curve. Trial i uses the derived stream
// "trial:<i>", so the estimate is independent of batching and any future
// parallel execution; all depths share each trial's noise (common random
// numbers), which makes depth-to-depth comparisons low-variance.
inline ErrorCurve mc_error_curve(const ReasoningParams& p, std::int64_t trials,
                                 std::uint64_t master_seed) {
  validate_params(p);
  if (trials < 1) throw std::invalid_argument("mc_error_curve: trials must be >= 1");

  const EpisodeSeed seed{master_seed, 0};
  const std::size_t points = static_cast<std::size_t>(p.N_max) + 1;
  std::vector<sim_detail::KahanSum> sum(points), sum_sq(points);

  constexpr std::int64_t kChunk = 1024;
  for (std::int64_t chunk_begin = 0; chunk_begin < trials; chunk_begin += kChunk) {
    const std::int64_t chunk_end = std::min(trials, chunk_begin + kChunk);
    std::vector<sim_detail::KahanSum> part(points), part_sq(points);
    for (std::int64_t i = chunk_begin; i < chunk_end; ++i) {
      Stream s = derive_stream(seed, "trial:" + std::to_string(i));
      const TrajectoryResult traj = run_trajectory(p, s);
      for (std::size_t n = 0; n < points; ++n) {
        part[n].add(traj.error_sq[n]);
        part_sq[n].add(traj.error_sq[n] * traj.error_sq[n]);
      }
    }
    for (std::size_t n = 0; n < points; ++n) {
      sum[n].add(part[n].sum);
      sum_sq[n].add(part_sq[n].sum);
    }
  }

  ErrorCurve curve;
  curve.values.resize(points);
  curve.standard_errors.resize(points);
  const double n = static_cast<double>(trials);
  for (std::size_t i = 0; i < points; ++i) {
    const double mean = sum[i].sum / n;
    curve.values[i] = mean;
    double var = 0.0;
    if (trials > 1) var = std::max(0.0, (sum_sq[i].sum - n * mean * mean) / (n - 1.0));
    curve.standard_errors[i] = std::sqrt(var / n);
  }
  if (curve.values.size() >= 2) curve.shape = argmin_scan(curve.values);
  return curve;
}

}  // namespace rulebench

#endif  // RULEBENCH_SIM_CURVES_HPP
