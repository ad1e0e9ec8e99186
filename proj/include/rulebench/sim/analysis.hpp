#ifndef RULEBENCH_SIM_ANALYSIS_HPP
#define RULEBENCH_SIM_ANALYSIS_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rulebench/sim/curves.hpp"

// Finite-difference sensitivity of the constant-parameter error curve. The
// lemma-level claims (alignment always helps, the gamma trade-off has a
// unique interior optimum) are checked numerically, never assumed.

namespace rulebench {

enum class SensitivityTarget { Alpha, Gamma };

struct SensitivityReport {
  double derivative = 0.0;           // central difference at the requested point
  double step = 0.0;                 // h actually used
  // Gamma target only: dE/dgamma signs across a grid on (0,1).
  int grid_sign_changes = -1;
  std::optional<double> root;        // bisected root of dE/dgamma when exactly 1 change
};

namespace sim_detail {

inline double curve_at(double b0, double sigma, double gamma, double alpha, int n) {
  return geometric_error(b0, sigma, gamma, alpha, n);
}

inline double dE_dgamma(double b0, double sigma, double gamma, double alpha, int n, double h) {
  return (curve_at(b0, sigma, gamma + h, alpha, n) - curve_at(b0, sigma, gamma - h, alpha, n)) /
         (2.0 * h);
}

}  // namespace sim_detail

// Central differences have O(h^2) truncation error. For target = Gamma the
// report additionally scans dE/dgamma over gamma = 0.005, 0.010, ..., 0.995
// and brackets the interior optimum when the sign flips exactly once.
inline SensitivityReport sensitivity(double b0, double sigma, double gamma, double alpha_bar,
                                     int num_steps, SensitivityTarget target, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("sensitivity: h must be > 0");

  SensitivityReport report;
  report.step = h;

  if (target == SensitivityTarget::Alpha) {
    if (!(alpha_bar - h > 0.0 && alpha_bar + h < 1.0))
      throw std::invalid_argument("sensitivity: alpha stencil leaves (0,1)");
    report.derivative =
        (sim_detail::curve_at(b0, sigma, gamma, alpha_bar + h, num_steps) -
         sim_detail::curve_at(b0, sigma, gamma, alpha_bar - h, num_steps)) /
        (2.0 * h);
    return report;
  }

  if (!(gamma - h > 0.0 && gamma + h < 1.0))
    throw std::invalid_argument("sensitivity: gamma stencil leaves (0,1)");
  report.derivative = sim_detail::dE_dgamma(b0, sigma, gamma, alpha_bar, num_steps, h);

  // 199-point grid; the central-difference step keeps every stencil inside (0,1).
  constexpr double kGridStep = 0.005;
  constexpr double kGridH = 1e-4;
  std::vector<double> grid, deriv;
  for (int i = 1; i <= 199; ++i) {
    const double g = i * kGridStep;
    grid.push_back(g);
    deriv.push_back(sim_detail::dE_dgamma(b0, sigma, g, alpha_bar, num_steps, kGridH));
  }

  report.grid_sign_changes = 0;
  std::optional<std::size_t> flip;
  int prev_sign = 0;
  for (std::size_t i = 0; i < deriv.size(); ++i) {
    const int sign = deriv[i] > 0.0 ? 1 : (deriv[i] < 0.0 ? -1 : 0);
    if (sign == 0) continue;
    if (prev_sign != 0 && sign != prev_sign) {
      ++report.grid_sign_changes;
      flip = i;
    }
    prev_sign = sign;
  }

  if (report.grid_sign_changes == 1 && flip) {
    double lo = grid[*flip - 1], hi = grid[*flip];
    double flo = sim_detail::dE_dgamma(b0, sigma, lo, alpha_bar, num_steps, kGridH);
    for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
      const double mid = 0.5 * (lo + hi);
      const double fmid = sim_detail::dE_dgamma(b0, sigma, mid, alpha_bar, num_steps, kGridH);
      if ((fmid < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fmid;
      } else {
        hi = mid;
      }
    }
    report.root = 0.5 * (lo + hi);
  }
  return report;
}

}  // namespace rulebench

#endif  // RULEBENCH_SIM_ANALYSIS_HPP
