#ifndef RULEBENCH_SIM_TRAJECTORY_HPP
#define RULEBENCH_SIM_TRAJECTORY_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rulebench/core/rng.hpp"
#include "rulebench/sim/params.hpp"

// Belief-update trajectory with an explicit ask/answer mode machine.
//
// Evidence:      g_k = alpha_k * (y_star - m_{k-1}) + eps_k
// Update:        m_k = m_{k-1} + gamma_k * g_k
// Error:         e_k = (1 - gamma_k*alpha_k) * e_{k-1} + gamma_k * eps_k
//
// Note the +gamma*eps term: it is what Eqs. for g and m actually give when
// substituted, and since eps is symmetric Gaussian the sign is irrelevant in
// distribution. eps is isotropic with E||eps||^2 = sigma^2 regardless of d
// (per-component std sigma/sqrt(d)), so b0 carries all dimension dependence.

namespace rulebench {

enum class Mode { NeedQ, NeedA, Finish };

inline const char* mode_name(Mode m) {
  switch (m) {
    case Mode::NeedQ: return "NeedQ";
    case Mode::NeedA: return "NeedA";
    case Mode::Finish: return "Finish";
  }
  throw std::logic_error("mode_name: bad mode");
}

enum class ActionKind { Ask, Answer, Finish };

struct TrajectoryState {
  int k = 0;
  std::vector<double> m;  // belief m_k
  std::vector<double> e;  // error e_k = m_k - y_star, kept in lockstep
  Mode mode = Mode::NeedQ;

  double error_sq() const {
    double sum = 0.0;
    for (const double v : e) sum += v * v;
    return sum;
  }
};

// Ask transition: poses the next sub-question. The question content has no
// mathematical role; only the mode change matters.
inline TrajectoryState ask(const TrajectoryState& state) {
  if (state.mode != Mode::NeedQ) throw std::logic_error("ask: mode is not NeedQ");
  TrajectoryState next = state;
  next.mode = Mode::NeedA;
  return next;
}

// Answer transition: integrates one evidence signal.
inline TrajectoryState step_belief(const TrajectoryState& state, double alpha_k, double gamma_k,
                                   const std::vector<double>& noise_k) {
  if (state.mode != Mode::NeedA) throw std::logic_error("step_belief: mode is not NeedA");
  if (noise_k.size() != state.m.size())
    throw std::invalid_argument("step_belief: noise dimension mismatch");

  TrajectoryState next = state;
  next.k = state.k + 1;
  next.mode = Mode::NeedQ;
  const double f = 1.0 - gamma_k * alpha_k;
  for (std::size_t i = 0; i < state.m.size(); ++i) {
    // g_i = alpha*(y_star - m) + eps = -alpha*e + eps
    const double g = -alpha_k * state.e[i] + noise_k[i];
    next.m[i] = state.m[i] + gamma_k * g;
    next.e[i] = f * state.e[i] + gamma_k * noise_k[i];
  }
  return next;
}

// Finish transition: halts and freezes the estimate at the current belief.
inline TrajectoryState finish(const TrajectoryState& state) {
  if (state.mode != Mode::NeedA) throw std::logic_error("finish: mode is not NeedA");
  TrajectoryState next = state;
  next.mode = Mode::Finish;
  return next;
}

namespace sim_detail {

// Truncated Gaussian on [-1, 1] by rejection; tau = 0 degenerates to the mean.
inline double draw_alpha(Stream& s, double mean, double tau) {
  if (tau == 0.0) return mean;
  for (;;) {
    const double a = mean + tau * s.next_normal();
    if (a >= -1.0 && a <= 1.0) return a;
  }
}

inline std::vector<double> draw_noise(Stream& s, int d, double sigma) {
  std::vector<double> eps(static_cast<std::size_t>(d), 0.0);
  if (sigma == 0.0) return eps;
  const double component_std = sigma / std::sqrt(static_cast<double>(d));
  for (double& v : eps) v = component_std * s.next_normal();
  return eps;
}

}  // namespace sim_detail

struct TrajectoryResult {
  std::vector<double> error_sq;     // ||e_k||^2 for k = 0..N_max
  std::vector<ActionKind> actions;  // Ask/Answer alternation, final Ask+Finish
  std::vector<double> y_hat;        // final estimate m_N
};

// Runs one trajectory to depth N_max and records ||e_k||^2 at every depth,
// so a single run serves every N (common random numbers across depths).
// Action sequence: (Ask Answer)^N_max Ask Finish; stopping is depth-based.
inline TrajectoryResult run_trajectory(const ReasoningParams& p, Stream& s) {
  validate_params(p);

  TrajectoryState state;
  state.m = p.m0;
  state.e.resize(p.m0.size());
  for (std::size_t i = 0; i < p.m0.size(); ++i) state.e[i] = p.m0[i] - p.y_star[i];

  TrajectoryResult out;
  out.error_sq.reserve(static_cast<std::size_t>(p.N_max) + 1);
  out.error_sq.push_back(state.error_sq());

  for (int k = 1; k <= p.N_max; ++k) {
    state = ask(state);
    out.actions.push_back(ActionKind::Ask);

    const double alpha = (p.alpha.kind == AlphaModel::Kind::Deterministic)
                             ? p.alpha_at(k)
                             : sim_detail::draw_alpha(s, p.alpha.mean, p.alpha.tau);
    const std::vector<double> eps = sim_detail::draw_noise(s, p.d, p.sigma);
    state = step_belief(state, alpha, p.gamma_at(k), eps);
    out.actions.push_back(ActionKind::Answer);
    out.error_sq.push_back(state.error_sq());
  }

  state = ask(state);
  out.actions.push_back(ActionKind::Ask);
  state = finish(state);
  out.actions.push_back(ActionKind::Finish);
  out.y_hat = state.m;
  return out;
}

}  // namespace rulebench

#endif  // RULEBENCH_SIM_TRAJECTORY_HPP
