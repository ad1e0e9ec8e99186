#ifndef RULEBENCH_SIM_PARAMS_HPP
#define RULEBENCH_SIM_PARAMS_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace rulebench {

// Question-alignment model. Deterministic: a fixed per-step schedule (the
// last entry repeats past the end). Stochastic: i.i.d. draws from a Gaussian
// with the declared mean and standard deviation, truncated to [-1, 1].
struct AlphaModel {
  enum class Kind { Deterministic, Stochastic };

  Kind kind = Kind::Deterministic;
  std::vector<double> values{0.8};  // deterministic schedule
  double mean = 0.0;                // stochastic parameters
  double tau = 0.0;

  static AlphaModel deterministic(std::vector<double> schedule) {
    AlphaModel a;
    a.kind = Kind::Deterministic;
    a.values = std::move(schedule);
    return a;
  }
  static AlphaModel constant(double alpha) { return deterministic({alpha}); }
  static AlphaModel stochastic(double mean, double tau) {
    AlphaModel a;
    a.kind = Kind::Stochastic;
    a.values.clear();
    a.mean = mean;
    a.tau = tau;
    return a;
  }
};

struct ReasoningParams {
  int d = 1;                   // belief-space dimension
  std::vector<double> m0{1};   // initial belief, length d
  std::vector<double> y_star{0};  // target, length d
  double sigma = 0.0;          // total answer-noise std: E||eps||^2 = sigma^2
  std::vector<double> gamma_schedule{0.5};  // per-step, last entry repeats
  AlphaModel alpha;
  int N_max = 0;

  double b0() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < m0.size(); ++i) {
      const double diff = m0[i] - y_star[i];
      sum += diff * diff;
    }
    return sum;
  }

  // Step indices are 1-based to match the recursion; schedules clamp.
  double gamma_at(int k) const {
    const std::size_t i = static_cast<std::size_t>(k - 1);
    return gamma_schedule[i < gamma_schedule.size() ? i : gamma_schedule.size() - 1];
  }
  double alpha_at(int k) const {
    if (alpha.kind != AlphaModel::Kind::Deterministic)
      throw std::logic_error("alpha_at: schedule lookup on a stochastic alpha model");
    const std::size_t i = static_cast<std::size_t>(k - 1);
    return alpha.values[i < alpha.values.size() ? i : alpha.values.size() - 1];
  }
};

inline void validate_params(const ReasoningParams& p) {
  if (p.d < 1) throw std::invalid_argument("params: d must be >= 1");
  if (p.m0.size() != static_cast<std::size_t>(p.d) ||
      p.y_star.size() != static_cast<std::size_t>(p.d))
    throw std::invalid_argument("params: m0 and y_star must have length d");
  if (!std::isfinite(p.b0())) throw std::invalid_argument("params: b0 is not finite");
  if (!(p.sigma >= 0.0) || !std::isfinite(p.sigma))
    throw std::invalid_argument("params: sigma must be >= 0");
  if (p.gamma_schedule.empty()) throw std::invalid_argument("params: empty gamma schedule");
  for (const double g : p.gamma_schedule)
    if (!(g > 0.0 && g < 1.0)) throw std::invalid_argument("params: gamma must lie in (0,1)");
  if (p.alpha.kind == AlphaModel::Kind::Deterministic) {
    if (p.alpha.values.empty()) throw std::invalid_argument("params: empty alpha schedule");
    for (const double a : p.alpha.values)
      if (!(a >= -1.0 && a <= 1.0))
        throw std::invalid_argument("params: alpha must lie in [-1,1]");
  } else {
    if (!(p.alpha.mean >= -1.0 && p.alpha.mean <= 1.0))
      throw std::invalid_argument("params: alpha mean must lie in [-1,1]");
    if (!(p.alpha.tau >= 0.0)) throw std::invalid_argument("params: tau must be >= 0");
  }
  if (p.N_max < 0) throw std::invalid_argument("params: N_max must be >= 0");
}

// Accepts either explicit {m0, y_star} vectors or a scalar b0 (in which case
// m0 = sqrt(b0)*e1 and y_star = 0, since only b0 enters the theory).
inline ReasoningParams params_from_json(const nlohmann::json& j) {
  ReasoningParams p;
  p.d = j.value("d", 1);
  if (p.d < 1) throw std::invalid_argument("params: d must be >= 1");

  // Explicit vectors win over the scalar shorthand so that a document that
  // carries both (params_to_json emits b0 alongside m0/y_star) round-trips.
  if (j.contains("m0") || j.contains("y_star")) {
    p.m0 = j.at("m0").get<std::vector<double>>();
    p.y_star = j.at("y_star").get<std::vector<double>>();
  } else if (j.contains("b0")) {
    const double b0 = j.at("b0").get<double>();
    if (!(b0 >= 0.0)) throw std::invalid_argument("params: b0 must be >= 0");
    p.m0.assign(static_cast<std::size_t>(p.d), 0.0);
    p.y_star.assign(static_cast<std::size_t>(p.d), 0.0);
    p.m0[0] = std::sqrt(b0);
  } else {
    throw std::invalid_argument("params: need b0 or m0/y_star");
  }

  p.sigma = j.value("sigma", 0.0);

  const nlohmann::json& gj = j.at("gamma");
  if (gj.is_number())
    p.gamma_schedule = {gj.get<double>()};
  else
    p.gamma_schedule = gj.get<std::vector<double>>();

  if (j.contains("alpha")) {
    const nlohmann::json& aj = j.at("alpha");
    const std::string type = aj.value("type", "deterministic");
    if (type == "deterministic") {
      if (aj.contains("values"))
        p.alpha = AlphaModel::deterministic(aj.at("values").get<std::vector<double>>());
      else
        p.alpha = AlphaModel::constant(aj.at("value").get<double>());
    } else if (type == "stochastic") {
      p.alpha = AlphaModel::stochastic(aj.at("mean").get<double>(), aj.at("tau").get<double>());
    } else {
      throw std::invalid_argument("params: unknown alpha model type '" + type + "'");
    }
  }

  p.N_max = j.value("N_max", 0);
  validate_params(p);
  return p;
}

inline nlohmann::json params_to_json(const ReasoningParams& p) {
  nlohmann::json j;
  j["d"] = p.d;
  j["m0"] = p.m0;
  j["y_star"] = p.y_star;
  j["b0"] = p.b0();
  j["sigma"] = p.sigma;
  j["gamma"] = p.gamma_schedule.size() == 1 ? nlohmann::json(p.gamma_schedule[0])
                                            : nlohmann::json(p.gamma_schedule);
  if (p.alpha.kind == AlphaModel::Kind::Deterministic) {
    j["alpha"] = {{"type", "deterministic"}, {"values", p.alpha.values}};
  } else {
    j["alpha"] = {{"type", "stochastic"}, {"mean", p.alpha.mean}, {"tau", p.alpha.tau}};
  }
  j["N_max"] = p.N_max;
  return j;
}

}  // namespace rulebench

#endif  // RULEBENCH_SIM_PARAMS_HPP
