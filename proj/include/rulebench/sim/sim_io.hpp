#ifndef RULEBENCH_SIM_SIM_IO_HPP
#define RULEBENCH_SIM_SIM_IO_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "rulebench/sim/curves.hpp"
#include "rulebench/sim/params.hpp"

namespace rulebench {

// %.12g keeps full double precision while staying diff-friendly; every float
// in the CSV goes through here so regenerated files are byte-identical.
inline std::string format_g12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Columns: N, E_mc, SE, E_closed. The closed-form column is present only when
// a closed form exists (deterministic alpha); shape metadata rides in a
// trailing comment so the data block stays machine-readable.
inline std::string curve_csv(const ErrorCurve& mc, const ErrorCurve* closed) {
  if (closed && closed->values.size() != mc.values.size())
    throw std::invalid_argument("curve_csv: curve length mismatch");

  std::string out = closed ? "N,E_mc,SE,E_closed\n" : "N,E_mc,SE\n";
  for (std::size_t n = 0; n < mc.values.size(); ++n) {
    out += std::to_string(n);
    out += ',';
    out += format_g12(mc.values[n]);
    out += ',';
    out += format_g12(n < mc.standard_errors.size() ? mc.standard_errors[n] : 0.0);
    if (closed) {
      out += ',';
      out += format_g12(closed->values[n]);
    }
    out += '\n';
  }
  // The closed form, when defined, gives the authoritative shape; the MC
  // scan can wobble on plateaus.
  const ShapeReport& shape = closed ? closed->shape : mc.shape;
  out += "# shape=" + std::string(curve_shape_name(shape.kind)) +
         " argmin=" + std::to_string(shape.argmin) +
         " sign_changes=" + std::to_string(shape.sign_changes) + "\n";
  return out;
}

// Parameter echo written next to the CSV so a result file is self-describing.
inline nlohmann::json simulation_sidecar(const ReasoningParams& p, std::int64_t trials,
                                         std::uint64_t master_seed, const ErrorCurve& mc,
                                         const NStarResult* nstar) {
  nlohmann::json j;
  j["params"] = params_to_json(p);
  j["trials"] = trials;
  j["master_seed"] = master_seed;
  j["rng"] = {{"algorithm", kRngAlgorithm}, {"generator_version", kGeneratorVersion}};
  j["shape"] = {{"kind", curve_shape_name(mc.shape.kind)},
                {"argmin", mc.shape.argmin},
                {"sign_changes", mc.shape.sign_changes}};
  if (nstar) {
    j["n_star"] = {{"value", nstar->n_star},
                   {"t_star", std::isfinite(nstar->t_star) ? nlohmann::json(nstar->t_star)
                                                           : nlohmann::json(nullptr)},
                   {"flagged", nstar->flagged},
                   {"agrees_with_scan", !nstar->flagged &&
                                            static_cast<std::size_t>(nstar->n_star) ==
                                                mc.shape.argmin}};
  }
  return j;
}

}  // namespace rulebench

#endif  // RULEBENCH_SIM_SIM_IO_HPP
