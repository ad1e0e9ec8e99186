#pragma once
// Deterministic random streams.
//
// Every random decision in the project flows through a Stream derived from an
// EpisodeSeed plus a string label.  Two streams with different labels are
// computationally independent; the same (seed, label) always replays the same
// draws, which is what makes episodes byte-reproducible across runs and
// platforms.  The generator is SplitMix64: a 64-bit counter passed through a
// fixed avalanche finalizer, so stream state is a single u64 and derivation
// is just hashing.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rulebench {

inline constexpr const char* kGeneratorVersion = "1.0.0";
inline constexpr const char* kRngAlgorithm = "splitmix64";

namespace detail {

// SplitMix64 finalizer (Steele, Lea, Flood 2014 / Stafford mix13).
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

}  // namespace detail

class Stream {
 public:
  explicit Stream(std::uint64_t state) : state_(state) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return detail::mix64(state_);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [lo, hi], both ends inclusive.  Rejection keeps the
  // distribution exact for any span.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next_u64());  // full 64-bit range
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % span;
    std::uint64_t draw;
    do {
      draw = next_u64();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % span);
  }

  // Standard normal via Box-Muller.  One value per call; the paired value is
  // discarded so draw counts stay easy to reason about.
  double next_normal() {
    double u1;
    do {
      u1 = next_double();
    } while (u1 <= 0.0);
    const double u2 = next_double();
    const double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

  // Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j =
          static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(i) - 1));
      using std::swap;
      swap(v[i - 1], v[j]);
    }
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    if (v.empty()) throw std::invalid_argument("pick: empty vector");
    return v[static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(v.size()) - 1))];
  }

 private:
  std::uint64_t state_;
};

// Identity of one generated episode.  config_index selects the rule
// combination (see enumerate_rule_combinations); generator_version and
// rng_algorithm are recorded so serialized episodes are self-describing.
struct EpisodeSeed {
  std::uint64_t master_seed = 0;
  std::uint32_t config_index = 0;
  std::string generator_version = kGeneratorVersion;
  std::string rng_algorithm = kRngAlgorithm;

  friend bool operator==(const EpisodeSeed&, const EpisodeSeed&) = default;
};

// Derives an independent stream for one purpose within an episode.  The label
// names the purpose ("board", "schedule", "obs/3", ...); requiring it to be
// non-empty keeps accidental stream reuse from compiling into silence.
inline Stream derive_stream(const EpisodeSeed& seed, std::string_view label) {
  if (label.empty()) throw std::invalid_argument("derive_stream: label must be non-empty");
  std::uint64_t h = detail::mix64(seed.master_seed ^ 0x243f6a8885a308d3ULL);
  h = detail::mix64(h ^ seed.config_index);
  for (const unsigned char c : label) h = detail::mix64(h ^ c);
  return Stream(h);
}

}  // namespace rulebench
