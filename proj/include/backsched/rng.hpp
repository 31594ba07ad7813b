#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string_view>

namespace backsched {

/// Counter-based pseudo-random generator (SplitMix64 core).
///
/// Every consumer in the library derives its own stream from one root seed,
/// so adding or reordering consumers never perturbs another stream's draws.
/// The full generator position is a single 64-bit word, which makes
/// checkpointing bit-exact.
class Rng {
 public:
  Rng() : Rng(0, 0) {}
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(mix(seed + kGamma * (stream + 1))) {}

  /// Derives an independent child generator; `tag` distinguishes children.
  Rng split(std::uint64_t tag) const {
    Rng child;
    child.state_ = mix(state_ + kGamma * (tag + 0x9E37U));
    return child;
  }

  /// Named stream ids used across the library (one root seed feeds them all).
  enum Stream : std::uint64_t {
    kInitActor = 1,
    kInitCritic = 2,
    kExplore = 3,
    kSample = 4,
    kEval = 5,
    kAttack = 6,
  };

  std::uint64_t next_u64() {
    state_ += kGamma;
    return mix(state_);
  }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n), n > 0. Multiply-shift, bias below 2^-64.
  int uniform_int(int n) {
    return static_cast<int>(
        (static_cast<unsigned __int128>(next_u64()) * static_cast<std::uint64_t>(n)) >> 64);
  }

  /// Standard normal via Box-Muller. Always consumes exactly two draws, so
  /// the generator position alone captures the distribution state.
  double normal() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    return r * std::cos(2.0 * std::numbers::pi * u2);
  }

  std::uint64_t position() const { return state_; }
  void set_position(std::uint64_t s) { state_ = s; }

  friend bool operator==(const Rng&, const Rng&) = default;

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
};

}  // namespace backsched
