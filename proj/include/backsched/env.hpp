#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace backsched::env {

/// Smallest admissible rescale step. Steps below this would append a
/// zero-length interval and break snapshot positivity.
inline constexpr double kMinStep = 1.0 + 1e-6;
inline constexpr double kMaxStep = 2.0;
inline constexpr double kSimplexTol = 1e-9;

/// State of the backup scheme: the k inter-backup intervals, normalized to
/// fractions of total elapsed time. Components are strictly positive and sum
/// to one.
class Snapshot {
 public:
  Snapshot() = default;

  /// All intervals equal 1/k (the start state of every run).
  static Snapshot uniform(int k);

  /// Validating constructor for externally supplied intervals.
  static Snapshot from_intervals(std::vector<double> intervals);

  int k() const { return static_cast<int>(v_.size()); }
  double operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
  std::span<const double> intervals() const { return v_; }
  double max_interval() const;

  friend bool operator==(const Snapshot&, const Snapshot&) = default;

 private:
  friend Snapshot transition(const Snapshot&, const struct UpdateAction&);
  explicit Snapshot(std::vector<double> v) : v_(std::move(v)) {}
  std::vector<double> v_;
};

/// Hybrid action: overwrite the (device+1)-th oldest backup when the elapsed
/// time has grown by factor `step`. The newest backup (label k-1) is never a
/// legal target.
struct UpdateAction {
  int device = 0;
  double step = kMaxStep;
};

/// Relaxed k-dimensional encoding of an action: components 0..k-2 form a
/// probability vector over devices, the last component is u = step - 1.
struct ActionEncoding {
  std::vector<double> values;

  int k() const { return static_cast<int>(values.size()); }
  double u() const { return values.back(); }
  /// Index of the largest device weight; ties resolve to the lowest index.
  int device_argmax() const;

  static ActionEncoding one_hot(const UpdateAction& a, int k);
};

/// Throws std::invalid_argument unless `a` is admissible for a k-device state.
void validate_action(int k, const UpdateAction& a);

/// Uniform start state; k must be at least 2.
Snapshot new_uniform(int k);

/// Deterministic MDP transition: merge interval `device` with its successor,
/// rescale by `step`, append the new interval (step-1)/step, and renormalize.
Snapshot transition(const Snapshot& s, const UpdateAction& a);

/// Reward scaled to (-lambda, lambda]; maximal exactly at the uniform state.
double reward(const Snapshot& s, double lambda);

enum class DiscrepancyMode {
  kRewardInternal,  ///< k * max interval, the raw ratio inside the reward.
  kReporting,       ///< (k+1) * max interval, the q-value used in reports.
};

/// Discrepancy (q-value) of a snapshot under the chosen convention.
double discrepancy(const Snapshot& s, DiscrepancyMode mode);

}  // namespace backsched::env
