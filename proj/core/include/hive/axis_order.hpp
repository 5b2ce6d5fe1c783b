#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hive/graph.hpp"
#include "hive/partition.hpp"

namespace hive {

/// Symmetric k x k matrix of inter-group edge counts; the diagonal is zero.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  explicit WeightMatrix(std::size_t k) : k_(k), w_(k * k, 0) {}

  std::size_t size() const { return k_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return w_[i * k_ + j]; }

  /// Sets w_ij and w_ji. Throws HiveError for i == j or a negative weight.
  void set(std::size_t i, std::size_t j, std::int64_t weight);
  void add(std::size_t i, std::size_t j, std::int64_t weight);

  std::int64_t max_weight() const;
  std::int64_t total() const;  // sum over i < j

 private:
  std::size_t k_ = 0;
  std::vector<std::int64_t> w_;
};

/// A candidate cyclic order: `position[axis]` is the axis' place on the circle.
struct AxisOrder {
  std::vector<std::size_t> position;

  static AxisOrder identity(std::size_t k);
  /// Builds the order placing `sequence[p]` at position p.
  static AxisOrder from_sequence(const std::vector<AxisId>& sequence);
  std::vector<AxisId> sequence() const;
  bool is_bijective() const;

  friend bool operator==(const AxisOrder&, const AxisOrder&) = default;
};

WeightMatrix inter_group_weights(const Graph& graph, const Partition& partition);

/// sum_{i<j} w_ij * span(i, j). Throws HiveError on size mismatch.
std::int64_t order_cost(const WeightMatrix& weights, const AxisOrder& order);

/// Rotates axis 0 to position 0 and picks the lexicographically smaller of
/// the sequence and its reflection. Cost-preserving.
AxisOrder canonical_order(const AxisOrder& order);

inline constexpr std::size_t kDefaultBruteForceCap = 8;

/// Exact minimizer over the (k-1)! sequences with axis 0 fixed first; the
/// lexicographically smallest minimizing sequence is returned. Throws
/// HiveError when k exceeds `cap`.
AxisOrder brute_force_order(const WeightMatrix& weights,
                            std::size_t cap = kDefaultBruteForceCap);

struct AnnealSchedule {
  /// Starting temperature; defaults to max_ij w_ij * k.
  std::optional<double> initial_temperature;
  double cooling = 0.995;
  double final_temperature = 1e-3;
  std::size_t restarts = 3;
  /// Swap proposals evaluated per temperature step.
  std::size_t moves_per_step = 1;
};

struct AnnealStats {
  std::int64_t initial_cost = 0;  // cost of the first restart's start state
  std::int64_t best_cost = 0;
  std::size_t proposals = 0;
};

/// Simulated annealing over position swaps with Metropolis acceptance and
/// geometric cooling. Returns the best state seen over all restarts, in
/// canonical form. Deterministic per seed. Requires k >= 2.
AxisOrder anneal_order(const WeightMatrix& weights, std::uint64_t seed,
                       const AnnealSchedule& schedule = {},
                       AnnealStats* stats = nullptr);

/// Brute force up to `threshold` axes, annealing above it.
AxisOrder optimize_axis_order(const WeightMatrix& weights, std::uint64_t seed,
                              std::size_t threshold = kDefaultBruteForceCap,
                              const AnnealSchedule& schedule = {});

}  // namespace hive
