#include "hive/axis_order.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hive/layout.hpp"
#include "random.hpp"

namespace hive {

void WeightMatrix::set(std::size_t i, std::size_t j, std::int64_t weight) {
  if (i >= k_ || j >= k_ || i == j) throw HiveError("weight index out of range or diagonal");
  if (weight < 0) throw HiveError("weights must be non-negative");
  w_[i * k_ + j] = weight;
  w_[j * k_ + i] = weight;
}

void WeightMatrix::add(std::size_t i, std::size_t j, std::int64_t weight) {
  set(i, j, (*this)(i, j) + weight);
}

std::int64_t WeightMatrix::max_weight() const {
  return w_.empty() ? 0 : *std::max_element(w_.begin(), w_.end());
}

std::int64_t WeightMatrix::total() const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < k_; ++i) {
    for (std::size_t j = i + 1; j < k_; ++j) sum += (*this)(i, j);
  }
  return sum;
}

AxisOrder AxisOrder::identity(std::size_t k) {
  AxisOrder o;
  o.position.resize(k);
  std::iota(o.position.begin(), o.position.end(), std::size_t{0});
  return o;
}

AxisOrder AxisOrder::from_sequence(const std::vector<AxisId>& sequence) {
  AxisOrder o;
  o.position.assign(sequence.size(), 0);
  for (std::size_t p = 0; p < sequence.size(); ++p) o.position.at(sequence[p]) = p;
  return o;
}

std::vector<AxisId> AxisOrder::sequence() const {
  std::vector<AxisId> seq(position.size(), 0);
  for (AxisId a = 0; a < position.size(); ++a) seq.at(position[a]) = a;
  return seq;
}

bool AxisOrder::is_bijective() const {
  std::vector<bool> used(position.size(), false);
  for (auto p : position) {
    if (p >= used.size() || used[p]) return false;
    used[p] = true;
  }
  return true;
}

WeightMatrix inter_group_weights(const Graph& graph, const Partition& partition) {
  WeightMatrix w(partition.group_count());
  for (const auto& e : graph.edges()) {
    const auto a = partition.group_of(e.u);
    const auto b = partition.group_of(e.v);
    if (a != b) w.add(a, b, 1);
  }
  return w;
}

std::int64_t order_cost(const WeightMatrix& weights, const AxisOrder& order) {
  const std::size_t k = weights.size();
  if (order.position.size() != k) {
    throw HiveError("order_cost: order has " + std::to_string(order.position.size()) +
                    " axes, weights have " + std::to_string(k));
  }
  std::int64_t cost = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      cost += weights(i, j) *
              static_cast<std::int64_t>(cyclic_span(order.position[i], order.position[j], k));
    }
  }
  return cost;
}

AxisOrder canonical_order(const AxisOrder& order) {
  auto seq = order.sequence();
  if (seq.empty()) return order;
  std::rotate(seq.begin(), std::find(seq.begin(), seq.end(), 0u), seq.end());
  auto reflected = seq;
  std::reverse(reflected.begin() + 1, reflected.end());
  return AxisOrder::from_sequence(std::min(seq, reflected));
}

AxisOrder brute_force_order(const WeightMatrix& weights, std::size_t cap) {
  const std::size_t k = weights.size();
  if (k > cap) {
    throw HiveError("brute_force_order: k = " + std::to_string(k) + " exceeds the cap of " +
                    std::to_string(cap));
  }
  if (k <= 2) return AxisOrder::identity(k);
  std::vector<AxisId> seq(k);
  std::iota(seq.begin(), seq.end(), 0u);
  std::vector<AxisId> best_seq = seq;
  auto best = order_cost(weights, AxisOrder::from_sequence(seq));
  while (std::next_permutation(seq.begin() + 1, seq.end())) {
    const auto cost = order_cost(weights, AxisOrder::from_sequence(seq));
    if (cost < best) {
      best = cost;
      best_seq = seq;
    }
  }
  return AxisOrder::from_sequence(best_seq);
}

namespace {

// Cost change when axes x and y trade positions.
std::int64_t swap_delta(const WeightMatrix& w, const std::vector<std::size_t>& pos,
                        AxisId x, AxisId y) {
  const std::size_t k = w.size();
  std::int64_t delta = 0;
  for (AxisId z = 0; z < k; ++z) {
    if (z == x || z == y) continue;
    const auto sx = static_cast<std::int64_t>(cyclic_span(pos[x], pos[z], k));
    const auto sy = static_cast<std::int64_t>(cyclic_span(pos[y], pos[z], k));
    delta += (w(x, z) - w(y, z)) * (sy - sx);
  }
  return delta;
}

}  // namespace

AxisOrder anneal_order(const WeightMatrix& weights, std::uint64_t seed,
                       const AnnealSchedule& schedule, AnnealStats* stats) {
  const std::size_t k = weights.size();
  if (k < 2) throw HiveError("anneal_order: needs at least 2 axes");
  if (!(schedule.cooling > 0.0 && schedule.cooling < 1.0)) {
    throw HiveError("anneal_order: cooling factor must lie in (0, 1)");
  }
  if (!(schedule.final_temperature > 0.0)) {
    throw HiveError("anneal_order: final temperature must be positive");
  }
  if (schedule.initial_temperature && !(*schedule.initial_temperature > 0.0)) {
    throw HiveError("anneal_order: initial temperature must be positive");
  }
  AnnealStats local;
  const double t0 = schedule.initial_temperature.value_or(
      static_cast<double>(weights.max_weight()) * static_cast<double>(k));

  AxisOrder best;
  std::int64_t best_cost = 0;
  const std::size_t restarts = std::max<std::size_t>(schedule.restarts, 1);
  for (std::size_t r = 0; r < restarts; ++r) {
    detail::Rng rng(detail::derive_seed(seed, r));
    std::vector<AxisId> seq(k);
    std::iota(seq.begin(), seq.end(), 0u);
    rng.shuffle(std::span<AxisId>(seq));
    auto current = AxisOrder::from_sequence(seq);
    auto cost = order_cost(weights, current);
    if (r == 0) {
      local.initial_cost = cost;
      best = current;
      best_cost = cost;
    } else if (cost < best_cost) {
      best = current;
      best_cost = cost;
    }

    for (double t = t0; t > schedule.final_temperature; t *= schedule.cooling) {
      for (std::size_t m = 0; m < std::max<std::size_t>(schedule.moves_per_step, 1); ++m) {
        const auto i = static_cast<std::size_t>(rng.below(k));
        auto j = static_cast<std::size_t>(rng.below(k - 1));
        if (j >= i) ++j;
        const auto x = seq[i];
        const auto y = seq[j];
        const auto delta = swap_delta(weights, current.position, x, y);
        ++local.proposals;
        const bool accept =
            delta <= 0 || rng.uniform() < std::exp(-static_cast<double>(delta) / t);
        if (!accept) continue;
        std::swap(seq[i], seq[j]);
        std::swap(current.position[x], current.position[y]);
        cost += delta;
        if (cost < best_cost) {
          best_cost = cost;
          best = current;
        }
      }
    }
  }
  local.best_cost = best_cost;
  if (stats) *stats = local;
  return canonical_order(best);
}

AxisOrder optimize_axis_order(const WeightMatrix& weights, std::uint64_t seed,
                              std::size_t threshold, const AnnealSchedule& schedule) {
  if (weights.size() <= threshold) return brute_force_order(weights, threshold);
  return anneal_order(weights, seed, schedule);
}

}  // namespace hive
