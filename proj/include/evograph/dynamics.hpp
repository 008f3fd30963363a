#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "evograph/game.hpp"
#include "evograph/graph.hpp"

namespace evograph {

enum class UpdateRule { Imitation, DeathBirth, BirthDeath };
const char* update_rule_name(UpdateRule r);

// Periodic schedule T(t) of vertex subsets allowed to update at step t.
// Synchronous updates everything every step; sequential cycles singletons
// {1}, {2}, ..., {n}; arbitrary periodic block lists cover the rest.
class UpdateOrder {
 public:
  enum class Kind { Synchronous, Sequential, PeriodicBlocks };

  static UpdateOrder synchronous(int n);
  static UpdateOrder sequential(int n);
  static UpdateOrder periodic_blocks(int n, const std::vector<std::vector<int>>& blocks);

  Kind kind() const { return kind_; }
  int vertex_count() const { return n_; }
  int period() const { return static_cast<int>(blocks_.size()); }
  std::uint64_t active_mask(long t) const {
    return blocks_[static_cast<std::size_t>(t % period())];
  }
  const std::vector<std::uint64_t>& blocks() const { return blocks_; }

  // Every vertex occurs in some block, hence infinitely often.
  bool non_omitting() const;

  std::string describe() const;

 private:
  UpdateOrder(Kind kind, int n, std::vector<std::uint64_t> blocks);

  Kind kind_;
  int n_;
  std::vector<std::uint64_t> blocks_;
};

// Immutable bundle of graph, payoff parameters and utility kind, with
// precomputed integer-scaled utilities.  Every vertex's utility times a
// fixed positive scale is an exact 128-bit integer, so utility comparisons
// inside the update rules are exact and cheap.  Construction rejects graphs
// with fewer than two vertices or with isolated vertices.
class Game {
 public:
  Game(Graph graph, PayoffParams params, UtilityKind kind);

  const Graph& graph() const { return graph_; }
  const PayoffParams& params() const { return params_; }
  UtilityKind kind() const { return kind_; }
  int order() const { return graph_.order(); }

  // u_i(x) * scale(), scale() > 0 shared by all vertices.
  int128 utility_score(config_t x, int vertex) const {
    return score(x, vertex - 1);
  }

  // Exact unscaled utilities.
  std::vector<Rational> utilities(config_t x) const {
    return utility(graph_, params_, kind_, x);
  }

  int128 score(config_t x, int v0) const {
    const VertexData& vd = per_vertex_[static_cast<std::size_t>(v0)];
    const int coop = __builtin_popcountll(x & vd.mask);
    const int defect = vd.degree - coop;
    const int128 base = (x >> v0) & 1 ? pa_ * coop + pb_ * defect : pc_ * coop + pd_ * defect;
    return vd.factor * base;
  }

 private:
  struct VertexData {
    std::uint64_t mask;
    int degree;
    int128 factor;  // lcm(degrees)/degree for mean utility, 1 for aggregate
  };

  Graph graph_;
  PayoffParams params_;
  UtilityKind kind_;
  int128 pa_, pb_, pc_, pd_;  // payoffs scaled to a common integer grid
  std::vector<VertexData> per_vertex_;
};

// A_i(x): the set of states (subset of {0,1}, sorted) attained by the
// maximum-utility vertices in the closed neighbourhood of i.
std::vector<int> candidate_set(const Game& game, config_t x, int vertex);

// One synchronous step of the chosen rule; all vertices read the same
// pre-step configuration.
config_t step(const Game& game, UpdateRule rule, config_t x);

// One step updating only the vertices in `active`.
config_t step(const Game& game, UpdateRule rule, config_t x, std::uint64_t active);

// One nonautonomous step at time t under the given order.
config_t step_at(const Game& game, UpdateRule rule, const UpdateOrder& order, long t, config_t x);

// The two-parameter process phi(t, t0, x): composition of the one-step maps
// from time t0 up to t.  Requires 0 <= t0 <= t.
config_t evolve(const Game& game, UpdateRule rule, const UpdateOrder& order, long t0, config_t x,
                long t);

struct Trajectory {
  enum class Stop { Horizon, Fixed, Cycle };

  long t0 = 0;
  std::vector<config_t> states;  // x(t0), x(t0+1), ...
  Stop stop = Stop::Horizon;
  long event_step = 0;  // Fixed: first time the resting state occurred; Cycle: first entry
  long period = 0;      // Cycle only

  config_t final_state() const { return states.back(); }
};

// Runs up to `horizon` steps from x at time t0, stopping early once a
// (state, phase) pair repeats.  A repeat with an unchanged state is a
// fixed point, otherwise a genuine cycle.
Trajectory trajectory(const Game& game, UpdateRule rule, const UpdateOrder& order, long t0,
                      config_t x, long horizon);

inline int hamming(config_t x, config_t y) { return __builtin_popcountll(x ^ y); }

// Brute-force check that every component of `values` depends only on states
// within the r-neighbourhood of its vertex: all pairs of configurations
// differing in one coordinate are enumerated.  Capped at 20 vertices.
template <class ValueFn>
bool dependency_radius_at_most(const Graph& g, int r, ValueFn&& values) {
  const int n = g.order();
  if (n > 20) throw capacity_error("dependency radius scan capped at 20 vertices");
  std::vector<std::uint64_t> reach(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    const auto dist = g.distances_from(i);
    for (int j = 0; j < n; ++j)
      if (dist[j] >= 0 && dist[j] <= r) reach[i - 1] |= std::uint64_t{1} << j;
  }
  const config_t total = config_t{1} << n;
  for (config_t x = 0; x < total; ++x) {
    const auto fx = values(x);
    for (int j = 0; j < n; ++j) {
      if ((x >> j) & 1) continue;
      const auto fy = values(x | (config_t{1} << j));
      for (int i = 0; i < n; ++i)
        if (fx[static_cast<std::size_t>(i)] != fy[static_cast<std::size_t>(i)] &&
            !((reach[static_cast<std::size_t>(i)] >> j) & 1))
          return false;
    }
  }
  return true;
}

// Same check for a configuration map, comparing components bitwise.
bool map_dependency_radius_at_most(const Graph& g, int r,
                                   const std::function<config_t(config_t)>& f);

}  // namespace evograph
