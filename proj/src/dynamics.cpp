#include "evograph/dynamics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace evograph {

const char* update_rule_name(UpdateRule r) {
  switch (r) {
    case UpdateRule::Imitation: return "imitation";
    case UpdateRule::DeathBirth: return "death-birth";
    case UpdateRule::BirthDeath: return "birth-death";
  }
  return "?";
}

UpdateOrder::UpdateOrder(Kind kind, int n, std::vector<std::uint64_t> blocks)
    : kind_(kind), n_(n), blocks_(std::move(blocks)) {}

UpdateOrder UpdateOrder::synchronous(int n) {
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return UpdateOrder(Kind::Synchronous, n, {all});
}

UpdateOrder UpdateOrder::sequential(int n) {
  std::vector<std::uint64_t> blocks(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(i)] = std::uint64_t{1} << i;
  return UpdateOrder(Kind::Sequential, n, std::move(blocks));
}

UpdateOrder UpdateOrder::periodic_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  if (blocks.empty()) throw std::domain_error("periodic order needs at least one block");
  std::vector<std::uint64_t> masks;
  masks.reserve(blocks.size());
  for (const auto& block : blocks) {
    std::uint64_t mask = 0;
    for (const int v : block) {
      if (v < 1 || v > n)
        throw std::domain_error("order block vertex " + std::to_string(v) + " outside 1.." +
                                std::to_string(n));
      mask |= std::uint64_t{1} << (v - 1);
    }
    masks.push_back(mask);
  }
  return UpdateOrder(Kind::PeriodicBlocks, n, std::move(masks));
}

bool UpdateOrder::non_omitting() const {
  std::uint64_t seen = 0;
  for (const auto mask : blocks_) seen |= mask;
  const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  return seen == all;
}

std::string UpdateOrder::describe() const {
  switch (kind_) {
    case Kind::Synchronous: return "synchronous";
    case Kind::Sequential: return "sequential";
    case Kind::PeriodicBlocks: {
      std::string out = "blocks:";
      for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) out += ";";
        bool first = true;
        for (int v = 0; v < n_; ++v)
          if ((blocks_[b] >> v) & 1) {
            if (!first) out += ",";
            out += std::to_string(v + 1);
            first = false;
          }
      }
      return out;
    }
  }
  return "?";
}

namespace {

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  std::int64_t result = 0;
  if (__builtin_mul_overflow(a / g, b, &result))
    throw std::overflow_error("payoff denominators too large for exact evaluation");
  return result;
}

// Guard so that |factor * (payoff_scaled * degree)| stays far below the
// 128-bit range; comparisons of scores never overflow.
void check_score_bounds(int128 scaled_payoff_max, int128 factor_max, int degree_max) {
  const int128 limit = int128(1) << 120;
  if (scaled_payoff_max > 0 && factor_max > 0 && degree_max > 0) {
    if (scaled_payoff_max > limit / factor_max / degree_max)
      throw std::overflow_error("payoff magnitudes too large for exact evaluation");
  }
}

}  // namespace

Game::Game(Graph graph, PayoffParams params, UtilityKind kind)
    : graph_(std::move(graph)), params_(std::move(params)), kind_(kind) {
  const int n = graph_.order();
  if (n < 2) throw std::domain_error("evolutionary games need at least two vertices");
  std::int64_t denom = 1;
  for (const Rational* r : {&params_.a, &params_.b, &params_.c, &params_.d})
    denom = lcm_checked(denom, r->den());
  const auto scaled = [&](const Rational& r) {
    return int128(r.num()) * (denom / r.den());
  };
  pa_ = scaled(params_.a);
  pb_ = scaled(params_.b);
  pc_ = scaled(params_.c);
  pd_ = scaled(params_.d);

  std::int64_t degree_lcm = 1;
  int degree_max = 0;
  for (int i = 1; i <= n; ++i) {
    const int deg = graph_.degree(i);
    if (deg == 0)
      throw std::domain_error("vertex " + std::to_string(i) +
                              " is isolated; evolutionary games need degree >= 1");
    degree_max = std::max(degree_max, deg);
    if (kind_ == UtilityKind::Mean) degree_lcm = lcm_checked(degree_lcm, deg);
  }

  per_vertex_.resize(static_cast<std::size_t>(n));
  int128 factor_max = 1;
  for (int i = 0; i < n; ++i) {
    VertexData& vd = per_vertex_[static_cast<std::size_t>(i)];
    vd.mask = graph_.neighbor_mask(i + 1);
    vd.degree = graph_.degree(i + 1);
    vd.factor = kind_ == UtilityKind::Mean ? int128(degree_lcm / vd.degree) : int128(1);
    factor_max = std::max(factor_max, vd.factor);
  }

  int128 payoff_max = 0;
  for (const int128 v : {pa_, pb_, pc_, pd_}) payoff_max = std::max(payoff_max, v < 0 ? -v : v);
  check_score_bounds(payoff_max, factor_max, degree_max);
}

namespace {

struct BestStates {
  int128 best;
  bool has_defect;
  bool has_cooperate;
  bool tie() const { return has_defect && has_cooperate; }
  int state() const { return has_cooperate ? 1 : 0; }
};

// Maximum score over the closed neighbourhood of v0 and the set of states
// attaining it.
BestStates closed_neighborhood_best(const std::vector<int128>& scores, std::uint64_t mask,
                                    config_t x, int v0) {
  BestStates out{scores[static_cast<std::size_t>(v0)], false, false};
  ((x >> v0) & 1 ? out.has_cooperate : out.has_defect) = true;
  std::uint64_t row = mask;
  while (row) {
    const int w = __builtin_ctzll(row);
    row &= row - 1;
    const int128 s = scores[static_cast<std::size_t>(w)];
    if (s > out.best) {
      out.best = s;
      out.has_defect = out.has_cooperate = false;
    }
    if (s == out.best) ((x >> w) & 1 ? out.has_cooperate : out.has_defect) = true;
  }
  return out;
}

}  // namespace

std::vector<int> candidate_set(const Game& game, config_t x, int vertex) {
  const int n = game.order();
  if (vertex < 1 || vertex > n)
    throw std::domain_error("vertex label " + std::to_string(vertex) + " outside 1.." +
                            std::to_string(n));
  std::vector<int128> scores(static_cast<std::size_t>(n));
  const std::uint64_t mask = game.graph().neighbor_mask(vertex);
  scores[static_cast<std::size_t>(vertex - 1)] = game.score(x, vertex - 1);
  std::uint64_t row = mask;
  while (row) {
    const int w = __builtin_ctzll(row);
    row &= row - 1;
    scores[static_cast<std::size_t>(w)] = game.score(x, w);
  }
  const BestStates best = closed_neighborhood_best(scores, mask, x, vertex - 1);
  std::vector<int> out;
  if (best.has_defect) out.push_back(0);
  if (best.has_cooperate) out.push_back(1);
  return out;
}

config_t step(const Game& game, UpdateRule rule, config_t x, std::uint64_t active) {
  const int n = game.order();
  std::vector<int128> scores(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) scores[static_cast<std::size_t>(v)] = game.score(x, v);

  int128 global_min = scores[0], global_max = scores[0];
  for (int v = 1; v < n; ++v) {
    global_min = std::min(global_min, scores[static_cast<std::size_t>(v)]);
    global_max = std::max(global_max, scores[static_cast<std::size_t>(v)]);
  }

  config_t out = x;
  std::uint64_t pending = active;
  while (pending) {
    const int v = __builtin_ctzll(pending);
    pending &= pending - 1;

    const std::uint64_t mask = game.graph().neighbor_mask(v + 1);
    if (rule == UpdateRule::DeathBirth && scores[static_cast<std::size_t>(v)] != global_min)
      continue;
    if (rule == UpdateRule::BirthDeath) {
      int128 nbhd_max = scores[static_cast<std::size_t>(__builtin_ctzll(mask))];
      std::uint64_t row = mask;
      while (row) {
        const int w = __builtin_ctzll(row);
        row &= row - 1;
        nbhd_max = std::max(nbhd_max, scores[static_cast<std::size_t>(w)]);
      }
      if (nbhd_max != global_max) continue;
    }

    const BestStates best = closed_neighborhood_best(scores, mask, x, v);
    if (best.tie()) continue;
    out = (out & ~(config_t{1} << v)) | (static_cast<config_t>(best.state()) << v);
  }
  return out;
}

config_t step(const Game& game, UpdateRule rule, config_t x) {
  return step(game, rule, x, game.graph().vertex_mask());
}

config_t step_at(const Game& game, UpdateRule rule, const UpdateOrder& order, long t, config_t x) {
  if (t < 0) throw std::domain_error("time must be nonnegative");
  return step(game, rule, x, order.active_mask(t));
}

config_t evolve(const Game& game, UpdateRule rule, const UpdateOrder& order, long t0, config_t x,
                long t) {
  if (t0 < 0 || t < t0) throw std::domain_error("evolution needs 0 <= t0 <= t");
  for (long s = t0; s < t; ++s) x = step_at(game, rule, order, s, x);
  return x;
}

Trajectory trajectory(const Game& game, UpdateRule rule, const UpdateOrder& order, long t0,
                      config_t x, long horizon) {
  if (t0 < 0 || horizon < 0) throw std::domain_error("trajectory needs t0 >= 0 and horizon >= 0");
  Trajectory out;
  out.t0 = t0;
  out.states.push_back(x);

  const int period = order.period();
  std::map<std::pair<config_t, long>, long> seen;  // (state, phase) -> step index
  const auto key = [&](config_t state, long t) {
    return std::make_pair(state, t % period);
  };
  seen[key(x, t0)] = 0;

  for (long i = 1; i <= horizon; ++i) {
    const long t = t0 + i - 1;
    x = step_at(game, rule, order, t, x);
    const auto [it, fresh] = seen.try_emplace(key(x, t + 1), i);
    out.states.push_back(x);
    if (fresh) continue;

    const long first = it->second;
    bool constant = true;
    for (long j = first; j < i && constant; ++j)
      constant = out.states[static_cast<std::size_t>(j)] == x;
    if (constant) {
      out.stop = Trajectory::Stop::Fixed;
      out.event_step = t0 + first;
      out.states.resize(static_cast<std::size_t>(first) + 1);
    } else {
      out.stop = Trajectory::Stop::Cycle;
      out.event_step = t0 + first;
      out.period = i - first;
    }
    return out;
  }
  return out;
}

bool map_dependency_radius_at_most(const Graph& g, int r,
                                   const std::function<config_t(config_t)>& f) {
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
    const config_t fx = f(x);
    for (int j = 0; j < n; ++j) {
      if ((x >> j) & 1) continue;
      config_t diff = fx ^ f(x | (config_t{1} << j));
      while (diff) {
        const int i = __builtin_ctzll(diff);
        diff &= diff - 1;
        if (!((reach[static_cast<std::size_t>(i)] >> j) & 1)) return false;
      }
    }
  }
  return true;
}

}  // namespace evograph
