#include "evograph/analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>

namespace evograph {

const char* verdict_name(AttractorVerdict v) {
  switch (v) {
    case AttractorVerdict::NotInvariant: return "not-invariant";
    case AttractorVerdict::NotAttracting: return "not-attracting";
    case AttractorVerdict::Attractor: return "attractor";
  }
  return "?";
}

StateMap build_state_map(const Game& game, UpdateRule rule, const UpdateOrder& order, int max_n) {
  const int n = game.order();
  constexpr int kHardCap = 26;
  if (n > max_n || n > kHardCap)
    throw capacity_error("state table for " + std::to_string(n) +
                         " vertices exceeds the enumeration cap (" +
                         std::to_string(std::min(max_n, kHardCap)) + ")");
  StateMap map;
  map.n = n;
  const std::size_t states = std::size_t{1} << n;
  map.next.resize(static_cast<std::size_t>(order.period()));
  for (int p = 0; p < order.period(); ++p) {
    auto& table = map.next[static_cast<std::size_t>(p)];
    table.resize(states);
    const std::uint64_t active = order.active_mask(p);
    for (std::size_t x = 0; x < states; ++x)
      table[x] = static_cast<std::uint32_t>(step(game, rule, static_cast<config_t>(x), active));
  }
  return map;
}

InvariantSet InvariantSet::uniform(std::vector<config_t> states, int period) {
  std::sort(states.begin(), states.end());
  states.erase(std::unique(states.begin(), states.end()), states.end());
  InvariantSet set;
  set.sections.assign(static_cast<std::size_t>(period), states);
  return set;
}

InvariantSet InvariantSet::single(config_t state, int period) {
  return uniform({state}, period);
}

bool InvariantSet::time_independent() const {
  for (std::size_t p = 1; p < sections.size(); ++p)
    if (sections[p] != sections[0]) return false;
  return true;
}

bool InvariantSet::contains(int phase, config_t x) const {
  const auto& s = sections[static_cast<std::size_t>(phase)];
  return std::binary_search(s.begin(), s.end(), x);
}

std::size_t InvariantSet::total_states() const {
  std::size_t total = 0;
  for (const auto& s : sections) total += s.size();
  return total;
}

SystemView view(const StateMap& map) {
  return {map.n, map.period(),
          [&map](int phase, config_t x) { return map.step(phase, x); }};
}

SystemView view(const Game& game, UpdateRule rule, const UpdateOrder& order) {
  return {game.order(), order.period(),
          [&game, rule, &order](int phase, config_t x) {
            return step(game, rule, x, order.active_mask(phase));
          }};
}

namespace {

// Expands a single-section set over the system period; the family of a
// time-independent set has identical sections at every phase.
InvariantSet aligned(const InvariantSet& set, int period) {
  if (set.period() == period) return set;
  if (set.period() == 1) {
    InvariantSet out;
    out.sections.assign(static_cast<std::size_t>(period), set.sections[0]);
    return out;
  }
  throw std::domain_error("invariant set period does not match the system period");
}

std::optional<std::string> invariance_failure(const SystemView& system, const InvariantSet& set) {
  const int period = system.period;
  for (int p = 0; p < period; ++p) {
    const auto& section = set.sections[static_cast<std::size_t>(p)];
    std::vector<config_t> image;
    image.reserve(section.size());
    for (const config_t x : section) image.push_back(system.step(p, x));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (image != set.sections[static_cast<std::size_t>((p + 1) % period)])
      return "the image of section " + std::to_string(p) + " is not section " +
             std::to_string((p + 1) % period);
  }
  return std::nullopt;
}

}  // namespace

AttractorReport is_attractor(const SystemView& system, const InvariantSet& raw) {
  AttractorReport report;
  report.set = aligned(raw, system.period);
  const InvariantSet& set = report.set;
  if (set.total_states() == 0) throw std::domain_error("attractor check needs a nonempty set");

  if (auto why = invariance_failure(system, set)) {
    report.verdict = AttractorVerdict::NotInvariant;
    report.detail = *why;
    return report;
  }

  report.verdict = AttractorVerdict::Attractor;
  const int period = system.period;
  for (int p = 0; p < period; ++p) {
    std::set<config_t> probes;
    for (const config_t x : set.sections[static_cast<std::size_t>(p)]) {
      probes.insert(x);
      for (int bit = 0; bit < system.n; ++bit) probes.insert(x ^ (config_t{1} << bit));
    }
    for (const config_t start : probes) {
      HittingWitness witness;
      witness.phase = p;
      witness.state = start;
      config_t x = start;
      int phase = p;
      long t = 0;
      std::set<std::pair<config_t, int>> visited;
      while (true) {
        if (set.contains(phase, x)) {
          witness.attracted = true;
          witness.hitting_time = t;
          break;
        }
        if (!visited.insert({x, phase}).second) break;  // revisit: never enters
        x = system.step(phase, x);
        phase = (phase + 1) % period;
        ++t;
      }
      if (!witness.attracted) {
        report.verdict = AttractorVerdict::NotAttracting;
        report.detail = "state " + config_to_string(witness.state, system.n) + " at phase " +
                        std::to_string(p) + " never enters the set";
      }
      report.max_hitting_time = std::max(report.max_hitting_time,
                                         witness.attracted ? witness.hitting_time : 0);
      report.witnesses.push_back(witness);
    }
  }
  return report;
}

AttractorReport is_attractor(const StateMap& map, const InvariantSet& set) {
  return is_attractor(view(map), set);
}

AttractorReport is_attractor(const Game& game, UpdateRule rule, const UpdateOrder& order,
                             const InvariantSet& set) {
  return is_attractor(view(game, rule, order), set);
}

std::vector<config_t> fixed_points(const StateMap& map) {
  std::vector<config_t> out;
  const std::size_t states = map.state_count();
  for (std::size_t x = 0; x < states; ++x) {
    bool fixed = true;
    for (int p = 0; p < map.period() && fixed; ++p)
      fixed = map.step(p, static_cast<config_t>(x)) == static_cast<config_t>(x);
    if (fixed) out.push_back(static_cast<config_t>(x));
  }
  return out;
}

namespace {

// Functional graph over (phase, state) nodes with its cycles, and for every
// node the cycle its orbit ends in.
struct LiftedGraph {
  int n = 0;
  int period = 1;
  std::size_t states = 0;
  std::vector<std::uint32_t> next;      // node -> node
  std::vector<std::int32_t> cycle_of;   // node -> terminal cycle id
  std::vector<char> on_cycle;
  std::vector<Orbit> orbits;

  std::size_t node(int phase, config_t x) const {
    return static_cast<std::size_t>(phase) * states + static_cast<std::size_t>(x);
  }
  int phase_of(std::size_t idx) const { return static_cast<int>(idx / states); }
  config_t state_of(std::size_t idx) const { return static_cast<config_t>(idx % states); }
};

LiftedGraph lift(const StateMap& map) {
  LiftedGraph g;
  g.n = map.n;
  g.period = map.period();
  g.states = map.state_count();
  const std::size_t total = g.states * static_cast<std::size_t>(g.period);
  g.next.resize(total);
  for (int p = 0; p < g.period; ++p)
    for (std::size_t x = 0; x < g.states; ++x)
      g.next[g.node(p, static_cast<config_t>(x))] = static_cast<std::uint32_t>(
          g.node((p + 1) % g.period, map.step(p, static_cast<config_t>(x))));

  // Peel non-cycle nodes in topological order; whatever survives lies on a cycle.
  std::vector<std::uint32_t> indegree(total, 0);
  for (const auto to : g.next) ++indegree[to];
  std::deque<std::uint32_t> queue;
  for (std::size_t v = 0; v < total; ++v)
    if (indegree[v] == 0) queue.push_back(static_cast<std::uint32_t>(v));
  std::vector<std::uint32_t> peel_order;
  peel_order.reserve(total);
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop_front();
    peel_order.push_back(v);
    const std::uint32_t w = g.next[v];
    if (--indegree[w] == 0) queue.push_back(w);
  }
  g.on_cycle.assign(total, 1);
  for (const auto v : peel_order) g.on_cycle[v] = 0;

  g.cycle_of.assign(total, -1);
  for (std::size_t v = 0; v < total; ++v) {
    if (!g.on_cycle[v] || g.cycle_of[v] >= 0) continue;
    // Walk the cycle starting from its smallest node.
    std::uint32_t min_node = static_cast<std::uint32_t>(v);
    for (std::uint32_t w = g.next[v]; w != v; w = g.next[w]) min_node = std::min(min_node, w);
    Orbit orbit;
    const std::int32_t id = static_cast<std::int32_t>(g.orbits.size());
    std::uint32_t w = min_node;
    do {
      g.cycle_of[w] = id;
      orbit.nodes.emplace_back(g.phase_of(w), g.state_of(w));
      w = g.next[w];
    } while (w != min_node);
    g.orbits.push_back(std::move(orbit));
  }
  for (auto it = peel_order.rbegin(); it != peel_order.rend(); ++it)
    g.cycle_of[*it] = g.cycle_of[g.next[*it]];
  return g;
}

InvariantSet orbit_union_set(const LiftedGraph& g, const std::vector<int>& ids) {
  InvariantSet set;
  set.sections.assign(static_cast<std::size_t>(g.period), {});
  for (const int id : ids)
    for (const auto& [phase, state] : g.orbits[static_cast<std::size_t>(id)].nodes)
      set.sections[static_cast<std::size_t>(phase)].push_back(state);
  for (auto& section : set.sections) std::sort(section.begin(), section.end());
  return set;
}

}  // namespace

std::vector<Orbit> periodic_orbits(const StateMap& map) {
  return lift(map).orbits;
}

bool AttractorCatalog::has_nontrivial_attractor() const {
  for (const auto& report : attractors)
    if (report.is_attractor() && report.orbit_ids.size() < orbits.size()) return true;
  return false;
}

AttractorCatalog enumerate_attractors(const StateMap& map, const EnumerateOptions& options) {
  const LiftedGraph g = lift(map);
  const int k = static_cast<int>(g.orbits.size());
  AttractorCatalog catalog;
  catalog.orbits = g.orbits;

  if (options.exhaustive && k > options.orbit_cap)
    throw capacity_error("attractor enumeration over " + std::to_string(k) +
                         " orbits exceeds the subset cap " + std::to_string(options.orbit_cap));

  // reach[i]: terminal cycles of every state at Hamming distance <= 1 from
  // orbit i.  A union of orbits is an attractor exactly when it contains the
  // reach of each of its members.
  std::vector<std::set<int>> reach(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    for (const auto& [phase, state] : g.orbits[static_cast<std::size_t>(i)].nodes) {
      reach[static_cast<std::size_t>(i)].insert(
          g.cycle_of[g.node(phase, state)]);  // the orbit itself
      for (int bit = 0; bit < g.n; ++bit)
        reach[static_cast<std::size_t>(i)].insert(
            g.cycle_of[g.node(phase, state ^ (config_t{1} << bit))]);
    }
  }

  const auto closure = [&](int seed) {
    std::set<int> closed{seed};
    std::deque<int> todo{seed};
    while (!todo.empty()) {
      const int i = todo.front();
      todo.pop_front();
      for (const int j : reach[static_cast<std::size_t>(i)])
        if (closed.insert(j).second) todo.push_back(j);
    }
    return std::vector<int>(closed.begin(), closed.end());
  };

  // Minimal attractors are the inclusion-minimal reach-closures.
  std::vector<std::vector<int>> candidates;
  for (int i = 0; i < k; ++i) candidates.push_back(closure(i));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<std::vector<int>> minimal;
  for (const auto& cand : candidates) {
    bool dominated = false;
    for (const auto& other : candidates)
      if (&other != &cand && other.size() < cand.size() &&
          std::includes(cand.begin(), cand.end(), other.begin(), other.end()))
        dominated = true;
    if (!dominated) minimal.push_back(cand);
  }
  candidates = std::move(minimal);

  if (options.exhaustive) {
    // Independent route: scan every orbit subset for the closure property and
    // keep the inclusion-minimal hits; must agree with the closure-derived
    // family.
    std::vector<std::uint32_t> reach_mask(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i)
      for (const int j : reach[static_cast<std::size_t>(i)])
        reach_mask[static_cast<std::size_t>(i)] |= std::uint32_t{1} << j;
    std::vector<std::uint32_t> closed_sets;
    for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << k); ++subset) {
      std::uint32_t reached = 0;
      for (int i = 0; i < k; ++i)
        if ((subset >> i) & 1) reached |= reach_mask[static_cast<std::size_t>(i)];
      if ((reached & ~subset) == 0) closed_sets.push_back(subset);
    }
    std::vector<std::uint32_t> scan_minimal;
    for (const std::uint32_t s : closed_sets) {
      bool dominated = false;
      for (const std::uint32_t t : closed_sets)
        if (t != s && (t & ~s) == 0) dominated = true;
      if (!dominated) scan_minimal.push_back(s);
    }
    std::vector<std::vector<int>> as_ids;
    for (const std::uint32_t s : scan_minimal) {
      std::vector<int> ids;
      for (int i = 0; i < k; ++i)
        if ((s >> i) & 1) ids.push_back(i);
      as_ids.push_back(std::move(ids));
    }
    std::sort(as_ids.begin(), as_ids.end());
    std::vector<std::vector<int>> sorted_candidates = candidates;
    std::sort(sorted_candidates.begin(), sorted_candidates.end());
    if (as_ids != sorted_candidates)
      throw std::logic_error("subset scan and closure enumeration disagree");
  }

  std::vector<int> all_ids(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) all_ids[static_cast<std::size_t>(i)] = i;

  const std::size_t total_nodes = g.states * static_cast<std::size_t>(g.period);
  const auto basin_size = [&](const std::vector<int>& ids) {
    std::vector<char> member(static_cast<std::size_t>(k), 0);
    for (const int id : ids) member[static_cast<std::size_t>(id)] = 1;
    std::size_t count = 0;
    for (std::size_t v = 0; v < total_nodes; ++v)
      if (member[static_cast<std::size_t>(g.cycle_of[v])]) ++count;
    return count;
  };

  const SystemView sys = view(map);
  const auto make_report = [&](const std::vector<int>& ids, bool minimal_flag) {
    AttractorReport report = is_attractor(sys, orbit_union_set(g, ids));
    report.orbit_ids = ids;
    report.minimal = minimal_flag;
    report.basin_states = basin_size(ids);
    return report;
  };

  bool maximal_among_minimal = false;
  for (const auto& cand : candidates) {
    catalog.attractors.push_back(make_report(cand, true));
    if (static_cast<int>(cand.size()) == k) maximal_among_minimal = true;
  }
  if (maximal_among_minimal) {
    catalog.attractors.back().trivial = catalog.attractors.back().is_attractor();
  } else {
    AttractorReport maximal = make_report(all_ids, false);
    maximal.trivial = maximal.is_attractor();
    catalog.attractors.push_back(std::move(maximal));
  }
  return catalog;
}

Basin basin(const StateMap& map, const InvariantSet& raw) {
  const SystemView sys = view(map);
  Basin out;
  out.per_phase.assign(static_cast<std::size_t>(sys.period), {});
  const InvariantSet set = aligned(raw, sys.period);
  if (set.total_states() == 0) return out;
  if (auto why = invariance_failure(sys, set))
    throw std::domain_error("basin of a non-invariant set: " + *why);

  const LiftedGraph g = lift(map);
  std::set<int> ids;
  for (int p = 0; p < g.period; ++p)
    for (const config_t x : set.sections[static_cast<std::size_t>(p)])
      ids.insert(g.cycle_of[g.node(p, x)]);
  for (int p = 0; p < g.period; ++p)
    for (std::size_t x = 0; x < g.states; ++x)
      if (ids.count(g.cycle_of[g.node(p, static_cast<config_t>(x))]))
        out.per_phase[static_cast<std::size_t>(p)].push_back(static_cast<config_t>(x));
  return out;
}

std::size_t Basin::size() const {
  std::size_t total = 0;
  for (const auto& states : per_phase) total += states.size();
  return total;
}

int dist_to_states(config_t x, const std::vector<config_t>& states) {
  if (states.empty()) return -1;
  int best = 64;
  for (const config_t y : states) best = std::min(best, hamming(x, y));
  return best;
}

}  // namespace evograph
