#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "evograph/dynamics.hpp"

namespace evograph {

// Tabulated one-step maps, one table per phase of a periodic order.  The
// product of configurations and phases is the finite functional graph that
// the exhaustive analyses walk.
struct StateMap {
  int n = 0;
  std::vector<std::vector<std::uint32_t>> next;  // next[phase][state]

  int period() const { return static_cast<int>(next.size()); }
  std::size_t state_count() const { return std::size_t{1} << n; }
  config_t step(int phase, config_t x) const {
    return next[static_cast<std::size_t>(phase)][static_cast<std::size_t>(x)];
  }
};

// Tabulates the one-step map for every configuration and phase.  Throws
// capacity_error when the vertex count exceeds max_n (default cap 20;
// opt in to larger tables explicitly).
StateMap build_state_map(const Game& game, UpdateRule rule, const UpdateOrder& order,
                         int max_n = 20);

// A phase-indexed family of configuration sets A(0..T-1); autonomous sets
// have a single section.  Sections are kept sorted and unique.
struct InvariantSet {
  std::vector<std::vector<config_t>> sections;

  static InvariantSet uniform(std::vector<config_t> states, int period = 1);
  static InvariantSet single(config_t state, int period = 1);

  int period() const { return static_cast<int>(sections.size()); }
  bool time_independent() const;
  bool contains(int phase, config_t x) const;
  std::size_t total_states() const;
};

enum class AttractorVerdict { NotInvariant, NotAttracting, Attractor };
const char* verdict_name(AttractorVerdict v);

struct HittingWitness {
  int phase = 0;          // start phase t0
  config_t state = 0;     // probed state with dist(state, A(t0)) <= 1
  bool attracted = false;
  long hitting_time = -1; // steps until the orbit enters A; -1 when it never does
};

struct AttractorReport {
  InvariantSet set;
  AttractorVerdict verdict = AttractorVerdict::NotInvariant;
  std::string detail;                    // populated for negative verdicts
  std::vector<HittingWitness> witnesses; // one per probed (phase, state)
  long max_hitting_time = 0;
  bool minimal = false;   // no proper sub-union of its orbits is an attractor
  bool trivial = false;   // the maximal invariant set, and it attracts
  std::vector<int> orbit_ids;            // set by the enumeration
  std::size_t basin_states = 0;          // set by the enumeration

  bool is_attractor() const { return verdict == AttractorVerdict::Attractor; }
};

// Stepper abstraction so the attractor check runs identically on a
// tabulated map and on a lazily evaluated game (no table needed for
// distance-1 checks on large graphs).
struct SystemView {
  int n = 0;
  int period = 1;
  std::function<config_t(int phase, config_t x)> step;
};

SystemView view(const StateMap& map);
SystemView view(const Game& game, UpdateRule rule, const UpdateOrder& order);

// Verifies invariance exactly (image of each section equals the next), then
// follows the orbit of every state at Hamming distance <= 1 from each
// section until it enters the set or revisits a (state, phase) pair.
AttractorReport is_attractor(const SystemView& system, const InvariantSet& set);
AttractorReport is_attractor(const StateMap& map, const InvariantSet& set);
AttractorReport is_attractor(const Game& game, UpdateRule rule, const UpdateOrder& order,
                             const InvariantSet& set);

// Configurations fixed by every phase map.
std::vector<config_t> fixed_points(const StateMap& map);

// One periodic orbit of the lifted (phase, state) dynamics, listed in step
// order starting from its smallest node.
struct Orbit {
  std::vector<std::pair<int, config_t>> nodes;
  std::size_t length() const { return nodes.size(); }
};

// All cycles of the lifted functional graph (fixed points appear as cycles
// of length `period`, or length 1 for autonomous maps).
std::vector<Orbit> periodic_orbits(const StateMap& map);

struct EnumerateOptions {
  int orbit_cap = 16;       // subset-scan cap; only consulted in exhaustive mode
  bool exhaustive = false;  // additionally run the 2^k subset scan as a cross-check
};

struct AttractorCatalog {
  std::vector<Orbit> orbits;
  std::vector<AttractorReport> attractors;  // minimal attractors, then the maximal set

  const AttractorReport& maximal() const { return attractors.back(); }
  bool has_nontrivial_attractor() const;
};

// Enumerates attractors among unions of periodic orbits (finite invariance
// forces every invariant set to be such a union).  Minimal attractors are the
// inclusion-minimal unions closed under one-bit perturbation reach, computed
// directly; exhaustive mode re-derives them by scanning all 2^k orbit subsets
// (capacity_error above orbit_cap) and cross-checks the two routes.  Each
// reported set is re-verified through is_attractor.
AttractorCatalog enumerate_attractors(const StateMap& map, const EnumerateOptions& options = {});

struct Basin {
  std::vector<std::vector<config_t>> per_phase;  // sorted states per start phase
  std::size_t size() const;
};

// All (start phase, state) whose orbit enters the invariant set.  Throws
// std::domain_error when the set is not invariant.
Basin basin(const StateMap& map, const InvariantSet& set);

// Hamming distance from x to a finite set of states (infinity -> -1 on empty).
int dist_to_states(config_t x, const std::vector<config_t>& states);

}  // namespace evograph
