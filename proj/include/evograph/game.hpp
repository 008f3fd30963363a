#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evograph/graph.hpp"
#include "evograph/rational.hpp"

namespace evograph {

// A strategy configuration as a bit vector: bit i-1 is the state of vertex i,
// 1 = cooperate, 0 = defect.
using config_t = std::uint64_t;

config_t config_from_string(std::string_view bits);          // "11000", leftmost = vertex 1
std::string config_to_string(config_t x, int n);
inline config_t all_defect(int) { return 0; }
inline config_t all_cooperate(int n) {
  return n == 64 ? ~config_t{0} : (config_t{1} << n) - 1;
}
inline int cooperator_count(config_t x) { return __builtin_popcountll(x); }

// Payoffs to the row player: a = CC, b = CD, c = DC, d = DD.
struct PayoffParams {
  Rational a, b, c, d;

  friend bool operator==(const PayoffParams&, const PayoffParams&) = default;
  std::string to_string() const;
};

// Admissibility assumptions on the payoff quadruple:
//   (A1) pairwise distinct, (A2) a > d, (A3) c > b,
//   (A4) a > b and c > d,   (A5) a > 0 and c > 0.
// Returns a description of the first violated assumption, nothing when
// admissible.
std::optional<std::string> admissibility_violation(const PayoffParams& p);
inline bool is_admissible(const PayoffParams& p) { return !admissibility_violation(p); }

enum class Scenario { FullCooperation, HawkDove, StagHunt, PrisonersDilemma };
const char* scenario_tag(Scenario s);   // "FC", "HD", "SH", "PD"
const char* scenario_name(Scenario s);

struct Classification {
  std::optional<Scenario> scenario;   // set iff admissible
  std::string violation;              // first violated assumption otherwise
  bool admissible() const { return scenario.has_value(); }
};

// Every admissible quadruple falls into exactly one scenario:
//   FC: a>c>b>d,  HD: c>a>b>d,  SH: a>c>d>b,  PD: c>a>d>b.
Classification classify(const PayoffParams& p);

// Affine rescaling onto a~ = 1, d~ = 0; requires a != d.  The inverse map
// recovers arbitrary payoffs from a normalized quadruple.
PayoffParams normalize(const PayoffParams& p);
PayoffParams denormalize(const PayoffParams& normalized, const Rational& a, const Rational& d);

enum class UtilityKind { Aggregate, Mean };
const char* utility_kind_name(UtilityKind k);

// Exact per-vertex utilities of configuration x.  Aggregate sums the pairwise
// payoffs against all neighbours; Mean divides by the degree.  Isolated
// vertices are rejected for both kinds.
std::vector<Rational> utility(const Graph& g, const PayoffParams& p, UtilityKind kind, config_t x);

// Utility of a vertex on the complete graph K_n as a function of its own
// state and the total cooperator count m: v1(m) for cooperators, v0(m) for
// defectors.  The gap v1(m) - v0(m) is affine in m.
Rational complete_cooperator_utility(const PayoffParams& p, int n, int m);
Rational complete_defector_utility(const PayoffParams& p, int n, int m);
Rational complete_utility_gap(const PayoffParams& p, int n, int m);

// Interior cooperator-count threshold on K_n,
//   m* = (n(b-d) - (a-d)) / ((c-a) + (b-d)),
// the count at which cooperator and defector utilities coincide.  Empty when
// the denominator vanishes.
std::optional<Rational> interior_threshold(const PayoffParams& p, int n);

}  // namespace evograph
