#pragma once

#include <string>
#include <vector>

#include "evograph/analysis.hpp"
#include "evograph/predicates.hpp"

namespace evograph {

// Rational (b, c) grid at fixed bases (a, d); points sit at cell centres so
// open-interval bounds are respected and ties stay generic.
struct GridSpec {
  int b_cells = 20;
  int c_cells = 20;
  Rational b_lo{-1}, b_hi{1};
  Rational c_lo{0}, c_hi{2};
  std::vector<std::pair<Rational, Rational>> bases{{Rational(1), Rational(0)}};
};

// All admissible payoff quadruples of the grid: (1, b, c, 0) run through
// x -> d + (a-d) x for every base (a, d).
std::vector<PayoffParams> admissible_grid(const GridSpec& grid);

struct VerifyIssue {
  PayoffParams params;
  int size = 0;
  std::string note;
};

struct VerifyReport {
  std::string claim;
  std::size_t checks = 0;
  std::vector<VerifyIssue> iff_failures;    // claimed equivalence broken by brute force
  std::vector<VerifyIssue> converse_notes;  // sufficient-only claims: converse violations seen

  bool passed() const { return iff_failures.empty(); }
  std::string summary() const;
};

struct VerifyOptions {
  GridSpec grid;
  std::vector<int> sizes{3, 4, 5, 6, 7, 8};   // n for complete graphs, l for wheels
  std::vector<UtilityKind> kinds{UtilityKind::Aggregate, UtilityKind::Mean};  // wheel claims
  std::vector<Graph> regular_graphs;          // extra instances for the k-regular claim
  int max_n = 20;
};

// Claim catalog.  Every claim pits its closed-form predicate against
// brute-force ground truth over the grid:
//   kn-defection   (alias 4.1)  full defection attractive on K_n, iff
//   kn-cooperation (alias 4.2)  full cooperation attractive on K_n, iff
//   kreg-sufficiency (alias 4.3) sufficient conditions on k-regular graphs
//   seq-singletons (alias 6.1)  sequential order iff; non-omitting sufficiency
//   sync-classification (alias 7.1) nontrivial attractor existence, synchronous
//   seq-classification  (alias 7.2) nontrivial attractor existence, sequential
//   wheel-cooperation   (alias 8.1) full cooperation on wheels, iff
//   wheel-defection     (alias 8.2) full defection on wheels, iff as claimed
std::vector<std::string> claim_names();
std::string canonical_claim(const std::string& name_or_alias);  // throws on unknown
VerifyReport verify_claim(const std::string& name_or_alias, const VerifyOptions& options);

// The periodic two-block order {1,2}, {3,...,n}: non-omitting, and the
// standard witness that the homogeneous conditions are not necessary for
// general non-omitting orders.
UpdateOrder two_block_order(int n);

// All configurations on n vertices whose cooperator count lies in `weights`.
std::vector<config_t> states_with_weight(int n, const std::vector<int>& weights);

}  // namespace evograph
