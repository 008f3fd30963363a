#pragma once

#include <string>
#include <vector>

#include "evograph/verify.hpp"

namespace evograph {

// Parameter-region sweep over (b, c) at a = 1, d = 0, one outcome code per
// grid cell:
//   -1 inadmissible cell
//    0 no homogeneous attractor (and no coexistence band under seq)
//    1 full defection attractive only
//    2 full cooperation attractive only
//    3 both homogeneous states attractive
// and for the sequential order additionally
//    4 coexistence attractor of threshold states (integer threshold)
//    5 attractive cycle through the two threshold weights (fractional)
struct SweepSpec {
  int n = 5;
  bool sequential = false;
  int b_cells = 20, c_cells = 20;
  Rational b_lo{-1}, b_hi{1};
  Rational c_lo{0}, c_hi{2};
  bool exact = false;  // cross-check every cell's claims by brute force
  int max_n = 20;
};

struct SweepResult {
  std::string csv;                      // "# legend" comments then b,c,code rows
  std::vector<std::string> mismatches;  // exact-mode disagreements (expect none)
  bool ok() const { return mismatches.empty(); }
};

SweepResult sweep_region(const SweepSpec& spec);

}  // namespace evograph
