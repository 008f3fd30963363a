#pragma once

#include "evograph/game.hpp"

namespace evograph {

// Closed-form attractivity conditions, evaluated exactly.  Every predicate
// requires admissible parameters (std::domain_error otherwise) and a size at
// or above the minimum of the corresponding statement.
//
// On the complete graph K_n the homogeneous states are attractive exactly
// under a size threshold:
//   full defection:   b < d  or  n < 1 + (c-d)/(b-d)
//   full cooperation: a > c  and n > 1 + (a-b)/(a-c)
bool full_defection_attractive_complete(const PayoffParams& p, int n);
bool full_cooperation_attractive_complete(const PayoffParams& p, int n);

// On k-regular graphs the analogous conditions are sufficient only:
//   full defection:   k(b-d) < c-d
//   full cooperation: k(a-c) > a-b
bool full_defection_sufficient_regular(const PayoffParams& p, int k);
bool full_cooperation_sufficient_regular(const PayoffParams& p, int k);

// Existence of a nontrivial attractor on K_n under the synchronous order:
// either homogeneous condition holds.
bool nontrivial_attractor_sync_complete(const PayoffParams& p, int n);

// Existence under the sequential order: additionally the coexistence band
// m* in [2, n-2] with c-a+b-d > 0.
bool sequential_coexistence_band(const PayoffParams& p, int n);
bool nontrivial_attractor_seq_complete(const PayoffParams& p, int n);

// Wheel W_l conditions (hub degree l-1, rim degree 3):
//   full cooperation: c < (2a+b)/(l-1)  aggregate,  c < (2a+b)/3  mean
//   full defection:   a < (2d+c)/(l-1)  aggregate,  a < (2d+c)/3  mean
// The full-defection conditions are sufficient but not necessary; the verify
// harness surfaces brute-force counterexamples to the converse.
bool full_cooperation_attractive_wheel(const PayoffParams& p, int l, UtilityKind kind);
bool full_defection_attractive_wheel(const PayoffParams& p, int l, UtilityKind kind);

}  // namespace evograph
