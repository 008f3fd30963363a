#include "evograph/predicates.hpp"

namespace evograph {

namespace {

void require_admissible(const PayoffParams& p) {
  if (auto why = admissibility_violation(p))
    throw std::domain_error("predicate needs admissible parameters: " + *why);
}

void require_size(int value, int minimum, const char* what) {
  if (value < minimum)
    throw std::domain_error(std::string(what) + " must be at least " + std::to_string(minimum));
}

}  // namespace

bool full_defection_attractive_complete(const PayoffParams& p, int n) {
  require_admissible(p);
  require_size(n, 3, "complete graph order");
  // b < d, or n < 1 + (c-d)/(b-d); cross-multiplied to stay division free.
  return p.b < p.d || Rational(n - 1) * (p.b - p.d) < p.c - p.d;
}

bool full_cooperation_attractive_complete(const PayoffParams& p, int n) {
  require_admissible(p);
  require_size(n, 3, "complete graph order");
  // a > c and n > 1 + (a-b)/(a-c).
  return p.a > p.c && Rational(n - 1) * (p.a - p.c) > p.a - p.b;
}

bool full_defection_sufficient_regular(const PayoffParams& p, int k) {
  require_admissible(p);
  require_size(k, 2, "regularity degree");
  return Rational(k) * (p.b - p.d) < p.c - p.d;
}

bool full_cooperation_sufficient_regular(const PayoffParams& p, int k) {
  require_admissible(p);
  require_size(k, 2, "regularity degree");
  return Rational(k) * (p.a - p.c) > p.a - p.b;
}

bool nontrivial_attractor_sync_complete(const PayoffParams& p, int n) {
  return full_defection_attractive_complete(p, n) || full_cooperation_attractive_complete(p, n);
}

bool sequential_coexistence_band(const PayoffParams& p, int n) {
  require_admissible(p);
  require_size(n, 4, "complete graph order");
  const Rational slope = (p.c - p.a) + (p.b - p.d);
  if (!(slope > Rational(0))) return false;
  const Rational threshold = *interior_threshold(p, n);
  return Rational(2) <= threshold && threshold <= Rational(n - 2);
}

bool nontrivial_attractor_seq_complete(const PayoffParams& p, int n) {
  return full_defection_attractive_complete(p, n) || full_cooperation_attractive_complete(p, n) ||
         sequential_coexistence_band(p, n);
}

bool full_cooperation_attractive_wheel(const PayoffParams& p, int l, UtilityKind kind) {
  require_admissible(p);
  require_size(l, 4, "wheel order");
  const Rational rim = Rational(2) * p.a + p.b;
  return kind == UtilityKind::Aggregate ? Rational(l - 1) * p.c < rim
                                        : Rational(3) * p.c < rim;
}

bool full_defection_attractive_wheel(const PayoffParams& p, int l, UtilityKind kind) {
  require_admissible(p);
  require_size(l, 4, "wheel order");
  const Rational rim = Rational(2) * p.d + p.c;
  return kind == UtilityKind::Aggregate ? Rational(l - 1) * p.a < rim
                                        : Rational(3) * p.a < rim;
}

}  // namespace evograph
