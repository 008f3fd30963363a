#include "evograph/game.hpp"

#include <bit>

namespace evograph {

config_t config_from_string(std::string_view bits) {
  if (bits.empty() || bits.size() > 62)
    throw parse_error("configuration string must have 1..62 characters", 0);
  config_t x = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      x |= config_t{1} << i;
    else if (bits[i] != '0')
      throw parse_error("configuration characters must be 0 or 1", i);
  }
  return x;
}

std::string config_to_string(config_t x, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i)
    if ((x >> i) & 1) out[static_cast<std::size_t>(i)] = '1';
  return out;
}

std::string PayoffParams::to_string() const {
  return a.to_decimal_string() + "," + b.to_decimal_string() + "," + c.to_decimal_string() + "," +
         d.to_decimal_string();
}

std::optional<std::string> admissibility_violation(const PayoffParams& p) {
  const Rational* v[4] = {&p.a, &p.b, &p.c, &p.d};
  const char* names = "abcd";
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (*v[i] == *v[j])
        return std::string("A1: ") + names[i] + " = " + names[j];
  if (!(p.a > p.d)) return "A2: a > d fails";
  if (!(p.c > p.b)) return "A3: c > b fails";
  if (!(p.a > p.b)) return "A4: a > b fails";
  if (!(p.c > p.d)) return "A4: c > d fails";
  if (!(p.a > Rational(0))) return "A5: a > 0 fails";
  if (!(p.c > Rational(0))) return "A5: c > 0 fails";
  return std::nullopt;
}

const char* scenario_tag(Scenario s) {
  switch (s) {
    case Scenario::FullCooperation: return "FC";
    case Scenario::HawkDove: return "HD";
    case Scenario::StagHunt: return "SH";
    case Scenario::PrisonersDilemma: return "PD";
  }
  return "?";
}

const char* scenario_name(Scenario s) {
  switch (s) {
    case Scenario::FullCooperation: return "full cooperation";
    case Scenario::HawkDove: return "hawk and dove";
    case Scenario::StagHunt: return "stag hunt";
    case Scenario::PrisonersDilemma: return "prisoner's dilemma";
  }
  return "?";
}

Classification classify(const PayoffParams& p) {
  if (auto violated = admissibility_violation(p)) return {std::nullopt, *violated};
  // Admissibility pins b,d below a,c; the scenario is the relative order of
  // the remaining two pairs.
  const bool a_top = p.a > p.c;
  const bool b_mid = p.b > p.d;
  if (a_top && b_mid) return {Scenario::FullCooperation, {}};
  if (!a_top && b_mid) return {Scenario::HawkDove, {}};
  if (a_top) return {Scenario::StagHunt, {}};
  return {Scenario::PrisonersDilemma, {}};
}

PayoffParams normalize(const PayoffParams& p) {
  if (p.a == p.d) throw std::domain_error("normalization requires a != d");
  const Rational span = p.a - p.d;
  const auto map = [&](const Rational& x) { return (x - p.d) / span; };
  return {map(p.a), map(p.b), map(p.c), map(p.d)};
}

PayoffParams denormalize(const PayoffParams& normalized, const Rational& a, const Rational& d) {
  const Rational span = a - d;
  const auto map = [&](const Rational& x) { return d + span * x; };
  return {map(normalized.a), map(normalized.b), map(normalized.c), map(normalized.d)};
}

const char* utility_kind_name(UtilityKind k) {
  return k == UtilityKind::Aggregate ? "aggregate" : "mean";
}

std::vector<Rational> utility(const Graph& g, const PayoffParams& p, UtilityKind kind,
                              config_t x) {
  const int n = g.order();
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const int deg = g.degree(i);
    if (deg == 0)
      throw std::domain_error("vertex " + std::to_string(i) + " is isolated; utilities need degree >= 1");
    const int coop = std::popcount(g.neighbor_mask(i) & x);
    const int defect = deg - coop;
    const bool self = (x >> (i - 1)) & 1;
    Rational u = self ? p.a * coop + p.b * defect : p.c * coop + p.d * defect;
    if (kind == UtilityKind::Mean) u /= Rational(deg);
    out[static_cast<std::size_t>(i - 1)] = u;
  }
  return out;
}

Rational complete_cooperator_utility(const PayoffParams& p, int n, int m) {
  return p.a * (m - 1) + p.b * (n - m);
}

Rational complete_defector_utility(const PayoffParams& p, int n, int m) {
  return p.c * m + p.d * (n - m - 1);
}

Rational complete_utility_gap(const PayoffParams& p, int n, int m) {
  return complete_cooperator_utility(p, n, m) - complete_defector_utility(p, n, m);
}

std::optional<Rational> interior_threshold(const PayoffParams& p, int n) {
  if (n < 3) throw std::domain_error("interior threshold needs n >= 3");
  const Rational denom = (p.c - p.a) + (p.b - p.d);
  if (denom.is_zero()) return std::nullopt;
  return (Rational(n) * (p.b - p.d) - (p.a - p.d)) / denom;
}

}  // namespace evograph
