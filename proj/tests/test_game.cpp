#include <doctest.h>

#include <random>

#include "evograph/game.hpp"

using namespace evograph;

namespace {

PayoffParams params(const char* a, const char* b, const char* c, const char* d) {
  return {Rational::parse(a), Rational::parse(b), Rational::parse(c), Rational::parse(d)};
}

const PayoffParams kHd = params("1", "0.88", "1.74", "0");

}  // namespace

TEST_CASE("scenario classification") {
  CHECK(classify(kHd).scenario == Scenario::HawkDove);
  CHECK(classify(params("1", "0.5", "0.8", "0")).scenario == Scenario::FullCooperation);
  CHECK(classify(params("1", "-0.5", "1.5", "0")).scenario == Scenario::PrisonersDilemma);
  CHECK(classify(params("1", "-0.5", "0.8", "0")).scenario == Scenario::StagHunt);
}

TEST_CASE("inadmissible parameters name the first violated assumption") {
  const Classification tie = classify(params("1", "0.5", "0.5", "0"));
  CHECK(!tie.admissible());
  CHECK(tie.violation == "A1: b = c");
  CHECK(classify(params("0", "-1", "1", "0.5")).violation == "A2: a > d fails");
  CHECK(classify(params("1", "0.5", "0.4", "0")).violation == "A3: c > b fails");
  CHECK(classify(params("1", "2", "3", "0")).violation == "A4: a > b fails");
  CHECK(classify(params("3", "1", "2", "2.5")).violation == "A4: c > d fails");
  CHECK(classify(params("-1", "-3", "-2", "-4")).violation == "A5: a > 0 fails");
}

TEST_CASE("every admissible quadruple lies in exactly one scenario") {
  std::mt19937 rng(7);
  int admissible_seen = 0;
  while (admissible_seen < 10000) {
    const auto draw = [&] {
      return Rational(static_cast<int>(rng() % 41) - 20, 1 + static_cast<int>(rng() % 12));
    };
    const PayoffParams p{draw(), draw(), draw(), draw()};
    if (!is_admissible(p)) continue;
    ++admissible_seen;
    int matches = 0;
    if (p.a > p.c && p.c > p.b && p.b > p.d) ++matches;  // FC
    if (p.c > p.a && p.a > p.b && p.b > p.d) ++matches;  // HD
    if (p.a > p.c && p.c > p.d && p.d > p.b) ++matches;  // SH
    if (p.c > p.a && p.a > p.d && p.d > p.b) ++matches;  // PD
    REQUIRE(matches == 1);
    const Scenario expected = p.a > p.c ? (p.b > p.d ? Scenario::FullCooperation : Scenario::StagHunt)
                                        : (p.b > p.d ? Scenario::HawkDove : Scenario::PrisonersDilemma);
    REQUIRE(classify(p).scenario == expected);
  }
}

TEST_CASE("normalization maps onto a=1, d=0 and is inverted by denormalize") {
  const PayoffParams p = params("3", "1", "2", "-1");
  const PayoffParams normalized = normalize(p);
  CHECK(normalized == params("1", "0.5", "0.75", "0"));
  CHECK(normalize(normalized) == normalized);
  CHECK(denormalize(normalized, p.a, p.d) == p);
  CHECK_THROWS_AS(normalize(params("2", "1", "3", "2")), std::domain_error);
}

TEST_CASE("normalization preserves the scenario") {
  std::mt19937 rng(11);
  int checked = 0;
  while (checked < 2000) {
    const auto draw = [&] {
      return Rational(static_cast<int>(rng() % 41) - 20, 1 + static_cast<int>(rng() % 12));
    };
    const PayoffParams p{draw(), draw(), draw(), draw()};
    if (!is_admissible(p)) continue;
    ++checked;
    REQUIRE(classify(normalize(p)).scenario == classify(p).scenario);
  }
}

TEST_CASE("aggregate utilities on the triangle") {
  const Graph k3 = make_complete(3);
  const auto u = utility(k3, kHd, UtilityKind::Aggregate, config_from_string("100"));
  CHECK(u[0] == Rational::parse("1.76"));
  CHECK(u[1] == Rational::parse("1.74"));
  CHECK(u[2] == Rational::parse("1.74"));
}

TEST_CASE("all-cooperate utility is a times the degree") {
  const Graph w6 = make_wheel(6);
  const auto u = utility(w6, kHd, UtilityKind::Aggregate, all_cooperate(6));
  for (int i = 1; i <= 6; ++i) CHECK(u[static_cast<std::size_t>(i - 1)] == Rational(w6.degree(i)));
}

TEST_CASE("a defector surrounded by three cooperators on a cubic graph") {
  const Graph k4 = make_complete(4);
  const auto u = utility(k4, kHd, UtilityKind::Aggregate, config_from_string("1110"));
  CHECK(u[3] == Rational::parse("5.22"));
}

TEST_CASE("mean utility divides by the degree") {
  const Graph w6 = make_wheel(6);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const config_t x = rng() % (config_t{1} << 6);
    const auto agg = utility(w6, kHd, UtilityKind::Aggregate, x);
    const auto mean = utility(w6, kHd, UtilityKind::Mean, x);
    for (int i = 1; i <= 6; ++i)
      CHECK(mean[static_cast<std::size_t>(i - 1)] ==
            agg[static_cast<std::size_t>(i - 1)] / Rational(w6.degree(i)));
  }
}

TEST_CASE("isolated vertices are rejected for both utility kinds") {
  Graph g(3);
  g.add_edge(1, 2);
  CHECK_THROWS_AS(utility(g, kHd, UtilityKind::Aggregate, 0), std::domain_error);
  CHECK_THROWS_AS(utility(g, kHd, UtilityKind::Mean, 0), std::domain_error);
}

TEST_CASE("interior threshold values") {
  const auto m = interior_threshold(params("1", "0.8", "1.5", "0"), 5);
  REQUIRE(m.has_value());
  CHECK(*m == Rational(30, 13));

  // When n = 1 + (c-d)/(b-d) the singleton-cooperator utilities tie, m* = 1.
  const auto boundary = interior_threshold(params("1", "0.3", "0.6", "0"), 3);
  REQUIRE(boundary.has_value());
  CHECK(*boundary == Rational(1));

  // Vanishing denominator (c-a) + (b-d) = 0.
  CHECK(!interior_threshold(params("1", "0.25", "0.75", "0"), 4).has_value());
  CHECK_THROWS_AS(interior_threshold(kHd, 2), std::domain_error);
}

TEST_CASE("complete-graph utility gap is affine in the cooperator count") {
  const std::vector<PayoffParams> points = {kHd, params("1", "0.8", "1.5", "0"),
                                            params("3", "1", "2", "-1")};
  for (const auto& p : points) {
    for (int n = 3; n <= 9; ++n) {
      const Rational g1 = complete_utility_gap(p, n, 1);
      const Rational g2 = complete_utility_gap(p, n, 2);
      const Rational slope = g2 - g1;
      for (int m = 1; m < n; ++m)
        CHECK(complete_utility_gap(p, n, m) == g1 + slope * Rational(m - 1));
    }
  }
}

TEST_CASE("threshold fraction approaches the static mixed point as n grows") {
  const PayoffParams p = kHd;  // c > a and b > d keep the denominator positive
  const Rational limit = (p.d - p.b) / ((p.a - p.c) + (p.d - p.b));
  for (const int n : {10, 100, 10000}) {
    const Rational ratio = *interior_threshold(p, n) / Rational(n);
    CHECK(ratio - limit == -(p.a - p.d) / (Rational(n) * ((p.c - p.a) + (p.b - p.d))));
  }
}

TEST_CASE("configuration strings round-trip") {
  CHECK(config_from_string("11000") == 0b00011);
  CHECK(config_to_string(0b00011, 5) == "11000");
  CHECK(config_from_string("0") == 0);
  CHECK_THROWS_AS(config_from_string("10x"), parse_error);
  CHECK_THROWS_AS(config_from_string(""), parse_error);
}
