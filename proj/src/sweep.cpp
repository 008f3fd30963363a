#include "evograph/sweep.hpp"

namespace evograph {

namespace {

int cell_code(const PayoffParams& p, int n, bool sequential) {
  if (!is_admissible(p)) return -1;
  const bool defect = full_defection_attractive_complete(p, n);
  const bool coop = full_cooperation_attractive_complete(p, n);
  int code = (defect ? 1 : 0) + (coop ? 2 : 0);
  if (sequential && code == 0 && sequential_coexistence_band(p, n)) {
    const Rational threshold = *interior_threshold(p, n);
    code = threshold.is_integer() ? 4 : 5;
  }
  return code;
}

// Brute-force verification of what a cell code asserts about the two
// homogeneous states and, for codes 4/5, the threshold band.
std::string check_cell(const PayoffParams& p, int n, bool sequential, int code, int max_n) {
  const Graph g = make_complete(n);
  const Game game(g, p, UtilityKind::Aggregate);
  const UpdateOrder order = sequential ? UpdateOrder::sequential(n) : UpdateOrder::synchronous(n);
  const bool defect =
      is_attractor(game, UpdateRule::Imitation, order, InvariantSet::single(all_defect(n), order.period()))
          .is_attractor();
  const bool coop =
      is_attractor(game, UpdateRule::Imitation, order, InvariantSet::single(all_cooperate(n), order.period()))
          .is_attractor();
  const bool claims_defect = code == 1 || code == 3;
  const bool claims_coop = code == 2 || code == 3;
  if (defect != claims_defect || coop != claims_coop)
    return "homogeneous attractivity differs from code " + std::to_string(code);
  if (code == 4 || code == 5) {
    const Rational threshold = *interior_threshold(p, n);
    // The band keeps the threshold in [2, n-2], so it is positive and the
    // integer division below is a true floor.
    const int lo = static_cast<int>(threshold.num() / threshold.den());
    std::vector<int> weights;
    if (code == 4)
      weights = {lo};
    else
      weights = {lo, lo + 1};
    if (n > max_n) return "";  // band check needs the full table
    const StateMap map = build_state_map(game, UpdateRule::Imitation, order, max_n);
    const auto report =
        is_attractor(map, InvariantSet::uniform(states_with_weight(n, weights), order.period()));
    if (!report.is_attractor()) return "threshold band is not an attractor";
  }
  return "";
}

}  // namespace

SweepResult sweep_region(const SweepSpec& spec) {
  if (spec.b_cells < 1 || spec.c_cells < 1)
    throw std::domain_error("sweep resolution must be positive");
  SweepResult result;
  std::string& csv = result.csv;
  csv += "# evolutionary game outcome sweep, complete graph n=" + std::to_string(spec.n) +
         ", order=" + (spec.sequential ? std::string("seq") : std::string("sync")) +
         ", a=1, d=0\n";
  csv += "# codes: -1 inadmissible, 0 none, 1 defection only, 2 cooperation only, 3 both";
  if (spec.sequential) csv += ", 4 coexistence attractor, 5 attractive cycle";
  csv += "\n";
  csv += "b,c,code\n";
  for (int i = 0; i < spec.b_cells; ++i) {
    const Rational b = spec.b_lo + (spec.b_hi - spec.b_lo) * Rational(2 * i + 1, 2 * spec.b_cells);
    for (int j = 0; j < spec.c_cells; ++j) {
      const Rational c =
          spec.c_lo + (spec.c_hi - spec.c_lo) * Rational(2 * j + 1, 2 * spec.c_cells);
      const PayoffParams p{Rational(1), b, c, Rational(0)};
      const int code = cell_code(p, spec.n, spec.sequential);
      if (spec.exact && code >= 0) {
        const std::string mismatch = check_cell(p, spec.n, spec.sequential, code, spec.max_n);
        if (!mismatch.empty())
          result.mismatches.push_back("b=" + b.to_decimal_string() +
                                      " c=" + c.to_decimal_string() + ": " + mismatch);
      }
      csv += b.to_decimal_string() + "," + c.to_decimal_string() + "," + std::to_string(code) +
             "\n";
    }
  }
  return result;
}

}  // namespace evograph
