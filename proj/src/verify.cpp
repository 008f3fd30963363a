#include "evograph/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace evograph {

std::vector<PayoffParams> admissible_grid(const GridSpec& grid) {
  if (grid.b_cells < 1 || grid.c_cells < 1)
    throw std::domain_error("grid resolution must be positive");
  std::vector<PayoffParams> out;
  for (const auto& [base_a, base_d] : grid.bases) {
    const Rational span = base_a - base_d;
    if (!(span > Rational(0))) throw std::domain_error("grid base needs a > d");
    for (int i = 0; i < grid.b_cells; ++i) {
      const Rational b =
          grid.b_lo + (grid.b_hi - grid.b_lo) * Rational(2 * i + 1, 2 * grid.b_cells);
      for (int j = 0; j < grid.c_cells; ++j) {
        const Rational c =
            grid.c_lo + (grid.c_hi - grid.c_lo) * Rational(2 * j + 1, 2 * grid.c_cells);
        const PayoffParams p{base_d + span * Rational(1), base_d + span * b, base_d + span * c,
                             base_d + span * Rational(0)};
        if (is_admissible(p)) out.push_back(p);
      }
    }
  }
  return out;
}

std::string VerifyReport::summary() const {
  std::string out = claim + ": " + (passed() ? "PASS" : "FAIL") + " (" +
                    std::to_string(checks) + " checks";
  if (!iff_failures.empty())
    out += ", " + std::to_string(iff_failures.size()) + " equivalence failures";
  if (!converse_notes.empty())
    out += ", " + std::to_string(converse_notes.size()) + " converse violations noted";
  out += ")";
  return out;
}

UpdateOrder two_block_order(int n) {
  if (n < 3) throw std::domain_error("two-block order needs n >= 3");
  std::vector<int> rest;
  for (int v = 3; v <= n; ++v) rest.push_back(v);
  return UpdateOrder::periodic_blocks(n, {{1, 2}, rest});
}

std::vector<config_t> states_with_weight(int n, const std::vector<int>& weights) {
  std::vector<config_t> out;
  const config_t total = config_t{1} << n;
  for (config_t x = 0; x < total; ++x)
    if (std::find(weights.begin(), weights.end(), cooperator_count(x)) != weights.end())
      out.push_back(x);
  return out;
}

namespace {

bool singleton_attractive(const Graph& g, const PayoffParams& p, UtilityKind kind,
                          const UpdateOrder& order, config_t target) {
  const Game game(g, p, kind);
  return is_attractor(game, UpdateRule::Imitation, order,
                      InvariantSet::single(target, order.period()))
      .is_attractor();
}

std::vector<Graph> default_regular_graphs() {
  std::vector<Graph> graphs;
  for (int n = 4; n <= 7; ++n) graphs.push_back(make_cycle(n));
  graphs.push_back(make_complete(4));
  graphs.push_back(make_complete(5));
  return graphs;
}

void check_iff(VerifyReport& report, const PayoffParams& p, int size, bool predicted,
               bool observed, const std::string& what) {
  ++report.checks;
  if (predicted != observed)
    report.iff_failures.push_back(
        {p, size,
         what + ": predicted " + (predicted ? "attractive" : "not attractive") + ", brute force " +
             (observed ? "attractive" : "not attractive")});
}

void check_sufficient(VerifyReport& report, const PayoffParams& p, int size, bool predicted,
                      bool observed, const std::string& what) {
  ++report.checks;
  if (predicted && !observed)
    report.iff_failures.push_back({p, size, what + ": condition holds but brute force disagrees"});
  else if (!predicted && observed)
    report.converse_notes.push_back({p, size, what + ": attractive although the condition fails"});
}

VerifyReport verify_complete_singletons(const VerifyOptions& options, bool defection) {
  VerifyReport report;
  report.claim = defection ? "kn-defection" : "kn-cooperation";
  for (const PayoffParams& p : admissible_grid(options.grid)) {
    for (const int n : options.sizes) {
      if (n < 3) continue;
      const Graph g = make_complete(n);
      const UpdateOrder sync = UpdateOrder::synchronous(n);
      const bool predicted = defection ? full_defection_attractive_complete(p, n)
                                       : full_cooperation_attractive_complete(p, n);
      const bool observed = singleton_attractive(g, p, UtilityKind::Aggregate, sync,
                                                 defection ? all_defect(n) : all_cooperate(n));
      check_iff(report, p, n, predicted, observed,
                defection ? "full defection" : "full cooperation");
    }
  }
  return report;
}

VerifyReport verify_seq_singletons(const VerifyOptions& options) {
  // Sequential order: both homogeneous conditions are equivalences.
  VerifyReport report;
  report.claim = "seq-singletons";
  for (const PayoffParams& p : admissible_grid(options.grid)) {
    for (const int n : options.sizes) {
      if (n < 3) continue;
      const Graph g = make_complete(n);
      const UpdateOrder seq = UpdateOrder::sequential(n);
      check_iff(report, p, n, full_defection_attractive_complete(p, n),
                singleton_attractive(g, p, UtilityKind::Aggregate, seq, all_defect(n)),
                "full defection, sequential");
      check_iff(report, p, n, full_cooperation_attractive_complete(p, n),
                singleton_attractive(g, p, UtilityKind::Aggregate, seq, all_cooperate(n)),
                "full cooperation, sequential");
      // General non-omitting orders keep only the sufficiency direction.
      const UpdateOrder blocks = two_block_order(n);
      check_sufficient(report, p, n, full_defection_attractive_complete(p, n),
                       singleton_attractive(g, p, UtilityKind::Aggregate, blocks, all_defect(n)),
                       "full defection, two-block order");
      check_sufficient(report, p, n, full_cooperation_attractive_complete(p, n),
                       singleton_attractive(g, p, UtilityKind::Aggregate, blocks,
                                            all_cooperate(n)),
                       "full cooperation, two-block order");
    }
  }
  return report;
}

VerifyReport verify_regular_sufficiency(const VerifyOptions& options) {
  VerifyReport report;
  report.claim = "kreg-sufficiency";
  std::vector<Graph> graphs =
      options.regular_graphs.empty() ? default_regular_graphs() : options.regular_graphs;
  for (const Graph& g : graphs) {
    const auto k = g.regular_degree();
    if (!k || *k < 2)
      throw std::domain_error("kreg-sufficiency needs k-regular graphs with k >= 2");
    const UpdateOrder sync = UpdateOrder::synchronous(g.order());
    for (const PayoffParams& p : admissible_grid(options.grid)) {
      check_sufficient(report, p, g.order(), full_defection_sufficient_regular(p, *k),
                       singleton_attractive(g, p, UtilityKind::Aggregate, sync,
                                            all_defect(g.order())),
                       "full defection, " + std::to_string(*k) + "-regular");
      check_sufficient(report, p, g.order(), full_cooperation_sufficient_regular(p, *k),
                       singleton_attractive(g, p, UtilityKind::Aggregate, sync,
                                            all_cooperate(g.order())),
                       "full cooperation, " + std::to_string(*k) + "-regular");
    }
  }
  return report;
}

// Expected basins in the synchronous no-homogeneous-attractor case: states
// strictly between the interior threshold and n fall to full defection,
// states strictly below it rise to full cooperation, threshold states rest.
// A vanishing threshold denominator makes cooperator and defector utilities
// agree in every mixed state, so the whole space is fixed and each basin is
// the set itself.
bool basins_match_threshold_formulas(const StateMap& map, const PayoffParams& p, int n) {
  const auto threshold = interior_threshold(p, n);
  if (!threshold) {
    const config_t total = config_t{1} << n;
    for (config_t x = 0; x < total; ++x)
      if (map.step(0, x) != x) return false;
    return true;
  }
  std::vector<config_t> expect_defect{all_defect(n)};
  std::vector<config_t> expect_cooperate{all_cooperate(n)};
  std::vector<config_t> expect_rest;
  const config_t total = config_t{1} << n;
  for (config_t x = 1; x < total - 1; ++x) {
    const Rational m(cooperator_count(x));
    if (m > *threshold)
      expect_defect.push_back(x);
    else if (m < *threshold)
      expect_cooperate.push_back(x);
    else
      expect_rest.push_back(x);
  }
  std::sort(expect_defect.begin(), expect_defect.end());
  std::sort(expect_cooperate.begin(), expect_cooperate.end());

  if (basin(map, InvariantSet::single(all_defect(n))).per_phase[0] != expect_defect) return false;
  if (basin(map, InvariantSet::single(all_cooperate(n))).per_phase[0] != expect_cooperate)
    return false;
  if (!expect_rest.empty() &&
      basin(map, InvariantSet::uniform(expect_rest)).per_phase[0] != expect_rest)
    return false;
  return true;
}

VerifyReport verify_classification(const VerifyOptions& options, bool sequential) {
  VerifyReport report;
  report.claim = sequential ? "seq-classification" : "sync-classification";
  for (const PayoffParams& p : admissible_grid(options.grid)) {
    for (const int n : options.sizes) {
      if (n < (sequential ? 4 : 3) || n > options.max_n) continue;
      const Graph g = make_complete(n);
      const Game game(g, p, UtilityKind::Aggregate);
      const UpdateOrder order =
          sequential ? UpdateOrder::sequential(n) : UpdateOrder::synchronous(n);
      const StateMap map = build_state_map(game, UpdateRule::Imitation, order, options.max_n);
      const bool observed = enumerate_attractors(map).has_nontrivial_attractor();
      const bool predicted = sequential ? nontrivial_attractor_seq_complete(p, n)
                                        : nontrivial_attractor_sync_complete(p, n);
      check_iff(report, p, n, predicted, observed, "nontrivial attractor existence");
      if (!sequential && !predicted) {
        ++report.checks;
        if (!basins_match_threshold_formulas(map, p, n))
          report.iff_failures.push_back({p, n, "threshold-case basins differ from the formulas"});
      }
    }
  }
  return report;
}

VerifyReport verify_wheels(const VerifyOptions& options, bool defection) {
  VerifyReport report;
  report.claim = defection ? "wheel-defection" : "wheel-cooperation";
  for (const PayoffParams& p : admissible_grid(options.grid)) {
    for (const int l : options.sizes) {
      if (l < 4) continue;
      const Graph g = make_wheel(l);
      const UpdateOrder sync = UpdateOrder::synchronous(l);
      for (const UtilityKind kind : options.kinds) {
        const bool predicted = defection ? full_defection_attractive_wheel(p, l, kind)
                                         : full_cooperation_attractive_wheel(p, l, kind);
        const bool observed = singleton_attractive(
            g, p, kind, sync, defection ? all_defect(l) : all_cooperate(l));
        check_iff(report, p, l, predicted, observed,
                  std::string(defection ? "full defection" : "full cooperation") + ", " +
                      utility_kind_name(kind) + " utility");
      }
    }
  }
  return report;
}

}  // namespace

std::vector<std::string> claim_names() {
  return {"kn-defection",        "kn-cooperation",     "kreg-sufficiency", "seq-singletons",
          "sync-classification", "seq-classification", "wheel-cooperation", "wheel-defection"};
}

std::string canonical_claim(const std::string& name_or_alias) {
  static const std::vector<std::pair<std::string, std::string>> aliases = {
      {"4.1", "kn-defection"},        {"4.2", "kn-cooperation"},
      {"4.3", "kreg-sufficiency"},    {"6.1", "seq-singletons"},
      {"7.1", "sync-classification"}, {"7.2", "seq-classification"},
      {"8.1", "wheel-cooperation"},   {"8.2", "wheel-defection"}};
  for (const auto& [alias, name] : aliases)
    if (name_or_alias == alias) return name;
  const auto names = claim_names();
  if (std::find(names.begin(), names.end(), name_or_alias) != names.end()) return name_or_alias;
  throw std::domain_error("unknown claim '" + name_or_alias + "'");
}

VerifyReport verify_claim(const std::string& name_or_alias, const VerifyOptions& options) {
  const std::string claim = canonical_claim(name_or_alias);
  if (claim == "kn-defection") return verify_complete_singletons(options, true);
  if (claim == "kn-cooperation") return verify_complete_singletons(options, false);
  if (claim == "kreg-sufficiency") return verify_regular_sufficiency(options);
  if (claim == "seq-singletons") return verify_seq_singletons(options);
  if (claim == "sync-classification") return verify_classification(options, false);
  if (claim == "seq-classification") return verify_classification(options, true);
  if (claim == "wheel-cooperation") return verify_wheels(options, false);
  if (claim == "wheel-defection") return verify_wheels(options, true);
  throw std::domain_error("unknown claim '" + claim + "'");
}

}  // namespace evograph
