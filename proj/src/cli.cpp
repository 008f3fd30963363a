#include "evograph/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "evograph/analysis.hpp"
#include "evograph/sweep.hpp"
#include "evograph/verify.hpp"

namespace evograph {

Graph parse_graph_spec(const std::string& spec) {
  if (spec.rfind("g6:", 0) == 0) return decode_graph6(spec.substr(3));
  if (spec.size() >= 2 && (spec[0] == 'k' || spec[0] == 'c' || spec[0] == 'w')) {
    int size = 0;
    try {
      std::size_t used = 0;
      size = std::stoi(spec.substr(1), &used);
      if (used != spec.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw parse_error("bad graph size in '" + spec + "'", 1);
    }
    if (spec[0] == 'k') return make_complete(size);
    if (spec[0] == 'c') return make_cycle(size);
    return make_wheel(size);
  }
  throw parse_error("graph spec must be kN, cN, wL or g6:<string>; got '" + spec + "'", 0);
}

PayoffParams parse_params(const std::string& csv) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    const std::string piece =
        csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      values.push_back(Rational::parse(piece));
    } catch (const std::invalid_argument& e) {
      throw parse_error(std::string("bad payoff parameters: ") + e.what(), start);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (values.size() != 4)
    throw parse_error("payoff parameters need exactly four comma-separated values", 0);
  return {values[0], values[1], values[2], values[3]};
}

UpdateOrder parse_order_spec(const std::string& spec, int n) {
  if (spec == "sync") return UpdateOrder::synchronous(n);
  if (spec == "seq") return UpdateOrder::sequential(n);
  if (spec.rfind("blocks:", 0) == 0) {
    std::vector<std::vector<int>> blocks;
    std::stringstream body(spec.substr(7));
    std::string block;
    while (std::getline(body, block, ';')) {
      std::vector<int> labels;
      std::stringstream items(block);
      std::string item;
      while (std::getline(items, item, ',')) {
        try {
          labels.push_back(std::stoi(item));
        } catch (const std::exception&) {
          throw parse_error("bad vertex label '" + item + "' in order blocks", 7);
        }
      }
      blocks.push_back(std::move(labels));
    }
    if (blocks.empty()) throw parse_error("order needs at least one block", 7);
    return UpdateOrder::periodic_blocks(n, blocks);
  }
  throw parse_error("order must be sync, seq or blocks:<set;set;...>; got '" + spec + "'", 0);
}

config_t parse_init_spec(const std::string& spec, int n) {
  const auto single_at = [&](const std::string& text, bool cooperator) {
    int vertex = 0;
    try {
      vertex = std::stoi(text);
    } catch (const std::exception&) {
      throw parse_error("bad vertex in init spec '" + spec + "'", 0);
    }
    if (vertex < 1 || vertex > n)
      throw parse_error("init vertex outside 1.." + std::to_string(n), 0);
    const config_t bit = config_t{1} << (vertex - 1);
    return cooperator ? bit : (all_cooperate(n) ^ bit);
  };
  if (spec == "all-C") return all_cooperate(n);
  if (spec == "all-D") return all_defect(n);
  if (spec.rfind("single-C@", 0) == 0) return single_at(spec.substr(9), true);
  if (spec.rfind("single-D@", 0) == 0) return single_at(spec.substr(9), false);
  if (static_cast<int>(spec.size()) != n)
    throw parse_error("initial configuration needs exactly " + std::to_string(n) + " bits", 0);
  return config_from_string(spec);
}

UtilityKind parse_utility_kind(const std::string& name) {
  if (name == "aggregate") return UtilityKind::Aggregate;
  if (name == "mean") return UtilityKind::Mean;
  throw parse_error("utility must be aggregate or mean; got '" + name + "'", 0);
}

UpdateRule parse_rule(const std::string& name) {
  if (name == "imitation") return UpdateRule::Imitation;
  if (name == "death-birth") return UpdateRule::DeathBirth;
  if (name == "birth-death") return UpdateRule::BirthDeath;
  throw parse_error("rule must be imitation, death-birth or birth-death; got '" + name + "'", 0);
}

namespace {

std::string hex_state(config_t x) {
  std::ostringstream out;
  out << "0x" << std::hex << x;
  return out.str();
}

void parse_range(const std::string& text, int& lo, int& hi) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw parse_error("bad range '" + text + "', expected lo..hi", 0);
  }
  if (hi < lo) throw parse_error("empty range '" + text + "'", 0);
}

void parse_grid_dims(const std::string& text, int& rows, int& cols) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) {
      rows = cols = std::stoi(text);
    } else {
      rows = std::stoi(text.substr(0, x));
      cols = std::stoi(text.substr(x + 1));
    }
  } catch (const std::exception&) {
    throw parse_error("bad grid '" + text + "', expected RxC", 0);
  }
  if (rows < 1 || cols < 1) throw parse_error("grid resolution must be positive", 0);
}

void parse_interval(const std::string& text, Rational& lo, Rational& hi) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw parse_error("bad interval '" + text + "', expected lo:hi", 0);
  lo = Rational::parse(text.substr(0, colon));
  hi = Rational::parse(text.substr(colon + 1));
  if (!(lo < hi)) throw parse_error("empty interval '" + text + "'", 0);
}

struct CommonGameArgs {
  std::string graph_spec;
  std::string params_csv;
  std::string utility_name = "aggregate";
  std::string rule_name = "imitation";
  std::string order_spec = "sync";
};

struct BoundGame {
  Graph graph;
  PayoffParams params;
  Game game;
  UpdateRule rule;
  UpdateOrder order;
};

BoundGame bind_game(const CommonGameArgs& args) {
  Graph graph = parse_graph_spec(args.graph_spec);
  PayoffParams params = parse_params(args.params_csv);
  const UtilityKind kind = parse_utility_kind(args.utility_name);
  const UpdateRule rule = parse_rule(args.rule_name);
  UpdateOrder order = parse_order_spec(args.order_spec, graph.order());
  Game game(graph, params, kind);
  return {std::move(graph), std::move(params), std::move(game), rule, std::move(order)};
}

int cmd_simulate(const CommonGameArgs& common, const std::string& init_spec, long t0, long horizon,
                 std::ostream& out) {
  const BoundGame bound = bind_game(common);
  const config_t init = parse_init_spec(init_spec, bound.graph.order());
  const Trajectory run = trajectory(bound.game, bound.rule, bound.order, t0, init, horizon);
  for (const config_t x : run.states) out << config_to_string(x, bound.graph.order()) << "\n";
  switch (run.stop) {
    case Trajectory::Stop::Fixed:
      out << "# FIXED step=" << run.event_step << "\n";
      break;
    case Trajectory::Stop::Cycle:
      out << "# CYCLE period=" << run.period << " entered=" << run.event_step << "\n";
      break;
    case Trajectory::Stop::Horizon:
      out << "# HORIZON\n";
      break;
  }
  return 0;
}

int cmd_classify(const std::string& params_csv, std::ostream& out) {
  const PayoffParams params = parse_params(params_csv);
  const Classification result = classify(params);
  out << "params: " << params.to_string() << "\n";
  if (!result.admissible()) {
    out << "admissible: no (" << result.violation << ")\n";
    return 0;
  }
  out << "admissible: yes\n";
  out << "scenario: " << scenario_tag(*result.scenario) << " (" << scenario_name(*result.scenario)
      << ")\n";
  const PayoffParams normal = normalize(params);
  out << "normalized: " << normal.to_string() << (normal == params ? " (already normalized)" : "")
      << "\n";
  return 0;
}

void print_report(const AttractorReport& report, std::size_t id, int n, std::ostream& out,
                  bool records) {
  if (records) {
    out << "attractor id=" << id << " verdict=" << verdict_name(report.verdict)
        << " minimal=" << (report.minimal ? 1 : 0) << " trivial=" << (report.trivial ? 1 : 0)
        << " orbits=" << report.orbit_ids.size() << " states=" << report.set.total_states()
        << " basin=" << report.basin_states << " max_hit=" << report.max_hitting_time
        << " sections=";
    for (std::size_t p = 0; p < report.set.sections.size(); ++p) {
      if (p) out << ";";
      out << p << ":";
      const auto& section = report.set.sections[p];
      for (std::size_t k = 0; k < section.size(); ++k)
        out << (k ? "," : "") << hex_state(section[k]);
    }
    out << "\n";
    return;
  }
  out << "attractor " << id << ": " << verdict_name(report.verdict)
      << (report.minimal ? ", minimal" : "") << (report.trivial ? ", trivial (maximal set)" : "")
      << "; orbits=" << report.orbit_ids.size() << " basin=" << report.basin_states
      << " max-hitting-time=" << report.max_hitting_time << "\n";
  for (std::size_t p = 0; p < report.set.sections.size(); ++p) {
    out << "  phase " << p << ":";
    for (const config_t x : report.set.sections[p]) out << " " << config_to_string(x, n);
    out << "\n";
  }
}

int cmd_attractors(const CommonGameArgs& common, int max_n, bool records, std::ostream& out) {
  const BoundGame bound = bind_game(common);
  const StateMap map = build_state_map(bound.game, bound.rule, bound.order, max_n);
  const AttractorCatalog catalog = enumerate_attractors(map);
  if (!records) {
    out << "graph order " << bound.graph.order() << ", order period " << bound.order.period()
        << ", orbits " << catalog.orbits.size() << "\n";
    out << (catalog.has_nontrivial_attractor() ? "nontrivial attractor found"
                                               : "no nontrivial attractor") << "\n";
  }
  for (std::size_t id = 0; id < catalog.attractors.size(); ++id)
    print_report(catalog.attractors[id], id, bound.graph.order(), out, records);
  return 0;
}

int cmd_verify(const std::vector<std::string>& claims, const VerifyOptions& options,
               std::ostream& out) {
  std::vector<std::string> names;
  for (const auto& claim : claims) {
    if (claim == "all") {
      const auto every = claim_names();
      names.insert(names.end(), every.begin(), every.end());
    } else {
      names.push_back(canonical_claim(claim));
    }
  }
  bool all_passed = true;
  for (const auto& name : names) {
    const VerifyReport report = verify_claim(name, options);
    out << report.summary() << "\n";
    const auto dump = [&](const std::vector<VerifyIssue>& issues, const char* label) {
      const std::size_t show = std::min<std::size_t>(issues.size(), 5);
      for (std::size_t i = 0; i < show; ++i)
        out << "  " << label << " params=" << issues[i].params.to_string()
            << " size=" << issues[i].size << ": " << issues[i].note << "\n";
      if (issues.size() > show)
        out << "  ... " << issues.size() - show << " more " << label << " entries\n";
    };
    dump(report.iff_failures, "failure");
    dump(report.converse_notes, "converse");
    all_passed = all_passed && report.passed();
  }
  return all_passed ? 0 : 1;
}

int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& err) {
  const SweepResult result = sweep_region(spec);
  out << result.csv;
  if (!result.ok()) {
    for (const auto& mismatch : result.mismatches)
      err << "exact check mismatch: " << mismatch << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"deterministic evolutionary games on finite graphs"};
  app.require_subcommand(1);

  CommonGameArgs common;
  std::string init_spec = "all-D";
  long t0 = 0;
  long horizon = 100;
  int max_n = 20;
  bool records = false;

  auto* simulate = app.add_subcommand("simulate", "run one trajectory");
  simulate->add_option("--graph", common.graph_spec, "kN | cN | wL | g6:<string>")->required();
  simulate->add_option("--params", common.params_csv, "payoffs a,b,c,d")->required();
  simulate->add_option("--utility", common.utility_name, "aggregate | mean");
  simulate->add_option("--rule", common.rule_name, "imitation | death-birth | birth-death");
  simulate->add_option("--order", common.order_spec, "sync | seq | blocks:<set;set;...>");
  simulate->add_option("--init", init_spec, "bits | all-C | all-D | single-C@i | single-D@i")
      ->required();
  simulate->add_option("--t0", t0, "start time");
  simulate->add_option("--horizon", horizon, "steps to run")->required();

  std::string classify_params;
  auto* classify_cmd = app.add_subcommand("classify", "admissibility and scenario");
  classify_cmd->add_option("params", classify_params, "payoffs a,b,c,d")->required();

  auto* attractors = app.add_subcommand("attractors", "enumerate attractors exhaustively");
  attractors->add_option("--graph", common.graph_spec)->required();
  attractors->add_option("--params", common.params_csv)->required();
  attractors->add_option("--utility", common.utility_name);
  attractors->add_option("--rule", common.rule_name);
  attractors->add_option("--order", common.order_spec);
  attractors->add_option("--max-n", max_n, "state-table cap (default 20)");
  attractors->add_flag("--records", records, "machine-readable one-line records");

  std::vector<std::string> claims;
  std::string n_range = "3..8";
  std::string l_range;
  std::string grid_dims = "20x20";
  std::string b_interval = "-1:1";
  std::string c_interval = "0:2";
  std::vector<std::string> bases;
  std::string verify_utility = "both";
  std::vector<std::string> extra_graphs;
  auto* verify = app.add_subcommand("verify", "closed-form conditions vs brute force");
  verify->add_option("claims", claims, "claim names, numeric aliases, or 'all'")->required();
  verify->add_option("--n", n_range, "complete-graph sizes lo..hi");
  verify->add_option("--l", l_range, "wheel sizes lo..hi (defaults to --n)");
  verify->add_option("--grid", grid_dims, "RxC parameter grid");
  verify->add_option("--b", b_interval, "b interval lo:hi");
  verify->add_option("--c", c_interval, "c interval lo:hi");
  verify->add_option("--base", bases, "extra (a,d) base pairs, e.g. 3,-1")->delimiter(';');
  verify->add_option("--utility", verify_utility, "aggregate | mean | both (wheel claims)");
  verify->add_option("--graph", extra_graphs, "extra regular graphs for kreg-sufficiency");
  verify->add_option("--max-n", max_n, "state-table cap");

  int sweep_n = 5;
  std::string sweep_order = "sync";
  bool sweep_exact = false;
  auto* sweep = app.add_subcommand("sweep", "outcome-code grid over (b,c) at a=1, d=0");
  sweep->add_option("--n", sweep_n, "complete-graph size")->required();
  sweep->add_option("--order", sweep_order, "sync | seq");
  sweep->add_option("--grid", grid_dims, "RxC resolution");
  sweep->add_option("--b", b_interval, "b interval lo:hi");
  sweep->add_option("--c", c_interval, "c interval lo:hi");
  sweep->add_flag("--exact", sweep_exact, "cross-check every cell by brute force");
  sweep->add_option("--max-n", max_n, "state-table cap");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "argument error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(common, init_spec, t0, horizon, out);
    if (classify_cmd->parsed()) return cmd_classify(classify_params, out);
    if (attractors->parsed()) return cmd_attractors(common, max_n, records, out);
    if (verify->parsed()) {
      VerifyOptions options;
      int lo = 3, hi = 8;
      parse_range(n_range, lo, hi);
      if (!l_range.empty()) parse_range(l_range, lo, hi);
      options.sizes.clear();
      for (int s = lo; s <= hi; ++s) options.sizes.push_back(s);
      parse_grid_dims(grid_dims, options.grid.b_cells, options.grid.c_cells);
      parse_interval(b_interval, options.grid.b_lo, options.grid.b_hi);
      parse_interval(c_interval, options.grid.c_lo, options.grid.c_hi);
      for (const auto& base : bases) {
        const auto comma = base.find(',');
        if (comma == std::string::npos)
          throw parse_error("base must be a,d; got '" + base + "'", 0);
        options.grid.bases.emplace_back(Rational::parse(base.substr(0, comma)),
                                        Rational::parse(base.substr(comma + 1)));
      }
      if (verify_utility == "aggregate")
        options.kinds = {UtilityKind::Aggregate};
      else if (verify_utility == "mean")
        options.kinds = {UtilityKind::Mean};
      else if (verify_utility == "both")
        options.kinds = {UtilityKind::Aggregate, UtilityKind::Mean};
      else
        throw parse_error("utility must be aggregate, mean or both", 0);
      for (const auto& spec : extra_graphs) options.regular_graphs.push_back(parse_graph_spec(spec));
      options.max_n = max_n;
      return cmd_verify(claims, options, out);
    }
    if (sweep->parsed()) {
      SweepSpec spec;
      spec.n = sweep_n;
      if (sweep_order == "seq")
        spec.sequential = true;
      else if (sweep_order != "sync")
        throw parse_error("sweep order must be sync or seq", 0);
      parse_grid_dims(grid_dims, spec.b_cells, spec.c_cells);
      parse_interval(b_interval, spec.b_lo, spec.b_hi);
      parse_interval(c_interval, spec.c_lo, spec.c_hi);
      spec.exact = sweep_exact;
      spec.max_n = max_n;
      return cmd_sweep(spec, out, err);
    }
  } catch (const capacity_error& e) {
    err << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    err << "overflow: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace evograph
