#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "evograph/analysis.hpp"
#include "evograph/cli.hpp"
#include "evograph/sweep.hpp"
#include "evograph/verify.hpp"

namespace py = pybind11;
using namespace evograph;

PYBIND11_MODULE(_core, m) {
  m.doc() = "deterministic evolutionary games on finite graphs";

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<capacity_error>(m, "CapacityError", PyExc_RuntimeError);

  py::class_<Rational>(m, "Rational")
      .def(py::init<std::int64_t>())
      .def(py::init<std::int64_t, std::int64_t>())
      .def_static("parse", [](const std::string& s) { return Rational::parse(s); })
      .def_property_readonly("num", &Rational::num)
      .def_property_readonly("den", &Rational::den)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def("__float__", &Rational::to_double)
      .def("__str__", &Rational::to_string)
      .def("__repr__", [](const Rational& r) { return "Rational(" + r.to_string() + ")"; });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("order", &Graph::order)
      .def("add_edge", &Graph::add_edge)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("edge_count", &Graph::edge_count)
      .def("neighbors", &Graph::neighbors)
      .def("neighbors_exact", &Graph::neighbors_exact, py::arg("i"), py::arg("k"))
      .def("closed_neighborhood", &Graph::closed_neighborhood)
      .def("regular_degree", [](const Graph& g) { return g.regular_degree(); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__",
           [](const Graph& g) { return "Graph(n=" + std::to_string(g.order()) + ")"; });

  py::class_<Neighborhood>(m, "Neighborhood")
      .def_readonly("center", &Neighborhood::center)
      .def_readonly("radius", &Neighborhood::radius)
      .def_readonly("members", &Neighborhood::members);
  m.def("neighborhood", &neighborhood, py::arg("graph"), py::arg("center"), py::arg("radius"));

  m.def("make_complete", &make_complete, py::arg("n"));
  m.def("make_cycle", &make_cycle, py::arg("n"));
  m.def("make_wheel", &make_wheel, py::arg("l"));
  m.def("decode_graph6", [](const std::string& s) { return decode_graph6(s); });
  m.def("encode_graph6", &encode_graph6);
  m.def("parse_graph", &parse_graph_spec, "kN | cN | wL | g6:<string>");

  py::class_<PayoffParams>(m, "PayoffParams")
      .def(py::init<Rational, Rational, Rational, Rational>(), py::arg("a"), py::arg("b"),
           py::arg("c"), py::arg("d"))
      .def(py::init([](const std::string& csv) { return parse_params(csv); }), py::arg("csv"))
      .def_readwrite("a", &PayoffParams::a)
      .def_readwrite("b", &PayoffParams::b)
      .def_readwrite("c", &PayoffParams::c)
      .def_readwrite("d", &PayoffParams::d)
      .def("__str__", &PayoffParams::to_string)
      .def("__repr__",
           [](const PayoffParams& p) { return "PayoffParams(" + p.to_string() + ")"; });

  py::enum_<Scenario>(m, "Scenario")
      .value("FC", Scenario::FullCooperation)
      .value("HD", Scenario::HawkDove)
      .value("SH", Scenario::StagHunt)
      .value("PD", Scenario::PrisonersDilemma);

  py::class_<Classification>(m, "Classification")
      .def_property_readonly("admissible", &Classification::admissible)
      .def_readonly("scenario", &Classification::scenario)
      .def_readonly("violation", &Classification::violation);

  m.def("admissibility_violation", &admissibility_violation);
  m.def("is_admissible", &is_admissible);
  m.def("classify", &classify);
  m.def("normalize", &normalize);
  m.def("denormalize", &denormalize);

  py::enum_<UtilityKind>(m, "UtilityKind")
      .value("Aggregate", UtilityKind::Aggregate)
      .value("Mean", UtilityKind::Mean);
  py::enum_<UpdateRule>(m, "UpdateRule")
      .value("Imitation", UpdateRule::Imitation)
      .value("DeathBirth", UpdateRule::DeathBirth)
      .value("BirthDeath", UpdateRule::BirthDeath);

  m.def("utility", &utility, py::arg("graph"), py::arg("params"), py::arg("kind"), py::arg("x"));
  m.def("interior_threshold", &interior_threshold, py::arg("params"), py::arg("n"));
  m.def("config_from_string", &config_from_string);
  m.def("config_to_string", &config_to_string, py::arg("x"), py::arg("n"));
  m.def("all_cooperate", &all_cooperate);
  m.def("all_defect", &all_defect);

  py::class_<UpdateOrder>(m, "UpdateOrder")
      .def_static("synchronous", &UpdateOrder::synchronous)
      .def_static("sequential", &UpdateOrder::sequential)
      .def_static("periodic_blocks", &UpdateOrder::periodic_blocks)
      .def_property_readonly("period", &UpdateOrder::period)
      .def("non_omitting", &UpdateOrder::non_omitting)
      .def("__repr__", [](const UpdateOrder& o) { return "UpdateOrder(" + o.describe() + ")"; });
  m.def("parse_order", &parse_order_spec, py::arg("spec"), py::arg("n"));

  py::class_<Game>(m, "Game")
      .def(py::init<Graph, PayoffParams, UtilityKind>(), py::arg("graph"), py::arg("params"),
           py::arg("kind") = UtilityKind::Aggregate)
      .def_property_readonly("graph", &Game::graph)
      .def_property_readonly("params", &Game::params)
      .def_property_readonly("kind", &Game::kind)
      .def("utilities", &Game::utilities);

  m.def("candidate_set", &candidate_set, py::arg("game"), py::arg("x"), py::arg("vertex"));
  m.def("step", py::overload_cast<const Game&, UpdateRule, config_t>(&step), py::arg("game"),
        py::arg("rule"), py::arg("x"));
  m.def("step_at", &step_at, py::arg("game"), py::arg("rule"), py::arg("order"), py::arg("t"),
        py::arg("x"));
  m.def("evolve", &evolve, py::arg("game"), py::arg("rule"), py::arg("order"), py::arg("t0"),
        py::arg("x"), py::arg("t"));

  py::class_<Trajectory> trajectory_class(m, "Trajectory");
  py::enum_<Trajectory::Stop>(trajectory_class, "Stop")
      .value("Horizon", Trajectory::Stop::Horizon)
      .value("Fixed", Trajectory::Stop::Fixed)
      .value("Cycle", Trajectory::Stop::Cycle);
  trajectory_class.def_readonly("t0", &Trajectory::t0)
      .def_readonly("states", &Trajectory::states)
      .def_readonly("stop", &Trajectory::stop)
      .def_readonly("event_step", &Trajectory::event_step)
      .def_readonly("period", &Trajectory::period);
  m.def("trajectory", &trajectory, py::arg("game"), py::arg("rule"), py::arg("order"),
        py::arg("t0"), py::arg("x"), py::arg("horizon"));

  m.def(
      "map_dependency_radius_at_most",
      [](const Game& game, UpdateRule rule, int r) {
        return map_dependency_radius_at_most(game.graph(), r,
                                             [&](config_t x) { return step(game, rule, x); });
      },
      py::arg("game"), py::arg("rule"), py::arg("r"));

  py::class_<StateMap>(m, "StateMap")
      .def_readonly("n", &StateMap::n)
      .def_property_readonly("period", &StateMap::period)
      .def("step", &StateMap::step, py::arg("phase"), py::arg("x"));
  m.def("build_state_map", &build_state_map, py::arg("game"), py::arg("rule"), py::arg("order"),
        py::arg("max_n") = 20);

  py::class_<InvariantSet>(m, "InvariantSet")
      .def_static("uniform", &InvariantSet::uniform, py::arg("states"), py::arg("period") = 1)
      .def_static("single", &InvariantSet::single, py::arg("state"), py::arg("period") = 1)
      .def_readonly("sections", &InvariantSet::sections)
      .def("time_independent", &InvariantSet::time_independent);

  py::enum_<AttractorVerdict>(m, "AttractorVerdict")
      .value("NotInvariant", AttractorVerdict::NotInvariant)
      .value("NotAttracting", AttractorVerdict::NotAttracting)
      .value("Attractor", AttractorVerdict::Attractor);

  py::class_<HittingWitness>(m, "HittingWitness")
      .def_readonly("phase", &HittingWitness::phase)
      .def_readonly("state", &HittingWitness::state)
      .def_readonly("attracted", &HittingWitness::attracted)
      .def_readonly("hitting_time", &HittingWitness::hitting_time);

  py::class_<AttractorReport>(m, "AttractorReport")
      .def_readonly("set", &AttractorReport::set)
      .def_readonly("verdict", &AttractorReport::verdict)
      .def_readonly("detail", &AttractorReport::detail)
      .def_readonly("witnesses", &AttractorReport::witnesses)
      .def_readonly("max_hitting_time", &AttractorReport::max_hitting_time)
      .def_readonly("minimal", &AttractorReport::minimal)
      .def_readonly("trivial", &AttractorReport::trivial)
      .def_readonly("orbit_ids", &AttractorReport::orbit_ids)
      .def_readonly("basin_states", &AttractorReport::basin_states)
      .def("is_attractor", &AttractorReport::is_attractor);

  m.def("is_attractor", py::overload_cast<const StateMap&, const InvariantSet&>(&is_attractor),
        py::arg("map"), py::arg("set"));
  m.def("is_attractor",
        py::overload_cast<const Game&, UpdateRule, const UpdateOrder&, const InvariantSet&>(
            &is_attractor),
        py::arg("game"), py::arg("rule"), py::arg("order"), py::arg("set"));

  m.def("fixed_points", &fixed_points);

  py::class_<Orbit>(m, "Orbit")
      .def_readonly("nodes", &Orbit::nodes)
      .def_property_readonly("length", &Orbit::length);
  m.def("periodic_orbits", &periodic_orbits);

  py::class_<EnumerateOptions>(m, "EnumerateOptions")
      .def(py::init<>())
      .def_readwrite("orbit_cap", &EnumerateOptions::orbit_cap)
      .def_readwrite("exhaustive", &EnumerateOptions::exhaustive);

  py::class_<AttractorCatalog>(m, "AttractorCatalog")
      .def_readonly("orbits", &AttractorCatalog::orbits)
      .def_readonly("attractors", &AttractorCatalog::attractors)
      .def("has_nontrivial_attractor", &AttractorCatalog::has_nontrivial_attractor);
  m.def("enumerate_attractors", &enumerate_attractors, py::arg("map"),
        py::arg("options") = EnumerateOptions{});

  py::class_<Basin>(m, "Basin")
      .def_readonly("per_phase", &Basin::per_phase)
      .def_property_readonly("size", &Basin::size);
  m.def("basin", &basin, py::arg("map"), py::arg("set"));

  m.def("full_defection_attractive_complete", &full_defection_attractive_complete);
  m.def("full_cooperation_attractive_complete", &full_cooperation_attractive_complete);
  m.def("full_defection_sufficient_regular", &full_defection_sufficient_regular);
  m.def("full_cooperation_sufficient_regular", &full_cooperation_sufficient_regular);
  m.def("nontrivial_attractor_sync_complete", &nontrivial_attractor_sync_complete);
  m.def("nontrivial_attractor_seq_complete", &nontrivial_attractor_seq_complete);
  m.def("sequential_coexistence_band", &sequential_coexistence_band);
  m.def("full_cooperation_attractive_wheel", &full_cooperation_attractive_wheel);
  m.def("full_defection_attractive_wheel", &full_defection_attractive_wheel);

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init<>())
      .def_readwrite("b_cells", &GridSpec::b_cells)
      .def_readwrite("c_cells", &GridSpec::c_cells)
      .def_readwrite("b_lo", &GridSpec::b_lo)
      .def_readwrite("b_hi", &GridSpec::b_hi)
      .def_readwrite("c_lo", &GridSpec::c_lo)
      .def_readwrite("c_hi", &GridSpec::c_hi)
      .def_readwrite("bases", &GridSpec::bases);
  m.def("admissible_grid", &admissible_grid);

  py::class_<VerifyIssue>(m, "VerifyIssue")
      .def_readonly("params", &VerifyIssue::params)
      .def_readonly("size", &VerifyIssue::size)
      .def_readonly("note", &VerifyIssue::note);

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("claim", &VerifyReport::claim)
      .def_readonly("checks", &VerifyReport::checks)
      .def_readonly("iff_failures", &VerifyReport::iff_failures)
      .def_readonly("converse_notes", &VerifyReport::converse_notes)
      .def("passed", &VerifyReport::passed)
      .def("summary", &VerifyReport::summary);

  py::class_<VerifyOptions>(m, "VerifyOptions")
      .def(py::init<>())
      .def_readwrite("grid", &VerifyOptions::grid)
      .def_readwrite("sizes", &VerifyOptions::sizes)
      .def_readwrite("kinds", &VerifyOptions::kinds)
      .def_readwrite("regular_graphs", &VerifyOptions::regular_graphs)
      .def_readwrite("max_n", &VerifyOptions::max_n);
  m.def("claim_names", &claim_names);
  m.def("verify_claim", &verify_claim, py::arg("claim"), py::arg("options") = VerifyOptions{});
  m.def("two_block_order", &two_block_order);
  m.def("states_with_weight", &states_with_weight);

  py::class_<SweepSpec>(m, "SweepSpec")
      .def(py::init<>())
      .def_readwrite("n", &SweepSpec::n)
      .def_readwrite("sequential", &SweepSpec::sequential)
      .def_readwrite("b_cells", &SweepSpec::b_cells)
      .def_readwrite("c_cells", &SweepSpec::c_cells)
      .def_readwrite("b_lo", &SweepSpec::b_lo)
      .def_readwrite("b_hi", &SweepSpec::b_hi)
      .def_readwrite("c_lo", &SweepSpec::c_lo)
      .def_readwrite("c_hi", &SweepSpec::c_hi)
      .def_readwrite("exact", &SweepSpec::exact)
      .def_readwrite("max_n", &SweepSpec::max_n);
  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("csv", &SweepResult::csv)
      .def_readonly("mismatches", &SweepResult::mismatches)
      .def("ok", &SweepResult::ok);
  m.def("sweep_region", &sweep_region);
}
