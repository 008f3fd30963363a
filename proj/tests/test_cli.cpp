#include <doctest.h>

#include <sstream>

#include "evograph/cli.hpp"

using namespace evograph;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify reports scenario, admissibility and normal form") {
  const CliRun hd = run({"classify", "1,0.88,1.74,0"});
  CHECK(hd.exit_code == 0);
  CHECK(hd.out.find("scenario: HD") != std::string::npos);
  CHECK(hd.out.find("already normalized") != std::string::npos);

  const CliRun shifted = run({"classify", "3,1,2,-1"});
  CHECK(shifted.exit_code == 0);
  CHECK(shifted.out.find("scenario: FC") != std::string::npos);
  CHECK(shifted.out.find("normalized: 1,0.5,0.75,0") != std::string::npos);

  const CliRun bad = run({"classify", "1,0.5,0.5,0"});
  CHECK(bad.exit_code == 0);
  CHECK(bad.out.find("admissible: no (A1: b = c)") != std::string::npos);
}

TEST_CASE("simulate prints the trajectory and the stopping tag") {
  const CliRun fixed = run({"simulate", "--graph",
                            "g6:WsOPA?OG?[?E@C?o@??@??O?????????s??k?@@_?Cg??KO", "--params",
                            "1,0.88,1.74,0", "--init", "single-C@1", "--rule", "imitation",
                            "--order", "sync", "--horizon", "12"});
  CHECK(fixed.exit_code == 0);
  CHECK(fixed.out.find("# FIXED step=10") != std::string::npos);

  const CliRun cycle = run({"simulate", "--graph", "k5", "--params", "1,0.8,1.5,0", "--order",
                            "seq", "--init", "11000", "--horizon", "31"});
  CHECK(cycle.exit_code == 0);
  CHECK(cycle.out.find("# CYCLE period=30") != std::string::npos);

  const CliRun still = run({"simulate", "--graph", "k3", "--params", "1,0.88,1.74,0", "--init",
                            "000", "--horizon", "0"});
  CHECK(still.exit_code == 0);
  CHECK(still.out == "000\n# HORIZON\n");

  const CliRun blocks = run({"simulate", "--graph", "k5", "--params", "1,0.9,2,0", "--order",
                             "blocks:1,2;3,4,5", "--init", "single-C@1", "--horizon", "6"});
  CHECK(blocks.exit_code == 0);
  CHECK(blocks.out == "10000\n11000\n11000\n00000\n# FIXED step=3\n");

  const CliRun fractions = run({"simulate", "--graph", "k3", "--params", "1,22/25,87/50,0",
                                "--init", "100", "--horizon", "3"});
  CHECK(fractions.exit_code == 0);
  CHECK(fractions.out.find("111") != std::string::npos);
}

TEST_CASE("identical invocations produce identical output") {
  const std::vector<std::string> args = {"attractors", "--graph", "k5", "--params",
                                         "1,0.8,1.5,0",  "--order", "seq", "--records"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("attractors emits records with hex sections") {
  const CliRun records = run({"attractors", "--graph", "k4", "--params", "1,-0.5,1.5,0",
                              "--records"});
  CHECK(records.exit_code == 0);
  CHECK(records.out.find("attractor id=0 verdict=attractor minimal=1 trivial=0") !=
        std::string::npos);
  CHECK(records.out.find("sections=0:0x0") != std::string::npos);
}

TEST_CASE("exit codes distinguish parse and capacity failures") {
  CHECK(run({"classify", "1,2"}).exit_code == 2);
  CHECK(run({"classify", "1,0.5e1,2,0"}).exit_code == 2);
  CHECK(run({"simulate", "--graph", "q7", "--params", "1,0.5,2,0", "--init", "all-D",
             "--horizon", "1"})
            .exit_code == 2);
  CHECK(run({"simulate", "--graph", "k5", "--params", "1,0.5,2,0", "--init", "1100",
             "--horizon", "1"})
            .exit_code == 2);
  CHECK(run({"attractors", "--graph", "c21", "--params", "1,0.5,2,0"}).exit_code == 3);
  CHECK(run({"verify", "nope"}).exit_code == 2);
  CHECK(run({"bogus"}).exit_code == 2);
}

TEST_CASE("verify exits zero on passing claims and one on failing ones") {
  const CliRun pass = run({"verify", "4.1", "--n", "3..4", "--grid", "6x6"});
  CHECK(pass.exit_code == 0);
  CHECK(pass.out.find("kn-defection: PASS") != std::string::npos);

  const CliRun fail = run({"verify", "8.2", "--l", "4..5", "--grid", "6x6", "--utility",
                           "aggregate"});
  CHECK(fail.exit_code == 1);
  CHECK(fail.out.find("wheel-defection: FAIL") != std::string::npos);
  CHECK(fail.out.find("converse") == std::string::npos);  // genuine equivalence failures
}

TEST_CASE("sweep prints the legend and one row per cell") {
  const CliRun one = run({"sweep", "--n", "3", "--grid", "1x1"});
  CHECK(one.exit_code == 0);
  CHECK(one.out.find("# codes:") != std::string::npos);
  CHECK(one.out.find("b,c,code") != std::string::npos);
  CHECK(one.out.find("0,1,") != std::string::npos);  // the single cell centre

  const CliRun grid = run({"sweep", "--n", "5", "--order", "seq", "--grid", "8x8", "--exact"});
  CHECK(grid.exit_code == 0);
  int rows = 0;
  std::istringstream lines(grid.out);
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty() && line[0] != '#' && line.find(',') != std::string::npos) ++rows;
  CHECK(rows == 8 * 8 + 1);  // header row plus cells
}

TEST_CASE("sequential sweep marks the coexistence band") {
  const CliRun grid = run({"sweep", "--n", "5", "--order", "seq", "--grid", "10x10", "--exact"});
  CHECK(grid.exit_code == 0);
  const bool band_cell = grid.out.find(",4\n") != std::string::npos ||
                         grid.out.find(",5\n") != std::string::npos;
  CHECK(band_cell);
}
