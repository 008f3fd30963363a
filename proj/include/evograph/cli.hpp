#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "evograph/dynamics.hpp"

namespace evograph {

// Shared parsers for the command-line surface (also reused by the Python
// bindings).  All of them throw parse_error / std::domain_error on bad input.
Graph parse_graph_spec(const std::string& spec);            // k5, c6, w8, g6:<string>
PayoffParams parse_params(const std::string& csv);          // "1,0.88,1.74,0" or fractions
UpdateOrder parse_order_spec(const std::string& spec, int n);  // sync | seq | blocks:1,2;3,4
config_t parse_init_spec(const std::string& spec, int n);   // bits | all-C | all-D | single-C@i
UtilityKind parse_utility_kind(const std::string& name);    // aggregate | mean
UpdateRule parse_rule(const std::string& name);             // imitation | death-birth | birth-death

// Entry point for the `evograph` binary.  Exit codes: 0 success,
// 1 verification failure, 2 parse error, 3 capacity error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace evograph
