#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crossrel/graph.hpp"

namespace crossrel {

// Parse or validation failure, anchored to the offending line/column (both
// 1-based; 0 marks a whole-file condition) and carrying a stable error code.
struct ScenarioError : std::runtime_error {
  ScenarioError(int line, int column, std::string code, const std::string& message);

  int line;
  int column;
  std::string code;
};

struct ScenarioParams {
  std::optional<double> p;
  std::optional<int> k;
  std::optional<int> n;
  std::optional<long long> trials;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_size;
  std::optional<std::vector<double>> grid;
};

// A parsed scenario file. The routing section is optional; commands that
// need one call network() and get a distinctly coded error otherwise.
struct Scenario {
  PhysicalTopology physical;
  LogicalTopology logical;
  std::vector<PhysicalPath> routes;
  bool has_routing = false;
  ScenarioParams params;

  LayeredNetwork network() const;
};

// Line-oriented grammar:
//   pnode <id>
//   plink <u> <v>
//   lnode <id>
//   llink <s> <t>
//   route <index>: <v0> <v1> ... <vk>   (index = llink declaration order)
//   param <key> <value>                 (p, k, n, trials, seed, max-size, grid)
// '#' starts a comment; blank lines are ignored.
Scenario parse_scenario(std::string_view text);

}  // namespace crossrel
