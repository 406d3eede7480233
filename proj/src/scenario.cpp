#include "crossrel/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace crossrel {
namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
           line[i] != '#')
      ++i;
    tokens.push_back({std::string(line.substr(start, i - start)),
                      static_cast<int>(start) + 1});
  }
  return tokens;
}

template <typename T>
std::optional<T> parse_number(const std::string& text) {
  T value{};
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

std::optional<double> parse_double(const std::string& text) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size()) return std::nullopt;
    return value;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

struct Builder {
  std::vector<std::string> pnode_names;
  std::unordered_map<std::string, int> pnode_index;
  std::vector<std::pair<int, int>> plinks;
  std::vector<int> lnodes;
  std::unordered_set<int> lnode_set;
  std::vector<std::pair<int, int>> llinks;
  std::vector<std::optional<std::vector<int>>> route_nodes;  // per llink
  std::vector<int> route_lines;
  ScenarioParams params;

  int resolve_pnode(const Token& token, int line) const {
    auto it = pnode_index.find(token.text);
    if (it == pnode_index.end())
      throw ScenarioError(line, token.column, "unknown-node",
                          "unknown node '" + token.text + "'");
    return it->second;
  }
};

void require_arity(const std::vector<Token>& tokens, std::size_t count,
                   int line) {
  if (tokens.size() != count)
    throw ScenarioError(line, tokens.front().column, "syntax",
                        "directive '" + tokens.front().text + "' expects " +
                            std::to_string(count - 1) + " argument(s)");
}

void handle_param(Builder& builder, const std::vector<Token>& tokens,
                  int line) {
  require_arity(tokens, 3, line);
  const std::string& key = tokens[1].text;
  const std::string& value = tokens[2].text;
  auto bad_value = [&]() -> ScenarioError {
    return {line, tokens[2].column, "param-value",
            "invalid value for param '" + key + "'"};
  };
  if (key == "p") {
    auto p = parse_double(value);
    if (!p || *p < 0.0 || *p > 1.0) throw bad_value();
    builder.params.p = *p;
  } else if (key == "k") {
    auto k = parse_number<int>(value);
    if (!k || *k < 1) throw bad_value();
    builder.params.k = *k;
  } else if (key == "n") {
    auto n = parse_number<int>(value);
    if (!n || *n < 0) throw bad_value();
    builder.params.n = *n;
  } else if (key == "trials") {
    auto trials = parse_number<long long>(value);
    if (!trials || *trials < 1) throw bad_value();
    builder.params.trials = *trials;
  } else if (key == "seed") {
    auto seed = parse_number<std::uint64_t>(value);
    if (!seed) throw bad_value();
    builder.params.seed = *seed;
  } else if (key == "max-size") {
    auto size = parse_number<int>(value);
    if (!size || *size < 0) throw bad_value();
    builder.params.max_size = *size;
  } else if (key == "grid") {
    std::vector<double> grid;
    std::stringstream stream(value);
    std::string item;
    while (std::getline(stream, item, ',')) {
      auto p = parse_double(item);
      if (!p || *p < 0.0 || *p > 1.0) throw bad_value();
      grid.push_back(*p);
    }
    if (grid.empty()) throw bad_value();
    builder.params.grid = std::move(grid);
  } else {
    throw ScenarioError(line, tokens[1].column, "param-key",
                        "unknown param '" + key + "'");
  }
}

void handle_route(Builder& builder, const std::vector<Token>& tokens,
                  int line) {
  if (tokens.size() < 4)
    throw ScenarioError(line, tokens.front().column, "syntax",
                        "route needs an index and at least two nodes");
  std::string index_text = tokens[1].text;
  if (index_text.empty() || index_text.back() != ':')
    throw ScenarioError(line, tokens[1].column, "syntax",
                        "route index must end with ':'");
  index_text.pop_back();
  auto index = parse_number<int>(index_text);
  if (!index)
    throw ScenarioError(line, tokens[1].column, "syntax",
                        "route index is not a number");
  if (*index < 0 || *index >= static_cast<int>(builder.llinks.size()))
    throw ScenarioError(line, tokens[1].column, "route-index",
                        "route index " + index_text +
                            " does not name a declared llink");
  if (builder.route_nodes[*index])
    throw ScenarioError(line, tokens[1].column, "duplicate-route",
                        "route " + index_text + " declared twice");

  std::vector<int> nodes;
  std::unordered_set<int> seen;
  for (std::size_t i = 2; i < tokens.size(); ++i) {
    const int node = builder.resolve_pnode(tokens[i], line);
    if (!seen.insert(node).second)
      throw ScenarioError(line, tokens[i].column, "repeated-node",
                          "route revisits node '" + tokens[i].text + "'");
    if (!nodes.empty()) {
      const std::pair<int, int> step{std::min(nodes.back(), node),
                                     std::max(nodes.back(), node)};
      const bool adjacent = std::find(builder.plinks.begin(),
                                      builder.plinks.end(),
                                      step) != builder.plinks.end();
      if (!adjacent)
        throw ScenarioError(line, tokens[i].column, "non-adjacent-step",
                            "no physical link to '" + tokens[i].text + "'");
    }
    nodes.push_back(node);
  }
  auto [s, t] = builder.llinks[*index];
  const int lo = std::min(nodes.front(), nodes.back());
  const int hi = std::max(nodes.front(), nodes.back());
  if (std::pair{lo, hi} != std::pair{s, t})
    throw ScenarioError(line, tokens[2].column, "route-endpoints",
                        "route endpoints do not match llink " + index_text);
  builder.route_nodes[*index] = std::move(nodes);
  builder.route_lines[*index] = line;
}

}  // namespace

ScenarioError::ScenarioError(int line_in, int column_in, std::string code_in,
                             const std::string& message)
    : std::runtime_error("line " + std::to_string(line_in) + ", col " +
                         std::to_string(column_in) + ": [" + code_in + "] " +
                         message),
      line(line_in),
      column(column_in),
      code(std::move(code_in)) {}

LayeredNetwork Scenario::network() const {
  if (!has_routing)
    throw ScenarioError(0, 0, "missing-routing",
                        "this command requires a routing section");
  return LayeredNetwork::create(physical, logical, routes);
}

Scenario parse_scenario(std::string_view text) {
  Builder builder;
  int line_number = 0;
  std::size_t position = 0;
  while (position <= text.size()) {
    const std::size_t newline = text.find('\n', position);
    const std::string_view line =
        text.substr(position, newline == std::string_view::npos
                                  ? std::string_view::npos
                                  : newline - position);
    position = newline == std::string_view::npos ? text.size() + 1
                                                 : newline + 1;
    ++line_number;
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& directive = tokens.front().text;

    if (directive == "pnode") {
      require_arity(tokens, 2, line_number);
      if (builder.pnode_index.count(tokens[1].text))
        throw ScenarioError(line_number, tokens[1].column, "duplicate-node",
                            "pnode '" + tokens[1].text + "' declared twice");
      builder.pnode_index[tokens[1].text] =
          static_cast<int>(builder.pnode_names.size());
      builder.pnode_names.push_back(tokens[1].text);
    } else if (directive == "plink") {
      require_arity(tokens, 3, line_number);
      const int u = builder.resolve_pnode(tokens[1], line_number);
      const int v = builder.resolve_pnode(tokens[2], line_number);
      if (u == v)
        throw ScenarioError(line_number, tokens[2].column, "self-loop",
                            "plink endpoints coincide");
      const auto edge = std::minmax(u, v);
      if (std::find(builder.plinks.begin(), builder.plinks.end(),
                    std::pair{edge.first, edge.second}) != builder.plinks.end())
        throw ScenarioError(line_number, tokens[1].column,
                            "duplicate-physical-link",
                            "plink declared twice");
      builder.plinks.emplace_back(edge.first, edge.second);
    } else if (directive == "lnode") {
      require_arity(tokens, 2, line_number);
      const int node = builder.resolve_pnode(tokens[1], line_number);
      if (!builder.lnode_set.insert(node).second)
        throw ScenarioError(line_number, tokens[1].column, "duplicate-node",
                            "lnode '" + tokens[1].text + "' declared twice");
      builder.lnodes.push_back(node);
    } else if (directive == "llink") {
      require_arity(tokens, 3, line_number);
      const int s = builder.resolve_pnode(tokens[1], line_number);
      const int t = builder.resolve_pnode(tokens[2], line_number);
      if (s == t)
        throw ScenarioError(line_number, tokens[2].column, "self-loop",
                            "llink endpoints coincide");
      for (auto [node, token] : {std::pair{s, 1}, std::pair{t, 2}})
        if (!builder.lnode_set.count(node))
          throw ScenarioError(line_number, tokens[token].column,
                              "not-logical-node",
                              "'" + tokens[token].text + "' is not an lnode");
      builder.llinks.emplace_back(std::min(s, t), std::max(s, t));
      builder.route_nodes.emplace_back();
      builder.route_lines.push_back(0);
    } else if (directive == "route") {
      handle_route(builder, tokens, line_number);
    } else if (directive == "param") {
      handle_param(builder, tokens, line_number);
    } else {
      throw ScenarioError(line_number, tokens.front().column, "syntax",
                          "unknown directive '" + directive + "'");
    }
  }

  Scenario scenario;
  try {
    scenario.physical = PhysicalTopology::create(builder.pnode_names,
                                                 builder.plinks);
  } catch (const std::invalid_argument& error) {
    throw ScenarioError(0, 0, "physical-invalid", error.what());
  }
  try {
    scenario.logical = LogicalTopology::create(builder.lnodes, builder.llinks,
                                               scenario.physical);
  } catch (const std::invalid_argument& error) {
    throw ScenarioError(0, 0, "logical-disconnected", error.what());
  }
  scenario.params = builder.params;

  const std::size_t declared =
      std::count_if(builder.route_nodes.begin(), builder.route_nodes.end(),
                    [](const auto& route) { return route.has_value(); });
  if (declared == 0) {
    scenario.has_routing = false;
    return scenario;
  }
  if (declared != builder.route_nodes.size()) {
    for (std::size_t e = 0; e < builder.route_nodes.size(); ++e)
      if (!builder.route_nodes[e])
        throw ScenarioError(0, 0, "missing-route",
                            "llink " + std::to_string(e) + " has no route");
  }
  scenario.has_routing = true;
  for (auto& nodes : builder.route_nodes)
    scenario.routes.push_back(PhysicalPath::create(scenario.physical, *nodes));
  return scenario;
}

}  // namespace crossrel
