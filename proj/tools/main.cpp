#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "crossrel/errors.hpp"
#include "crossrel/report.hpp"
#include "crossrel/scenario.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInfeasible = 4;

crossrel::Scenario load_scenario(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) {
    crossrel::ScenarioError error(0, 0, "io", "cannot read '" + path + "'");
    std::cerr << path << ": " << error.what() << "\n";
    throw error;
  }
  std::stringstream buffer;
  buffer << stream.rdbuf();
  try {
    return crossrel::parse_scenario(buffer.str());
  } catch (crossrel::ScenarioError& error) {
    std::cerr << path << ": " << error.what() << "\n";
    throw;
  }
}

void emit(const crossrel::Json& report) { std::cout << report.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cross-layer reliability analysis for layered networks"};
  app.require_subcommand(1);

  std::string scenario_path, second_path;
  std::optional<int> max_size_flag;
  std::optional<double> p_flag;
  std::optional<int> k_flag, n_flag;
  std::optional<long long> trials_flag;
  std::optional<std::uint64_t> seed_flag;
  std::string grid_flag;
  bool iterate = false, exact = false;

  auto* analyze = app.add_subcommand("analyze",
                                     "Cut vector, MCLC, MCLST, F(p) samples");
  analyze->add_option("scenario", scenario_path)->required();
  analyze->add_option("--max-size", max_size_flag,
                      "enumerate cut sizes up to this bound only");
  analyze->add_option("--grid", grid_flag, "comma-separated p grid");

  auto* compare = app.add_subcommand("compare",
                                     "Orderings, regime bounds, dominance");
  compare->add_option("first", scenario_path)->required();
  compare->add_option("second", second_path)->required();

  auto* reroute = app.add_subcommand("reroute", "Single-lightpath rerouting");
  reroute->add_option("scenario", scenario_path)->required();
  reroute->add_option("--k", k_flag, "candidate paths per link");
  reroute->add_flag("--iterate", iterate, "repeat until locally optimal");

  auto* augment = app.add_subcommand("augment", "Logical topology augmentation");
  augment->add_option("scenario", scenario_path)->required();
  augment->add_option("--n", n_flag, "number of links to add");
  augment->add_option("--k", k_flag, "candidate paths per pair");
  augment->add_option("--p", p_flag, "probability used in the step trace");

  auto* design = app.add_subcommand("design-mclst",
                                    "Routing minimizing the MCLST size");
  design->add_option("scenario", scenario_path)->required();
  design->add_option("--k", k_flag, "candidate paths per logical link");
  design->add_flag("--exact", exact, "exhaustive assignment search");

  auto* montecarlo = app.add_subcommand("montecarlo",
                                        "Sampled failure probability");
  montecarlo->add_option("scenario", scenario_path)->required();
  montecarlo->add_option("--p", p_flag, "link failure probability");
  montecarlo->add_option("--trials", trials_flag, "number of trials");
  montecarlo->add_option("--seed", seed_flag, "pseudo-random seed");

  auto* oracle = app.add_subcommand("oracle",
                                    "Exhaustive enumeration cross-checks");
  oracle->add_option("scenario", scenario_path)->required();
  oracle->add_option("--max-size", max_size_flag,
                     "enumerate cut sizes up to this bound only");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      const auto scenario = load_scenario(scenario_path);
      std::vector<double> grid = crossrel::default_p_grid();
      if (scenario.params.grid) grid = *scenario.params.grid;
      if (!grid_flag.empty()) {
        grid.clear();
        std::stringstream stream(grid_flag);
        std::string item;
        while (std::getline(stream, item, ',')) grid.push_back(std::stod(item));
      }
      auto max_size = max_size_flag ? max_size_flag : scenario.params.max_size;
      emit(crossrel::analyze_report(scenario.network(), grid, max_size));
    } else if (compare->parsed()) {
      const auto first = load_scenario(scenario_path);
      const auto second = load_scenario(second_path);
      emit(crossrel::compare_report(first.network(), second.network()));
    } else if (reroute->parsed()) {
      const auto scenario = load_scenario(scenario_path);
      const int k = k_flag.value_or(scenario.params.k.value_or(10));
      emit(crossrel::reroute_report(scenario.network(), k, iterate));
    } else if (augment->parsed()) {
      const auto scenario = load_scenario(scenario_path);
      const int k = k_flag.value_or(scenario.params.k.value_or(10));
      const int n = n_flag.value_or(scenario.params.n.value_or(1));
      const double p = p_flag.value_or(scenario.params.p.value_or(0.1));
      emit(crossrel::augment_report(scenario.network(), n, k, p));
    } else if (design->parsed()) {
      const auto scenario = load_scenario(scenario_path);
      crossrel::MclstDesignOptions options;
      options.candidate_paths = k_flag.value_or(scenario.params.k.value_or(8));
      options.exact = exact;
      emit(crossrel::design_report(scenario.physical, scenario.logical,
                                   options));
    } else if (montecarlo->parsed()) {
      const auto scenario = load_scenario(scenario_path);
      if (!p_flag && !scenario.params.p)
        throw std::invalid_argument("montecarlo requires --p or a p param");
      const double p = p_flag.value_or(scenario.params.p.value_or(0.0));
      const long long trials =
          trials_flag.value_or(scenario.params.trials.value_or(100000));
      const std::uint64_t seed =
          seed_flag.value_or(scenario.params.seed.value_or(1));
      emit(crossrel::montecarlo_report(scenario.network(), p, trials, seed));
    } else if (oracle->parsed()) {
      const auto scenario = load_scenario(scenario_path);
      auto max_size = max_size_flag ? max_size_flag : scenario.params.max_size;
      const auto report =
          crossrel::oracle_report(scenario.network(), max_size);
      emit(report);
      return report["all_pass"].get<bool>() ? 0 : 1;
    }
  } catch (const crossrel::ScenarioError& error) {
    // load_scenario already printed file-anchored diagnostics.
    if (error.code == "missing-routing") std::cerr << error.what() << "\n";
    return kExitParse;
  } catch (const crossrel::BudgetError& error) {
    std::cerr << "budget exceeded: " << error.what() << "\n";
    return kExitBudget;
  } catch (const crossrel::NoPathError& error) {
    std::cerr << "infeasible: " << error.what() << "\n";
    return kExitInfeasible;
  } catch (const std::invalid_argument& error) {
    std::cerr << "invalid input: " << error.what() << "\n";
    return kExitParse;
  }
  return 0;
}
