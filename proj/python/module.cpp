#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "crossrel/augmentation.hpp"
#include "crossrel/errors.hpp"
#include "crossrel/graph.hpp"
#include "crossrel/mclst_design.hpp"
#include "crossrel/ordering.hpp"
#include "crossrel/reliability.hpp"
#include "crossrel/report.hpp"
#include "crossrel/rerouting.hpp"
#include "crossrel/scenario.hpp"

namespace py = pybind11;
using namespace crossrel;

namespace {

py::object big_to_int(const BigInt& value) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(value.str().c_str(), nullptr, 10));
}

py::object opt_big(const std::optional<BigInt>& value) {
  return value ? big_to_int(*value) : py::none();
}

py::dict rational_dict(const BigRat& value) {
  py::dict out;
  out["rational"] = to_string(value);
  out["decimal"] = to_double(value);
  return out;
}

py::list path_names(const PhysicalTopology& physical, const PhysicalPath& path) {
  py::list names;
  for (int node : path.nodes()) names.append(physical.node_name(node));
  return names;
}

const char* direction_name(Direction direction) {
  switch (direction) {
    case Direction::first_smaller: return "first_smaller";
    case Direction::second_smaller: return "second_smaller";
    default: return "equal";
  }
}

py::dict comparison_dict(const LexComparison& comparison) {
  py::dict out;
  out["direction"] = direction_name(comparison.direction);
  out["first_diff"] = comparison.first_diff ? py::cast(*comparison.first_diff)
                                            : py::none();
  out["k"] = comparison.degree ? py::cast(*comparison.degree) : py::none();
  out["p0"] = comparison.regime_bound ? py::object(rational_dict(*comparison.regime_bound))
                                      : py::object(py::none());
  py::list terms;
  for (const auto& term : comparison.bounds) {
    py::dict row;
    row["j"] = term.j;
    row["delta"] = big_to_int(term.delta);
    row["residual"] = term.residual ? py::object(rational_dict(*term.residual))
                                    : py::object(py::none());
    row["bound"] = rational_dict(term.bound);
    row["promoted"] = term.promoted;
    terms.append(row);
  }
  out["terms"] = terms;
  return out;
}

py::dict reroute_plan_dict(const LayeredNetwork& net, const ReroutePlan& plan) {
  py::dict out;
  out["link"] = plan.link;
  out["feasible"] = plan.feasible;
  out["changed"] = plan.changed;
  out["has_alternative"] = plan.has_alternative;
  out["old_path"] = path_names(net.physical(), plan.old_path);
  out["new_path"] = path_names(net.physical(), plan.new_path);
  out["predicted_n_d"] = big_to_int(plan.predicted_n_d);
  out["mclc_after"] = plan.mclc_after;
  out["mclc_count_after"] = big_to_int(plan.mclc_count_after);
  out["result_vector"] = py::cast(plan.result_vector);
  return out;
}

py::dict augment_plan_dict(const LayeredNetwork& net, const AugmentPlan& plan) {
  py::dict out;
  out["s"] = net.physical().node_name(plan.s);
  out["t"] = net.physical().node_name(plan.t);
  out["feasible"] = plan.feasible;
  out["path"] = plan.feasible ? py::object(path_names(net.physical(), plan.path))
                              : py::object(py::none());
  out["candidate_cuts"] = plan.candidate_cuts;
  out["converted"] = plan.converted;
  out["predicted_n_d"] = big_to_int(plan.predicted_n_d);
  out["mclc_after"] = plan.mclc_after;
  out["mclc_count_after"] = big_to_int(plan.mclc_count_after);
  out["result_vector"] = py::cast(plan.result_vector);
  return out;
}

}  // namespace

PYBIND11_MODULE(crossrel, m) {
  m.doc() = "Cross-layer reliability of layered networks";

  py::register_exception<BudgetError>(m, "BudgetError");
  py::register_exception<NoPathError>(m, "NoPathError");
  py::register_exception<ScenarioError>(m, "ScenarioParseError");

  py::class_<LayeredNetwork>(m, "LayeredNetwork")
      .def_property_readonly("physical_links",
                             [](const LayeredNetwork& net) {
                               return net.physical().link_count();
                             })
      .def_property_readonly("logical_links",
                             [](const LayeredNetwork& net) {
                               return net.logical().link_count();
                             })
      .def_property_readonly("routes",
                             [](const LayeredNetwork& net) {
                               py::list routes;
                               for (const auto& route : net.routes())
                                 routes.append(
                                     path_names(net.physical(), route));
                               return routes;
                             });

  py::class_<Scenario>(m, "Scenario")
      .def_readonly("has_routing", &Scenario::has_routing)
      .def("network", &Scenario::network);

  py::class_<CutVector>(m, "CutVector")
      .def_property_readonly("m", [](const CutVector& v) { return v.m; })
      .def_property_readonly("complete", &CutVector::complete)
      .def_property_readonly("known_up_to",
                             [](const CutVector& v) { return v.known_up_to; })
      .def_property_readonly("counts",
                             [](const CutVector& v) {
                               py::list counts;
                               for (int i = 0; i <= v.known_up_to; ++i)
                                 counts.append(big_to_int(v.counts[i]));
                               return counts;
                             })
      .def_property_readonly("mclc_d",
                             [](const CutVector& v) {
                               return v.mclc_d ? py::cast(*v.mclc_d)
                                               : py::none();
                             })
      .def_property_readonly("mclc_count",
                             [](const CutVector& v) { return opt_big(v.mclc_count); })
      .def_property_readonly("colex_c",
                             [](const CutVector& v) {
                               return v.colex_c ? py::cast(*v.colex_c)
                                                : py::none();
                             })
      .def("__eq__", [](const CutVector& a, const CutVector& b) { return a == b; });

  m.def("parse_scenario",
        [](const std::string& text) { return parse_scenario(text); },
        py::arg("text"));

  m.def("cut_vector",
        [](const LayeredNetwork& net, std::optional<int> max_size) {
          return cut_vector(net, max_size);
        },
        py::arg("net"), py::arg("max_size") = py::none());

  m.def("failure_probability", &failure_probability, py::arg("vector"),
        py::arg("p"));

  m.def("polynomial_coefficients",
        [](const CutVector& vector) {
          py::list out;
          for (const auto& c : FailurePolynomial(vector).coefficients())
            out.append(big_to_int(c));
          return out;
        },
        py::arg("vector"));

  m.def("mclc",
        [](const LayeredNetwork& net) {
          auto [d, count] = mclc(net);
          return py::make_tuple(d, big_to_int(count));
        },
        py::arg("net"));

  m.def("mclst",
        [](const LayeredNetwork& net) {
          const auto stats = mclst(net);
          return py::make_tuple(stats.mclst_size, big_to_int(stats.mclst_count));
        },
        py::arg("net"));

  m.def("monte_carlo_failure",
        [](const LayeredNetwork& net, double p, long long trials,
           std::uint64_t seed) {
          const auto estimate = monte_carlo_failure(net, p, trials, seed);
          py::dict out;
          out["estimate"] = estimate.estimate;
          out["trials"] = estimate.trials;
          out["seed"] = estimate.seed;
          out["std_error"] = estimate.std_error;
          return out;
        },
        py::arg("net"), py::arg("p"), py::arg("trials"), py::arg("seed"));

  m.def("lex_compare",
        [](const CutVector& a, const CutVector& b) {
          return comparison_dict(lex_compare(a, b));
        });
  m.def("k_lex_degree", &k_lex_degree);
  m.def("low_regime_bound_simple",
        [](const CutVector& a, const CutVector& b) {
          return rational_dict(low_regime_bound_simple(a, b));
        });
  m.def("low_regime_bound",
        [](const CutVector& a, const CutVector& b) {
          return comparison_dict(low_regime_bound(a, b));
        });
  m.def("colex_compare",
        [](const CutVector& a, const CutVector& b) {
          return comparison_dict(colex_compare(a, b));
        });
  m.def("k_colex_degree", &k_colex_degree);
  m.def("high_regime_bound",
        [](const CutVector& a, const CutVector& b) {
          return comparison_dict(high_regime_bound(a, b));
        });

  m.def("dominance_check",
        [](const CutVector& a, const CutVector& b) {
          const auto result = dominance_check(a, b);
          py::dict out;
          const char* names[] = {"uniform-dominant", "both-partial",
                                 "low-regime", "high-regime", "incomparable"};
          out["classification"] = names[static_cast<int>(result.classification)];
          out["favored"] = direction_name(result.favored);
          out["forward_dominant"] = result.forward_dominant;
          out["backward_dominant"] = result.backward_dominant;
          out["lex"] = comparison_dict(result.lex);
          out["colex"] = comparison_dict(result.colex);
          return out;
        });

  m.def("reroute_sp",
        [](const LayeredNetwork& net, int link, int k) {
          const auto classification = classify_states(net);
          return reroute_plan_dict(net, reroute_sp(net, classification, link, k));
        },
        py::arg("net"), py::arg("link"), py::arg("k") = 10);

  m.def("exact_reroute_oracle",
        [](const LayeredNetwork& net, int link, long long budget) {
          return reroute_plan_dict(net, exact_reroute_oracle(net, link, budget));
        },
        py::arg("net"), py::arg("link"), py::arg("budget") = 100000);

  m.def("iterative_reroute",
        [](const LayeredNetwork& net, int k) {
          const auto trace = iterative_reroute(net, k);
          py::list steps;
          for (const auto& step : trace.steps) {
            py::dict row;
            row["iteration"] = step.iteration;
            row["link"] = step.link;
            row["new_path"] = path_names(net.physical(), step.new_path);
            row["d"] = step.d;
            row["n_d"] = big_to_int(step.n_d);
            steps.append(row);
          }
          return py::make_tuple(trace.network, steps);
        },
        py::arg("net"), py::arg("k") = 10);

  m.def("best_augmentation",
        [](const LayeredNetwork& net, int k) {
          return augment_plan_dict(net, best_augmentation(net, k));
        },
        py::arg("net"), py::arg("k") = 10);

  m.def("iterative_augment",
        [](const LayeredNetwork& net, int n, int k, double p) {
          const auto trace = iterative_augment(net, n, k, p);
          py::list steps;
          for (const auto& step : trace.steps) {
            py::dict row;
            row["iteration"] = step.iteration;
            row["s"] = net.physical().node_name(step.s);
            row["t"] = net.physical().node_name(step.t);
            row["path"] = path_names(net.physical(), step.path);
            row["converted"] = step.converted;
            row["d"] = step.d;
            row["n_d"] = big_to_int(step.n_d);
            row["failure_at_p"] = step.failure_at_p;
            steps.append(row);
          }
          return py::make_tuple(trace.network, steps);
        },
        py::arg("net"), py::arg("n") = 1, py::arg("k") = 10,
        py::arg("p") = 0.1);

  m.def("cross_layer_spanning_trees",
        [](const LayeredNetwork& net) {
          const auto stats = cross_layer_spanning_trees(net);
          return py::make_tuple(stats.size, big_to_int(stats.count));
        },
        py::arg("net"));

  m.def("design_min_mclst_routing",
        [](const Scenario& scenario, int k, bool exact) {
          MclstDesignOptions options;
          options.candidate_paths = k;
          options.exact = exact;
          return design_min_mclst_routing(scenario.physical, scenario.logical,
                                          options);
        },
        py::arg("scenario"), py::arg("k") = 8, py::arg("exact") = false);

  m.def("analyze_json",
        [](const LayeredNetwork& net,
           std::optional<std::vector<double>> grid) {
          return analyze_report(net, grid ? *grid : default_p_grid(),
                                std::nullopt)
              .dump(2);
        },
        py::arg("net"), py::arg("grid") = py::none());

  m.def("default_p_grid", &default_p_grid);
}
