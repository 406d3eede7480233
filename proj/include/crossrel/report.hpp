#pragma once

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <vector>

#include "crossrel/augmentation.hpp"
#include "crossrel/graph.hpp"
#include "crossrel/mclst_design.hpp"
#include "crossrel/ordering.hpp"
#include "crossrel/reliability.hpp"
#include "crossrel/rerouting.hpp"

// Structured reports. Key order is fixed by construction and nothing
// time-dependent is emitted, so identical inputs yield identical bytes.

namespace crossrel {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

// Doubling ramp 0.001*2^i below 0.1, then 0.1 .. 0.9 in steps of 0.1.
std::vector<double> default_p_grid();

Json analyze_report(const LayeredNetwork& net, const std::vector<double>& grid,
                    std::optional<int> max_size,
                    const EnumerationLimits& limits = {});

Json compare_report(const LayeredNetwork& first, const LayeredNetwork& second,
                    const EnumerationLimits& limits = {});

Json reroute_report(const LayeredNetwork& net, int k, bool iterate,
                    const EnumerationLimits& limits = {});

Json augment_report(const LayeredNetwork& net, int additions, int k,
                    double trace_p, const EnumerationLimits& limits = {});

Json design_report(const PhysicalTopology& physical,
                   const LogicalTopology& logical,
                   const MclstDesignOptions& options,
                   const EnumerationLimits& limits = {});

Json montecarlo_report(const LayeredNetwork& net, double p, long long trials,
                       std::uint64_t seed, const EnumerationLimits& limits = {});

// Exhaustive cross-checks of the enumeration machinery; the test-harness
// entry point. all_pass mirrors the per-check verdicts.
Json oracle_report(const LayeredNetwork& net, std::optional<int> max_size,
                   const EnumerationLimits& limits = {});

}  // namespace crossrel
