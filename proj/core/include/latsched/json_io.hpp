// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "latsched/analysis.hpp"
#include "latsched/allocation.hpp"
#include "latsched/comm_model.hpp"
#include "latsched/oracle.hpp"
#include "latsched/task_graph.hpp"

namespace latsched {

// ordered_json keeps keys in insertion order, so emitted files are stable
// and diffable run-to-run.
using json = nlohmann::ordered_json;

/// One analysable problem: the DAG, its latency constraints and the
/// communication model.  File layout:
///
///   {
///     "tasks":       [{"id": "t1", "wcet": 3}, ...],
///     "edges":       [["t1", "t2"], ...],
///     "constraints": [{"source": "t1", "sink": "t7", "bound": 17}, ...],
///     "comm":        {"model": "linear", "q": 5}
///   }
///
/// "edges", "constraints" and "comm" may be omitted (defaults: none, none,
/// linear with q = 0).  q accepts integers, decimals and "num/den" strings;
/// the logarithmic model takes an optional integer "base" (default 2).
struct Instance {
	TaskGraph graph;
	std::vector<LatencyConstraint> constraints;
	CommModel comm;
};

Instance parse_instance(const json& j);
Instance parse_instance_text(std::string_view text);
Instance load_instance(const std::string& path);

json to_json(const Instance& inst);
void save_json(const json& j, const std::string& path);

json to_json(const ValidationReport& report);
json to_json(const TaskGraph& g, const PathSet& ps);
/// {"m": ..., "assignment": {"t1": 0, ...}, "selected_paths": [["t1", ...], ...]}
json to_json(const TaskGraph& g, const Allocation& alloc);
json to_json(const SingleVerdict& v);
json to_json(const XVerdict& v);
json to_json(const LowerBounds& lb);
json to_json(const SystemReport& report);
json to_json(const TaskGraph& g, const Schedule& s);
json to_json(const TaskGraph& g, const OracleResult& r);
json to_json(const RhoResult& r);

/// Integral costs such as "7" become JSON numbers; anything else ("7/2",
/// "4 + 2*log2(3)") is emitted as its exact text form.
json cost_json(const Cost& c);
json rational_json(const Rational& r);

}  // namespace latsched
