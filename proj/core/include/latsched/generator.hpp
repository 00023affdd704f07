// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latsched/comm_model.hpp"
#include "latsched/configuration.hpp"
#include "latsched/task_graph.hpp"

namespace latsched {

/// Parameters for the random two-constraint (X configuration) instances.
///
/// density is the fraction of the n(n-1)/2 orderable task pairs that carry
/// an edge; the emitted edge count is round(density * n(n-1)/2) exactly.
/// Identical specs produce byte-identical instances.
struct GeneratorSpec {
	int n = 12;               // >= 6: both membership groups and 4 endpoints
	double density = 0.4;     // in (0, 1]
	std::uint64_t seed = 0;
	std::int64_t wcet_min = 1;
	std::int64_t wcet_max = 10;
};

struct GeneratedInstance {
	TaskGraph graph;
	LatencyConstraint c1, c2;
	CommModel comm;  // linear, q = 0
	// membership groups as drawn (task ids); the graph may put further
	// tasks under a constraint via the cross edges
	std::vector<std::string> group1, group2, group_both;
};

/// Builds a random DAG whose two latency constraints are mutually
/// dependent (X): ~40% of tasks under the first constraint, ~40% under
/// the second, the rest under both; a backbone path per constraint
/// threads its group through the shared tasks, one cross edge per
/// direction ties the groups together, and the remaining edge budget is
/// spent on random forward edges within the groups.  Constraint bounds
/// are set to the total WCET (loose enough to be analysable out of the
/// box).  Throws InfeasibleSpecError when the budget cannot cover the
/// backbone or exceeds what the grouped structure can host.
GeneratedInstance generate_x_instance(const GeneratorSpec& spec);

/// Recomputed facts about an instance, used to assert generator output.
struct InstanceStats {
	int tasks = 0;
	int edges = 0;
	double density = 0.0;
	int under_1_only = 0, under_2_only = 0, under_both = 0;
	std::size_t paths_1 = 0, paths_2 = 0;
	PairKind kind = PairKind::parallel;
};

InstanceStats instance_stats(const TaskGraph& g, const LatencyConstraint& c1,
                             const LatencyConstraint& c2,
                             std::size_t cap = kDefaultPathCap);

}  // namespace latsched
