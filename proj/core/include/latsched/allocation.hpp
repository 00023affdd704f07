// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "latsched/paths.hpp"
#include "latsched/task_graph.hpp"

namespace latsched {

/// Result of the greedy path-cover allocation for one constraint.
///
/// Paths are selected by descending uncovered work; each selected path
/// claims its not-yet-covered tasks for a fresh processor, so a task always
/// executes on the processor of the first path that claimed it.  The first
/// selection is necessarily a longest path.  m counts the selected paths
/// (= processors used).
struct Allocation {
	LatencyConstraint constraint;
	PathSet path_set;             // full enumeration, deterministic order
	std::vector<int> selection;   // indices into path_set.paths, in selection order
	std::vector<int> proc_of;     // task index -> processor, -1 if not under the constraint
	int m = 0;
};

Allocation allocate(const TaskGraph& g, const LatencyConstraint& c,
                    std::size_t cap = kDefaultPathCap);

/// Joint allocation for a constraint pair: run the allocator on c1, then
/// on c2 with coverage pre-seeded by c1's assignment, so shared tasks keep
/// their processor and only genuinely new work claims fresh processors.
/// m_combined counts the processors of the merged assignment; m1/m2 are
/// the standalone counts used by the pairwise conditions.
struct PairAllocation {
	Allocation c1;               // standalone run
	Allocation c2;               // standalone run (provides m2 and c2's path set)
	std::vector<int> combined;   // task -> processor over both constraints
	std::vector<int> selection2; // c2 paths selected in the seeded second run
	int m_combined = 0;
	bool shares_tasks = false;
};

PairAllocation allocate_pair(const TaskGraph& g, const LatencyConstraint& c1,
                             const LatencyConstraint& c2,
                             std::size_t cap = kDefaultPathCap);

/// Pairs of tasks placed on one processor although no precedence path
/// links them (they could have run in parallel).  Empty for every
/// allocation produced by allocate(); kept as a checkable witness of that
/// property.  Pairs are (index, index), ascending, deterministic order.
std::vector<std::pair<int, int>> check_parallelism_optimality(const TaskGraph& g,
                                                              const Allocation& alloc);

}  // namespace latsched
