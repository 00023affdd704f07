// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "latsched/paths.hpp"
#include "latsched/task_graph.hpp"

namespace latsched {

/// How two latency constraints relate:
///  - parallel: no path links the tasks under one to the tasks under the other
///  - z:        links exist in exactly one direction
///  - x:        links exist in both directions (mutually dependent)
enum class PairKind { parallel, z, x };

/// `link_1to2` / `link_2to1` carry one witness path per linked direction,
/// from a task under the first constraint to a task under the second (or
/// vice versa).  A task under both constraints links the pair in both
/// directions by itself, giving a single-task witness.
struct PairConfiguration {
	PairKind kind = PairKind::parallel;
	std::optional<std::vector<int>> link_1to2;
	std::optional<std::vector<int>> link_2to1;
};

PairConfiguration classify_pair(const TaskGraph& g, const LatencyConstraint& c1,
                                const LatencyConstraint& c2);

/// Tasks lying on at least one source-to-sink path of the constraint,
/// endpoints included.  Throws NoPathError when no path exists.
std::vector<bool> tasks_under(const TaskGraph& g, const LatencyConstraint& c);

const char* to_string(PairKind kind);

}  // namespace latsched
