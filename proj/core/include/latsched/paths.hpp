// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "latsched/task_graph.hpp"

namespace latsched {

inline constexpr std::size_t kDefaultPathCap = 100000;

/// A simple source-to-sink path; tasks are graph indices in path order,
/// length is the sum of their WCETs.
struct Path {
	std::vector<int> tasks;
	std::int64_t length = 0;
};

/// Tasks on every path vs. tasks owned by exactly one path.
///
/// `shared` is the intersection of all task sets; `exclusive[i]` holds the
/// tasks of paths[i] that appear on no other path (and, for a single-path
/// set, is empty so the two parts stay disjoint).  Tasks on some but not
/// all paths belong to neither part.
struct PathDecomposition {
	std::vector<int> shared;                  // ascending graph index
	std::vector<std::vector<int>> exclusive;  // one entry per path
	std::int64_t shared_wcet = 0;
	std::vector<std::int64_t> exclusive_wcet;
};

struct PathSet {
	int source = -1;
	int sink = -1;
	std::vector<Path> paths;  // lexicographic by task-id sequence (digit-aware)
	PathDecomposition parts;  // over all enumerated paths
};

/// All simple paths from source to sink, in deterministic digit-aware
/// lexicographic order of their id sequences.
///
/// Throws NoPathError when the set is empty and PathExplosionError as soon
/// as more than `cap` paths exist.  Branches that cannot reach the sink
/// are pruned up front, so the cost is linear in the emitted output.
PathSet enumerate_paths(const TaskGraph& g, std::string_view source,
                        std::string_view sink, std::size_t cap = kDefaultPathCap);

/// Shared/exclusive split for an arbitrary collection of paths (the
/// analysis applies it to the allocator's selected subset).
PathDecomposition decompose(const TaskGraph& g, std::span<const Path> paths);

std::vector<std::string> path_ids(const TaskGraph& g, const Path& p);

}  // namespace latsched
