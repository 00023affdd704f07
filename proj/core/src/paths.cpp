// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#include "latsched/paths.hpp"

#include <algorithm>

#include "latsched/errors.hpp"

namespace latsched {

PathSet enumerate_paths(const TaskGraph& g, std::string_view source,
                        std::string_view sink, std::size_t cap) {
	int src = g.require(source);
	int dst = g.require(sink);
	if (src == dst) throw NoPathError(std::string(source), std::string(sink));

	// Restricting the walk to tasks that can still reach the sink makes
	// every DFS leaf a complete path.
	std::vector<bool> useful = g.reaching(dst);

	PathSet out;
	out.source = src;
	out.sink = dst;

	std::vector<int> current{src};
	std::int64_t length = g.wcet(src);
	// Successor lists are sorted by natural id order, so plain DFS emits
	// paths in lexicographic order of their id sequences.
	auto walk = [&](auto&& self, int u) -> void {
		if (u == dst) {
			if (out.paths.size() >= cap)
				throw PathExplosionError(std::string(source), std::string(sink), cap);
			out.paths.push_back({current, length});
			return;
		}
		for (int v : g.successors(u)) {
			if (!useful[v]) continue;
			current.push_back(v);
			length += g.wcet(v);
			self(self, v);
			length -= g.wcet(v);
			current.pop_back();
		}
	};
	if (useful[src]) walk(walk, src);

	if (out.paths.empty()) throw NoPathError(std::string(source), std::string(sink));
	out.parts = decompose(g, out.paths);
	return out;
}

PathDecomposition decompose(const TaskGraph& g, std::span<const Path> paths) {
	PathDecomposition parts;
	parts.exclusive.resize(paths.size());
	parts.exclusive_wcet.assign(paths.size(), 0);
	if (paths.empty()) return parts;

	std::vector<int> membership(g.task_count(), 0);
	for (const auto& p : paths)
		for (int t : p.tasks) ++membership[t];

	for (std::size_t i = 0; i < g.task_count(); ++i) {
		if (membership[i] == static_cast<int>(paths.size())) {
			parts.shared.push_back(static_cast<int>(i));
			parts.shared_wcet += g.wcet(static_cast<int>(i));
		}
	}
	if (paths.size() == 1) return parts;  // everything is shared, nothing exclusive

	for (std::size_t pi = 0; pi < paths.size(); ++pi) {
		for (int t : paths[pi].tasks) {
			if (membership[t] == 1) {
				parts.exclusive[pi].push_back(t);
				parts.exclusive_wcet[pi] += g.wcet(t);
			}
		}
		std::sort(parts.exclusive[pi].begin(), parts.exclusive[pi].end());
	}
	return parts;
}

std::vector<std::string> path_ids(const TaskGraph& g, const Path& p) {
	std::vector<std::string> ids;
	ids.reserve(p.tasks.size());
	for (int t : p.tasks) ids.push_back(g.id(t));
	return ids;
}

}  // namespace latsched
