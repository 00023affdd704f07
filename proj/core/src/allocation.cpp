// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#include "latsched/allocation.hpp"

#include <algorithm>
#include <cassert>

#include "latsched/errors.hpp"
#include "latsched/natural_order.hpp"

namespace latsched {

namespace {

// Lexicographic id-sequence order with digit-aware comparison; the
// tie-break for equal lengths and equal uncovered work.
bool seq_less(const TaskGraph& g, const Path& a, const Path& b) {
	std::size_t n = std::min(a.tasks.size(), b.tasks.size());
	for (std::size_t i = 0; i < n; ++i) {
		if (int c = natural_compare(g.id(a.tasks[i]), g.id(b.tasks[i])); c != 0)
			return c < 0;
	}
	return a.tasks.size() < b.tasks.size();
}

// Greedy covering rounds: each round picks the path with the most
// uncovered work and hands its uncovered tasks to a fresh processor.
// With nothing covered yet the first pick is a longest path, so the
// seeded and unseeded variants share this loop.
void cover_rounds(const TaskGraph& g, const PathSet& ps, std::vector<bool>& covered,
                  std::vector<int>& proc_of, int& next_proc, std::vector<int>& selection) {
	std::vector<bool> selected(ps.paths.size(), false);
	std::vector<bool> under(g.task_count(), false);
	std::size_t missing = 0;
	for (const auto& p : ps.paths) {
		for (int t : p.tasks) {
			if (!under[t]) {
				under[t] = true;
				if (!covered[t]) ++missing;
			}
		}
	}

	while (missing > 0) {
		int best = -1;
		std::int64_t best_gain = -1;
		for (std::size_t i = 0; i < ps.paths.size(); ++i) {
			if (selected[i]) continue;
			std::int64_t gain = 0;
			for (int t : ps.paths[i].tasks)
				if (!covered[t]) gain += g.wcet(t);
			if (gain > best_gain ||
			    (gain == best_gain && best >= 0 &&
			     seq_less(g, ps.paths[i], ps.paths[best]))) {
				best = static_cast<int>(i);
				best_gain = gain;
			}
		}
		assert(best >= 0 && best_gain > 0);  // every uncovered task lies on some path
		selected[best] = true;
		selection.push_back(best);
		for (int t : ps.paths[best].tasks) {
			if (!covered[t]) {
				covered[t] = true;
				proc_of[t] = next_proc;
				--missing;
			}
		}
		++next_proc;
	}
}

}  // namespace

Allocation allocate(const TaskGraph& g, const LatencyConstraint& c, std::size_t cap) {
	Allocation alloc;
	alloc.constraint = c;
	alloc.path_set = enumerate_paths(g, c.source, c.sink, cap);
	alloc.proc_of.assign(g.task_count(), -1);
	std::vector<bool> covered(g.task_count(), false);
	int next_proc = 0;
	cover_rounds(g, alloc.path_set, covered, alloc.proc_of, next_proc, alloc.selection);
	alloc.m = next_proc;
	return alloc;
}

PairAllocation allocate_pair(const TaskGraph& g, const LatencyConstraint& c1,
                             const LatencyConstraint& c2, std::size_t cap) {
	PairAllocation pa;
	pa.c1 = allocate(g, c1, cap);
	pa.c2 = allocate(g, c2, cap);

	pa.combined = pa.c1.proc_of;
	std::vector<bool> covered(g.task_count(), false);
	for (std::size_t t = 0; t < covered.size(); ++t) covered[t] = pa.combined[t] >= 0;

	bool shares = false;
	for (const auto& p : pa.c2.path_set.paths)
		for (int t : p.tasks) shares = shares || covered[t];
	pa.shares_tasks = shares;

	int next_proc = pa.c1.m;
	cover_rounds(g, pa.c2.path_set, covered, pa.combined, next_proc, pa.selection2);
	pa.m_combined = next_proc;
	return pa;
}

std::vector<std::pair<int, int>> check_parallelism_optimality(const TaskGraph& g,
                                                              const Allocation& alloc) {
	// Group tasks by processor, then flag same-processor pairs with no
	// linking path in either direction.
	std::vector<std::vector<int>> per_proc(alloc.m);
	for (std::size_t t = 0; t < alloc.proc_of.size(); ++t)
		if (alloc.proc_of[t] >= 0) per_proc[alloc.proc_of[t]].push_back(static_cast<int>(t));

	std::vector<std::pair<int, int>> missed;
	for (const auto& tasks : per_proc) {
		for (std::size_t i = 0; i < tasks.size(); ++i) {
			auto fwd = g.reachable_from(tasks[i]);
			for (std::size_t j = i + 1; j < tasks.size(); ++j) {
				if (fwd[tasks[j]]) continue;
				auto bwd = g.reachable_from(tasks[j]);
				if (!bwd[tasks[i]]) missed.emplace_back(tasks[i], tasks[j]);
			}
		}
	}
	std::sort(missed.begin(), missed.end());
	return missed;
}

}  // namespace latsched
