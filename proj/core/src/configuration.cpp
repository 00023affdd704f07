// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#include "latsched/configuration.hpp"

#include <algorithm>

#include "latsched/errors.hpp"
#include "latsched/natural_order.hpp"

namespace latsched {

std::vector<bool> tasks_under(const TaskGraph& g, const LatencyConstraint& c) {
	int src = g.require(c.source);
	int dst = g.require(c.sink);
	auto fwd = g.reachable_from(src);
	auto bwd = g.reaching(dst);
	if (!fwd[dst]) throw NoPathError(c.source, c.sink);
	std::vector<bool> under(g.task_count(), false);
	for (std::size_t i = 0; i < under.size(); ++i) under[i] = fwd[i] && bwd[i];
	return under;
}

namespace {

std::vector<int> sorted_members(const TaskGraph& g, const std::vector<bool>& set) {
	std::vector<int> out;
	for (std::size_t i = 0; i < set.size(); ++i)
		if (set[i]) out.push_back(static_cast<int>(i));
	std::sort(out.begin(), out.end(),
	          [&g](int a, int b) { return natural_less(g.id(a), g.id(b)); });
	return out;
}

// Lexicographically smallest u->v walk: always follow the smallest-id
// successor that can still reach v.
std::vector<int> witness_path(const TaskGraph& g, int u, int v) {
	std::vector<int> path{u};
	if (u == v) return path;
	auto to_v = g.reaching(v);
	int cur = u;
	while (cur != v) {
		for (int next : g.successors(cur)) {  // successors sorted by natural id
			if (to_v[next]) {
				path.push_back(next);
				cur = next;
				break;
			}
		}
	}
	return path;
}

// First (u, v) pair in natural order with u in `from`, v in `to`, and v
// reachable from u; reachability is reflexive, so a task under both
// constraints links the directions by itself.
std::optional<std::vector<int>> find_link(const TaskGraph& g, const std::vector<bool>& from,
                                          const std::vector<bool>& to) {
	for (int u : sorted_members(g, from)) {
		auto fwd = g.reachable_from(u);
		int best = -1;
		for (std::size_t v = 0; v < to.size(); ++v) {
			if (!to[v] || !fwd[v]) continue;
			if (best < 0 || natural_less(g.id(static_cast<int>(v)), g.id(best)))
				best = static_cast<int>(v);
		}
		if (best >= 0) return witness_path(g, u, best);
	}
	return std::nullopt;
}

}  // namespace

PairConfiguration classify_pair(const TaskGraph& g, const LatencyConstraint& c1,
                                const LatencyConstraint& c2) {
	auto under1 = tasks_under(g, c1);
	auto under2 = tasks_under(g, c2);

	PairConfiguration conf;
	conf.link_1to2 = find_link(g, under1, under2);
	conf.link_2to1 = find_link(g, under2, under1);
	if (conf.link_1to2 && conf.link_2to1)
		conf.kind = PairKind::x;
	else if (conf.link_1to2 || conf.link_2to1)
		conf.kind = PairKind::z;
	else
		conf.kind = PairKind::parallel;
	return conf;
}

const char* to_string(PairKind kind) {
	switch (kind) {
		case PairKind::parallel: return "parallel";
		case PairKind::z: return "z";
		case PairKind::x: return "x";
	}
	return "?";
}

}  // namespace latsched
