// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#include "latsched/task_graph.hpp"

#include <algorithm>
#include <set>

#include "latsched/errors.hpp"
#include "latsched/natural_order.hpp"

namespace latsched {

TaskGraph::TaskGraph(std::vector<Task> tasks,
                     std::vector<std::pair<std::string, std::string>> edges)
    : tasks_(std::move(tasks)), edges_(std::move(edges)) {
	index_.reserve(tasks_.size());
	for (std::size_t i = 0; i < tasks_.size(); ++i)
		index_.emplace(tasks_[i].id, static_cast<int>(i));  // first wins on duplicates
	succ_.resize(tasks_.size());
	pred_.resize(tasks_.size());
	std::set<std::pair<int, int>> seen;
	for (const auto& [from, to] : edges_) {
		auto u = index_.find(from);
		auto v = index_.find(to);
		if (u == index_.end() || v == index_.end()) continue;  // reported by validation
		if (u->second == v->second) continue;
		if (!seen.emplace(u->second, v->second).second) continue;
		succ_[u->second].push_back(v->second);
		pred_[v->second].push_back(u->second);
	}
	auto by_id = [this](int a, int b) { return natural_less(tasks_[a].id, tasks_[b].id); };
	for (auto& v : succ_) std::sort(v.begin(), v.end(), by_id);
	for (auto& v : pred_) std::sort(v.begin(), v.end(), by_id);
}

std::optional<int> TaskGraph::index_of(std::string_view id) const {
	auto it = index_.find(std::string(id));
	if (it == index_.end()) return std::nullopt;
	return it->second;
}

int TaskGraph::require(std::string_view id) const {
	auto idx = index_of(id);
	if (!idx) throw InvalidArgumentError("unknown task id: " + std::string(id));
	return *idx;
}

std::int64_t TaskGraph::total_wcet() const {
	std::int64_t sum = 0;
	for (const auto& t : tasks_) sum += t.wcet;
	return sum;
}

namespace {

std::vector<bool> flood(const std::vector<std::vector<int>>& adj, int start) {
	std::vector<bool> seen(adj.size(), false);
	std::vector<int> stack{start};
	seen[start] = true;
	while (!stack.empty()) {
		int u = stack.back();
		stack.pop_back();
		for (int v : adj[u]) {
			if (!seen[v]) {
				seen[v] = true;
				stack.push_back(v);
			}
		}
	}
	return seen;
}

}  // namespace

std::vector<bool> TaskGraph::reachable_from(int from) const { return flood(succ_, from); }
std::vector<bool> TaskGraph::reaching(int to) const { return flood(pred_, to); }

ValidationReport validate_graph(const TaskGraph& g) {
	ValidationReport report;
	auto flag = [&report](std::string rule, std::string subject, std::string message) {
		report.violations.push_back({std::move(rule), std::move(subject), std::move(message)});
	};

	std::set<std::string> ids;
	for (const auto& t : g.tasks()) {
		if (t.id.empty()) flag("empty-id", "", "task with empty id");
		if (!ids.insert(t.id).second)
			flag("duplicate-id", t.id, "task id " + t.id + " declared more than once");
		if (t.wcet < 1)
			flag("invalid-wcet", t.id,
			     "task " + t.id + " has wcet " + std::to_string(t.wcet) + ", expected >= 1");
	}

	std::set<std::pair<std::string, std::string>> edge_seen;
	for (const auto& [from, to] : g.edges()) {
		std::string subject = from + "->" + to;
		if (!g.index_of(from))
			flag("unknown-endpoint", subject, "edge references unknown task " + from);
		if (!g.index_of(to))
			flag("unknown-endpoint", subject, "edge references unknown task " + to);
		if (from == to) flag("self-loop", subject, "self-loop on " + from);
		if (!edge_seen.emplace(from, to).second)
			flag("duplicate-edge", subject, "edge " + subject + " declared more than once");
	}

	// Kahn's algorithm; leftovers sit on a cycle.
	std::size_t n = g.task_count();
	std::vector<int> indeg(n, 0);
	for (std::size_t u = 0; u < n; ++u)
		for (int v : g.successors(static_cast<int>(u))) ++indeg[v];
	std::vector<int> queue;
	for (std::size_t u = 0; u < n; ++u)
		if (indeg[u] == 0) queue.push_back(static_cast<int>(u));
	std::size_t removed = 0;
	while (!queue.empty()) {
		int u = queue.back();
		queue.pop_back();
		++removed;
		for (int v : g.successors(u))
			if (--indeg[v] == 0) queue.push_back(v);
	}
	if (removed != n) {
		// leftovers are on a cycle or downstream of one; list only the former
		std::string cyclic;
		for (std::size_t u = 0; u < n; ++u) {
			if (indeg[u] == 0) continue;
			bool on_cycle = false;
			for (int w : g.successors(static_cast<int>(u)))
				on_cycle = on_cycle || g.reachable_from(w)[u];
			if (on_cycle) {
				if (!cyclic.empty()) cyclic += ", ";
				cyclic += g.id(static_cast<int>(u));
			}
		}
		flag("cycle", cyclic, "precedence graph is cyclic through {" + cyclic + "}");
	}
	return report;
}

ValidationReport validate_instance(const TaskGraph& g,
                                   const std::vector<LatencyConstraint>& constraints) {
	ValidationReport report = validate_graph(g);
	auto flag = [&report](std::string rule, std::string subject, std::string message) {
		report.violations.push_back({std::move(rule), std::move(subject), std::move(message)});
	};

	bool graph_ok = report.ok();
	for (const auto& c : constraints) {
		std::string subject = c.source + "->" + c.sink;
		auto src = g.index_of(c.source);
		auto dst = g.index_of(c.sink);
		if (!src) flag("unknown-constraint-endpoint", subject, "unknown task " + c.source);
		if (!dst) flag("unknown-constraint-endpoint", subject, "unknown task " + c.sink);
		if (c.source == c.sink)
			flag("degenerate-constraint", subject, "constraint endpoints coincide");
		if (c.bound < 0)
			flag("negative-bound", subject,
			     "constraint bound " + std::to_string(c.bound) + " is negative");
		if (graph_ok && src && dst && c.source != c.sink) {
			auto fwd = g.reachable_from(*src);
			if (!fwd[*dst])
				flag("unconnected-constraint", subject,
				     "no path from " + c.source + " to " + c.sink);
		}
	}

	for (std::size_t i = 0; i < constraints.size(); ++i) {
		for (std::size_t j = i + 1; j < constraints.size(); ++j) {
			const auto& a = constraints[i];
			const auto& b = constraints[j];
			for (const auto& endpoint : {a.source, a.sink}) {
				if (endpoint == b.source || endpoint == b.sink) {
					report.warnings.push_back("constraints " + a.source + "->" + a.sink +
					                          " and " + b.source + "->" + b.sink +
					                          " share endpoint " + endpoint +
					                          " (unusual, analysed as an overlapping pair)");
				}
			}
		}
	}
	return report;
}

}  // namespace latsched
