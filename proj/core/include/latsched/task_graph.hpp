// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace latsched {

struct Task {
	std::string id;
	std::int64_t wcet = 1;
};

/// A latency constraint: the start of `sink` must follow the start of
/// `source` by at most `bound` time units (start-to-start).
struct LatencyConstraint {
	std::string source;
	std::string sink;
	std::int64_t bound = 0;
};

/// Immutable DAG of non-preemptable tasks.
///
/// Construction never throws on semantic problems (duplicate ids, dangling
/// or duplicate edges, cycles...): those are reported by validate_graph so
/// a CLI user sees all of them at once.  Index-based accessors and the
/// algorithms on top assume a graph that passed validation.
class TaskGraph {
public:
	TaskGraph() = default;
	TaskGraph(std::vector<Task> tasks,
	          std::vector<std::pair<std::string, std::string>> edges);

	std::size_t task_count() const { return tasks_.size(); }
	const std::vector<Task>& tasks() const { return tasks_; }
	const std::vector<std::pair<std::string, std::string>>& edges() const { return edges_; }

	std::optional<int> index_of(std::string_view id) const;
	/// Like index_of but throws InvalidArgumentError with the id in the message.
	int require(std::string_view id) const;

	const std::string& id(int i) const { return tasks_[i].id; }
	std::int64_t wcet(int i) const { return tasks_[i].wcet; }
	std::int64_t total_wcet() const;

	/// Successor/predecessor indices, sorted by natural id order so every
	/// traversal in the library is deterministic.
	const std::vector<int>& successors(int i) const { return succ_[i]; }
	const std::vector<int>& predecessors(int i) const { return pred_[i]; }

	/// Indices of tasks reachable from `from` (inclusive).
	std::vector<bool> reachable_from(int from) const;
	/// Indices of tasks that can reach `to` (inclusive).
	std::vector<bool> reaching(int to) const;

private:
	std::vector<Task> tasks_;
	std::vector<std::pair<std::string, std::string>> edges_;
	std::unordered_map<std::string, int> index_;
	std::vector<std::vector<int>> succ_;
	std::vector<std::vector<int>> pred_;
};

struct Violation {
	std::string rule;     // machine-readable rule name, e.g. "cycle"
	std::string subject;  // offending task id or "a->b" edge
	std::string message;
};

struct ValidationReport {
	std::vector<Violation> violations;
	std::vector<std::string> warnings;  // unusual but accepted constructs
	bool ok() const { return violations.empty(); }
};

/// Structural checks: unique non-empty ids, wcet >= 1, edge endpoints
/// exist, no self-loops, no duplicate edges, acyclic.
ValidationReport validate_graph(const TaskGraph& g);

/// validate_graph plus constraint rules: endpoints exist and differ,
/// bound >= 0, at least one connecting path.  Constraint pairs sharing an
/// endpoint are accepted but flagged as warnings.
ValidationReport validate_instance(const TaskGraph& g,
                                   const std::vector<LatencyConstraint>& constraints);

}  // namespace latsched
