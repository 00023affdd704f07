// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latsched/analysis.hpp"
#include "latsched/comm_model.hpp"
#include "latsched/task_graph.hpp"

namespace latsched {

/// Minimise the start of `primary`; among schedules achieving that, the
/// start of `secondary` (when given) breaks ties.
struct Objective {
	std::string primary;
	std::optional<std::string> secondary;
};

struct ScheduleEntry {
	int proc = -1;
	std::int64_t start = -1;
};

struct Schedule {
	std::vector<ScheduleEntry> entries;  // indexed like TaskGraph tasks
	int num_procs = 0;
	std::int64_t makespan = 0;
};

struct OracleResult {
	Schedule schedule;
	std::int64_t primary_start = 0;
	std::optional<std::int64_t> secondary_start;
	bool optimal = false;  // false when the time budget cut the search short
	std::uint64_t nodes = 0;
	double elapsed_seconds = 0.0;
};

/// Exact non-preemptive schedule minimising the objective on `num_procs`
/// identical processors.  An edge crossing processors delays the
/// successor's start by `q_edge` on top of the predecessor's finish.
///
/// Depth-first branch and bound over (ready task, processor) placements at
/// their earliest start.  Such placements cover every active schedule and
/// an active schedule attains the optimum of any start-time objective, so
/// the search is exact; pruning uses critical-path lower bounds, identical-
/// processor symmetry breaking and a visited-state table.  When the time
/// budget runs out the best schedule found so far is returned with
/// `optimal == false`.  Supports up to 64 tasks.
OracleResult optimal_schedule(const TaskGraph& g, int num_procs, const Objective& objective,
                              std::int64_t q_edge = 0, double time_budget_seconds = 60.0);

/// Feasibility check: every task placed exactly once on a valid processor,
/// no same-processor overlap, and precedence (plus cross-processor q_edge)
/// respected.  Violations are returned as data, empty means feasible.
std::vector<Violation> validate_schedule(const Schedule& s, const TaskGraph& g,
                                         std::int64_t q_edge = 0);

/// Tightness ratios of the pairwise bounds: rho_i = opt_i / lb_i, where
/// opt_i is the exact minimal start of constraint i's sink on `procs`
/// processors (procs <= 0 selects the combined allocation's m) and lb_i
/// the corresponding lower bound.
struct RhoResult {
	int procs = 0;
	int m = 0, m1 = 0, m2 = 0;
	Cost l1_lb, l2_lb;
	std::int64_t l1_opt = 0, l2_opt = 0;
	double rho1 = 0.0, rho2 = 0.0;
	std::optional<Rational> rho1_exact, rho2_exact;  // set when the bound is rational
	bool optimal = false;                            // both oracle runs certified
};

RhoResult compute_rho(const TaskGraph& g, const LatencyConstraint& c1,
                      const LatencyConstraint& c2, int procs, const CommModel& comm,
                      Mode mode, std::size_t cap = kDefaultPathCap,
                      std::int64_t q_edge = 0, double time_budget_seconds = 60.0);

}  // namespace latsched
