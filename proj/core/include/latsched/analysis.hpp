// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latsched/allocation.hpp"
#include "latsched/comm_model.hpp"
#include "latsched/configuration.hpp"
#include "latsched/paths.hpp"
#include "latsched/task_graph.hpp"

namespace latsched {

/// literal: path sums include the sink task's WCET (conditions compare a
///          whole-path execution window against the bound).
/// strict:  the sink's WCET is excluded everywhere, matching the
///          start-to-start definition of the constraint; comparable with
///          the exact scheduler's optimum.
enum class Mode { literal, strict };

/// Single-constraint condition over the allocator's selected paths:
///   lhs = sum(shared WCET) + max over selected paths of sum(exclusive
///         WCET) + overhead(m)   <=   bound.
/// Tasks on some but not all selected paths contribute to neither term;
/// a negative verdict therefore means "not schedulable under this
/// path-based allocation", not general infeasibility.
struct SingleVerdict {
	LatencyConstraint constraint;
	Mode mode = Mode::literal;
	int m = 0;
	std::int64_t shared_wcet = 0;
	std::int64_t max_exclusive_wcet = 0;
	Cost lhs;
	Cost slack;  // bound - lhs, negative when the condition fails
	bool schedulable = false;
	std::size_t path_count = 0;
};

SingleVerdict check_single(const TaskGraph& g, const LatencyConstraint& c,
                           const CommModel& comm, Mode mode,
                           std::size_t cap = kDefaultPathCap);

/// Same evaluation on an existing allocation (check_single and the
/// lower bounds all funnel through here, so they agree by construction).
SingleVerdict evaluate_single(const TaskGraph& g, const Allocation& alloc,
                              const CommModel& comm, Mode mode);

struct LowerBoundEntry {
	LatencyConstraint constraint;
	Cost value;
};

/// Smallest bounds for which the (single or pairwise) conditions hold;
/// a constraint with bound < value is necessarily unschedulable under the
/// path-based allocation.
struct LowerBounds {
	Mode mode = Mode::literal;
	std::vector<LowerBoundEntry> entries;
};

LowerBounds lower_bound_single(const TaskGraph& g, const LatencyConstraint& c,
                               const CommModel& comm, Mode mode,
                               std::size_t cap = kDefaultPathCap);

/// Mutual-dependence check for a pair in X configuration.  On top of both
/// single conditions (with their own m), each constraint must absorb the
/// longest path from the other constraint's source to its own sink, plus
/// the overhead of the combined allocation:
///   cross_1 = max |p|, p from c2.source to c1.sink, + overhead(m)  <= L1
///   cross_2 = max |p|, p from c1.source to c2.sink, + overhead(m)  <= L2
struct XVerdict {
	LatencyConstraint c1, c2;
	Mode mode = Mode::literal;
	int m1 = 0, m2 = 0, m = 0;
	SingleVerdict single1, single2;
	Cost cross_1, cross_2;
	bool cross_1_ok = false, cross_2_ok = false;
	bool schedulable = false;
	bool fewer_procs_than_sum = false;  // diagnostic: m < m1 + m2
};

XVerdict check_x_pair(const TaskGraph& g, const LatencyConstraint& c1,
                      const LatencyConstraint& c2, const CommModel& comm, Mode mode,
                      std::size_t cap = kDefaultPathCap);

/// Per-constraint minimum bounds for an X pair: the single-condition lhs
/// (with m1 resp. m2) maxed with the cross term (with combined m).
LowerBounds lower_bounds_x(const TaskGraph& g, const LatencyConstraint& c1,
                           const LatencyConstraint& c2, const CommModel& comm, Mode mode,
                           std::size_t cap = kDefaultPathCap);

struct ConstraintReport {
	LatencyConstraint constraint;
	std::string error;  // empty on success
	std::optional<SingleVerdict> verdict;
	std::optional<Cost> lower_bound;
};

struct PairReport {
	std::size_t first = 0, second = 0;  // indices into the constraint list
	std::string error;
	std::optional<PairKind> kind;
	std::optional<XVerdict> x_verdict;
	std::optional<LowerBounds> x_lower_bounds;
};

/// Whole-system verdict: every constraint's single condition plus the
/// pairwise conditions of every X pair.  Parallel and Z pairs need nothing
/// beyond their single conditions.  Failures on one constraint (path
/// explosion, missing path) are recorded and do not abort the others.
struct SystemReport {
	Mode mode = Mode::literal;
	CommModel comm;
	std::vector<ConstraintReport> constraints;
	std::vector<PairReport> pairs;
	bool system_schedulable = false;
	bool any_error = false;
};

SystemReport analyze_system(const TaskGraph& g,
                            const std::vector<LatencyConstraint>& constraints,
                            const CommModel& comm, Mode mode,
                            std::size_t cap = kDefaultPathCap);

const char* to_string(Mode mode);

}  // namespace latsched
