// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#include "latsched/analysis.hpp"

#include <algorithm>
#include <cassert>

#include "latsched/errors.hpp"

namespace latsched {

namespace {

// Longest path between the endpoints, as a cost term: max |p| plus the
// overhead of the combined allocation.  In strict mode the terminal
// task's WCET is dropped from every path-length term.
Cost cross_term(const TaskGraph& g, const std::string& source, const std::string& sink,
                const CommModel& comm, Mode mode, int m_combined, std::size_t cap) {
	PathSet ps = enumerate_paths(g, source, sink, cap);
	std::int64_t longest = 0;
	for (const auto& p : ps.paths) longest = std::max(longest, p.length);
	if (mode == Mode::strict) longest -= g.wcet(ps.sink);
	return comm_overhead(comm, m_combined) + Rational(longest);
}

}  // namespace

SingleVerdict evaluate_single(const TaskGraph& g, const Allocation& alloc,
                              const CommModel& comm, Mode mode) {
	std::vector<Path> selected;
	selected.reserve(alloc.selection.size());
	for (int idx : alloc.selection) selected.push_back(alloc.path_set.paths[idx]);
	PathDecomposition parts = decompose(g, selected);

	SingleVerdict v;
	v.constraint = alloc.constraint;
	v.mode = mode;
	v.m = alloc.m;
	v.path_count = alloc.path_set.paths.size();
	v.shared_wcet = parts.shared_wcet;
	for (std::int64_t w : parts.exclusive_wcet)
		v.max_exclusive_wcet = std::max(v.max_exclusive_wcet, w);

	std::int64_t base = v.shared_wcet + v.max_exclusive_wcet;
	if (mode == Mode::strict) base -= g.wcet(alloc.path_set.sink);  // sink is always shared
	v.lhs = comm_overhead(comm, v.m) + Rational(base);
	v.slack = v.lhs.subtract_from(Rational(alloc.constraint.bound));
	v.schedulable = v.lhs <= Rational(alloc.constraint.bound);
	return v;
}

SingleVerdict check_single(const TaskGraph& g, const LatencyConstraint& c,
                           const CommModel& comm, Mode mode, std::size_t cap) {
	return evaluate_single(g, allocate(g, c, cap), comm, mode);
}

LowerBounds lower_bound_single(const TaskGraph& g, const LatencyConstraint& c,
                               const CommModel& comm, Mode mode, std::size_t cap) {
	SingleVerdict v = check_single(g, c, comm, mode, cap);
	return LowerBounds{mode, {{c, v.lhs}}};
}

XVerdict check_x_pair(const TaskGraph& g, const LatencyConstraint& c1,
                      const LatencyConstraint& c2, const CommModel& comm, Mode mode,
                      std::size_t cap) {
	PairConfiguration conf = classify_pair(g, c1, c2);
	if (conf.kind != PairKind::x)
		throw NotXConfigurationError(c1.source + "->" + c1.sink + " / " + c2.source + "->" +
		                             c2.sink + " is " + to_string(conf.kind));

	PairAllocation pa = allocate_pair(g, c1, c2, cap);

	XVerdict v;
	v.c1 = c1;
	v.c2 = c2;
	v.mode = mode;
	v.m1 = pa.c1.m;
	v.m2 = pa.c2.m;
	v.m = pa.m_combined;
	v.fewer_procs_than_sum = v.m < v.m1 + v.m2;
	v.single1 = evaluate_single(g, pa.c1, comm, mode);
	v.single2 = evaluate_single(g, pa.c2, comm, mode);
	v.cross_1 = cross_term(g, c2.source, c1.sink, comm, mode, v.m, cap);
	v.cross_2 = cross_term(g, c1.source, c2.sink, comm, mode, v.m, cap);
	v.cross_1_ok = v.cross_1 <= Rational(c1.bound);
	v.cross_2_ok = v.cross_2 <= Rational(c2.bound);
	v.schedulable =
	    v.single1.schedulable && v.single2.schedulable && v.cross_1_ok && v.cross_2_ok;
	return v;
}

LowerBounds lower_bounds_x(const TaskGraph& g, const LatencyConstraint& c1,
                           const LatencyConstraint& c2, const CommModel& comm, Mode mode,
                           std::size_t cap) {
	XVerdict v = check_x_pair(g, c1, c2, comm, mode, cap);
	LowerBounds lb;
	lb.mode = mode;
	lb.entries.push_back({c1, Cost::max(v.single1.lhs, v.cross_1)});
	lb.entries.push_back({c2, Cost::max(v.single2.lhs, v.cross_2)});
	return lb;
}

SystemReport analyze_system(const TaskGraph& g,
                            const std::vector<LatencyConstraint>& constraints,
                            const CommModel& comm, Mode mode, std::size_t cap) {
	SystemReport report;
	report.mode = mode;
	report.comm = comm;

	bool all_ok = true;
	for (const auto& c : constraints) {
		ConstraintReport cr;
		cr.constraint = c;
		try {
			SingleVerdict v = check_single(g, c, comm, mode, cap);
			cr.verdict = v;
			cr.lower_bound = v.lhs;
			all_ok = all_ok && v.schedulable;
		} catch (const std::exception& e) {
			cr.error = e.what();
			report.any_error = true;
		}
		report.constraints.push_back(std::move(cr));
	}

	for (std::size_t i = 0; i < constraints.size(); ++i) {
		for (std::size_t j = i + 1; j < constraints.size(); ++j) {
			PairReport pr;
			pr.first = i;
			pr.second = j;
			try {
				PairConfiguration conf = classify_pair(g, constraints[i], constraints[j]);
				pr.kind = conf.kind;
				if (conf.kind == PairKind::x) {
					const XVerdict& xv = pr.x_verdict.emplace(check_x_pair(
					    g, constraints[i], constraints[j], comm, mode, cap));
					pr.x_lower_bounds = LowerBounds{
					    mode,
					    {{xv.c1, Cost::max(xv.single1.lhs, xv.cross_1)},
					     {xv.c2, Cost::max(xv.single2.lhs, xv.cross_2)}}};
					all_ok = all_ok && xv.schedulable;
				}
			} catch (const std::exception& e) {
				pr.error = e.what();
				report.any_error = true;
			}
			report.pairs.push_back(std::move(pr));
		}
	}

	report.system_schedulable = all_ok && !report.any_error;
	return report;
}

const char* to_string(Mode mode) { return mode == Mode::literal ? "literal" : "strict"; }

}  // namespace latsched
