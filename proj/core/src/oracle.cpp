// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#include "latsched/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cstring>
#include <unordered_set>

#include "latsched/errors.hpp"
#include "latsched/natural_order.hpp"

namespace latsched {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kMemoCap = std::size_t(1) << 21;

struct Search {
	const TaskGraph& g;
	int n;
	int procs;
	std::int64_t q_edge;
	int primary;
	int secondary;  // -1 when absent

	std::uint64_t relevant = 0;
	std::vector<std::uint64_t> pred_mask;
	std::vector<int> topo;  // natural-id tie-break, deterministic
	std::vector<std::int64_t> dist1, dist2;

	// mutable search state
	std::uint64_t scheduled = 0;
	std::vector<std::int64_t> start, finish;
	std::vector<int> proc_of;
	std::vector<std::int64_t> avail;

	// incumbent (always valid: seeded with a greedy schedule)
	std::int64_t inc1 = 0, inc2 = 0;
	std::vector<std::int64_t> best_start;
	std::vector<int> best_proc;

	std::uint64_t nodes = 0;
	Clock::time_point deadline;
	bool out_of_time = false;

	bool memo_enabled = false;
	std::unordered_set<std::string> seen;

	// scratch reused across nodes
	std::vector<std::int64_t> lb;

	Search(const TaskGraph& graph, int num_procs, int prim, int sec, std::int64_t q)
	    : g(graph),
	      n(static_cast<int>(graph.task_count())),
	      procs(num_procs),
	      q_edge(q),
	      primary(prim),
	      secondary(sec) {
		pred_mask.assign(n, 0);
		for (int t = 0; t < n; ++t)
			for (int p : g.predecessors(t)) pred_mask[t] |= std::uint64_t(1) << p;

		// deterministic topological order
		std::vector<int> indeg(n, 0);
		for (int u = 0; u < n; ++u)
			for (int v : g.successors(u)) ++indeg[v];
		std::vector<int> pool;
		for (int u = 0; u < n; ++u)
			if (indeg[u] == 0) pool.push_back(u);
		while (!pool.empty()) {
			auto it = std::min_element(pool.begin(), pool.end(), [this](int a, int b) {
				return natural_less(g.id(a), g.id(b));
			});
			int u = *it;
			pool.erase(it);
			topo.push_back(u);
			for (int v : g.successors(u))
				if (--indeg[v] == 0) pool.push_back(v);
		}

		relevant = ancestors_closure(primary);
		if (secondary >= 0) relevant |= ancestors_closure(secondary);
		dist1 = chain_to(primary);
		dist2 = secondary >= 0 ? chain_to(secondary) : std::vector<std::int64_t>(n, -1);

		start.assign(n, -1);
		finish.assign(n, -1);
		proc_of.assign(n, -1);
		avail.assign(procs, 0);
		memo_enabled = q_edge == 0;
	}

	std::uint64_t ancestors_closure(int sink) {
		std::uint64_t mask = std::uint64_t(1) << sink;
		std::vector<int> stack{sink};
		while (!stack.empty()) {
			int u = stack.back();
			stack.pop_back();
			for (int p : g.predecessors(u)) {
				if (!(mask >> p & 1)) {
					mask |= std::uint64_t(1) << p;
					stack.push_back(p);
				}
			}
		}
		return mask;
	}

	// Longest WCET chain from the start of u to the start of the sink
	// (sink excluded); -1 when u cannot reach it.  Admissible remaining-
	// work estimate: communication only adds to it.
	std::vector<std::int64_t> chain_to(int sink) {
		std::vector<std::int64_t> d(n, -1);
		d[sink] = 0;
		for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
			int u = *it;
			if (u == sink) continue;
			std::int64_t best = -1;
			for (int v : g.successors(u))
				if (d[v] >= 0) best = std::max(best, d[v]);
			if (best >= 0) d[u] = best + g.wcet(u);
		}
		return d;
	}

	std::int64_t ready_on(int t, int p) const {
		std::int64_t r = 0;
		for (int u : g.predecessors(t)) {
			std::int64_t f = finish[u];
			if (q_edge > 0 && proc_of[u] != p) f += q_edge;
			r = std::max(r, f);
		}
		return r;
	}

	// Critical-path lower bounds on the objective starts, given the
	// partial schedule.  Processor floors and predecessor chains only —
	// admissible by construction.
	std::pair<std::int64_t, std::int64_t> objective_bounds() {
		std::int64_t floor = *std::min_element(avail.begin(), avail.end());
		lb.assign(n, 0);
		for (int u : topo) {
			if (!(relevant >> u & 1)) continue;
			if (scheduled >> u & 1) {
				lb[u] = start[u];
				continue;
			}
			std::int64_t v = floor;
			for (int p : g.predecessors(u)) {
				std::int64_t via =
				    (scheduled >> p & 1) ? finish[p] : lb[p] + g.wcet(p);
				v = std::max(v, via);
			}
			lb[u] = v;
		}
		return {lb[primary], secondary >= 0 ? lb[secondary] : 0};
	}

	bool lex_ge(std::pair<std::int64_t, std::int64_t> a,
	            std::pair<std::int64_t, std::int64_t> b) const {
		return a.first > b.first || (a.first == b.first && a.second >= b.second);
	}

	// Greedy completion of the current partial schedule (topological order,
	// earliest-start processor).  Writes a full assignment into out_*.
	void complete(std::vector<std::int64_t>& out_start, std::vector<int>& out_proc) const {
		out_start = start;
		out_proc = proc_of;
		std::vector<std::int64_t> av = avail;
		std::vector<std::int64_t> fin = finish;
		for (int u : topo) {
			if (scheduled >> u & 1) continue;
			std::int64_t best_est = 0;
			int best_p = -1;
			for (int p = 0; p < procs; ++p) {
				std::int64_t r = 0;
				for (int q : g.predecessors(u)) {
					std::int64_t f = fin[q];
					if (q_edge > 0 && out_proc[q] != p) f += q_edge;
					r = std::max(r, f);
				}
				std::int64_t est = std::max(av[p], r);
				if (best_p < 0 || est < best_est) {
					best_p = p;
					best_est = est;
				}
			}
			out_start[u] = best_est;
			out_proc[u] = best_p;
			av[best_p] = best_est + g.wcet(u);
			fin[u] = best_est + g.wcet(u);
		}
	}

	void adopt_if_better() {
		std::int64_t v1 = start[primary];
		std::int64_t v2 = secondary >= 0 ? start[secondary] : 0;
		if (v1 > inc1 || (v1 == inc1 && v2 >= inc2)) return;
		inc1 = v1;
		inc2 = v2;
		complete(best_start, best_proc);
	}

	bool memo_hit() {
		if (!memo_enabled) return false;
		std::string key;
		key.reserve(8 + 8 * std::size_t(procs) + 10 * std::size_t(n) + 16);
		auto put64 = [&key](std::int64_t v) {
			char buf[8];
			std::memcpy(buf, &v, 8);
			key.append(buf, 8);
		};
		put64(static_cast<std::int64_t>(scheduled));
		std::vector<std::int64_t> sorted_avail = avail;
		std::sort(sorted_avail.begin(), sorted_avail.end());
		for (std::int64_t a : sorted_avail) put64(a);
		// objective starts (finished sinks are not "live" below)
		put64(scheduled >> primary & 1 ? start[primary] : -1);
		if (secondary >= 0) put64(scheduled >> secondary & 1 ? start[secondary] : -1);
		// finish times that can still gate an unscheduled relevant task
		for (int u = 0; u < n; ++u) {
			if (!(scheduled >> u & 1)) continue;
			bool live = false;
			for (int v : g.successors(u))
				live = live || ((relevant >> v & 1) && !(scheduled >> v & 1));
			if (live) {
				key.push_back(static_cast<char>(u));
				put64(finish[u]);
			}
		}
		if (seen.count(key)) return true;
		if (seen.size() < kMemoCap) seen.insert(std::move(key));
		return false;
	}

	void dfs() {
		if (out_of_time) return;
		if ((++nodes & 1023) == 0 && Clock::now() > deadline) {
			out_of_time = true;
			return;
		}
		if ((scheduled & relevant) == relevant) {
			adopt_if_better();
			return;
		}
		auto [lb1, lb2] = objective_bounds();
		if (lex_ge({lb1, lb2}, {inc1, inc2})) return;
		if (memo_hit()) return;

		struct Candidate {
			int task, proc;
			std::int64_t est;
		};
		std::vector<Candidate> cands;
		std::int64_t cstar = INT64_MAX;
		for (int t = 0; t < n; ++t) {
			if (!(relevant >> t & 1) || (scheduled >> t & 1)) continue;
			if ((pred_mask[t] & scheduled) != pred_mask[t]) continue;
			if (q_edge == 0) {
				// identical processors: one candidate per distinct availability
				std::int64_t rt = ready_on(t, 0);
				std::int64_t seen_avail[64];
				int seen_count = 0;
				for (int p = 0; p < procs; ++p) {
					bool dup = false;
					for (int s = 0; s < seen_count; ++s)
						dup = dup || seen_avail[s] == avail[p];
					if (dup) continue;
					seen_avail[seen_count++] = avail[p];
					std::int64_t est = std::max(avail[p], rt);
					cands.push_back({t, p, est});
					cstar = std::min(cstar, est + g.wcet(t));
				}
			} else {
				bool empty_done = false;
				for (int p = 0; p < procs; ++p) {
					if (avail[p] == 0) {
						if (empty_done) continue;  // empty processors interchangeable
						empty_done = true;
					}
					std::int64_t est = std::max(avail[p], ready_on(t, p));
					cands.push_back({t, p, est});
					cstar = std::min(cstar, est + g.wcet(t));
				}
			}
		}
		// Without cross-processor delays, only placements starting before
		// the earliest possible completion can belong to an active
		// schedule.  With them, a placement some exchange argument would
		// discard can still win (its successors avoid the delay), so the
		// cut is not applied.
		if (q_edge == 0)
			std::erase_if(cands, [cstar](const Candidate& c) { return c.est >= cstar; });
		std::sort(cands.begin(), cands.end(), [this](const Candidate& a, const Candidate& b) {
			if (a.est != b.est) return a.est < b.est;
			auto key = [this](const Candidate& c) {
				return std::pair(dist1[c.task], dist2[c.task]);
			};
			if (key(a) != key(b)) return key(a) > key(b);  // critical chain first
			if (a.task != b.task) return natural_less(g.id(a.task), g.id(b.task));
			return a.proc < b.proc;
		});

		for (const Candidate& c : cands) {
			std::int64_t prev_avail = avail[c.proc];
			scheduled |= std::uint64_t(1) << c.task;
			start[c.task] = c.est;
			finish[c.task] = c.est + g.wcet(c.task);
			proc_of[c.task] = c.proc;
			avail[c.proc] = finish[c.task];
			dfs();
			avail[c.proc] = prev_avail;
			proc_of[c.task] = -1;
			finish[c.task] = -1;
			start[c.task] = -1;
			scheduled &= ~(std::uint64_t(1) << c.task);
			if (out_of_time) return;
		}
	}
};

}  // namespace

OracleResult optimal_schedule(const TaskGraph& g, int num_procs, const Objective& objective,
                              std::int64_t q_edge, double time_budget_seconds) {
	if (g.task_count() == 0) throw InvalidArgumentError("cannot schedule an empty graph");
	if (g.task_count() > 64) throw InvalidArgumentError("oracle supports up to 64 tasks");
	if (num_procs < 1) throw InvalidArgumentError("need at least one processor");
	if (q_edge < 0) throw InvalidArgumentError("q_edge must be non-negative");
	if (!validate_graph(g).ok()) throw InvalidArgumentError("graph failed validation");

	int primary = g.require(objective.primary);
	int secondary = -1;
	if (objective.secondary) {
		secondary = g.require(*objective.secondary);
		if (secondary == primary)
			throw InvalidArgumentError("objective tasks must differ");
	}

	auto t0 = Clock::now();
	int effective = std::min<int>(num_procs, static_cast<int>(g.task_count()));
	Search search(g, effective, primary, secondary, q_edge);
	search.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
	                           std::chrono::duration<double>(time_budget_seconds));

	// Seed the incumbent with a greedy schedule so pruning bites from the
	// start and a budget timeout still returns something feasible.
	search.complete(search.best_start, search.best_proc);
	search.inc1 = search.best_start[primary];
	search.inc2 = secondary >= 0 ? search.best_start[secondary] : 0;

	search.dfs();

	OracleResult result;
	result.nodes = search.nodes;
	result.optimal = !search.out_of_time;
	result.primary_start = search.inc1;
	if (secondary >= 0) result.secondary_start = search.inc2;

	Schedule& s = result.schedule;
	s.num_procs = effective;
	s.entries.resize(g.task_count());
	for (std::size_t t = 0; t < g.task_count(); ++t) {
		s.entries[t] = {search.best_proc[t], search.best_start[t]};
		s.makespan = std::max(s.makespan,
		                      search.best_start[t] + g.wcet(static_cast<int>(t)));
	}
	result.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
	return result;
}

std::vector<Violation> validate_schedule(const Schedule& s, const TaskGraph& g,
                                         std::int64_t q_edge) {
	std::vector<Violation> out;
	auto flag = [&out](std::string rule, std::string subject, std::string message) {
		out.push_back({std::move(rule), std::move(subject), std::move(message)});
	};
	if (s.entries.size() != g.task_count()) {
		flag("wrong-size", "", "schedule covers " + std::to_string(s.entries.size()) +
		                           " tasks, graph has " + std::to_string(g.task_count()));
		return out;
	}
	for (std::size_t t = 0; t < g.task_count(); ++t) {
		const auto& e = s.entries[t];
		if (e.proc < 0 || e.proc >= s.num_procs)
			flag("bad-processor", g.id(static_cast<int>(t)),
			     g.id(static_cast<int>(t)) + " placed on processor " + std::to_string(e.proc));
		if (e.start < 0)
			flag("unscheduled-task", g.id(static_cast<int>(t)),
			     g.id(static_cast<int>(t)) + " has no start time");
	}
	if (!out.empty()) return out;

	std::vector<std::vector<int>> per_proc(s.num_procs);
	for (std::size_t t = 0; t < g.task_count(); ++t)
		per_proc[s.entries[t].proc].push_back(static_cast<int>(t));
	for (auto& tasks : per_proc) {
		std::sort(tasks.begin(), tasks.end(), [&s](int a, int b) {
			return s.entries[a].start < s.entries[b].start;
		});
		for (std::size_t i = 0; i + 1 < tasks.size(); ++i) {
			int a = tasks[i], b = tasks[i + 1];
			if (s.entries[a].start + g.wcet(a) > s.entries[b].start)
				flag("processor-overlap", g.id(a) + "/" + g.id(b),
				     g.id(a) + " and " + g.id(b) + " overlap on processor " +
				         std::to_string(s.entries[a].proc));
		}
	}
	for (const auto& [from, to] : g.edges()) {
		auto u = g.index_of(from), v = g.index_of(to);
		if (!u || !v) continue;
		std::int64_t gap = s.entries[*u].proc == s.entries[*v].proc ? 0 : q_edge;
		if (s.entries[*u].start + g.wcet(*u) + gap > s.entries[*v].start)
			flag("precedence", from + "->" + to,
			     to + " starts before " + from + " completes" +
			         (gap > 0 ? " plus communication" : ""));
	}
	return out;
}

RhoResult compute_rho(const TaskGraph& g, const LatencyConstraint& c1,
                      const LatencyConstraint& c2, int procs, const CommModel& comm,
                      Mode mode, std::size_t cap, std::int64_t q_edge,
                      double time_budget_seconds) {
	PairAllocation pa = allocate_pair(g, c1, c2, cap);
	LowerBounds lbs = lower_bounds_x(g, c1, c2, comm, mode, cap);

	RhoResult r;
	r.m = pa.m_combined;
	r.m1 = pa.c1.m;
	r.m2 = pa.c2.m;
	r.procs = procs > 0 ? procs : pa.m_combined;
	r.l1_lb = lbs.entries[0].value;
	r.l2_lb = lbs.entries[1].value;

	OracleResult run1 = optimal_schedule(g, r.procs, {c1.sink, c2.sink}, q_edge,
	                                     time_budget_seconds);
	OracleResult run2 = optimal_schedule(g, r.procs, {c2.sink, c1.sink}, q_edge,
	                                     time_budget_seconds);
	r.l1_opt = run1.primary_start;
	r.l2_opt = run2.primary_start;
	r.optimal = run1.optimal && run2.optimal;

	auto ratio = [](std::int64_t opt, const Cost& lb) {
		double denom = lb.to_double();
		return denom > 0 ? double(opt) / denom : 0.0;
	};
	r.rho1 = ratio(r.l1_opt, r.l1_lb);
	r.rho2 = ratio(r.l2_opt, r.l2_lb);
	if (r.l1_lb.is_rational() && !r.l1_lb.rational_part().is_zero())
		r.rho1_exact = Rational(r.l1_opt) / r.l1_lb.rational_part();
	if (r.l2_lb.is_rational() && !r.l2_lb.rational_part().is_zero())
		r.rho2_exact = Rational(r.l2_opt) / r.l2_lb.rational_part();
	return r;
}

}  // namespace latsched
