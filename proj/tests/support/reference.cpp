// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#include "reference.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>

namespace latsched::testutil::ref {

namespace {

// Local digit-aware comparison (deliberately not the library's).
bool nat_str_less(const std::string& a, const std::string& b) {
	std::size_t i = 0, j = 0;
	while (i < a.size() && j < b.size()) {
		if (std::isdigit(static_cast<unsigned char>(a[i])) &&
		    std::isdigit(static_cast<unsigned char>(b[j]))) {
			std::size_t i2 = i, j2 = j;
			while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
			while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
			std::string da = a.substr(i, i2 - i), db = b.substr(j, j2 - j);
			da.erase(0, da.find_first_not_of('0'));
			db.erase(0, db.find_first_not_of('0'));
			if (da.size() != db.size()) return da.size() < db.size();
			if (da != db) return da < db;
			i = i2;
			j = j2;
			continue;
		}
		if (a[i] != b[j]) return a[i] < b[j];
		++i;
		++j;
	}
	if (i == a.size() && j == b.size()) return a < b;  // "t01" vs "t1"
	return i == a.size();
}

bool nat_seq_less(const std::vector<std::string>& a, const std::vector<std::string>& b) {
	for (std::size_t k = 0; k < std::min(a.size(), b.size()); ++k) {
		if (a[k] != b[k]) return nat_str_less(a[k], b[k]);
	}
	return a.size() < b.size();
}

std::map<std::string, std::vector<std::string>> adjacency(const TaskGraph& g) {
	std::map<std::string, std::vector<std::string>> adj;
	for (const auto& [from, to] : g.edges()) adj[from].push_back(to);
	return adj;
}

}  // namespace

std::vector<std::vector<std::string>> all_paths(const TaskGraph& g, const std::string& src,
                                                const std::string& dst) {
	auto adj = adjacency(g);
	std::vector<std::vector<std::string>> out;
	std::vector<std::string> current{src};
	std::function<void(const std::string&)> walk = [&](const std::string& at) {
		if (at == dst) {
			out.push_back(current);
			return;
		}
		for (const auto& next : adj[at]) {
			current.push_back(next);
			walk(next);
			current.pop_back();
		}
	};
	walk(src);
	std::sort(out.begin(), out.end(), nat_seq_less);
	return out;
}

CoverResult greedy_cover(const TaskGraph& g, const std::string& src, const std::string& dst) {
	std::map<std::string, std::int64_t> wcet;
	for (const Task& t : g.tasks()) wcet[t.id] = t.wcet;
	auto paths = all_paths(g, src, dst);

	CoverResult result;
	std::map<std::string, bool> covered;
	auto uncovered_work = [&](const std::vector<std::string>& p) {
		std::int64_t sum = 0;
		for (const auto& id : p)
			if (!covered[id]) sum += wcet[id];
		return sum;
	};
	std::vector<bool> taken(paths.size(), false);
	for (;;) {
		std::int64_t best_gain = 0;
		int best = -1;
		for (std::size_t i = 0; i < paths.size(); ++i) {
			if (taken[i]) continue;
			std::int64_t gain = uncovered_work(paths[i]);
			if (gain > best_gain ||
			    (gain == best_gain && best >= 0 && gain > 0 &&
			     nat_seq_less(paths[i], paths[best]))) {
				best_gain = gain;
				best = static_cast<int>(i);
			}
		}
		if (best < 0 || best_gain == 0) break;  // everything on a path is covered
		taken[best] = true;
		result.selected.push_back(paths[best]);
		for (const auto& id : paths[best])
			if (!covered[id]) {
				covered[id] = true;
				result.proc[id] = result.m;
			}
		++result.m;
	}
	return result;
}

ExhaustiveResult exhaustive_best(const TaskGraph& g, int procs, const std::string& primary,
                                 const std::string& secondary, std::int64_t q_edge) {
	const int n = static_cast<int>(g.task_count());
	const int p_idx = g.require(primary);
	const int s_idx = secondary.empty() ? -1 : g.require(secondary);

	std::vector<std::vector<int>> preds(n);
	for (int t = 0; t < n; ++t) preds[t] = g.predecessors(t);

	std::vector<std::int64_t> start(n, -1), finish(n, -1), avail(procs, 0);
	std::vector<int> on_proc(n, -1);
	int placed = 0;
	std::int64_t best1 = std::numeric_limits<std::int64_t>::max(), best2 = best1;

	std::function<void()> place = [&]() {
		if (placed == n) {
			std::int64_t v1 = start[p_idx];
			std::int64_t v2 = s_idx >= 0 ? start[s_idx] : 0;
			if (v1 < best1 || (v1 == best1 && v2 < best2)) {
				best1 = v1;
				best2 = v2;
			}
			return;
		}
		for (int t = 0; t < n; ++t) {
			if (start[t] >= 0) continue;
			bool ready = true;
			for (int u : preds[t]) ready = ready && start[u] >= 0;
			if (!ready) continue;
			for (int p = 0; p < procs; ++p) {
				std::int64_t est = avail[p];
				for (int u : preds[t]) {
					std::int64_t f = finish[u] + (on_proc[u] != p ? q_edge : 0);
					est = std::max(est, f);
				}
				std::int64_t old_avail = avail[p];
				start[t] = est;
				finish[t] = est + g.wcet(t);
				on_proc[t] = p;
				avail[p] = finish[t];
				++placed;
				place();
				--placed;
				avail[p] = old_avail;
				on_proc[t] = -1;
				finish[t] = -1;
				start[t] = -1;
			}
		}
	};
	place();
	return {best1, s_idx >= 0 ? best2 : 0};
}

}  // namespace latsched::testutil::ref
