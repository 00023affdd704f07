// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#include "latsched/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "latsched/errors.hpp"
#include "latsched/paths.hpp"

namespace latsched {

namespace {

// Bounded draws and shuffles are hand-rolled on top of mt19937_64 because
// std::uniform_int_distribution / std::shuffle are implementation-defined;
// byte-identical output across toolchains matters more here than the
// negligible modulo bias.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
	return rng() % bound;
}

template <typename T>
void shuffle_vec(std::mt19937_64& rng, std::vector<T>& v) {
	for (std::size_t i = v.size(); i > 1; --i)
		std::swap(v[i - 1], v[draw(rng, i)]);
}

// Random interleaving of two sequences, preserving each one's order.
std::vector<int> riffle(std::mt19937_64& rng, const std::vector<int>& a,
                        const std::vector<int>& b) {
	std::vector<int> out;
	out.reserve(a.size() + b.size());
	std::size_t i = 0, j = 0;
	while (i < a.size() || j < b.size()) {
		std::uint64_t remaining = (a.size() - i) + (b.size() - j);
		if (draw(rng, remaining) < a.size() - i)
			out.push_back(a[i++]);
		else
			out.push_back(b[j++]);
	}
	return out;
}

}  // namespace

GeneratedInstance generate_x_instance(const GeneratorSpec& spec) {
	const int n = spec.n;
	if (n < 6) throw InfeasibleSpecError("need at least 6 tasks, got " + std::to_string(n));
	if (!(spec.density > 0.0) || spec.density > 1.0)
		throw InfeasibleSpecError("density must lie in (0, 1]");
	if (spec.wcet_min < 1 || spec.wcet_max < spec.wcet_min)
		throw InfeasibleSpecError("wcet range must satisfy 1 <= min <= max");

	const std::int64_t all_pairs = std::int64_t(n) * (n - 1) / 2;
	const auto budget = static_cast<std::int64_t>(std::llround(spec.density * double(all_pairs)));

	const int g = static_cast<int>(std::llround(0.4 * n));
	const int k = n - 2 * g;
	if (g < 2 || k < 1)
		throw InfeasibleSpecError("cannot split " + std::to_string(n) +
		                          " tasks into two 40% groups plus an overlap group");

	std::mt19937_64 rng(spec.seed);

	// draw 1: group membership
	std::vector<int> perm(n);
	for (int i = 0; i < n; ++i) perm[i] = i;
	shuffle_vec(rng, perm);
	std::vector<int> only1(perm.begin(), perm.begin() + g);
	std::vector<int> only2(perm.begin() + g, perm.begin() + 2 * g);
	std::vector<int> both(perm.begin() + 2 * g, perm.end());

	// draw 2/3: where each group's interior splits around the shared chain
	auto split = [&rng](const std::vector<int>& group) {
		std::vector<int> interior(group.begin() + 1, group.end() - 1);
		auto cut = static_cast<std::size_t>(draw(rng, interior.size() + 1));
		return std::make_pair(std::vector<int>(interior.begin(), interior.begin() + cut),
		                      std::vector<int>(interior.begin() + cut, interior.end()));
	};
	auto [pre1, post1] = split(only1);
	auto [pre2, post2] = split(only2);
	const int ta = only1.front(), tb = only1.back();
	const int tc = only2.front(), td = only2.back();

	// backbones: ta -> pre1 -> shared chain -> post1 -> tb, same for c2
	auto chain_of = [](int src, const std::vector<int>& pre, const std::vector<int>& mid,
	                   const std::vector<int>& post, int dst) {
		std::vector<int> chain{src};
		chain.insert(chain.end(), pre.begin(), pre.end());
		chain.insert(chain.end(), mid.begin(), mid.end());
		chain.insert(chain.end(), post.begin(), post.end());
		chain.push_back(dst);
		return chain;
	};
	std::vector<int> backbone1 = chain_of(ta, pre1, both, post1, tb);
	std::vector<int> backbone2 = chain_of(tc, pre2, both, post2, td);

	std::set<std::pair<int, int>> edge_set;
	std::vector<std::pair<int, int>> edge_list;
	auto add_edge = [&](int u, int v) {
		if (edge_set.emplace(u, v).second) edge_list.emplace_back(u, v);
	};
	for (std::size_t i = 0; i + 1 < backbone1.size(); ++i)
		add_edge(backbone1[i], backbone1[i + 1]);
	for (std::size_t i = 0; i + 1 < backbone2.size(); ++i)
		add_edge(backbone2[i], backbone2[i + 1]);

	// draw 4/5: global topological order = riffled prefixes, shared chain,
	// riffled suffixes; every further edge goes forward in this order
	std::vector<int> head1{ta}, head2{tc};
	head1.insert(head1.end(), pre1.begin(), pre1.end());
	head2.insert(head2.end(), pre2.begin(), pre2.end());
	std::vector<int> tail1 = post1, tail2 = post2;
	tail1.push_back(tb);
	tail2.push_back(td);
	std::vector<int> order = riffle(rng, head1, head2);
	order.insert(order.end(), both.begin(), both.end());
	auto tail = riffle(rng, tail1, tail2);
	order.insert(order.end(), tail.begin(), tail.end());
	std::vector<int> rank(n);
	for (int i = 0; i < n; ++i) rank[order[i]] = i;

	// draw 6/7: one cross edge per direction between the 40% groups
	auto cross_candidates = [&](const std::vector<int>& from, const std::vector<int>& to) {
		std::vector<std::pair<int, int>> cand;
		for (int u : from)
			for (int v : to)
				if (rank[u] < rank[v] && !edge_set.count({u, v})) cand.emplace_back(u, v);
		std::sort(cand.begin(), cand.end(), [&rank](auto a, auto b) {
			return std::pair(rank[a.first], rank[a.second]) <
			       std::pair(rank[b.first], rank[b.second]);
		});
		return cand;
	};
	for (auto [from, to] : {std::pair(&only1, &only2), std::pair(&only2, &only1)}) {
		auto cand = cross_candidates(*from, *to);
		if (cand.empty())
			throw InfeasibleSpecError("no forward cross edge available");  // unreachable
		auto [u, v] = cand[draw(rng, cand.size())];
		add_edge(u, v);
	}

	const auto structural = static_cast<std::int64_t>(edge_list.size());
	if (budget < structural)
		throw InfeasibleSpecError(
		    "edge budget " + std::to_string(budget) + " below the " +
		    std::to_string(structural) + " backbone and cross edges; raise density");

	// draw 8: spend the rest on forward edges within the constraint groups
	std::vector<std::pair<int, int>> pool;
	std::set<std::pair<int, int>> pool_seen;
	auto collect = [&](const std::vector<int>& exclusive) {
		std::vector<int> members = exclusive;
		members.insert(members.end(), both.begin(), both.end());
		std::sort(members.begin(), members.end(),
		          [&rank](int a, int b) { return rank[a] < rank[b]; });
		for (std::size_t i = 0; i < members.size(); ++i)
			for (std::size_t j = i + 1; j < members.size(); ++j) {
				std::pair<int, int> e{members[i], members[j]};
				if (!edge_set.count(e) && pool_seen.insert(e).second) pool.push_back(e);
			}
	};
	collect(only1);
	collect(only2);
	std::sort(pool.begin(), pool.end(), [&rank](auto a, auto b) {
		return std::pair(rank[a.first], rank[a.second]) <
		       std::pair(rank[b.first], rank[b.second]);
	});
	shuffle_vec(rng, pool);

	std::int64_t fill = budget - structural;
	if (fill > static_cast<std::int64_t>(pool.size()))
		throw InfeasibleSpecError("edge budget " + std::to_string(budget) +
		                          " exceeds the " + std::to_string(structural + pool.size()) +
		                          " edges the grouped structure can host; lower density");
	for (std::int64_t i = 0; i < fill; ++i) add_edge(pool[i].first, pool[i].second);

	// draw 9: WCETs, in task-id order
	std::vector<Task> tasks(n);
	for (int i = 0; i < n; ++i) {
		tasks[i].id = "t" + std::to_string(i + 1);
		tasks[i].wcet =
		    spec.wcet_min +
		    static_cast<std::int64_t>(draw(rng, std::uint64_t(spec.wcet_max - spec.wcet_min + 1)));
	}
	std::int64_t total = 0;
	for (const auto& t : tasks) total += t.wcet;

	GeneratedInstance inst;
	std::vector<std::pair<std::string, std::string>> edges;
	edges.reserve(edge_list.size());
	for (auto [u, v] : edge_list) edges.emplace_back(tasks[u].id, tasks[v].id);
	inst.graph = TaskGraph(std::move(tasks), std::move(edges));
	inst.c1 = {inst.graph.id(ta), inst.graph.id(tb), total};
	inst.c2 = {inst.graph.id(tc), inst.graph.id(td), total};
	inst.comm = CommModel{CommModel::Kind::linear, Rational(0), 2};
	for (int t : only1) inst.group1.push_back(inst.graph.id(t));
	for (int t : only2) inst.group2.push_back(inst.graph.id(t));
	for (int t : both) inst.group_both.push_back(inst.graph.id(t));
	return inst;
}

InstanceStats instance_stats(const TaskGraph& g, const LatencyConstraint& c1,
                             const LatencyConstraint& c2, std::size_t cap) {
	InstanceStats s;
	s.tasks = static_cast<int>(g.task_count());
	s.edges = static_cast<int>(g.edges().size());
	std::int64_t all_pairs = std::int64_t(s.tasks) * (s.tasks - 1) / 2;
	s.density = all_pairs > 0 ? double(s.edges) / double(all_pairs) : 0.0;

	auto under1 = tasks_under(g, c1);
	auto under2 = tasks_under(g, c2);
	for (std::size_t i = 0; i < g.task_count(); ++i) {
		if (under1[i] && under2[i])
			++s.under_both;
		else if (under1[i])
			++s.under_1_only;
		else if (under2[i])
			++s.under_2_only;
	}
	s.paths_1 = enumerate_paths(g, c1.source, c1.sink, cap).paths.size();
	s.paths_2 = enumerate_paths(g, c2.source, c2.sink, cap).paths.size();
	s.kind = classify_pair(g, c1, c2).kind;
	return s;
}

}  // namespace latsched
