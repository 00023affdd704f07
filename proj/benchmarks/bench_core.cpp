// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the hot paths: path enumeration, the greedy
// allocator, whole-system analysis, and a small exact-oracle search.

#include <benchmark/benchmark.h>

#include <latsched/allocation.hpp>
#include <latsched/analysis.hpp>
#include <latsched/generator.hpp>
#include <latsched/oracle.hpp>
#include <latsched/paths.hpp>
#include <latsched/task_graph.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace {

using namespace latsched;

// k stacked diamonds: 2^k distinct source-sink paths, the enumeration
// stress shape
TaskGraph stacked_diamonds(int k) {
	std::vector<Task> tasks;
	std::vector<std::pair<std::string, std::string>> edges;
	auto node = [&](std::string id) {
		tasks.push_back({id, 1});
		return id;
	};
	std::string prev = node("n0");
	for (int i = 0; i < k; ++i) {
		std::string a = node("a" + std::to_string(i));
		std::string b = node("b" + std::to_string(i));
		std::string next = node("n" + std::to_string(i + 1));
		edges.emplace_back(prev, a);
		edges.emplace_back(prev, b);
		edges.emplace_back(a, next);
		edges.emplace_back(b, next);
		prev = next;
	}
	return TaskGraph(std::move(tasks), std::move(edges));
}

void BM_enumerate_paths(benchmark::State& state) {
	const int k = static_cast<int>(state.range(0));
	TaskGraph g = stacked_diamonds(k);
	const std::string sink = "n" + std::to_string(k);
	for (auto _ : state) {
		PathSet ps = enumerate_paths(g, "n0", sink);
		benchmark::DoNotOptimize(ps.paths.data());
	}
	state.counters["paths"] = static_cast<double>(std::uint64_t(1) << k);
}
BENCHMARK(BM_enumerate_paths)->DenseRange(4, 16, 4)->Unit(benchmark::kMicrosecond);

void BM_allocate(benchmark::State& state) {
	GeneratorSpec gs;
	gs.n = static_cast<int>(state.range(0));
	gs.density = 0.4;
	gs.seed = 1;
	GeneratedInstance inst = generate_x_instance(gs);
	for (auto _ : state) {
		Allocation a = allocate(inst.graph, inst.c1);
		benchmark::DoNotOptimize(a.m);
	}
}
BENCHMARK(BM_allocate)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_analyze_system(benchmark::State& state) {
	GeneratorSpec gs;
	gs.n = static_cast<int>(state.range(0));
	gs.density = 0.4;
	gs.seed = 1;
	GeneratedInstance inst = generate_x_instance(gs);
	std::vector<LatencyConstraint> cs{inst.c1, inst.c2};
	for (auto _ : state) {
		SystemReport rep = analyze_system(inst.graph, cs, inst.comm, Mode::literal);
		benchmark::DoNotOptimize(rep.system_schedulable);
	}
}
BENCHMARK(BM_analyze_system)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_oracle(benchmark::State& state) {
	GeneratorSpec gs;
	gs.n = 10;
	gs.density = 0.4;
	gs.seed = 3;
	GeneratedInstance inst = generate_x_instance(gs);
	const int procs = allocate_pair(inst.graph, inst.c1, inst.c2).m_combined;
	for (auto _ : state) {
		OracleResult r =
		    optimal_schedule(inst.graph, procs, Objective{inst.c1.sink, {}});
		benchmark::DoNotOptimize(r.primary_start);
	}
}
BENCHMARK(BM_oracle)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
