// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end acceptance checks.  Each check prints one [PASS]/[FAIL] line;
// the exit code is the number of failures.  Thresholds live in the
// constants right below so a change of contract is a visible diff.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "latsched/allocation.hpp"
#include "latsched/analysis.hpp"
#include "latsched/bench.hpp"
#include "latsched/generator.hpp"
#include "latsched/oracle.hpp"
#include "latsched/paths.hpp"
#include "support/builders.hpp"
#include "support/reference.hpp"

using namespace latsched;
using namespace latsched::testutil;
using Clock = std::chrono::steady_clock;

namespace {

// pinned thresholds
constexpr double kEnumerationBudgetMs = 10.0;       // 01, 02
constexpr int kParallelismInstances = 200;          // 04
constexpr int kBoundSuiteInstances = 100;           // 05, 06
constexpr double kBoundSuiteBudgetSec = 300.0;      // 05
constexpr double kTightFraction = 0.90;             // 06
constexpr double kRhoTolerance = 1e-9;              // 06
constexpr int kRhoInstances = 20;                   // 07
constexpr double kRhoMedianLo = 1.0, kRhoMedianHi = 2.0;
constexpr std::int64_t kRuntimeRowBudgetUs = 1000000;  // 08: any (16, 0.4) row
constexpr int kCrossCheckInstances = 50;            // 09
constexpr double kCrossCheckBudgetSec = 600.0;      // 09

int failures = 0;

void report(int index, bool ok, const std::string& what, const std::string& detail) {
	std::printf("[%s] %02d %s: %s\n", ok ? "PASS" : "FAIL", index, what.c_str(),
	            detail.c_str());
	if (!ok) ++failures;
}

double ms_since(Clock::time_point t0) {
	return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt(const char* spec, auto... args) {
	char buf[512];
	std::snprintf(buf, sizeof buf, spec, args...);
	return buf;
}

// 01: path enumeration on the reference pipeline finds all seven paths fast
void check_enumeration() {
	auto g = pipeline11();
	auto t0 = Clock::now();
	PathSet ps = enumerate_paths(g, "t1", "t7");
	double ms = ms_since(t0);
	bool ok = ps.paths.size() == 7 && ms < kEnumerationBudgetMs;
	report(1, ok, "path enumeration on the reference pipeline",
	       fmt("%zu paths in %.3f ms (want 7 in < %.0f ms)", ps.paths.size(), ms,
	           kEnumerationBudgetMs));
}

// 02: the greedy cover of the same graph lands on three processors fast
void check_allocation() {
	auto g = pipeline11();
	auto t0 = Clock::now();
	Allocation a = allocate(g, {"t1", "t7", 9});
	double ms = ms_since(t0);
	bool ok = a.m == 3 && ms < kEnumerationBudgetMs;
	report(2, ok, "greedy path cover on the reference pipeline",
	       fmt("m = %d in %.3f ms (want 3 in < %.0f ms)", a.m, ms, kEnumerationBudgetMs));
}

// 03: the generator spends its edge budget exactly
void check_edge_budget() {
	int bad = 0;
	for (std::uint64_t seed = 1; seed <= 10; ++seed) {
		GeneratorSpec spec;
		spec.n = 12;
		spec.seed = seed;
		spec.density = 0.25;
		if (generate_x_instance(spec).graph.edges().size() != 17) ++bad;
		spec.density = 0.5;
		if (generate_x_instance(spec).graph.edges().size() != 33) ++bad;
	}
	report(3, bad == 0, "generator edge budget",
	       fmt("%d of 20 instances off the exact 17/33 edge counts", bad));
}

// 04: allocations never co-locate two tasks that could run in parallel
void check_parallelism() {
	struct Cell {
		int n;
		double density;
	};
	const std::vector<Cell> cells{{8, 0.4},   {8, 0.6},  {10, 0.3},  {10, 0.45},
	                              {10, 0.6},  {12, 0.25}, {12, 0.4},  {12, 0.55}};
	int tested = 0, bad = 0;
	std::uint64_t seed = 1;
	for (const Cell& cell : cells) {
		for (int rep = 0; rep < kParallelismInstances / int(cells.size()); ++rep, ++seed) {
			GeneratorSpec spec;
			spec.n = cell.n;
			spec.density = cell.density;
			spec.seed = seed;
			GeneratedInstance inst = generate_x_instance(spec);
			++tested;
			for (const LatencyConstraint& c : {inst.c1, inst.c2}) {
				Allocation a = allocate(inst.graph, c);
				if (!check_parallelism_optimality(inst.graph, a).empty()) ++bad;
			}
		}
	}
	report(4, tested == kParallelismInstances && bad == 0,
	       "allocations keep independent tasks apart",
	       fmt("%d instances, %d allocations with a co-located independent pair", tested,
	           bad));
}

struct BoundRun {
	std::uint64_t seed = 0;
	std::int64_t lhs = 0, opt = 0;
	bool certified = false;
};

std::vector<BoundRun> bound_suite() {
	static std::vector<BoundRun> runs;  // shared by 05 and 06
	if (!runs.empty()) return runs;
	const CommModel free{CommModel::Kind::linear, Rational(0), 2};
	for (std::uint64_t seed = 1; seed <= std::uint64_t(kBoundSuiteInstances); ++seed) {
		Bundle b = bundle_instance(seed);
		SingleVerdict v = check_single(b.graph, b.constraint, free, Mode::strict);
		OracleResult r = optimal_schedule(b.graph, v.m, {b.constraint.sink, std::nullopt},
		                                  0, 10.0);
		BoundRun run;
		run.seed = seed;
		run.lhs = v.lhs.rational_part().num();  // q = 0: integral by construction
		run.opt = r.primary_start;
		run.certified = r.optimal;
		runs.push_back(run);
	}
	return runs;
}

// 05: the start-to-start condition never exceeds the certified optimum
void check_lower_bound_soundness() {
	auto t0 = Clock::now();
	auto runs = bound_suite();
	double sec = ms_since(t0) / 1000.0;
	int violations = 0, uncertified = 0;
	for (const BoundRun& r : runs) {
		if (!r.certified) {
			++uncertified;
			continue;
		}
		if (r.lhs > r.opt) {
			++violations;
			std::printf("      seed %llu: condition %lld above optimum %lld\n",
			            (unsigned long long)r.seed, (long long)r.lhs, (long long)r.opt);
		}
	}
	bool ok = violations == 0 && uncertified == 0 && sec < kBoundSuiteBudgetSec;
	report(5, ok, "bound soundness against the exact scheduler",
	       fmt("%zu instances, %d violations, %d uncertified, %.1f s (budget %.0f s)",
	           runs.size(), violations, uncertified, sec, kBoundSuiteBudgetSec));
}

// 06: on the same suite the bound is usually tight
void check_lower_bound_tightness() {
	auto runs = bound_suite();
	int certified = 0, tight = 0;
	std::vector<std::string> exceptions;
	for (const BoundRun& r : runs) {
		if (!r.certified) continue;
		++certified;
		double rho = r.lhs > 0 ? double(r.opt) / double(r.lhs) : 0.0;
		if (std::fabs(rho - 1.0) <= kRhoTolerance)
			++tight;
		else
			exceptions.push_back(fmt("seed %llu rho %.6f (%lld/%lld)",
			                         (unsigned long long)r.seed, rho, (long long)r.opt,
			                         (long long)r.lhs));
	}
	double fraction = certified > 0 ? double(tight) / double(certified) : 0.0;
	report(6, fraction >= kTightFraction, "bound tightness on the chain-bundle suite",
	       fmt("%d of %d certified runs tight (%.0f%%, want >= %.0f%%)", tight, certified,
	           fraction * 100.0, kTightFraction * 100.0));
	for (const std::string& e : exceptions) std::printf("      loose: %s\n", e.c_str());
}

// 07: fewer processors never improve the ratio; the median stays moderate
void check_rho_landscape() {
	const CommModel free{CommModel::Kind::linear, Rational(0), 2};
	const std::vector<int> procs_grid{4, 3, 2};
	int monotone_violations = 0, uncertified = 0;
	std::vector<double> ratios;
	for (std::uint64_t seed = 1; seed <= std::uint64_t(kRhoInstances); ++seed) {
		GeneratorSpec spec;
		spec.n = 12;
		spec.density = 0.4;
		spec.seed = seed;
		GeneratedInstance inst = generate_x_instance(spec);
		std::vector<RhoResult> per_procs;
		for (int procs : procs_grid) {
			per_procs.push_back(compute_rho(inst.graph, inst.c1, inst.c2, procs, free,
			                                Mode::strict, kDefaultPathCap, 0, 30.0));
			const RhoResult& r = per_procs.back();
			if (!r.optimal) ++uncertified;
			ratios.push_back(r.rho1);
			ratios.push_back(r.rho2);
		}
		// processor counts shrink along the grid, so the exact ratios must
		// not shrink with them
		for (std::size_t i = 1; i < per_procs.size(); ++i) {
			const RhoResult &hi = per_procs[i - 1], &lo = per_procs[i];
			if (!hi.optimal || !lo.optimal) continue;
			if (hi.rho1_exact && lo.rho1_exact && *lo.rho1_exact < *hi.rho1_exact)
				++monotone_violations;
			if (hi.rho2_exact && lo.rho2_exact && *lo.rho2_exact < *hi.rho2_exact)
				++monotone_violations;
		}
	}
	std::sort(ratios.begin(), ratios.end());
	double median = ratios.empty() ? 0.0 : ratios[ratios.size() / 2];
	bool ok = monotone_violations == 0 && uncertified == 0 && median >= kRhoMedianLo &&
	          median <= kRhoMedianHi;
	report(7, ok, "ratio degrades monotonically with processor count",
	       fmt("%d monotonicity violations, %d uncertified, median rho %.4f (want in "
	           "[%.1f, %.1f])",
	           monotone_violations, uncertified, median, kRhoMedianLo, kRhoMedianHi));
}

// 08: analysis runtime grows with density and stays below a second
void check_runtime_sweep() {
	RuntimeSweepSpec spec;  // default grid: n 8..16, densities .2/.4/.6, 20 reps
	auto rows = bench_runtime_sweep(spec);

	double mean[3] = {0, 0, 0};
	int count[3] = {0, 0, 0};
	std::int64_t worst_16_04 = 0;
	for (const RuntimeRow& r : rows) {
		if (r.n != 16 || !r.error.empty()) continue;
		int d = r.density < 0.3 ? 0 : (r.density < 0.5 ? 1 : 2);
		mean[d] += double(r.runtime_us);
		++count[d];
		if (d == 1) worst_16_04 = std::max(worst_16_04, r.runtime_us);
	}
	for (int d = 0; d < 3; ++d) mean[d] = count[d] > 0 ? mean[d] / count[d] : -1.0;
	bool increasing = mean[0] >= 0 && mean[0] < mean[1] && mean[1] < mean[2];
	bool under_budget = worst_16_04 > 0 && worst_16_04 < kRuntimeRowBudgetUs;
	report(8, increasing && under_budget, "analysis runtime scales with density",
	       fmt("n=16 means %.0f/%.0f/%.0f us across densities, worst (16, 0.4) row %lld us",
	           mean[0], mean[1], mean[2], (long long)worst_16_04));
}

// 09: the branch-and-bound scheduler matches plain enumeration
void check_against_enumeration() {
	auto t0 = Clock::now();
	int mismatches = 0, uncertified = 0;
	for (int i = 0; i < kCrossCheckInstances; ++i) {
		auto seed = std::uint64_t(1000 + i);
		RandomDagSpec spec;
		spec.n = 4 + i % 5;  // 4..8 tasks
		spec.edge_prob = 0.35 + 0.05 * double(i % 4);
		spec.seed = seed;
		TaskGraph g = random_dag(spec);
		int procs = 1 + i % 3;
		if (spec.n == 8 && procs == 3) procs = 2;  // keep enumeration affordable
		std::int64_t q = (i % 3 == 2) ? 2 : 0;
		std::string sink = "t" + std::to_string(spec.n);

		OracleResult r = optimal_schedule(g, procs, {sink, std::nullopt}, q, 20.0);
		if (!r.optimal) {
			++uncertified;
			continue;
		}
		auto want = ref::exhaustive_best(g, procs, sink, "", q);
		if (r.primary_start != want.primary) {
			++mismatches;
			std::printf("      seed %llu n=%d procs=%d q=%lld: search %lld, enumeration "
			            "%lld\n",
			            (unsigned long long)seed, spec.n, procs, (long long)q,
			            (long long)r.primary_start, (long long)want.primary);
		}
	}
	double sec = ms_since(t0) / 1000.0;
	bool ok = mismatches == 0 && uncertified == 0 && sec < kCrossCheckBudgetSec;
	report(9, ok, "search equals exhaustive enumeration",
	       fmt("%d instances, %d mismatches, %d uncertified, %.1f s (budget %.0f s)",
	           kCrossCheckInstances, mismatches, uncertified, sec, kCrossCheckBudgetSec));
}

// 10: adding a processor never delays the objective
void check_processor_monotonicity() {
	int violations = 0, uncertified = 0;
	for (std::uint64_t seed = 1; seed <= 15; ++seed) {
		GeneratorSpec spec;
		spec.n = 12;
		spec.density = 0.4;
		spec.seed = seed;
		GeneratedInstance inst = generate_x_instance(spec);
		int m = allocate_pair(inst.graph, inst.c1, inst.c2).m_combined;
		std::int64_t prev = -1;
		for (int procs = 1; procs <= m + 1; ++procs) {
			OracleResult r = optimal_schedule(inst.graph, procs,
			                                  {inst.c1.sink, std::nullopt}, 0, 20.0);
			if (!r.optimal) {
				++uncertified;
				break;
			}
			if (prev >= 0 && r.primary_start > prev) ++violations;
			prev = r.primary_start;
		}
	}
	report(10, violations == 0 && uncertified == 0,
	       "extra processors never hurt the objective",
	       fmt("%d violations, %d uncertified over 15 instances", violations, uncertified));
}

}  // namespace

int main() {
	check_enumeration();
	check_allocation();
	check_edge_budget();
	check_parallelism();
	check_lower_bound_soundness();
	check_lower_bound_tightness();
	check_rho_landscape();
	check_runtime_sweep();
	check_against_enumeration();
	check_processor_monotonicity();
	std::printf("%d of 10 checks failed\n", failures);
	return failures;
}
