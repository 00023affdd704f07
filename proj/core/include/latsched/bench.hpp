// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "latsched/analysis.hpp"
#include "latsched/generator.hpp"

namespace latsched {

/// One measured instance of the analysis-runtime sweep.  A non-empty
/// `error` means the cell could not be produced or analysed (infeasible
/// generator parameters, path explosion); the timing fields are then zero.
struct RuntimeRow {
	int n = 0;
	double density = 0.0;
	std::uint64_t seed = 0;
	std::size_t paths = 0;  // enumerated paths, both constraints
	int m = 0;              // combined processor count
	std::int64_t runtime_us = 0;
	bool schedulable = false;
	std::string error;
};

struct RuntimeSweepSpec {
	std::vector<int> n_values{8, 10, 12, 14, 16};
	std::vector<double> densities{0.2, 0.4, 0.6};
	int reps = 20;
	std::uint64_t seed_base = 1;  // consecutive seeds, one per instance
	Mode mode = Mode::literal;
	CommModel comm;  // linear q = 0 unless configured
	std::size_t cap = kDefaultPathCap;
	std::int64_t wcet_min = 1, wcet_max = 10;
};

using RuntimeSink = std::function<void(const RuntimeRow&)>;

/// Generates reps instances per (n, density) cell and times the full
/// system analysis on each.  Sub-millisecond measurements are re-run and
/// the median of five is kept.  Failures become error rows, never aborts.
/// The sink (when given) streams rows as they are produced.
std::vector<RuntimeRow> bench_runtime_sweep(const RuntimeSweepSpec& spec,
                                            const RuntimeSink& sink = {});

inline constexpr const char* kRuntimeCsvHeader =
    "n,density,seed,paths,m,runtime_us,schedulable,error";

void write_csv_row(std::ostream& out, const RuntimeRow& row);

/// One instance of the bound-tightness sweep: exact optimal sink starts
/// against the pairwise lower bounds, on a fixed processor count or on the
/// combined allocation's m (at_m).
struct RhoRow {
	int n = 0;
	double density = 0.0;
	std::uint64_t seed = 0;
	int procs = 0;
	bool at_m = false;
	int m = 0, m1 = 0, m2 = 0;
	double l1_lb = 0.0, l2_lb = 0.0;
	std::int64_t l1_opt = 0, l2_opt = 0;
	double rho1 = 0.0, rho2 = 0.0;
	bool optimal = false;
	std::string error;
};

struct RhoSweepSpec {
	std::vector<int> n_values{10, 12};
	std::vector<double> densities{0.4};
	std::vector<int> procs_values;  // fixed counts on top of the at-m row
	int reps = 20;
	std::uint64_t seed_base = 1;
	Mode mode = Mode::strict;  // comparable with the exact optimum
	CommModel comm;
	std::size_t cap = kDefaultPathCap;
	std::int64_t wcet_min = 1, wcet_max = 10;
	std::int64_t q_edge = 0;
	double time_budget_seconds = 60.0;
	int threads = 1;  // oracle runs dominate; cells are independent
};

using RhoSink = std::function<void(const RhoRow&)>;

/// Row order in the result is deterministic (cell order) regardless of
/// thread count; with threads > 1 the sink is called from worker threads
/// in completion order, serialised by a lock.
std::vector<RhoRow> bench_rho_sweep(const RhoSweepSpec& spec, const RhoSink& sink = {});

inline constexpr const char* kRhoCsvHeader =
    "n,density,seed,procs,at_m,m,m1,m2,L1_lb,L2_lb,L1_opt,L2_opt,rho1,rho2,optimal,error";

void write_csv_row(std::ostream& out, const RhoRow& row);

}  // namespace latsched
