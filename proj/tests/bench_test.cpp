// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#include "latsched/bench.hpp"

#include <sstream>
#include <string>

#include "doctest.h"

using namespace latsched;

namespace {

std::string csv_of(const RuntimeRow& r) {
	std::ostringstream os;
	write_csv_row(os, r);
	return os.str();
}

std::string csv_of(const RhoRow& r) {
	std::ostringstream os;
	write_csv_row(os, r);
	return os.str();
}

}  // namespace

TEST_CASE("runtime sweep: cell order, consecutive seeds, sane measurements") {
	RuntimeSweepSpec spec;
	spec.n_values = {8, 10};
	spec.densities = {0.4};
	spec.reps = 2;
	spec.seed_base = 1;

	std::vector<RuntimeRow> streamed;
	auto rows = bench_runtime_sweep(spec, [&](const RuntimeRow& r) { streamed.push_back(r); });

	REQUIRE(rows.size() == 4);
	CHECK(rows[0].n == 8);
	CHECK(rows[1].n == 8);
	CHECK(rows[2].n == 10);
	CHECK(rows[3].n == 10);
	for (std::size_t i = 0; i < rows.size(); ++i) {
		CAPTURE(i);
		CHECK(rows[i].seed == 1 + i);  // one seed per instance, across cells
		CHECK(rows[i].error.empty());
		CHECK(rows[i].paths >= 2);  // at least one path per constraint
		CHECK(rows[i].m >= 2);
		CHECK(rows[i].runtime_us >= 0);
		// bounds equal the total WCET, which the conditions cannot exceed at q=0
		CHECK(rows[i].schedulable);
	}

	REQUIRE(streamed.size() == rows.size());
	for (std::size_t i = 0; i < rows.size(); ++i) CHECK(csv_of(streamed[i]) == csv_of(rows[i]));
}

TEST_CASE("runtime sweep turns infeasible cells into error rows") {
	RuntimeSweepSpec spec;
	spec.n_values = {8};
	spec.densities = {0.2, 0.4};  // 0.2 is below the backbone at n = 8
	spec.reps = 2;
	spec.seed_base = 7;

	auto rows = bench_runtime_sweep(spec);
	REQUIRE(rows.size() == 4);
	CHECK(rows[0].error.find("raise density") != std::string::npos);
	CHECK(rows[1].error.find("raise density") != std::string::npos);
	CHECK(rows[0].runtime_us == 0);
	CHECK_FALSE(rows[0].schedulable);
	CHECK(rows[2].error.empty());
	CHECK(rows[3].error.empty());
}

TEST_CASE("csv rows are stable and comma-safe") {
	CHECK(std::string(kRuntimeCsvHeader) ==
	      "n,density,seed,paths,m,runtime_us,schedulable,error");
	CHECK(std::string(kRhoCsvHeader) ==
	      "n,density,seed,procs,at_m,m,m1,m2,L1_lb,L2_lb,L1_opt,L2_opt,rho1,rho2,optimal,error");

	RuntimeRow r{8, 0.4, 3, 14, 3, 250, true, ""};
	CHECK(csv_of(r) == "8,0.4,3,14,3,250,1,\n");
	r.error = "generator: n=8,\nd too low";
	CHECK(csv_of(r) == "8,0.4,3,14,3,250,1,generator: n=8;;d too low\n");

	RhoRow rr;
	rr.n = 10;
	rr.density = 0.4;
	rr.seed = 5;
	rr.procs = 3;
	rr.at_m = true;
	rr.m = 3;
	rr.m1 = 2;
	rr.m2 = 2;
	rr.l1_lb = 12.5;
	rr.l2_lb = 9;
	rr.l1_opt = 13;
	rr.l2_opt = 9;
	rr.rho1 = 1.04;
	rr.rho2 = 1;
	rr.optimal = true;
	CHECK(csv_of(rr) == "10,0.4,5,3,1,3,2,2,12.5,9,13,9,1.04,1,1,\n");
}

TEST_CASE("rho sweep emits an at-m row plus one per fixed processor count") {
	RhoSweepSpec spec;
	spec.n_values = {10};
	spec.densities = {0.4};
	spec.reps = 2;
	spec.seed_base = 3;
	spec.procs_values = {3, 2};

	auto rows = bench_rho_sweep(spec);
	REQUIRE(rows.size() == 6);  // 2 instances x (at-m + 2 fixed)
	for (std::size_t ci = 0; ci < 2; ++ci) {
		const RhoRow& at_m = rows[ci * 3];
		CAPTURE(ci);
		CHECK(at_m.at_m);
		CHECK(at_m.seed == 3 + ci);
		CHECK(at_m.procs == at_m.m);  // resolved to the combined allocation
		CHECK(rows[ci * 3 + 1].procs == 3);
		CHECK(rows[ci * 3 + 2].procs == 2);
		CHECK_FALSE(rows[ci * 3 + 1].at_m);
		for (std::size_t pi = 0; pi < 3; ++pi) {
			const RhoRow& row = rows[ci * 3 + pi];
			CHECK(row.error.empty());
			CHECK(row.optimal);
			CHECK(row.l1_lb > 0.0);
			CHECK(row.l2_lb > 0.0);
			// strict bounds under exact optima: never above, so rho >= 1
			CHECK(row.rho1 >= 1.0 - 1e-9);
			CHECK(row.rho2 >= 1.0 - 1e-9);
			CHECK(row.m == at_m.m);  // same instance, same allocation
		}
	}
}

TEST_CASE("rho sweep is deterministic across thread counts") {
	RhoSweepSpec spec;
	spec.n_values = {10};
	spec.densities = {0.4};
	spec.reps = 3;
	spec.seed_base = 11;
	spec.procs_values = {2};

	auto sequential = bench_rho_sweep(spec);
	spec.threads = 3;
	std::size_t sunk = 0;
	auto parallel = bench_rho_sweep(spec, [&](const RhoRow&) { ++sunk; });

	REQUIRE(sequential.size() == parallel.size());
	CHECK(sunk == parallel.size());
	for (std::size_t i = 0; i < sequential.size(); ++i) {
		CAPTURE(i);
		CHECK(csv_of(sequential[i]) == csv_of(parallel[i]));
	}
}

TEST_CASE("rho sweep records per-cell failures and moves on") {
	RhoSweepSpec spec;
	spec.n_values = {8};
	spec.densities = {0.2, 0.4};
	spec.reps = 1;
	spec.seed_base = 2;
	spec.procs_values = {2};

	auto rows = bench_rho_sweep(spec);
	REQUIRE(rows.size() == 4);
	CHECK_FALSE(rows[0].error.empty());  // infeasible cell, at-m row
	CHECK_FALSE(rows[1].error.empty());  // ... and its fixed-procs row
	CHECK(rows[2].error.empty());
	CHECK(rows[3].error.empty());
}
