// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#include "latsched/generator.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "doctest.h"
#include "latsched/errors.hpp"

using namespace latsched;

TEST_CASE("edge budget is spent exactly") {
	// 12 tasks -> 66 orderable pairs; 0.25 and 0.5 of that, rounded
	for (std::uint64_t seed : {1u, 7u, 23u, 99u}) {
		GeneratorSpec spec;
		spec.n = 12;
		spec.seed = seed;
		spec.density = 0.25;
		CHECK(generate_x_instance(spec).graph.edges().size() == 17);
		spec.density = 0.5;
		CHECK(generate_x_instance(spec).graph.edges().size() == 33);
	}
}

TEST_CASE("membership groups: 40/40 plus shared remainder") {
	GeneratorSpec spec;
	spec.n = 12;
	spec.seed = 5;
	GeneratedInstance inst = generate_x_instance(spec);
	CHECK(inst.group1.size() == 5);
	CHECK(inst.group2.size() == 5);
	CHECK(inst.group_both.size() == 2);

	std::set<std::string> all;
	for (const auto* grp : {&inst.group1, &inst.group2, &inst.group_both})
		for (const auto& id : *grp) CHECK(all.insert(id).second);  // disjoint
	CHECK(all.size() == 12);

	// constraints run from each group's first to its last member
	CHECK(inst.c1.source == inst.group1.front());
	CHECK(inst.c1.sink == inst.group1.back());
	CHECK(inst.c2.source == inst.group2.front());
	CHECK(inst.c2.sink == inst.group2.back());
}

TEST_CASE("identical specs give identical instances") {
	GeneratorSpec spec;
	spec.n = 12;
	spec.density = 0.4;
	spec.seed = 42;
	GeneratedInstance a = generate_x_instance(spec);
	GeneratedInstance b = generate_x_instance(spec);
	CHECK(a.graph.edges() == b.graph.edges());
	REQUIRE(a.graph.task_count() == b.graph.task_count());
	for (std::size_t i = 0; i < a.graph.task_count(); ++i) {
		CHECK(a.graph.id(static_cast<int>(i)) == b.graph.id(static_cast<int>(i)));
		CHECK(a.graph.wcet(static_cast<int>(i)) == b.graph.wcet(static_cast<int>(i)));
	}
	CHECK(a.c1.source == b.c1.source);
	CHECK(a.c1.sink == b.c1.sink);
	CHECK(a.c1.bound == b.c1.bound);
	CHECK(a.group_both == b.group_both);

	spec.seed = 43;
	GeneratedInstance c = generate_x_instance(spec);
	CHECK(a.graph.edges() != c.graph.edges());  // seeds matter
}

TEST_CASE("every instance validates cleanly and forms an x pair") {
	for (std::uint64_t seed = 0; seed < 25; ++seed) {
		GeneratorSpec spec;
		spec.n = 12;
		spec.density = 0.4;
		spec.seed = seed;
		GeneratedInstance inst = generate_x_instance(spec);

		auto rep = validate_instance(inst.graph, {inst.c1, inst.c2});
		CHECK(rep.ok());
		CHECK(rep.warnings.empty());

		InstanceStats stats = instance_stats(inst.graph, inst.c1, inst.c2);
		CHECK(stats.tasks == 12);
		CHECK(stats.edges == 26);
		CHECK(stats.kind == PairKind::x);
		CHECK(stats.under_both >= 2);  // at least the shared chain
		CHECK(stats.paths_1 >= 1);
		CHECK(stats.paths_2 >= 1);

		// bounds are the total WCET
		CHECK(inst.c1.bound == inst.graph.total_wcet());
		CHECK(inst.c2.bound == inst.c1.bound);
		CHECK(inst.comm.kind == CommModel::Kind::linear);
		CHECK(inst.comm.q.is_zero());
	}
}

TEST_CASE("wcets respect the configured range") {
	GeneratorSpec spec;
	spec.n = 14;
	spec.density = 0.35;
	spec.seed = 3;
	spec.wcet_min = 2;
	spec.wcet_max = 4;
	GeneratedInstance inst = generate_x_instance(spec);
	std::int64_t lo = 100, hi = 0;
	for (std::size_t i = 0; i < inst.graph.task_count(); ++i) {
		lo = std::min(lo, inst.graph.wcet(static_cast<int>(i)));
		hi = std::max(hi, inst.graph.wcet(static_cast<int>(i)));
	}
	CHECK(lo >= 2);
	CHECK(hi <= 4);

	spec.wcet_min = spec.wcet_max = 7;
	inst = generate_x_instance(spec);
	for (std::size_t i = 0; i < inst.graph.task_count(); ++i)
		CHECK(inst.graph.wcet(static_cast<int>(i)) == 7);
}

TEST_CASE("infeasible parameter combinations are rejected with direction") {
	GeneratorSpec spec;
	spec.n = 12;
	spec.seed = 1;

	spec.density = 0.15;  // budget 10 < 13 structural edges
	try {
		generate_x_instance(spec);
		FAIL("expected InfeasibleSpecError");
	} catch (const InfeasibleSpecError& e) {
		CHECK(std::string(e.what()).find("raise density") != std::string::npos);
	}

	spec.density = 1.0;  // budget 66 > 43 hostable edges
	try {
		generate_x_instance(spec);
		FAIL("expected InfeasibleSpecError");
	} catch (const InfeasibleSpecError& e) {
		CHECK(std::string(e.what()).find("lower density") != std::string::npos);
	}

	spec.density = 0.4;
	spec.n = 5;
	CHECK_THROWS_AS(generate_x_instance(spec), InfeasibleSpecError);
	spec.n = 12;
	spec.density = 0.0;
	CHECK_THROWS_AS(generate_x_instance(spec), InfeasibleSpecError);
	spec.density = 0.4;
	spec.wcet_min = 0;
	CHECK_THROWS_AS(generate_x_instance(spec), InfeasibleSpecError);
	spec.wcet_min = 5;
	spec.wcet_max = 4;
	CHECK_THROWS_AS(generate_x_instance(spec), InfeasibleSpecError);
}
