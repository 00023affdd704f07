// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
#include "latsched/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "latsched/errors.hpp"
#include "latsched/natural_order.hpp"

namespace latsched {

namespace {

std::int64_t want_int(const json& j, const char* what) {
	if (!j.is_number_integer())
		throw ParseError(std::string(what) + " must be an integer");
	return j.get<std::int64_t>();
}

std::string want_string(const json& j, const char* what) {
	if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
	return j.get<std::string>();
}

Rational parse_q(const json& j) {
	if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
	if (j.is_number_float()) return Rational::from_double(j.get<double>());
	if (j.is_string()) {
		auto r = Rational::parse(j.get<std::string>());
		if (!r) throw ParseError("cannot read q value \"" + j.get<std::string>() + "\"");
		return *r;
	}
	throw ParseError("q must be a number or a \"num/den\" string");
}

json constraint_json(const LatencyConstraint& c) {
	return {{"source", c.source}, {"sink", c.sink}, {"bound", c.bound}};
}

json comm_json(const CommModel& comm) {
	json j{{"model", to_string(comm.kind)}, {"q", rational_json(comm.q)}};
	if (comm.kind == CommModel::Kind::logarithmic) j["base"] = comm.log_base;
	return j;
}

json ids_json(const TaskGraph& g, const std::vector<int>& tasks) {
	json arr = json::array();
	for (int t : tasks) arr.push_back(g.id(t));
	return arr;
}

}  // namespace

json rational_json(const Rational& r) {
	if (r.is_integer()) return json(r.num());
	return json(r.to_string());
}

json cost_json(const Cost& c) {
	if (c.is_rational()) return rational_json(c.rational_part());
	return json(c.to_string());
}

Instance parse_instance(const json& j) {
	if (!j.is_object()) throw ParseError("top level must be an object");
	if (!j.contains("tasks") || !j.at("tasks").is_array())
		throw ParseError("\"tasks\" must be an array");

	std::vector<Task> tasks;
	for (const json& t : j.at("tasks")) {
		if (!t.is_object()) throw ParseError("each task must be an object");
		Task task;
		task.id = want_string(t.contains("id") ? t.at("id") : json(), "task id");
		if (t.contains("wcet")) task.wcet = want_int(t.at("wcet"), "wcet");
		tasks.push_back(std::move(task));
	}

	std::vector<std::pair<std::string, std::string>> edges;
	if (j.contains("edges")) {
		if (!j.at("edges").is_array()) throw ParseError("\"edges\" must be an array");
		for (const json& e : j.at("edges")) {
			if (!e.is_array() || e.size() != 2)
				throw ParseError("each edge must be a two-element array");
			edges.emplace_back(want_string(e[0], "edge endpoint"),
			                   want_string(e[1], "edge endpoint"));
		}
	}

	Instance inst{TaskGraph(std::move(tasks), std::move(edges)), {}, {}};

	if (j.contains("constraints")) {
		if (!j.at("constraints").is_array())
			throw ParseError("\"constraints\" must be an array");
		for (const json& c : j.at("constraints")) {
			if (!c.is_object()) throw ParseError("each constraint must be an object");
			LatencyConstraint lc;
			lc.source = want_string(c.contains("source") ? c.at("source") : json(),
			                        "constraint source");
			lc.sink = want_string(c.contains("sink") ? c.at("sink") : json(),
			                      "constraint sink");
			lc.bound = want_int(c.contains("bound") ? c.at("bound") : json(),
			                    "constraint bound");
			inst.constraints.push_back(std::move(lc));
		}
	}

	if (j.contains("comm")) {
		const json& c = j.at("comm");
		if (!c.is_object()) throw ParseError("\"comm\" must be an object");
		std::string model = c.contains("model") ? want_string(c.at("model"), "comm model")
		                                        : std::string("linear");
		if (model == "linear") {
			inst.comm.kind = CommModel::Kind::linear;
		} else if (model == "log" || model == "logarithmic") {
			inst.comm.kind = CommModel::Kind::logarithmic;
		} else {
			throw ParseError("unknown comm model \"" + model + "\"");
		}
		if (c.contains("q")) inst.comm.q = parse_q(c.at("q"));
		if (c.contains("base")) {
			std::int64_t base = want_int(c.at("base"), "log base");
			if (base < 2) throw ParseError("log base must be at least 2");
			inst.comm.log_base = static_cast<std::uint32_t>(base);
		}
		if (inst.comm.q.is_negative()) throw ParseError("q must be non-negative");
	}
	return inst;
}

Instance parse_instance_text(std::string_view text) {
	json j;
	try {
		j = json::parse(text);
	} catch (const nlohmann::json::exception& e) {
		throw ParseError(e.what());
	}
	return parse_instance(j);
}

Instance load_instance(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw ParseError("cannot open " + path);
	std::ostringstream buf;
	buf << in.rdbuf();
	return parse_instance_text(buf.str());
}

json to_json(const Instance& inst) {
	json tasks = json::array();
	for (const Task& t : inst.graph.tasks())
		tasks.push_back({{"id", t.id}, {"wcet", t.wcet}});
	json edges = json::array();
	for (const auto& [from, to] : inst.graph.edges()) edges.push_back({from, to});
	json constraints = json::array();
	for (const LatencyConstraint& c : inst.constraints)
		constraints.push_back(constraint_json(c));
	return {{"tasks", std::move(tasks)},
	        {"edges", std::move(edges)},
	        {"constraints", std::move(constraints)},
	        {"comm", comm_json(inst.comm)}};
}

void save_json(const json& j, const std::string& path) {
	std::ofstream out(path);
	if (!out) throw std::runtime_error("cannot write " + path);
	out << j.dump(2) << '\n';
}

json to_json(const ValidationReport& report) {
	json violations = json::array();
	for (const Violation& v : report.violations)
		violations.push_back(
		    {{"rule", v.rule}, {"subject", v.subject}, {"message", v.message}});
	return {{"ok", report.ok()},
	        {"violations", std::move(violations)},
	        {"warnings", report.warnings}};
}

json to_json(const TaskGraph& g, const PathSet& ps) {
	json paths = json::array();
	for (const Path& p : ps.paths)
		paths.push_back({{"tasks", ids_json(g, p.tasks)}, {"length", p.length}});
	json exclusive = json::array();
	for (const auto& part : ps.parts.exclusive) exclusive.push_back(ids_json(g, part));
	return {{"source", g.id(ps.source)},
	        {"sink", g.id(ps.sink)},
	        {"count", ps.paths.size()},
	        {"paths", std::move(paths)},
	        {"shared", ids_json(g, ps.parts.shared)},
	        {"shared_wcet", ps.parts.shared_wcet},
	        {"exclusive", std::move(exclusive)},
	        {"exclusive_wcet", ps.parts.exclusive_wcet}};
}

json to_json(const TaskGraph& g, const Allocation& alloc) {
	std::vector<int> assigned;
	for (int t = 0; t < static_cast<int>(alloc.proc_of.size()); ++t)
		if (alloc.proc_of[t] >= 0) assigned.push_back(t);
	std::sort(assigned.begin(), assigned.end(),
	          [&g](int a, int b) { return natural_less(g.id(a), g.id(b)); });
	json assignment = json::object();
	for (int t : assigned) assignment[g.id(t)] = alloc.proc_of[t];
	json selected = json::array();
	for (int i : alloc.selection)
		selected.push_back(ids_json(g, alloc.path_set.paths[i].tasks));
	return {{"m", alloc.m},
	        {"assignment", std::move(assignment)},
	        {"selected_paths", std::move(selected)}};
}

json to_json(const SingleVerdict& v) {
	return {{"constraint", constraint_json(v.constraint)},
	        {"mode", to_string(v.mode)},
	        {"m", v.m},
	        {"path_count", v.path_count},
	        {"shared_wcet", v.shared_wcet},
	        {"max_exclusive_wcet", v.max_exclusive_wcet},
	        {"lhs", cost_json(v.lhs)},
	        {"slack", cost_json(v.slack)},
	        {"schedulable", v.schedulable}};
}

json to_json(const XVerdict& v) {
	return {{"kind", "x"},
	        {"mode", to_string(v.mode)},
	        {"m1", v.m1},
	        {"m2", v.m2},
	        {"m", v.m},
	        {"single_1", to_json(v.single1)},
	        {"single_2", to_json(v.single2)},
	        {"cross_1", cost_json(v.cross_1)},
	        {"cross_2", cost_json(v.cross_2)},
	        {"cross_1_ok", v.cross_1_ok},
	        {"cross_2_ok", v.cross_2_ok},
	        {"fewer_procs_than_sum", v.fewer_procs_than_sum},
	        {"schedulable", v.schedulable}};
}

json to_json(const LowerBounds& lb) {
	json entries = json::array();
	for (const LowerBoundEntry& e : lb.entries)
		entries.push_back({{"source", e.constraint.source},
		                   {"sink", e.constraint.sink},
		                   {"value", cost_json(e.value)}});
	return {{"mode", to_string(lb.mode)}, {"bounds", std::move(entries)}};
}

json to_json(const SystemReport& report) {
	json constraints = json::array();
	for (const ConstraintReport& c : report.constraints) {
		json entry{{"constraint", constraint_json(c.constraint)}};
		if (!c.error.empty()) entry["error"] = c.error;
		if (c.verdict) entry["verdict"] = to_json(*c.verdict);
		if (c.lower_bound) entry["lower_bound"] = cost_json(*c.lower_bound);
		constraints.push_back(std::move(entry));
	}
	json pairs = json::array();
	for (const PairReport& p : report.pairs) {
		json entry{{"first", p.first}, {"second", p.second}};
		if (!p.error.empty()) entry["error"] = p.error;
		if (p.kind) entry["kind"] = to_string(*p.kind);
		if (p.x_verdict) entry["x"] = to_json(*p.x_verdict);
		if (p.x_lower_bounds) entry["lower_bounds"] = to_json(*p.x_lower_bounds);
		pairs.push_back(std::move(entry));
	}
	return {{"mode", to_string(report.mode)},
	        {"comm", comm_json(report.comm)},
	        {"system_schedulable", report.system_schedulable},
	        {"any_error", report.any_error},
	        {"constraints", std::move(constraints)},
	        {"pairs", std::move(pairs)}};
}

json to_json(const TaskGraph& g, const Schedule& s) {
	json tasks = json::object();
	for (std::size_t t = 0; t < s.entries.size(); ++t)
		tasks[g.id(static_cast<int>(t))] = {{"proc", s.entries[t].proc},
		                                    {"start", s.entries[t].start}};
	return {{"num_procs", s.num_procs}, {"makespan", s.makespan},
	        {"tasks", std::move(tasks)}};
}

json to_json(const TaskGraph& g, const OracleResult& r) {
	json j{{"optimal", r.optimal},
	       {"primary_start", r.primary_start},
	       {"nodes", r.nodes},
	       {"elapsed_seconds", r.elapsed_seconds},
	       {"schedule", to_json(g, r.schedule)}};
	if (r.secondary_start) j["secondary_start"] = *r.secondary_start;
	return j;
}

json to_json(const RhoResult& r) {
	json j{{"procs", r.procs},
	       {"m", r.m},
	       {"m1", r.m1},
	       {"m2", r.m2},
	       {"l1_lb", cost_json(r.l1_lb)},
	       {"l2_lb", cost_json(r.l2_lb)},
	       {"l1_opt", r.l1_opt},
	       {"l2_opt", r.l2_opt},
	       {"rho1", r.rho1},
	       {"rho2", r.rho2},
	       {"optimal", r.optimal}};
	if (r.rho1_exact) j["rho1_exact"] = rational_json(*r.rho1_exact);
	if (r.rho2_exact) j["rho2_exact"] = rational_json(*r.rho2_exact);
	return j;
}

}  // namespace latsched
