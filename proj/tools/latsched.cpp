// Copyright 2026 latsched Authors
// SPDX-License-Identifier: Apache-2.0
//
// latsched — schedulability analysis for DAG task systems under latency
// constraints on multiprocessor platforms.  One subcommand per pipeline
// stage; JSON in, JSON/CSV out, everything deterministic given the seed.
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latsched/analysis.hpp"
#include "latsched/bench.hpp"
#include "latsched/errors.hpp"
#include "latsched/generator.hpp"
#include "latsched/json_io.hpp"
#include "latsched/natural_order.hpp"
#include "latsched/oracle.hpp"

using namespace latsched;

namespace {

Mode parse_mode(const std::string& s) {
	if (s == "literal") return Mode::literal;
	if (s == "strict") return Mode::strict;
	throw InvalidArgumentError("unknown mode \"" + s + "\" (use literal or strict)");
}

CommModel::Kind parse_comm_kind(const std::string& s) {
	if (s == "linear") return CommModel::Kind::linear;
	if (s == "log" || s == "logarithmic") return CommModel::Kind::logarithmic;
	throw InvalidArgumentError("unknown comm model \"" + s + "\" (use linear or log)");
}

Rational parse_rational(const std::string& s) {
	auto r = Rational::parse(s);
	if (!r) throw InvalidArgumentError("cannot read \"" + s + "\" as a number");
	return *r;
}

std::string header_line(Mode mode, const CommModel& comm) {
	std::string line = "mode=" + std::string(to_string(mode)) +
	                   " comm=" + to_string(comm.kind) + " q=" + comm.q.to_string();
	if (comm.kind == CommModel::Kind::logarithmic)
		line += " base=" + std::to_string(comm.log_base);
	return line;
}

void emit(const json& j, const std::string& out_path, bool to_stdout) {
	if (!out_path.empty()) save_json(j, out_path);
	if (to_stdout) std::cout << j.dump(2) << '\n';
}

std::string describe(const LatencyConstraint& c) {
	return "L(" + c.source + "," + c.sink + ")";
}

std::string path_line(const TaskGraph& g, const Path& p) {
	std::string line;
	for (int t : p.tasks) {
		if (!line.empty()) line += ' ';
		line += g.id(t);
	}
	return line;
}

void print_single(const SingleVerdict& v) {
	std::cout << describe(v.constraint) << " <= " << v.constraint.bound
	          << ": m=" << v.m << " paths=" << v.path_count
	          << " shared=" << v.shared_wcet << " max_excl=" << v.max_exclusive_wcet
	          << " lhs=" << v.lhs.to_string() << " slack=" << v.slack.to_string()
	          << (v.schedulable ? " -> ok" : " -> violated") << '\n';
}

// ---- subcommand bodies ----------------------------------------------------

int run_validate(const std::string& graph_path, bool as_json) {
	Instance inst = load_instance(graph_path);
	ValidationReport report = validate_instance(inst.graph, inst.constraints);
	if (as_json) {
		std::cout << to_json(report).dump(2) << '\n';
	} else {
		std::cout << inst.graph.task_count() << " tasks, " << inst.graph.edges().size()
		          << " edges, " << inst.constraints.size() << " constraints\n";
		for (const Violation& v : report.violations)
			std::cout << "violation [" << v.rule << "] " << v.message << '\n';
		for (const std::string& w : report.warnings) std::cout << "warning: " << w << '\n';
		std::cout << (report.ok() ? "ok" : "invalid") << '\n';
	}
	return report.ok() ? 0 : 1;
}

int run_paths(const std::string& graph_path, const std::string& source,
              const std::string& sink, std::size_t cap, bool as_json,
              const std::string& out_path) {
	Instance inst = load_instance(graph_path);
	PathSet ps = enumerate_paths(inst.graph, source, sink, cap);
	json j = to_json(inst.graph, ps);
	emit(j, out_path, as_json);
	if (!as_json) {
		std::cout << ps.paths.size() << " paths from " << source << " to " << sink << '\n';
		for (const Path& p : ps.paths)
			std::cout << "  " << path_line(inst.graph, p) << "  (length " << p.length
			          << ")\n";
		std::cout << "shared wcet " << ps.parts.shared_wcet << '\n';
	}
	return 0;
}

int run_allocate(const std::string& graph_path, std::string source, std::string sink,
                 std::size_t cap, bool as_json, const std::string& out_path) {
	Instance inst = load_instance(graph_path);
	if (source.empty() || sink.empty()) {
		if (inst.constraints.empty())
			throw InvalidArgumentError(
			    "no constraints in the file; give --source and --sink");
		source = inst.constraints.front().source;
		sink = inst.constraints.front().sink;
	}
	LatencyConstraint c{source, sink, 0};
	Allocation alloc = allocate(inst.graph, c, cap);
	json j = to_json(inst.graph, alloc);
	emit(j, out_path, as_json);
	if (!as_json) {
		std::cout << "m = " << alloc.m << '\n';
		for (int idx : alloc.selection)
			std::cout << "  path " << path_line(inst.graph, alloc.path_set.paths[idx])
			          << '\n';
		for (const auto& [id, proc] : j.at("assignment").items())
			std::cout << "  " << id << " -> p" << proc.get<int>() << '\n';
	}
	return 0;
}

struct CommOverride {
	std::optional<CommModel::Kind> kind;
	std::optional<Rational> q;
	std::optional<std::uint32_t> base;

	CommModel apply(CommModel comm) const {
		if (kind) comm.kind = *kind;
		if (q) comm.q = *q;
		if (base) comm.log_base = *base;
		return comm;
	}
};

int run_check(const std::string& graph_path, Mode mode, const CommOverride& over,
              std::size_t cap, bool as_json, const std::string& out_path) {
	Instance inst = load_instance(graph_path);
	CommModel comm = over.apply(inst.comm);
	SystemReport report = analyze_system(inst.graph, inst.constraints, comm, mode, cap);
	json j = to_json(report);
	emit(j, out_path, as_json);
	if (!as_json) {
		std::cout << header_line(mode, comm) << '\n';
		for (const ConstraintReport& c : report.constraints) {
			if (!c.error.empty()) {
				std::cout << describe(c.constraint) << ": error: " << c.error << '\n';
				continue;
			}
			print_single(*c.verdict);
		}
		for (const PairReport& p : report.pairs) {
			std::cout << "pair (" << p.first << "," << p.second << "): ";
			if (!p.error.empty()) {
				std::cout << "error: " << p.error << '\n';
				continue;
			}
			std::cout << "kind=" << to_string(*p.kind);
			if (p.x_verdict) {
				const XVerdict& x = *p.x_verdict;
				std::cout << " m1=" << x.m1 << " m2=" << x.m2 << " m=" << x.m
				          << " cross_1=" << x.cross_1.to_string()
				          << " cross_2=" << x.cross_2.to_string()
				          << (x.schedulable ? " -> ok" : " -> violated");
			}
			std::cout << '\n';
		}
		if (report.constraints.empty()) std::cout << "no constraints to check\n";
		std::cout << "system: "
		          << (report.system_schedulable ? "schedulable" : "not schedulable")
		          << '\n';
	}
	if (report.any_error) return 2;
	return report.system_schedulable ? 0 : 1;
}

int run_bounds(const std::string& graph_path, Mode mode, const CommOverride& over,
               std::size_t cap, bool as_json, const std::string& out_path) {
	Instance inst = load_instance(graph_path);
	CommModel comm = over.apply(inst.comm);
	SystemReport report = analyze_system(inst.graph, inst.constraints, comm, mode, cap);

	json singles = json::array();
	for (const ConstraintReport& c : report.constraints) {
		json entry{{"source", c.constraint.source}, {"sink", c.constraint.sink}};
		if (!c.error.empty())
			entry["error"] = c.error;
		else
			entry["value"] = cost_json(*c.lower_bound);
		singles.push_back(std::move(entry));
	}
	json pairs = json::array();
	for (const PairReport& p : report.pairs) {
		if (!p.x_lower_bounds && p.error.empty()) continue;
		json entry{{"first", p.first}, {"second", p.second}};
		if (!p.error.empty())
			entry["error"] = p.error;
		else
			entry["bounds"] = to_json(*p.x_lower_bounds);
		pairs.push_back(std::move(entry));
	}
	json j{{"mode", to_string(mode)},
	       {"singles", std::move(singles)},
	       {"pairs", std::move(pairs)}};
	emit(j, out_path, as_json);
	if (!as_json) {
		std::cout << header_line(mode, comm) << '\n';
		for (const ConstraintReport& c : report.constraints) {
			if (!c.error.empty())
				std::cout << describe(c.constraint) << ": error: " << c.error << '\n';
			else
				std::cout << describe(c.constraint)
				          << " >= " << c.lower_bound->to_string() << '\n';
		}
		for (const PairReport& p : report.pairs) {
			if (!p.x_lower_bounds) continue;
			for (const LowerBoundEntry& e : p.x_lower_bounds->entries)
				std::cout << describe(e.constraint) << " >= " << e.value.to_string()
				          << "  (pairwise " << p.first << "," << p.second << ")\n";
		}
	}
	return report.any_error ? 2 : 0;
}

int run_generate(int n, double density, std::uint64_t seed, std::int64_t wcet_min,
                 std::int64_t wcet_max, const CommOverride& over, bool as_json,
                 const std::string& out_path) {
	GeneratorSpec gs;
	gs.n = n;
	gs.density = density;
	gs.seed = seed;
	gs.wcet_min = wcet_min;
	gs.wcet_max = wcet_max;
	GeneratedInstance gen = generate_x_instance(gs);
	Instance inst{std::move(gen.graph), {gen.c1, gen.c2}, over.apply(gen.comm)};
	json j = to_json(inst);
	if (out_path.empty() && !as_json) {
		std::cout << j.dump(2) << '\n';  // nowhere else to put it
	} else {
		emit(j, out_path, as_json);
	}
	if (!out_path.empty() && !as_json)
		std::cout << inst.graph.task_count() << " tasks, " << inst.graph.edges().size()
		          << " edges -> " << out_path << '\n';
	return 0;
}

int run_oracle(const std::string& graph_path, int procs, const std::string& objective,
               const std::string& secondary, std::int64_t q_edge, double budget,
               bool as_json, const std::string& out_path) {
	Instance inst = load_instance(graph_path);
	Objective obj{objective, secondary.empty() ? std::nullopt
	                                           : std::optional<std::string>(secondary)};
	OracleResult r = optimal_schedule(inst.graph, procs, obj, q_edge, budget);
	json j = to_json(inst.graph, r);
	emit(j, out_path, as_json);
	if (!as_json) {
		std::cout << "start(" << objective << ") = " << r.primary_start
		          << (r.optimal ? " (optimal)" : " (budget hit, best found)") << '\n';
		if (r.secondary_start)
			std::cout << "start(" << secondary << ") = " << *r.secondary_start << '\n';
		std::cout << "procs=" << r.schedule.num_procs
		          << " makespan=" << r.schedule.makespan << " nodes=" << r.nodes
		          << " elapsed=" << r.elapsed_seconds << "s\n";
		std::map<int, std::vector<int>> by_proc;
		for (std::size_t t = 0; t < r.schedule.entries.size(); ++t)
			by_proc[r.schedule.entries[t].proc].push_back(static_cast<int>(t));
		for (auto& [proc, tasks] : by_proc) {
			std::sort(tasks.begin(), tasks.end(), [&r](int a, int b) {
				return r.schedule.entries[a].start < r.schedule.entries[b].start;
			});
			std::cout << "  p" << proc << ":";
			for (int t : tasks)
				std::cout << ' ' << inst.graph.id(t) << '@'
				          << r.schedule.entries[t].start;
			std::cout << '\n';
		}
	}
	return 0;
}

int run_rho(const std::string& graph_path, int procs, Mode mode, const CommOverride& over,
            std::size_t cap, std::int64_t q_edge, double budget, bool as_json,
            const std::string& out_path) {
	Instance inst = load_instance(graph_path);
	if (inst.constraints.size() != 2)
		throw InvalidArgumentError("rho needs exactly two constraints in the file, got " +
		                           std::to_string(inst.constraints.size()));
	CommModel comm = over.apply(inst.comm);
	RhoResult r = compute_rho(inst.graph, inst.constraints[0], inst.constraints[1], procs,
	                          comm, mode, cap, q_edge, budget);
	json j = to_json(r);
	emit(j, out_path, as_json);
	if (!as_json) {
		std::cout << header_line(mode, comm) << '\n';
		std::cout << "procs=" << r.procs << " m=" << r.m << " (m1=" << r.m1
		          << ", m2=" << r.m2 << ")\n";
		std::cout << describe(inst.constraints[0]) << ": lb=" << r.l1_lb.to_string()
		          << " opt=" << r.l1_opt << " rho=" << r.rho1 << '\n';
		std::cout << describe(inst.constraints[1]) << ": lb=" << r.l2_lb.to_string()
		          << " opt=" << r.l2_opt << " rho=" << r.rho2 << '\n';
		if (!r.optimal) std::cout << "time budget hit: optima not certified\n";
	}
	return 0;
}

// one sink used by both sweeps: header once, then flushed row by row so an
// interrupted sweep still leaves a usable file
template <typename Row>
int run_sweep(const std::string& out_path, const char* header,
              const std::function<void(const std::function<void(const Row&)>&)>& run) {
	std::ofstream file;
	std::ostream* out = &std::cout;
	if (!out_path.empty()) {
		file.open(out_path);
		if (!file) throw std::runtime_error("cannot write " + out_path);
		out = &file;
	}
	*out << header << '\n';
	out->flush();
	run([out](const Row& row) {
		write_csv_row(*out, row);
		out->flush();
	});
	return 0;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"schedulability analysis for DAG tasks under latency constraints"};
	app.require_subcommand(1);
	app.set_version_flag("--version", "latsched 0.1.0");

	std::function<int()> action;

	// shared option storage
	std::string graph_path, out_path, source, sink, objective, secondary;
	std::string mode_name = "literal";
	bool as_json = false;
	std::size_t cap = kDefaultPathCap;
	CommOverride over;
	std::string comm_name, q_text;
	std::uint32_t base = 2;
	int procs = 0;
	std::int64_t q_edge = 0;
	double budget = 60.0;

	auto add_common = [&](CLI::App* sub, bool with_mode) {
		sub->add_option("--graph", graph_path, "instance JSON file")->required();
		sub->add_flag("--json", as_json, "print JSON instead of text");
		sub->add_option("--out", out_path, "write the JSON result here");
		sub->add_option("--cap", cap, "path enumeration guard");
		if (with_mode) {
			sub->add_option("--mode", mode_name, "literal|strict (default literal)");
			sub->add_option("--comm", comm_name, "override comm model: linear|log");
			sub->add_option("--q", q_text, "override comm overhead factor");
			sub->add_option("--base", base, "override log base")->check(CLI::Range(2, 64));
		}
	};
	auto comm_override = [&](CLI::App* sub) {
		over = {};
		if (sub->count("--comm")) over.kind = parse_comm_kind(comm_name);
		if (sub->count("--q")) over.q = parse_rational(q_text);
		if (sub->count("--base")) over.base = base;
	};

	auto* validate = app.add_subcommand("validate", "structural checks on an instance");
	add_common(validate, false);
	validate->callback([&] { action = [&] { return run_validate(graph_path, as_json); }; });

	auto* paths = app.add_subcommand("paths", "enumerate source-to-sink paths");
	add_common(paths, false);
	paths->add_option("--source", source, "path source task")->required();
	paths->add_option("--sink", sink, "path sink task")->required();
	paths->callback([&] {
		action = [&] { return run_paths(graph_path, source, sink, cap, as_json, out_path); };
	});

	auto* allocate_cmd = app.add_subcommand(
	    "allocate", "greedy path-cover processor allocation for one constraint");
	add_common(allocate_cmd, false);
	allocate_cmd->add_option("--source", source, "constraint source (default: first constraint)");
	allocate_cmd->add_option("--sink", sink, "constraint sink");
	allocate_cmd->callback([&] {
		action = [&] {
			return run_allocate(graph_path, source, sink, cap, as_json, out_path);
		};
	});

	auto* check = app.add_subcommand(
	    "check", "schedulability verdict (exit 0 yes, 1 no, 2 error)");
	add_common(check, true);
	check->callback([&] {
		action = [&] {
			comm_override(check);
			return run_check(graph_path, parse_mode(mode_name), over, cap, as_json,
			                 out_path);
		};
	});

	auto* bounds = app.add_subcommand("bounds", "minimal admissible latency bounds");
	add_common(bounds, true);
	bounds->callback([&] {
		action = [&] {
			comm_override(bounds);
			return run_bounds(graph_path, parse_mode(mode_name), over, cap, as_json,
			                  out_path);
		};
	});

	int gen_n = 12;
	double gen_density = 0.4;
	std::uint64_t seed = 0;
	std::int64_t wcet_min = 1, wcet_max = 10;
	auto* generate = app.add_subcommand(
	    "generate", "random instance with two mutually dependent constraints");
	generate->add_option("--n", gen_n, "task count")->check(CLI::Range(6, 64));
	generate->add_option("--density", gen_density, "edge density in (0,1]");
	generate->add_option("--seed", seed, "generator seed");
	generate->add_option("--wcet-min", wcet_min, "minimum task WCET");
	generate->add_option("--wcet-max", wcet_max, "maximum task WCET");
	generate->add_option("--comm", comm_name, "comm model for the emitted file");
	generate->add_option("--q", q_text, "comm overhead factor for the emitted file");
	generate->add_option("--base", base, "log base")->check(CLI::Range(2, 64));
	generate->add_flag("--json", as_json, "print JSON to stdout");
	generate->add_option("--out", out_path, "write the instance here");
	generate->callback([&] {
		action = [&] {
			comm_override(generate);
			return run_generate(gen_n, gen_density, seed, wcet_min, wcet_max, over,
			                    as_json, out_path);
		};
	});

	auto* oracle = app.add_subcommand(
	    "oracle", "exact minimal start time of a task via branch and bound");
	add_common(oracle, false);
	oracle->add_option("--procs", procs, "processor count")->required();
	oracle->add_option("--objective", objective, "task whose start is minimised")->required();
	oracle->add_option("--secondary", secondary, "tie-break task, minimised second");
	oracle->add_option("--q-edge", q_edge, "per-edge cross-processor delay");
	oracle->add_option("--time-budget", budget, "seconds before best-so-far is returned");
	oracle->callback([&] {
		action = [&] {
			return run_oracle(graph_path, procs, objective, secondary, q_edge, budget,
			                  as_json, out_path);
		};
	});

	auto* rho = app.add_subcommand(
	    "rho", "bound tightness: exact optimum over pairwise lower bound");
	add_common(rho, true);
	rho->add_option("--procs", procs, "processor count (0 = the allocation's m)");
	rho->add_option("--q-edge", q_edge, "per-edge cross-processor delay for the oracle");
	rho->add_option("--time-budget", budget, "oracle budget in seconds");
	rho->callback([&] {
		action = [&] {
			comm_override(rho);
			return run_rho(graph_path, procs, parse_mode(mode_name), over, cap, q_edge,
			               budget, as_json, out_path);
		};
	});

	std::vector<int> n_list{8, 10, 12, 14, 16};
	std::vector<double> density_list{0.2, 0.4, 0.6};
	std::vector<int> procs_list;
	int reps = 20;
	std::uint64_t seed_base = 1;
	int threads = 1;

	auto* bench_rt = app.add_subcommand("bench-runtime",
	                                    "analysis runtime sweep, CSV per instance");
	bench_rt->add_option("--n-list", n_list, "task counts")->delimiter(',');
	bench_rt->add_option("--density-list", density_list, "densities")->delimiter(',');
	bench_rt->add_option("--reps", reps, "instances per cell");
	bench_rt->add_option("--seed-base", seed_base, "first seed; consecutive after");
	bench_rt->add_option("--mode", mode_name, "literal|strict");
	bench_rt->add_option("--comm", comm_name, "comm model: linear|log");
	bench_rt->add_option("--q", q_text, "comm overhead factor");
	bench_rt->add_option("--base", base, "log base")->check(CLI::Range(2, 64));
	bench_rt->add_option("--cap", cap, "path enumeration guard");
	bench_rt->add_option("--wcet-min", wcet_min, "minimum task WCET");
	bench_rt->add_option("--wcet-max", wcet_max, "maximum task WCET");
	bench_rt->add_option("--out", out_path, "CSV file (default stdout)");
	bench_rt->callback([&] {
		action = [&] {
			comm_override(bench_rt);
			RuntimeSweepSpec rs;
			rs.n_values = n_list;
			rs.densities = density_list;
			rs.reps = reps;
			rs.seed_base = seed_base;
			rs.mode = parse_mode(mode_name);
			rs.comm = over.apply(CommModel{});
			rs.cap = cap;
			rs.wcet_min = wcet_min;
			rs.wcet_max = wcet_max;
			return run_sweep<RuntimeRow>(
			    out_path, kRuntimeCsvHeader,
			    [&rs](const RuntimeSink& sink) { bench_runtime_sweep(rs, sink); });
		};
	});

	auto* bench_rho = app.add_subcommand(
	    "bench-rho", "bound tightness sweep against the exact oracle, CSV");
	bench_rho->add_option("--n-list", n_list, "task counts")->delimiter(',');
	bench_rho->add_option("--density-list", density_list, "densities")->delimiter(',');
	bench_rho->add_option("--procs-list", procs_list,
	                      "fixed processor counts besides the at-m row")
	    ->delimiter(',');
	bench_rho->add_option("--reps", reps, "instances per cell");
	bench_rho->add_option("--seed-base", seed_base, "first seed; consecutive after");
	bench_rho->add_option("--mode", mode_name, "literal|strict");
	bench_rho->add_option("--comm", comm_name, "comm model: linear|log");
	bench_rho->add_option("--q", q_text, "comm overhead factor");
	bench_rho->add_option("--base", base, "log base")->check(CLI::Range(2, 64));
	bench_rho->add_option("--cap", cap, "path enumeration guard");
	bench_rho->add_option("--wcet-min", wcet_min, "minimum task WCET");
	bench_rho->add_option("--wcet-max", wcet_max, "maximum task WCET");
	bench_rho->add_option("--q-edge", q_edge, "per-edge cross-processor delay");
	bench_rho->add_option("--time-budget", budget, "oracle budget per run, seconds");
	bench_rho->add_option("--threads", threads, "worker threads");
	bench_rho->add_option("--out", out_path, "CSV file (default stdout)");
	bench_rho->callback([&] {
		action = [&] {
			comm_override(bench_rho);
			RhoSweepSpec rs;
			rs.n_values = n_list;
			rs.densities = density_list;
			rs.procs_values = procs_list;
			rs.reps = reps;
			rs.seed_base = seed_base;
			rs.mode = parse_mode(mode_name);
			rs.comm = over.apply(CommModel{});
			rs.cap = cap;
			rs.wcet_min = wcet_min;
			rs.wcet_max = wcet_max;
			rs.q_edge = q_edge;
			rs.time_budget_seconds = budget;
			rs.threads = threads;
			return run_sweep<RhoRow>(
			    out_path, kRhoCsvHeader,
			    [&rs](const RhoSink& sink) { bench_rho_sweep(rs, sink); });
		};
	});

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? 0 : 2;
	}

	try {
		return action ? action() : 2;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	}
}
