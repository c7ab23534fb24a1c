// satdiv: command-line front end for the solvers, families and reductions.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "satdiv/constructive.hpp"
#include "satdiv/families.hpp"
#include "satdiv/io.hpp"
#include "satdiv/reductions.hpp"
#include "satdiv/solvers.hpp"
#include "satdiv/verify.hpp"

namespace {

using namespace satdiv;
using ojson = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr int kExitTooLarge = 3;

struct Loaded {
  Instance instance;
  ThresholdSpec tau;
  std::string source;
};

Loaded load_instance(const std::string& arg) {
  if (fs::exists(arg)) {
    auto doc = io::read_instance(arg);
    return {std::move(doc.instance), doc.tau, arg};
  }
  if (auto family = families::builtin(arg)) return {std::move(family->instance), family->tau, arg};
  throw Error(ErrorKind::ParseError, "'" + arg + "' is neither a file nor a builtin instance");
}

Solution load_solution(const std::string& arg) {
  if (fs::exists(arg)) return io::read_solution(arg);
  return io::parse_solution(arg);
}

std::string digest(const Instance& inst) {
  const std::string text = io::instance_to_json(inst, ThresholdSpec::half()).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << h;
  return out.str();
}

ojson exact(const Rational& v) { return to_string(v); }
ojson decimal(const Rational& v) { return to_decimal(v, 6); }

void put_solution(ojson& report, const Solution& x, const Instance& inst, int tau, const Rational& budget) {
  ojson coords = ojson::array(), approx = ojson::array();
  for (const auto& v : x.coords()) {
    coords.push_back(exact(v));
    approx.push_back(decimal(v));
  }
  report["solution"] = coords;
  report["solution_decimal"] = approx;
  report["total"] = exact(x.total());
  report["total_decimal"] = decimal(x.total());
  report["within_budget"] = x.total() <= budget;
  const auto sat = satisfaction_report(x, inst, tau);
  ojson who = ojson::array();
  for (int i = 0; i < inst.agents(); ++i)
    if (sat.per_agent[i].satisfied) who.push_back(i + 1);
  report["satisfied"] = who;
  report["satisfied_count"] = sat.satisfied_count;
  const Rational rho(sat.satisfied_count, inst.agents());
  report["rho"] = exact(rho);
  report["rho_decimal"] = decimal(rho);
}

ojson header(const std::string& command, const Loaded& in, int tau) {
  ojson r;
  r["command"] = command;
  r["instance"] = in.source;
  r["digest"] = digest(in.instance);
  r["agents"] = in.instance.agents();
  r["projects"] = in.instance.projects();
  r["tau"] = tau;
  return r;
}

void emit(const ojson& report) { std::cout << report.dump(2) << "\n"; }

std::uint64_t node_limit(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("SATDIV_NODE_LIMIT")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::BadParam, std::string("SATDIV_NODE_LIMIT='") + env + "' is not a number");
    }
  }
  return solvers::kDefaultNodeLimit;
}

std::string echo(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) out += (i > 1 ? " " : "") + std::string(argv[i]);
  return out;
}

int cmd_check(const std::string& command, const std::string& inst_arg, const std::string& sol_arg,
              const std::optional<std::string>& tau_arg, const std::string& budget_arg) {
  const Loaded in = load_instance(inst_arg);
  const Solution x = load_solution(sol_arg);
  const int tau = resolve_tau(tau_arg ? io::parse_tau(*tau_arg) : in.tau, in.instance.projects());
  const Rational budget = parse_rational(budget_arg);
  ojson r = header(command, in, tau);
  r["budget"] = exact(budget);
  put_solution(r, x, in.instance, tau, budget);
  const auto sat = satisfaction_report(x, in.instance, tau);
  ojson agents = ojson::array();
  for (int i = 0; i < in.instance.agents(); ++i) {
    ojson local = ojson::array();
    for (int j : sat.per_agent[i].local_projects) local.push_back(j + 1);
    agents.push_back({{"agent", i + 1}, {"local_projects", local}, {"satisfied", sat.per_agent[i].satisfied}});
  }
  r["per_agent"] = agents;
  ojson warnings = ojson::array();
  if (x.total() > budget)
    warnings.push_back("total " + to_string(x.total()) + " exceeds budget " + to_string(budget));
  r["warnings"] = warnings;
  r["status"] = sat.all_satisfied() ? "ALL_SATISFIED" : "NOT_ALL_SATISFIED";
  emit(r);
  return sat.all_satisfied() ? kExitOk : kExitNo;
}

struct SolveFlags {
  std::string mode;
  std::string instance;
  std::optional<std::string> tau;
  std::string budget = "1";
  std::optional<std::uint64_t> node_limit;
  bool timing = false;
  bool certificate = false;
};

int cmd_solve(const std::string& command, const SolveFlags& f) {
  const Loaded in = load_instance(f.instance);
  const Instance& inst = in.instance;
  const int m = inst.projects();
  solvers::SearchOptions options;
  options.node_limit = node_limit(f.node_limit);
  const Rational budget = parse_rational(f.budget);
  int tau = resolve_tau(f.tau ? io::parse_tau(*f.tau) : in.tau, m);
  if (f.mode == "three-agent") tau = (m + 1) / 2;
  if (f.mode == "two-agent-four") tau = 3;

  ojson r = header(command, in, tau);
  r["mode"] = f.mode;
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (f.mode == "max-sat") {
      const auto res = solvers::max_satisfied_exact(inst, tau, budget, options);
      r["budget"] = exact(budget);
      r["status"] = "OK";
      put_solution(r, res.solution, inst, tau, budget);
      r["nodes"] = res.nodes;
    } else if (f.mode == "all-sat") {
      const auto res = solvers::all_agents_sat(inst, tau, budget, options);
      r["budget"] = exact(budget);
      r["status"] = res.yes() ? "YES" : "NO";
      r["route"] = solvers::to_string(res.route);
      if (res.witness) put_solution(r, *res.witness, inst, tau, budget);
      r["nodes"] = res.nodes;
      if (!res.yes()) code = kExitNo;
    } else if (f.mode == "min-budget") {
      const auto res = solvers::min_budget_exact(inst, tau, options);
      r["status"] = "OK";
      r["min_budget"] = exact(res.budget);
      r["min_budget_decimal"] = decimal(res.budget);
      put_solution(r, res.solution, inst, tau, res.budget);
      r["nodes"] = res.nodes;
    } else if (f.mode == "utilitarian") {
      const auto res = solvers::utilitarian_dp(inst, budget);
      r["budget"] = exact(budget);
      r["status"] = "OK";
      r["pair_count"] = res.pair_count;
      r["max_pairs"] = inst.agents() * m;
      put_solution(r, res.solution, inst, tau, budget);
    } else if (f.mode == "dictator") {
      const auto res = solvers::dictator(inst, tau);
      r["status"] = "OK";
      r["dictator"] = res.agent + 1;
      put_solution(r, res.solution, inst, tau, budget);
    } else if (f.mode == "three-agent") {
      const auto res = constructive::three_agent_half_solve(inst);
      r["status"] = "OK";
      r["case"] = constructive::to_string(res.how);
      r["dropped_last_project"] = res.dropped_last;
      if (res.covering_agent >= 0) r["covering_agent"] = res.covering_agent + 1;
      if (res.line) r["line"] = constructive::to_string(*res.line);
      put_solution(r, res.solution, inst, tau, 1);
      if (f.certificate && res.state) {
        r["certificate_verified"] = constructive::reshuffle_verify(*res.state);
        r["certificate"] = ojson::parse(constructive::reshuffle_certificate(*res.state).dump());
      }
    } else if (f.mode == "two-agent-four") {
      const auto x = constructive::two_agent_four_solve(inst);
      r["status"] = "OK";
      put_solution(r, x, inst, tau, 1);
    } else {
      throw Error(ErrorKind::BadParam, "unknown mode '" + f.mode + "'");
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TooLarge) throw;
    r["status"] = "TooLarge";
    r["message"] = e.what();
    code = kExitTooLarge;
  }
  if (f.timing)
    r["elapsed_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(r);
  return code;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::BadParam, "cannot write '" + path.string() + "'");
  out << text;
}

struct GenFlags {
  std::string family;
  int m = 0;
  int k = 0;
  std::string eps = "1/3";
  std::string deltas;
  std::string name;
  std::string output;
};

int cmd_gen(const GenFlags& f) {
  auto need_m = [&] {
    if (f.m <= 0) throw Error(ErrorKind::BadParam, "--m is required for " + f.family);
    return f.m;
  };
  std::optional<families::Family> fam;
  if (f.family == "tight-dictator") fam = families::tight_dictator(need_m());
  else if (f.family == "cyclic") fam = families::cyclic_m_minus_1(need_m());
  else if (f.family == "half-min-budget") fam = families::half_min_budget(need_m());
  else if (f.family == "two-distinct") fam = families::two_distinct_tight(need_m());
  else if (f.family == "abo") fam = families::abo_min_budget(need_m(), parse_rational(f.eps));
  else if (f.family == "fixture") fam = families::fixture_family(f.name);
  else if (f.family == "half-upper-bound") {
    std::vector<Rational> deltas;
    if (!f.deltas.empty()) {
      std::stringstream ss(f.deltas);
      std::string item;
      while (std::getline(ss, item, ',')) deltas.push_back(parse_rational(item));
    } else {
      deltas = families::default_deltas(f.k > 0 ? f.k : 1);
    }
    fam = families::half_upper_bound(deltas);
  } else {
    throw Error(ErrorKind::BadParam, "unknown family '" + f.family + "'");
  }
  const std::string text = io::format_instance(fam->instance, fam->tau, families::metadata(*fam));
  if (f.output.empty())
    std::cout << text;
  else
    write_file(f.output, text);
  return kExitOk;
}

struct ReduceFlags {
  std::string reduction;
  std::string graph;
  int k = 2;
  int c = 2;
  std::string output;
};

int cmd_reduce(const ReduceFlags& f) {
  const auto g = reductions::read_graph(f.graph);
  std::optional<reductions::ReductionOutput> out;
  if (f.reduction == "vc-allsat-m1") out = reductions::vc_to_allsat_m_minus_1(g, f.k);
  else if (f.reduction == "vc-allsat-mc") out = reductions::vc_to_allsat_m_minus_c(g, f.k, f.c);
  else if (f.reduction == "is-minbudget-half") out = reductions::is_to_minbudget_half(g, f.k);
  else if (f.reduction == "vc-minbudget-m1") out = reductions::vc_to_minbudget_m_minus_1(g);
  else if (f.reduction == "vc-minbudget-tau1") out = reductions::vc_to_minbudget_tau1(g, f.k);
  else throw Error(ErrorKind::BadParam, "unknown reduction '" + f.reduction + "'");

  nlohmann::json meta = {{"reduction", f.reduction},
                         {"target_budget", to_string(out->target_budget)},
                         {"tau_resolved", resolve_tau(out->tau, out->instance.projects())}};
  if (f.output.empty()) {
    meta["mapping"] = out->mapping;
    std::cout << io::format_instance(out->instance, out->tau, meta);
    return kExitOk;
  }
  fs::path path(f.output);
  fs::path sidecar = path;
  sidecar.replace_extension(".mapping.json");
  meta["mapping_file"] = sidecar.filename().string();
  write_file(path, io::format_instance(out->instance, out->tau, meta));
  write_file(sidecar, out->mapping.dump(2) + "\n");
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, bool timing) {
  verify::VerifyOptions options;
  options.seed = seed;
  const auto results = verify::run_suite(suite, options);
  int failed = 0;
  for (const auto& r : results) {
    const bool pass = r.outcome.pass;
    if (!pass) ++failed;
    std::cout << (pass ? "PASS " : "FAIL ") << r.id << " [" << r.suite << "] " << r.title << "\n"
              << "     expected: " << r.outcome.expected << "\n"
              << "     actual:   " << r.outcome.actual << "\n";
    if (timing) std::cout << "     seconds:  " << r.seconds << " (limit " << r.time_limit_seconds << ")\n";
  }
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? kExitOk : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solvers for satisfactory budget division"};
  app.require_subcommand(1);

  std::string inst_arg, sol_arg, budget_arg = "1";
  std::optional<std::string> tau_arg;
  auto* check = app.add_subcommand("check", "Report which agents a solution satisfies");
  check->add_option("instance", inst_arg, "Instance file or builtin name")->required();
  check->add_option("solution", sol_arg, "Solution file or inline list such as 0.3,0.6,0.1")->required();
  check->add_option("--tau", tau_arg, "Threshold: one|half|all|m-C|all_but:C|K");
  check->add_option("--budget", budget_arg, "Budget used for the over-budget warning");

  SolveFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "Run a solver");
  solve->add_option("mode", solve_flags.mode, "max-sat|all-sat|min-budget|utilitarian|dictator|three-agent|two-agent-four")
      ->required()
      ->check(CLI::IsMember({"max-sat", "all-sat", "min-budget", "utilitarian", "dictator", "three-agent",
                             "two-agent-four"}));
  solve->add_option("instance", solve_flags.instance, "Instance file or builtin name")->required();
  solve->add_option("--tau", solve_flags.tau, "Threshold override");
  solve->add_option("--budget", solve_flags.budget, "Budget (default 1; ignored by min-budget)");
  solve->add_option("--node-limit", solve_flags.node_limit, "Search node limit (env SATDIV_NODE_LIMIT)");
  solve->add_flag("--timing", solve_flags.timing, "Include elapsed time in the report");
  solve->add_flag("--certificate", solve_flags.certificate, "Include the reshuffle certificate (three-agent)");

  GenFlags gen_flags;
  auto* gen = app.add_subcommand("gen", "Generate an instance family");
  gen->add_option("family", gen_flags.family,
                  "tight-dictator|half-upper-bound|cyclic|half-min-budget|abo|two-distinct|fixture")
      ->required();
  gen->add_option("--m", gen_flags.m, "Number of projects");
  gen->add_option("--k", gen_flags.k, "Number of delta triples (half-upper-bound)");
  gen->add_option("--deltas", gen_flags.deltas, "Comma-separated deltas (half-upper-bound)");
  gen->add_option("--eps", gen_flags.eps, "Epsilon (abo)");
  gen->add_option("--name", gen_flags.name, "Fixture name");
  gen->add_option("-o,--output", gen_flags.output, "Output file (default standard output)");

  ReduceFlags reduce_flags;
  auto* reduce = app.add_subcommand("reduce", "Build a reduction instance from a graph");
  reduce->add_option("reduction", reduce_flags.reduction,
                     "vc-allsat-m1|vc-allsat-mc|is-minbudget-half|vc-minbudget-m1|vc-minbudget-tau1")
      ->required();
  reduce->add_option("graph", reduce_flags.graph, "Graph file: 'N M' then M lines 'u v'")->required();
  reduce->add_option("--k", reduce_flags.k, "Cover or independent set size");
  reduce->add_option("--c", reduce_flags.c, "c for vc-allsat-mc");
  reduce->add_option("-o,--output", reduce_flags.output, "Instance file; the mapping goes next to it");

  std::string suite = "all";
  std::uint64_t seed = verify::VerifyOptions{}.seed;
  bool verify_timing = false;
  auto* ver = app.add_subcommand("verify", "Run the acceptance criteria");
  ver->add_option("suite", suite, "tables|bounds|algorithms|reductions|all")
      ->check(CLI::IsMember({"tables", "bounds", "algorithms", "reductions", "all"}));
  ver->add_option("--seed", seed, "Seed for the random instances");
  ver->add_flag("--timing", verify_timing, "Print elapsed seconds per criterion");

  CLI11_PARSE(app, argc, argv);
  const std::string command = echo(argc, argv);
  try {
    if (*check) return cmd_check(command, inst_arg, sol_arg, tau_arg, budget_arg);
    if (*solve) return cmd_solve(command, solve_flags);
    if (*gen) return cmd_gen(gen_flags);
    if (*reduce) return cmd_reduce(reduce_flags);
    if (*ver) return cmd_verify(suite, seed, verify_timing);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::TooLarge ? kExitTooLarge : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
