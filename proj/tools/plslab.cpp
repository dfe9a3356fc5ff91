#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plslab/embedding.hpp"
#include "plslab/errors.hpp"
#include "plslab/instance_io.hpp"
#include "plslab/oracle.hpp"
#include "plslab/reduction.hpp"
#include "plslab/search.hpp"

#ifndef PLSLAB_VERSION
#define PLSLAB_VERSION "0.0.0"
#endif

using nlohmann::json;
using namespace plslab;

namespace {

enum Exit { kOk = 0, kViolation = 1, kUsage = 2 };

/// Anything that should end the run with a one-line error.
struct CliError {
  std::string kind;
  std::string message;
  std::optional<std::size_t> line;
  int code = kUsage;
};

[[noreturn]] void fail(std::string kind, std::string message, int code = kUsage) {
  throw CliError{std::move(kind), std::move(message), std::nullopt, code};
}

struct Globals {
  std::uint64_t seed = 0;
  double tol = kDefaultEmbeddingTolerance;
  std::string out;
  std::string log;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("io", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) fail("io", "cannot write " + path);
}

/// Writes to `path`, or to stdout when it is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty())
    std::cout << text;
  else
    write_file(path, text);
}

std::string timestamp() {
  std::time_t t;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch && *epoch) {
    try {
      t = static_cast<std::time_t>(std::stoll(epoch));
    } catch (const std::exception&) {
      fail("usage", "SOURCE_DATE_EPOCH is not an integer");
    }
  } else {
    t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json manifest(const std::string& subcommand, const std::vector<std::string>& inputs, json params) {
  return {{"tool", "plslab"},
          {"version", PLSLAB_VERSION},
          {"subcommand", subcommand},
          {"inputs", inputs},
          {"parameters", std::move(params)},
          {"timestamp", timestamp()}};
}

void write_log_line(const Globals& g, const json& record) {
  if (!g.log.empty()) write_file(g.log, record.dump() + "\n");
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

SatInstance load_wcnf(const std::string& path) { return parse_wcnf(read_file(path)); }

InstanceDocument load_instance(const std::string& path) { return parse_instance_document(read_file(path)); }

Rational parse_c(const std::string& text) {
  const Rational c = parse_rational(text);
  check_separation(c);
  return c;
}

PivotRule parse_pivot(const std::string& text) {
  if (text == "best") return PivotRule::best_improvement;
  if (text == "first") return PivotRule::first_improvement;
  fail("usage", "pivot must be best or first");
}

std::string set_string(const SolutionSet& o, const std::vector<std::string>& labels) {
  std::string s = "{";
  for (std::size_t i = 0; i < o.members.size(); ++i) {
    if (i) s += ",";
    s += labels.at(o.members[i]);
  }
  return s + "}";
}

std::vector<Index> parse_members(const std::string& text, const std::vector<std::string>& labels) {
  std::map<std::string, Index> index;
  for (Index i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::vector<Index> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto it = index.find(item);
    if (it == index.end()) fail("infeasible", "unknown label " + item);
    out.push_back(it->second);
  }
  return out;
}

std::vector<Index> random_subset(std::mt19937_64& rng, Index n, Index k) {
  std::vector<Index> pool(n);
  for (Index i = 0; i < n; ++i) pool[i] = i;
  for (Index i = 0; i < k; ++i) std::swap(pool[i], pool[i + uniform_below(rng, n - i)]);
  pool.resize(k);
  return pool;
}

struct SolveOptions {
  std::string input;
  std::string pivot = "best";
  std::string start;
  std::string given;
  std::optional<std::size_t> max_steps;
};

template <LocalSearchProblem P>
int report_search(const Globals& g, const SolveOptions& o, const std::string& problem_name, const P& problem,
                  typename P::Solution start, const std::function<std::string(const typename P::Solution&)>& show) {
  const SearchConfig cfg{parse_pivot(o.pivot), o.max_steps, g.seed};
  const Trajectory<P> t = local_search(problem, std::move(start), cfg);
  const bool optimal = t.terminated == Termination::local_optimum || is_local_optimum(problem, t.final_solution());

  if (!g.log.empty()) {
    std::ofstream log(g.log, std::ios::binary | std::ios::trunc);
    if (!log) fail("io", "cannot write " + g.log);
    write_trajectory_log(log, t);
  }

  json result{{"problem", problem_name},
              {"start", show(t.start)},
              {"start_cost", objective_string(t.start_cost)},
              {"final", show(t.final_solution())},
              {"final_cost", objective_string(t.final_cost())},
              {"steps", t.steps.size()},
              {"terminated", to_string(t.terminated)},
              {"local_optimum", optimal}};
  std::cout << "problem\t" << problem_name << "\n"
            << "start\t" << show(t.start) << "\n"
            << "final\t" << show(t.final_solution()) << "\n"
            << "final_cost\t" << objective_string(t.final_cost()) << "\n"
            << "steps\t" << t.steps.size() << "\n"
            << "terminated\t" << to_string(t.terminated) << "\n"
            << "local_optimum\t" << (optimal ? "yes" : "no") << "\n";
  if (!g.out.empty()) {
    json params{{"pivot", o.pivot}, {"start", o.start}, {"seed", g.seed}};
    if (!o.given.empty()) params["given"] = o.given;
    if (o.max_steps) params["max_steps"] = *o.max_steps;
    write_file(g.out, json{{"result", result}, {"manifest", manifest("solve", {o.input}, params)}}.dump(2) + "\n");
  }
  return kOk;
}

int cmd_solve(const Globals& g, SolveOptions o) {
  std::mt19937_64 rng(g.seed);
  if (o.start.empty()) o.start = o.given.empty() ? "random" : "given";
  if (o.start != "given" && o.start != "random" && o.start != "all-open")
    fail("usage", "start must be given, random or all-open");
  if (o.start == "given" && o.given.empty()) fail("usage", "start given requires --given");
  parse_pivot(o.pivot);

  if (ends_with(o.input, ".wcnf")) {
    const SatInstance sat = load_wcnf(o.input);
    const SatFlipProblem problem(sat);
    Assignment start;
    if (o.start == "all-open") fail("infeasible", "all-open is not a SAT assignment");
    if (o.start == "given") {
      if (o.given.size() != sat.num_variables()) fail("infeasible", "given assignment needs one bit per variable");
      start = Assignment::from_bits(o.given);
    } else {
      std::vector<bool> bits(sat.num_variables());
      for (Index v = 0; v < bits.size(); ++v) bits[v] = uniform_below(rng, 2) == 1;
      start = Assignment(bits);
    }
    return report_search<SatFlipProblem>(g, o, "sat", problem, start,
                                         [](const Assignment& t) { return t.to_bits(); });
  }

  const InstanceDocument doc = load_instance(o.input);
  if (const auto* mufl = std::get_if<MuflInstance>(&doc.instance)) {
    std::vector<std::string> labels;
    for (const Index f : mufl->facilities()) labels.push_back(mufl->sites()[f]);
    const Index nf = mufl->num_facilities();
    std::vector<Index> members;
    if (o.start == "all-open") {
      for (Index f = 0; f < nf; ++f) members.push_back(f);
    } else if (o.start == "given") {
      members = parse_members(o.given, labels);
    } else {
      while (members.empty())
        for (Index f = 0; f < nf; ++f)
          if (uniform_below(rng, 2) == 1) members.push_back(f);
    }
    if (members.empty()) fail("infeasible", "MUFL start must open at least one facility");
    const MuflSwapProblem problem(*mufl);
    return report_search<MuflSwapProblem>(g, o, "mufl", problem, mufl->solution(members),
                                          [&](const SolutionSet& s) { return set_string(s, labels); });
  }

  const auto& dkm = std::get<DkmInstance>(doc.instance);
  std::vector<Index> members;
  if (o.start == "all-open") fail("infeasible", "all-open has " + std::to_string(dkm.num_points()) +
                                                    " means but K is " + std::to_string(dkm.k()));
  if (o.start == "given") {
    members = parse_members(o.given, dkm.points());
    if (members.size() != dkm.k()) fail("infeasible", "given set must have exactly K = " + std::to_string(dkm.k()) + " means");
  } else {
    members = random_subset(rng, dkm.num_points(), dkm.k());
  }
  const DkmSwapProblem problem(dkm);
  return report_search<DkmSwapProblem>(g, o, "dkm", problem, dkm.solution(members),
                                       [&](const SolutionSet& s) { return set_string(s, dkm.points()); });
}

int cmd_reduce(const Globals& g, const std::string& input, const std::string& target_text, const std::string& c_text) {
  const ReductionTarget target = parse_target(target_text);
  const Rational c = parse_c(c_text);
  const SatInstance sat = load_wcnf(input);
  check_reducible(sat);
  InstanceDocument doc;
  if (target == ReductionTarget::mufl)
    doc.instance = build_mufl(sat, c);
  else
    doc.instance = build_dkm(sat, c);
  doc.meta = reduction_meta(sat, c, target);
  doc.manifest = manifest("reduce", {input}, {{"target", to_string(target)}, {"c", to_string(c)}});
  emit(g.out, serialize_instance_document(doc));
  write_log_line(g, doc.manifest);
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& input, const std::string& target_text, const std::string& c_text,
               const std::string& instance_path, std::uint64_t cap) {
  const ReductionTarget target = parse_target(target_text);
  const Rational c = parse_c(c_text);
  const SatInstance sat = load_wcnf(input);
  check_reducible(sat);
  std::vector<std::string> inputs{input};
  OracleReport report;
  if (instance_path.empty()) {
    report = verify_reduction(sat, c, target, cap);
  } else {
    inputs.push_back(instance_path);
    const InstanceDocument doc = load_instance(instance_path);
    if (target == ReductionTarget::mufl) {
      const auto* inst = std::get_if<MuflInstance>(&doc.instance);
      if (!inst) fail("usage", "instance kind does not match target mufl");
      report = verify_reduction(sat, c, *inst, cap);
    } else {
      const auto* inst = std::get_if<DkmInstance>(&doc.instance);
      if (!inst) fail("usage", "instance kind does not match target dkm");
      report = verify_reduction(sat, c, *inst, cap);
    }
  }
  const json m = manifest("verify", inputs, {{"target", to_string(target)}, {"c", to_string(c)}, {"cap", cap}});
  std::cout << summary(report);
  if (!g.out.empty()) write_file(g.out, json{{"report", to_json(report)}, {"manifest", m}}.dump(2) + "\n");
  write_log_line(g, m);
  return report.ok() ? kOk : kViolation;
}

int cmd_embed(const Globals& g, const std::string& input) {
  if (!(g.tol > 0)) fail("usage", "tol must be positive");
  InstanceDocument doc = load_instance(input);
  auto* dkm = std::get_if<DkmInstance>(&doc.instance);
  if (!dkm) fail("usage", "embed needs a dkm instance");

  const double gap = min_distance_gap(dkm->distance());
  if (gap < 100 * g.tol)
    std::cerr << "warning: minimum distance gap " << gap << " is within 100x of tol " << g.tol << "\n";

  EmbeddedPoints e;
  try {
    e = embed_squared_euclidean(dkm->distance(), g.tol);
  } catch (const EmbeddingError& err) {
    fail("embedding", err.what(), kViolation);
  }
  dkm->set_coords(e.coords);
  std::ostringstream err;
  err.precision(3);
  err << std::scientific << e.reconstruction_error;
  std::cout << "dimension\t" << e.dimension() << "\n"
            << "reconstruction_error\t" << err.str() << "\n";

  int code = kOk;
  if (doc.meta.is_object() && doc.meta.contains("N") && doc.meta.contains("M")) {
    const auto n = doc.meta["N"].get<long long>();
    const auto m = doc.meta["M"].get<long long>();
    const long long bound = std::max(n, m) - 1;
    const bool holds = static_cast<long long>(e.dimension()) >= bound;
    std::cout << "lower_bound\t" << bound << "\n"
              << "bound_check\t" << (holds ? "pass" : "fail") << "\n";
    if (!holds) code = kViolation;
  }
  doc.manifest = manifest("embed", {input}, {{"tol", g.tol}});
  write_file(g.out.empty() ? input : g.out, serialize_instance_document(doc));
  return code;
}

struct OracleOptions {
  std::vector<std::string> inputs;
  std::size_t count = 20;
  std::string target = "both";
  std::string c = "3/2";
  RandomSatSpec spec;
  std::uint64_t cap = kDefaultSizeCap;
};

int cmd_oracle(const Globals& g, const OracleOptions& o) {
  const Rational c = parse_c(o.c);
  std::vector<ReductionTarget> targets;
  if (o.target == "both")
    targets = {ReductionTarget::mufl, ReductionTarget::dkm};
  else
    targets = {parse_target(o.target)};
  if (o.spec.min_variables > o.spec.max_variables || o.spec.min_clauses > o.spec.max_clauses ||
      o.spec.min_clauses < 2 || o.spec.min_variables < 2 || o.spec.max_weight < 1)
    fail("usage", "instance size ranges are empty or below 2");

  std::vector<SatInstance> family;
  for (const auto& path : o.inputs) {
    family.push_back(load_wcnf(path));
    check_reducible(family.back());
  }
  std::mt19937_64 rng(g.seed);
  if (o.inputs.empty())
    for (std::size_t i = 0; i < o.count; ++i) family.push_back(random_sat_instance(rng, o.spec));

  json reports = json::array();
  std::size_t violations = 0, scanned = 0;
  std::ostringstream log;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (const auto target : targets) {
      const OracleReport r = verify_reduction(family[i], c, target, o.cap);
      violations += r.violations.size();
      scanned += r.solutions_scanned;
      json j = to_json(r);
      j["index"] = i;
      j["wcnf"] = serialize_wcnf(family[i]);
      reports.push_back(std::move(j));
      log << i << "\t" << to_string(target) << "\t" << r.solutions_scanned << "\t" << r.local_optima << "\t"
          << r.violations.size() << "\n";
      if (!r.ok()) std::cout << summary(r);
    }
  }
  if (!g.log.empty()) write_file(g.log, log.str());

  json params{{"c", to_string(c)},
              {"target", o.target},
              {"seed", g.seed},
              {"cap", o.cap},
              {"count", family.size()},
              {"max_variables", o.spec.max_variables},
              {"max_clauses", o.spec.max_clauses},
              {"max_weight", o.spec.max_weight}};
  const json out{{"manifest", manifest("oracle", o.inputs, params)},
                 {"instances", family.size()},
                 {"solutions_scanned", scanned},
                 {"violations", violations},
                 {"reports", reports}};
  emit(g.out, out.dump(2) + "\n");
  std::cout << "oracle: " << family.size() << " instances, " << reports.size() << " reductions, " << scanned
            << " solutions scanned, " << violations << " violations\n";
  return violations == 0 ? kOk : kViolation;
}

void print_error(const CliError& e) {
  json j{{"error", e.kind}, {"message", e.message}};
  if (e.line) j["line"] = *e.line;
  std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local-search reductions from weighted Max 2-SAT to facility location and k-means", "plslab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", PLSLAB_VERSION);

  Globals g;
  app.add_option("--seed", g.seed, "Random seed");
  app.add_option("--tol", g.tol, "Numerical tolerance for embedding");
  app.add_option("--out", g.out, "Output path");
  app.add_option("--log", g.log, "Log path (trajectory for solve)");
  app.fallthrough();

  std::string input, target = "mufl", c = "3/2", instance_path;
  std::uint64_t cap = kDefaultSizeCap;

  auto* reduce = app.add_subcommand("reduce", "Build a MUFL or DKM instance from a WCNF file");
  reduce->add_option("input", input, "WCNF file")->required();
  reduce->add_option("--target", target, "mufl or dkm");
  reduce->add_option("--c", c, "Separation constant in (1,2)");

  SolveOptions solve_opts;
  auto* solve = app.add_subcommand("solve", "Run local search on a WCNF file or an instance");
  solve->add_option("input", solve_opts.input, "WCNF file or instance JSON")->required();
  solve->add_option("--pivot", solve_opts.pivot, "best or first");
  solve->add_option("--start", solve_opts.start, "given, random or all-open");
  solve->add_option("--given", solve_opts.given, "Bits for SAT, comma-separated labels otherwise");
  solve->add_option("--max-steps", solve_opts.max_steps, "Step budget");

  auto* verify = app.add_subcommand("verify", "Check the reduction claims on one WCNF instance");
  verify->add_option("input", input, "WCNF file")->required();
  verify->add_option("--target", target, "mufl or dkm");
  verify->add_option("--c", c, "Separation constant in (1,2)");
  verify->add_option("--instance", instance_path, "Check this reduced instance instead of rebuilding it");
  verify->add_option("--cap", cap, "Enumeration cap");

  auto* embed = app.add_subcommand("embed", "Embed a DKM instance in squared Euclidean space");
  embed->add_option("input", input, "DKM instance JSON")->required();

  OracleOptions oracle_opts;
  auto* oracle = app.add_subcommand("oracle", "Check the reduction claims on a seeded random family");
  oracle->add_option("inputs", oracle_opts.inputs, "WCNF files (random family when omitted)");
  oracle->add_option("--count", oracle_opts.count, "Number of random instances");
  oracle->add_option("--target", oracle_opts.target, "mufl, dkm or both");
  oracle->add_option("--c", oracle_opts.c, "Separation constant in (1,2)");
  oracle->add_option("--min-variables", oracle_opts.spec.min_variables);
  oracle->add_option("--max-variables", oracle_opts.spec.max_variables);
  oracle->add_option("--min-clauses", oracle_opts.spec.min_clauses);
  oracle->add_option("--max-clauses", oracle_opts.spec.max_clauses);
  oracle->add_option("--max-weight", oracle_opts.spec.max_weight);
  oracle->add_option("--cap", oracle_opts.cap, "Enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    print_error({"usage", e.what(), std::nullopt, kUsage});
    return kUsage;
  }

  try {
    if (*reduce) return cmd_reduce(g, input, target, c);
    if (*solve) return cmd_solve(g, solve_opts);
    if (*verify) return cmd_verify(g, input, target, c, instance_path, cap);
    if (*embed) return cmd_embed(g, input);
    return cmd_oracle(g, oracle_opts);
  } catch (const CliError& e) {
    print_error(e);
    return e.code;
  } catch (const ParseError& e) {
    print_error({"parse", e.what(), e.line() ? std::optional<std::size_t>(e.line()) : std::nullopt, kUsage});
  } catch (const InfeasibleSolution& e) {
    print_error({"infeasible", e.what(), std::nullopt, kUsage});
  } catch (const CapExceeded& e) {
    print_error({"cap", e.what(), std::nullopt, kUsage});
  } catch (const std::invalid_argument& e) {
    print_error({"invalid", e.what(), std::nullopt, kUsage});
  } catch (const std::out_of_range& e) {
    print_error({"invalid", e.what(), std::nullopt, kUsage});
  } catch (const std::exception& e) {
    print_error({"internal", e.what(), std::nullopt, kUsage});
  }
  return kUsage;
}
