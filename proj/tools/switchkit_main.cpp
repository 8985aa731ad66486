// switchkit: simulate ARRIVAL and Digicomp switch graphs, generate counter
// gadgets, compile instances between problem families, and verify the
// constructions against brute-force oracles.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "switchkit/arrival.hpp"
#include "switchkit/counters.hpp"
#include "switchkit/digicomp.hpp"
#include "switchkit/generators.hpp"
#include "switchkit/io.hpp"
#include "switchkit/reductions.hpp"
#include "switchkit/verify.hpp"

namespace {

using json = nlohmann::json;
using namespace switchkit;

// Exit-code contract (scriptable): 0 = ran and decided, 1 = usage,
// 2 = parse/validation, 3 = budget exhausted, 4 = property failure.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitPropertyFailure = 4;

class CommandError : public std::runtime_error {
 public:
  CommandError(std::string what, int code) : std::runtime_error(std::move(what)), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CommandError("cannot open '" + path + "'", kExitParse);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CommandError("cannot write '" + path + "'", kExitParse);
  out << content;
}

struct Output {
  bool as_json = false;

  void emit(const std::string& text, const json& structured) const {
    if (as_json)
      std::cout << structured.dump(2) << "\n";
    else
      std::cout << text;
  }
};

int cmd_sim_arrival(const std::string& path, std::uint64_t budget, const std::string& detector,
                    const Output& out) {
  const ArrivalInstance instance = parse_arrival(read_file(path));
  const Detector d =
      detector == "constant-memory" ? Detector::constant_memory : Detector::hashset;
  const RunOutcome outcome = run_arrival(instance, budget, d);

  std::string text;
  json j;
  switch (outcome.verdict) {
    case ArrivalVerdict::arrives:
      text = "ARRIVES " + to_decimal(outcome.steps) + "\n";
      j = {{"verdict", "arrives"}, {"steps", to_decimal(outcome.steps)}};
      break;
    case ArrivalVerdict::diverges:
      text = "DIVERGES\n";
      j = {{"verdict", "diverges"}};
      break;
    case ArrivalVerdict::undecided:
      text = "UNDECIDED " + to_decimal(outcome.steps) + "\n";
      j = {{"verdict", "undecided"}, {"steps", to_decimal(outcome.steps)}};
      break;
  }
  out.emit(text, j);
  return outcome.verdict == ArrivalVerdict::undecided ? kExitBudget : kExitOk;
}

int cmd_sim_digicomp(const std::string& path, const std::string& engine, std::uint64_t budget,
                     const Output& out) {
  const DigicompInstance instance = parse_digicomp(read_file(path));
  const DigicompResult result =
      engine == "naive" ? run_digicomp_naive(instance, budget) : run_digicomp_fast(instance);

  std::ostringstream text;
  json j;
  if (result.verdict == DigicompVerdict::budget_exhausted) {
    text << "UNDECIDED " << result.steps_used << "\n";
    j["verdict"] = "undecided";
    j["steps"] = std::to_string(result.steps_used);
    out.emit(text.str(), j);
    return kExitBudget;
  }

  text << (result.verdict == DigicompVerdict::yes ? "YES" : "NO") << "\n";
  j["verdict"] = result.verdict == DigicompVerdict::yes ? "yes" : "no";
  json arrivals = json::array();
  for (std::size_t v = 0; v < result.counts.arrivals.size(); ++v) {
    text << "v " << v << " arrivals " << result.counts.arrivals[v] << " switch "
         << (result.counts.final_switches.test(v) ? 1 : 0) << "\n";
    arrivals.push_back(to_decimal(result.counts.arrivals[v]));
  }
  j["arrivals"] = arrivals;
  j["switches"] = result.counts.final_switches.to_string();
  out.emit(text.str(), j);
  return kExitOk;
}

int cmd_gen_counter(const std::string& target_text, const std::string& kind,
                    const std::string& out_path, std::string dot_path, const Output& out) {
  BigNat target;
  try {
    target = parse_bignat(target_text);
  } catch (const std::invalid_argument& e) {
    throw CommandError(e.what(), kExitParse);
  }
  if (target == 0)
    throw CommandError(
        "T = 0 needs no counter: wire the edge straight to the B/D target instead", kExitParse);

  if (dot_path.empty()) dot_path = out_path + ".dot";

  std::string instance_text;
  std::string summary;
  DotMarks marks;
  const SwitchGraph* graph = nullptr;
  ArrivalInstance train;
  DigicompInstance ball;
  std::size_t fragment = 0;

  if (kind == "train") {
    const CounterGadget gadget = build_train_counter(target);
    fragment = gadget.size();
    train = train_counter_harness(gadget);
    graph = &train.graph;
    instance_text = serialize(train);
    marks[train.origin] = "entry C";
    marks[static_cast<VertexId>(fragment)] = "port A";
    marks[static_cast<VertexId>(fragment + 1)] = "port B";
    summary = "train counter T=" + to_decimal(target) + ": " + std::to_string(fragment) +
              " fragment nodes; harness loops A and B back to C\n";
  } else {
    const CounterGadget gadget = build_ball_counter(target);
    fragment = gadget.size();
    ball = ball_counter_harness(gadget);
    graph = &ball.graph;
    instance_text = serialize(ball);
    marks[ball.origin] = "entry X0";
    marks[static_cast<VertexId>(fragment)] = "port F";
    marks[static_cast<VertexId>(fragment + 1)] = "port D";
    summary = "ball counter T=" + to_decimal(target) + ": " + std::to_string(fragment) +
              " fragment nodes; harness drops T+1 balls, destination D\n";
  }

  write_file(out_path, instance_text);
  write_file(dot_path, export_dot(*graph, marks));
  out.emit(summary + "wrote " + out_path + " and " + dot_path + "\n",
           json{{"kind", kind},
                {"target", to_decimal(target)},
                {"fragment_nodes", fragment},
                {"instance", out_path},
                {"dot", dot_path}});
  return kExitOk;
}

DotMarks role_colors(const ReductionCertificate& cert) {
  DotMarks colors;
  for (std::size_t v = 0; v < cert.roles.size(); ++v) {
    switch (cert.roles[v].type) {
      case VertexRole::Type::original: colors[static_cast<VertexId>(v)] = "lightblue"; break;
      case VertexRole::Type::layer_copy: colors[static_cast<VertexId>(v)] = "lightblue"; break;
      case VertexRole::Type::counter_node: colors[static_cast<VertexId>(v)] = "orange"; break;
      case VertexRole::Type::f_sink: colors[static_cast<VertexId>(v)] = "gray"; break;
      case VertexRole::Type::d_sink: colors[static_cast<VertexId>(v)] = "palegreen"; break;
    }
  }
  return colors;
}

int cmd_reduce(const std::string& from, const std::string& in_path, const std::string& out_path,
               std::string cert_path, const std::string& dot_path, const Output& out) {
  const std::string input = read_file(in_path);
  if (cert_path.empty()) cert_path = out_path + ".cert";

  std::string produced_text;
  std::string dot_text;
  json j;
  if (from == "digicomp") {
    const DigicompInstance instance = parse_digicomp(input);
    const auto [produced, cert] = reduce_digicomp_to_arrival(instance);
    produced_text = serialize(produced);
    write_file(cert_path, cert.to_text());
    if (!dot_path.empty()) dot_text = export_dot(produced.graph, {}, role_colors(cert));
    j = {{"from", "digicomp"},
         {"produced_vertices", produced.graph.size()},
         {"balls", to_decimal(cert.balls)},
         {"instance", out_path},
         {"certificate", cert_path}};
  } else {
    DagInstance dag = parse_dag(input);
    std::pair<DigicompInstance, ReductionCertificate> r;
    try {
      r = reduce_dagpaths_to_digicomp(dag);
    } catch (const std::invalid_argument& e) {
      throw CommandError(e.what(), kExitParse);
    }
    const auto& [produced, cert] = r;
    produced_text = serialize(produced);
    write_file(cert_path, cert.to_text());
    if (!dot_path.empty()) dot_text = export_dot(produced.graph, {}, role_colors(cert));
    j = {{"from", "dagpaths"},
         {"produced_vertices", produced.graph.size()},
         {"balls", to_decimal(cert.balls)},
         {"k", to_decimal(cert.threshold)},
         {"instance", out_path},
         {"certificate", cert_path}};
  }

  write_file(out_path, produced_text);
  std::string text = "wrote " + out_path + " and " + cert_path + "\n";
  if (!dot_path.empty()) {
    write_file(dot_path, dot_text);
    j["dot"] = dot_path;
    text += "wrote " + dot_path + "\n";
  }
  out.emit(text, j);
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::uint64_t cases,
               bool cases_given, bool inject_fault, const Output& out) {
  SuiteResult result;
  if (suite == "counters") {
    result = run_counters_suite(4096, cases_given ? cases : 100, seed);
  } else if (suite == "prop1") {
    result = run_prop1_suite(cases_given ? cases : 200, seed);
  } else if (suite == "prop2") {
    Prop2Options options;
    if (inject_fault) {
      // Deterministic mutation: divert the origin's s0 edge to itself, which
      // corrupts the ball flow whenever any path exists. Testing aid.
      options.corrupt = [](DigicompInstance& produced) {
        produced.graph.s0[produced.origin] = produced.origin;
      };
    }
    result = run_prop2_suite(cases_given ? cases : 200, seed, options);
  } else if (suite == "compose") {
    result = run_compose_suite(cases_given ? cases : 50, seed);
  } else if (suite == "parity") {
    result = run_parity_suite(cases_given ? cases : 200, seed);
  } else {
    result = run_engine_agreement_suite(cases_given ? cases : 500, seed, 12, 64);
  }

  json props = json::array();
  for (const auto& p : result.properties)
    props.push_back(json{{"name", p.name},
                         {"cases", p.cases},
                         {"failures", p.failures},
                         {"notes", p.notes}});
  out.emit(format_report(result),
           json{{"suite", result.suite}, {"ok", result.ok()}, {"properties", props}});
  return result.ok() ? kExitOk : kExitPropertyFailure;
}

int cmd_gen_random(const std::string& kind, std::size_t n, std::uint64_t seed,
                   const std::string& out_path, std::uint64_t max_degree, std::uint64_t max_k,
                   std::uint64_t max_balls, const Output& out) {
  Rng rng(seed);
  std::string text;
  if (kind == "dag") {
    text = serialize(gen_random_dag(rng, n, DagGenParams{max_degree, max_k}));
  } else {
    text = serialize(gen_random_acyclic_digicomp(rng, n, SwitchGraphGenParams{max_balls, true}));
  }
  write_file(out_path, text);
  out.emit("wrote " + out_path + "\n",
           json{{"kind", kind}, {"n", n}, {"seed", seed}, {"instance", out_path}});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "switchkit: ARRIVAL / Digicomp switch-graph simulation, counter gadgets,\n"
      "and instance reductions with oracle-backed verification.\n"
      "Exit codes: 0 decided, 1 usage, 2 parse/validation, 3 budget exhausted,\n"
      "4 property failure."};
  app.require_subcommand(1);
  app.fallthrough();  // accept --json after the subcommand name too

  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable JSON instead of text");

  // sim-arrival
  auto* sim_a = app.add_subcommand("sim-arrival", "run the single-train ARRIVAL semantics");
  std::string sim_a_file;
  std::uint64_t sim_a_budget = kDefaultStepBudget;
  std::string sim_a_detector = "hashset";
  sim_a->add_option("file", sim_a_file, "arrival instance file")->required();
  sim_a->add_option("--budget", sim_a_budget, "step budget (default 1e7)");
  sim_a->add_option("--detector", sim_a_detector, "divergence detector")
      ->check(CLI::IsMember({"hashset", "constant-memory"}));

  // sim-digicomp
  auto* sim_d = app.add_subcommand("sim-digicomp", "run the multi-ball Digicomp semantics");
  std::string sim_d_file;
  std::string sim_d_engine = "fast";
  std::uint64_t sim_d_budget = kDefaultNaiveBudget;
  sim_d->add_option("file", sim_d_file, "digicomp instance file")->required();
  sim_d->add_option("--engine", sim_d_engine, "naive (oracle) or fast (arbitrary precision)")
      ->check(CLI::IsMember({"naive", "fast"}));
  sim_d->add_option("--budget", sim_d_budget, "naive engine step budget (default 1e6)");

  // gen-counter
  auto* gen_c = app.add_subcommand("gen-counter", "generate a counter gadget harness + DOT");
  std::string gen_c_target, gen_c_kind, gen_c_out, gen_c_dot;
  gen_c->add_option("target", gen_c_target, "count target T >= 1 (decimal)")->required();
  gen_c->add_option("--kind", gen_c_kind, "train (A/B ports) or ball (F/D ports)")
      ->required()
      ->check(CLI::IsMember({"train", "ball"}));
  gen_c->add_option("--out", gen_c_out, "instance output path")->required();
  gen_c->add_option("--dot", gen_c_dot, "DOT output path (default: <out>.dot)");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "compile an instance into another problem family");
  std::string red_from, red_in, red_out, red_cert, red_dot;
  reduce->add_option("--from", red_from, "source kind: digicomp (to ARRIVAL) or dagpaths (to Digicomp)")
      ->required()
      ->check(CLI::IsMember({"digicomp", "dagpaths"}));
  reduce->add_option("input", red_in, "source instance file")->required();
  reduce->add_option("--out", red_out, "produced instance path")->required();
  reduce->add_option("--cert", red_cert, "certificate path (default: <out>.cert)");
  reduce->add_option("--dot", red_dot, "optional DOT path with role coloring");

  // verify
  auto* verify = app.add_subcommand("verify", "run a property suite against the oracles");
  std::string ver_suite;
  std::uint64_t ver_seed = 42;
  std::uint64_t ver_cases = 0;
  bool ver_inject = false;
  verify->add_option("--suite", ver_suite, "suite to run")
      ->required()
      ->check(CLI::IsMember({"counters", "prop1", "prop2", "compose", "parity", "engines"}));
  verify->add_option("--seed", ver_seed, "generator seed (default 42)");
  auto* cases_opt = verify->add_option("--cases", ver_cases, "random case count (suite default)");
  verify->add_flag("--inject-fault", ver_inject,
                   "corrupt each prop2 reduction first; the suite must fail (testing aid)");

  // gen-random
  auto* gen_r = app.add_subcommand("gen-random", "emit a seeded random instance");
  std::string rank, ran_out;
  std::size_t ran_n = 8;
  std::uint64_t ran_seed = 0, ran_deg = 4, ran_k = 20, ran_balls = 32;
  gen_r->add_option("--kind", rank, "dag or acyclic-switchgraph")
      ->required()
      ->check(CLI::IsMember({"dag", "acyclic-switchgraph"}));
  gen_r->add_option("--n", ran_n, "vertex count")->required()->check(CLI::PositiveNumber);
  gen_r->add_option("--seed", ran_seed, "generator seed")->required();
  gen_r->add_option("--out", ran_out, "output path")->required();
  gen_r->add_option("--max-degree", ran_deg, "dag: max out-degree (default 4)");
  gen_r->add_option("--max-k", ran_k, "dag: max threshold (default 20)");
  gen_r->add_option("--max-balls", ran_balls, "switchgraph: max balls (default 32)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the usage error
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Output out{as_json};
  try {
    if (sim_a->parsed())
      return cmd_sim_arrival(sim_a_file, sim_a_budget, sim_a_detector, out);
    if (sim_d->parsed())
      return cmd_sim_digicomp(sim_d_file, sim_d_engine, sim_d_budget, out);
    if (gen_c->parsed())
      return cmd_gen_counter(gen_c_target, gen_c_kind, gen_c_out, gen_c_dot, out);
    if (reduce->parsed())
      return cmd_reduce(red_from, red_in, red_out, red_cert, red_dot, out);
    if (verify->parsed())
      return cmd_verify(ver_suite, ver_seed, ver_cases, cases_opt->count() > 0, ver_inject, out);
    if (gen_r->parsed())
      return cmd_gen_random(rank, ran_n, ran_seed, ran_out, ran_deg, ran_k, ran_balls, out);
  } catch (const CommandError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const NotAcyclicError& e) {
    std::cerr << "error: " << e.what() << ";";
    std::cerr << " cycle:";
    for (VertexId v : e.cycle()) std::cerr << " " << v;
    std::cerr << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
