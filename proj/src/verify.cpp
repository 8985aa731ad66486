#include "switchkit/verify.hpp"

#include <sstream>

#include "switchkit/arrival.hpp"
#include "switchkit/counters.hpp"
#include "switchkit/digicomp.hpp"
#include "switchkit/generators.hpp"
#include "switchkit/io.hpp"
#include "switchkit/reductions.hpp"

namespace switchkit {

namespace {

constexpr std::size_t kMaxNotes = 3;

void record_failure(PropertyReport& report, const std::string& note) {
  ++report.failures;
  if (report.notes.size() < kMaxNotes) report.notes.push_back(note);
}

void tally(PropertyReport& report, bool ok, const std::string& note) {
  ++report.cases;
  if (!ok) record_failure(report, note);
}

}  // namespace

std::string check_train_counter_law(const BigNat& target) {
  const CounterGadget gadget = build_train_counter(target);
  const ArrivalInstance harness = train_counter_harness(gadget);
  const std::size_t fragment = gadget.size();
  const VertexId a_id = static_cast<VertexId>(fragment);
  const VertexId b_id = a_id + 1;

  const std::uint64_t t = target.convert_to<std::uint64_t>();
  const std::uint64_t total_exits = 2 * (t + 1);

  Configuration config = initial_configuration(harness.graph, harness.origin);
  std::uint64_t a_run = 0, exits = 0, b_seen = 0;
  // Each entry walks at most fragment+1 edges before exiting at a port.
  std::uint64_t guard = (total_exits + 1) * (fragment + 2);
  while (exits < total_exits) {
    if (guard-- == 0) return "T=" + to_decimal(target) + ": run failed to produce enough exits";
    step_inplace(harness.graph, config);
    if (config.position == a_id) {
      ++exits;
      if (++a_run > t)
        return "T=" + to_decimal(target) + ": more than T consecutive A-exits";
    } else if (config.position == b_id) {
      ++exits;
      ++b_seen;
      if (a_run != t)
        return "T=" + to_decimal(target) + ": B-exit after " + std::to_string(a_run) +
               " A-exits instead of T";
      a_run = 0;
      for (std::size_t i = 0; i < fragment; ++i)
        if (config.switches.test(i))
          return "T=" + to_decimal(target) + ": fragment switch " + std::to_string(i) +
                 " not reset after B-exit";
    }
  }
  if (b_seen != 2)
    return "T=" + to_decimal(target) + ": expected exactly 2 B-exits in 2(T+1) entries, saw " +
           std::to_string(b_seen);
  return {};
}

std::string check_ball_counter_law(const BigNat& target) {
  const CounterGadget gadget = build_ball_counter(target);
  const std::uint64_t t = target.convert_to<std::uint64_t>();
  const std::string trace = counter_exit_trace(gadget, t + 1);
  for (std::uint64_t i = 0; i < t; ++i)
    if (trace[i] != 'F')
      return "T=" + to_decimal(target) + ": ball " + std::to_string(i + 1) + " exited at D early";
  if (trace[t] != 'D')
    return "T=" + to_decimal(target) + ": ball T+1 did not exit at D";
  return {};
}

SuiteResult run_counters_suite(std::uint64_t exhaustive_max, std::uint64_t random_cases,
                               std::uint64_t seed) {
  SuiteResult result;
  result.suite = "counters";

  PropertyReport size_law{"size-law"};
  for (std::uint64_t t = 1; t <= exhaustive_max; ++t) {
    const std::size_t want = floor_log2(BigNat(t)) + 1;
    const bool ok = build_train_counter(BigNat(t)).size() == want &&
                    build_ball_counter(BigNat(t)).size() == want;
    tally(size_law, ok, "size law violated at T=" + std::to_string(t));
  }
  {
    Rng rng(seed ^ 0x5a5a5a5au);
    for (std::uint64_t i = 0; i < random_cases; ++i) {
      // Random targets up to 2^63: size law only; the trace laws get the
      // exhaustive range and the bounded random range below.
      const BigNat t = (BigNat(rng.next()) << 16) + rng.below(1u << 16) + 1;
      const std::size_t want = floor_log2(t) + 1;
      const bool ok = build_train_counter(t).size() == want && build_ball_counter(t).size() == want;
      tally(size_law, ok, "size law violated at T=" + to_decimal(t));
    }
  }
  result.properties.push_back(std::move(size_law));

  PropertyReport train_law{"train-exit-law-exhaustive"};
  for (std::uint64_t t = 1; t <= exhaustive_max; ++t) {
    const std::string err = check_train_counter_law(BigNat(t));
    tally(train_law, err.empty(), err);
  }
  result.properties.push_back(std::move(train_law));

  PropertyReport train_random{"train-exit-law-random"};
  {
    Rng rng(seed);
    for (std::uint64_t i = 0; i < random_cases; ++i) {
      const BigNat t = BigNat(rng.between(1, std::uint64_t{1} << 20));
      const std::string err = check_train_counter_law(t);
      tally(train_random, err.empty(), err);
    }
  }
  result.properties.push_back(std::move(train_random));

  PropertyReport ball_law{"ball-threshold-law-exhaustive"};
  for (std::uint64_t t = 1; t <= exhaustive_max; ++t) {
    const std::string err = check_ball_counter_law(BigNat(t));
    tally(ball_law, err.empty(), err);
  }
  result.properties.push_back(std::move(ball_law));

  PropertyReport determinism{"rebuild-determinism"};
  {
    Rng rng(seed ^ 0xc0ffee);
    for (std::uint64_t i = 0; i < std::max<std::uint64_t>(random_cases, 32); ++i) {
      const BigNat t = BigNat(rng.next()) + 1;
      const CounterGadget g1 = build_train_counter(t);
      const CounterGadget g2 = build_train_counter(t);
      const CounterGadget h1 = build_ball_counter(t);
      const CounterGadget h2 = build_ball_counter(t);
      const bool ok = g1.s0 == g2.s0 && g1.s1 == g2.s1 && g1.entry == g2.entry &&
                      h1.s0 == h2.s0 && h1.s1 == h2.s1 && h1.entry == h2.entry;
      tally(determinism, ok, "rebuild mismatch at T=" + to_decimal(t));
    }
  }
  result.properties.push_back(std::move(determinism));
  return result;
}

namespace {

std::string describe_case(std::uint64_t index, const std::string& serialized) {
  return "case " + std::to_string(index) + ":\n" + serialized;
}

}  // namespace

SuiteResult run_prop1_suite(std::uint64_t cases, std::uint64_t seed) {
  SuiteResult result;
  result.suite = "prop1";
  PropertyReport verdict{"arrival-verdict-equivalence"};
  PropertyReport detectors{"detector-agreement"};
  PropertyReport engines{"digicomp-engine-agreement"};
  PropertyReport size{"size-formula"};
  PropertyReport certificate{"certificate-sanity"};

  Rng rng(seed);
  const SwitchGraphGenParams params{32, true};
  for (std::uint64_t i = 0; i < cases; ++i) {
    const DigicompInstance source = gen_random_acyclic_digicomp(rng, rng.between(1, 10), params);
    const std::string dump = describe_case(i, serialize(source));

    const DigicompResult fast = run_digicomp_fast(source);
    const DigicompResult naive = run_digicomp_naive(source);
    tally(engines,
          naive.verdict == fast.verdict && naive.counts.arrivals == fast.counts.arrivals &&
              naive.counts.final_switches == fast.counts.final_switches,
          dump);

    const auto [produced, cert] = reduce_digicomp_to_arrival(source);
    const RunOutcome hash_run = run_arrival(produced, kDefaultStepBudget, Detector::hashset);
    const bool want_arrives = fast.verdict == DigicompVerdict::yes;
    tally(verdict,
          hash_run.verdict ==
              (want_arrives ? ArrivalVerdict::arrives : ArrivalVerdict::diverges),
          dump);

    const RunOutcome brent_run = run_arrival(produced, kDefaultStepBudget, Detector::constant_memory);
    tally(detectors,
          brent_run.verdict == hash_run.verdict &&
              (hash_run.verdict != ArrivalVerdict::arrives || brent_run.steps == hash_run.steps),
          dump);

    const std::size_t expected_size =
        source.balls == 0 ? 2 : source.graph.size() + floor_log2(source.balls) + 2;
    tally(size, produced.graph.size() == expected_size, dump);

    const bool cert_ok = cert.roles.size() == produced.graph.size() &&
                         cert.source_digest == instance_digest(serialize(source)) &&
                         cert.produced_digest == instance_digest(serialize(produced));
    tally(certificate, cert_ok, dump);
  }

  result.properties = {std::move(verdict), std::move(detectors), std::move(engines),
                       std::move(size), std::move(certificate)};
  return result;
}

namespace {

struct Prop2Case {
  DagInstance dag;
  BigNat path_count;
  DigicompInstance produced;
  ReductionCertificate certificate;
  VertexId t_layer_id;  // id of (t, n-1) in the produced instance
};

Prop2Case make_prop2_case(Rng& rng, std::size_t max_vertices, const DagGenParams& params) {
  Prop2Case c;
  c.dag = gen_random_dag(rng, rng.between(1, max_vertices), params);
  c.path_count = count_paths_bruteforce(c.dag);
  auto [produced, cert] = reduce_dagpaths_to_digicomp(c.dag);
  c.produced = std::move(produced);
  c.certificate = std::move(cert);
  const std::size_t n = c.certificate.split_vertex_count;
  c.t_layer_id = static_cast<VertexId>((n - 1) * n + c.dag.sink);
  return c;
}

}  // namespace

SuiteResult run_prop2_suite(std::uint64_t cases, std::uint64_t seed, const Prop2Options& options) {
  SuiteResult result;
  result.suite = "prop2";
  PropertyReport oracles{"path-oracle-agreement"};
  PropertyReport verdict{"digicomp-verdict-threshold"};
  PropertyReport entry{"counter-entry-count"};
  PropertyReport even{"even-count-invariant"};
  PropertyReport acyclic{"produced-acyclic"};
  PropertyReport split_paths{"split-preserves-paths"};
  PropertyReport layer_paths{"layer-preserves-paths"};
  PropertyReport size{"size-formula"};
  PropertyReport assignment{"assignment-independence"};

  Rng rng(seed);
  const DagGenParams params{4, 20};
  for (std::uint64_t i = 0; i < cases; ++i) {
    Prop2Case c = make_prop2_case(rng, 8, params);
    if (options.corrupt) options.corrupt(c.produced);
    const std::string dump = describe_case(i, serialize(c.dag));
    const BigNat& k = c.dag.threshold;

    tally(oracles, count_paths_dp(c.dag) == c.path_count, dump);

    const DagInstance split = split_outdegree(c.dag);
    tally(split_paths, count_paths_bruteforce(split) == c.path_count, dump);
    tally(layer_paths, count_paths_dp(layer_dag(split)) == c.path_count, dump);

    tally(acyclic, check_acyclic(c.produced.graph), dump);

    try {
      const DigicompResult fast = run_digicomp_fast(c.produced);
      const bool want_yes = c.path_count >= k;
      tally(verdict, fast.verdict == (want_yes ? DigicompVerdict::yes : DigicompVerdict::no), dump);

      bool entry_ok = fast.counts.arrivals[c.t_layer_id] == c.path_count;
      if (k >= 2) {
        const VertexId counter_entry = static_cast<VertexId>(
            c.certificate.split_vertex_count * c.certificate.split_vertex_count + 1);
        entry_ok = entry_ok && fast.counts.arrivals[counter_entry] == c.path_count;
      }
      tally(entry, entry_ok, dump);

      std::string violation;
      tally(even, check_even_count_invariant(c.certificate, fast.counts, &violation),
            dump + "\n" + violation);

      const std::size_t n = c.certificate.split_vertex_count;
      const std::size_t counter_size = k >= 2 ? floor_log2(BigNat(k - 1)) + 1 : 0;
      tally(size, c.produced.graph.size() == n * n + counter_size + 2, dump);

      // Swapping s0/s1 on layered copies must not change the verdict: every
      // halving they perform is exact by the even-count invariant.
      DigicompInstance swapped = c.produced;
      for (std::size_t v = 0; v < c.certificate.roles.size(); ++v)
        if (c.certificate.roles[v].type == VertexRole::Type::layer_copy && rng.chance(1, 2))
          std::swap(swapped.graph.s0[v], swapped.graph.s1[v]);
      const DigicompResult swapped_fast = run_digicomp_fast(swapped);
      tally(assignment, swapped_fast.verdict == fast.verdict, dump);
    } catch (const std::exception& e) {
      // Only reachable through the corruption hook.
      tally(verdict, false, dump + "\nexception: " + e.what());
    }
  }

  result.properties = {std::move(oracles),      std::move(verdict), std::move(entry),
                       std::move(even),         std::move(acyclic), std::move(split_paths),
                       std::move(layer_paths),  std::move(size),    std::move(assignment)};
  return result;
}

SuiteResult run_compose_suite(std::uint64_t cases, std::uint64_t seed) {
  SuiteResult result;
  result.suite = "compose";
  PropertyReport verdict{"composed-arrival-verdict"};
  PropertyReport size{"composed-size-formula"};

  Rng rng(seed);
  const DagGenParams params{3, 8};
  for (std::uint64_t i = 0; i < cases; ++i) {
    const DagInstance dag = gen_random_dag(rng, rng.between(1, 6), params);
    const BigNat count = count_paths_bruteforce(dag);
    const std::string dump = describe_case(i, serialize(dag));

    const auto [digicomp, cert2] = reduce_dagpaths_to_digicomp(dag);
    const auto [arrival, cert1] = reduce_digicomp_to_arrival(digicomp);
    const RunOutcome run = run_arrival(arrival);
    const bool want_arrives = count >= dag.threshold;
    tally(verdict,
          run.verdict == (want_arrives ? ArrivalVerdict::arrives : ArrivalVerdict::diverges),
          dump);

    tally(size,
          arrival.graph.size() == digicomp.graph.size() + floor_log2(digicomp.balls) + 2,
          dump);
  }

  result.properties = {std::move(verdict), std::move(size)};
  return result;
}

SuiteResult run_parity_suite(std::uint64_t cases, std::uint64_t seed) {
  SuiteResult result;
  result.suite = "parity";
  PropertyReport parity{"toggle-parity-at-sink-copy"};

  Rng rng(seed);
  const DagGenParams params{4, 20};
  for (std::uint64_t i = 0; i < cases; ++i) {
    Prop2Case c = make_prop2_case(rng, 8, params);
    const DigicompResult fast = run_digicomp_fast(c.produced);
    const bool bit = parity_diagnostic(fast.counts, c.t_layer_id);
    tally(parity, bit == bit_at(c.path_count, 0), describe_case(i, serialize(c.dag)));
  }

  result.properties = {std::move(parity)};
  return result;
}

SuiteResult run_engine_agreement_suite(std::uint64_t cases, std::uint64_t seed, std::size_t n_max,
                                       std::uint64_t t_max) {
  SuiteResult result;
  result.suite = "engine-agreement";
  PropertyReport agree{"naive-fast-agreement"};

  Rng rng(seed);
  const SwitchGraphGenParams params{t_max, true};
  for (std::uint64_t i = 0; i < cases; ++i) {
    const DigicompInstance instance = gen_random_acyclic_digicomp(rng, rng.between(1, n_max), params);
    const DigicompResult naive = run_digicomp_naive(instance);
    const DigicompResult fast = run_digicomp_fast(instance);
    const bool ok = naive.verdict == fast.verdict &&
                    naive.counts.arrivals == fast.counts.arrivals &&
                    naive.counts.final_switches == fast.counts.final_switches;
    tally(agree, ok, describe_case(i, serialize(instance)));
  }

  result.properties = {std::move(agree)};
  return result;
}

std::string format_report(const SuiteResult& result) {
  std::ostringstream out;
  for (const auto& p : result.properties) {
    out << (p.ok() ? "ok" : "FAIL") << " " << result.suite << "/" << p.name << " cases="
        << p.cases << " failures=" << p.failures << "\n";
    for (const auto& note : p.notes) {
      std::istringstream lines(note);
      std::string line;
      while (std::getline(lines, line)) out << "    | " << line << "\n";
    }
  }
  out << (result.ok() ? "suite ok" : "suite FAILED") << ": " << result.suite << "\n";
  return out.str();
}

}  // namespace switchkit
