#include "doctest.h"

#include "switchkit/arrival.hpp"
#include "switchkit/generators.hpp"
#include "switchkit/io.hpp"

using namespace switchkit;

namespace {

ArrivalInstance single_self_loop() {
  ArrivalInstance instance;
  instance.graph.add_vertex(0, 0);
  return instance;
}

// 0 self-loops forever, 1 is unreachable.
ArrivalInstance unreachable_destination() {
  ArrivalInstance instance;
  instance.graph.add_vertex(0, 0);
  instance.graph.add_vertex(1, 1);
  instance.destination = 1;
  return instance;
}

}  // namespace

TEST_CASE("step toggles the visited switch and moves along it") {
  SUBCASE("self-loop vertex") {
    const ArrivalInstance instance = single_self_loop();
    Configuration c = initial_configuration(instance.graph, 0);
    c = step(instance.graph, c);
    CHECK(c.position == 0);
    CHECK(c.switches.test(0));
  }
  SUBCASE("definition instance") {
    SwitchGraph g;
    g.add_vertex(1, 2);
    g.add_vertex(1, 1);
    g.add_vertex(2, 2);
    Configuration c{0, BitVec(3)};
    c = step(g, c);
    CHECK(c.position == 1);
    CHECK(c.switches.test(0));
    CHECK_FALSE(c.switches.test(1));
  }
  SUBCASE("two steps visit s0 then s1") {
    SwitchGraph g;
    g.add_vertex(1, 2);
    g.add_vertex(0, 0);
    g.add_vertex(0, 0);
    Configuration c{0, BitVec(3)};
    c = step(g, c);
    const VertexId first = c.position;
    c.position = 0;  // re-enter the switch vertex
    c = step(g, c);
    CHECK(first == 1);
    CHECK(c.position == 2);
    CHECK_FALSE(c.switches.test(0));  // toggled twice
  }
}

TEST_CASE("origin equal to destination arrives in zero steps") {
  ArrivalInstance instance = single_self_loop();
  for (const Detector d : {Detector::hashset, Detector::constant_memory}) {
    const RunOutcome outcome = run_arrival(instance, 100, d);
    CHECK(outcome.verdict == ArrivalVerdict::arrives);
    CHECK(outcome.steps == 0);
  }
}

TEST_CASE("unreachable destination diverges with a recurring witness") {
  const ArrivalInstance instance = unreachable_destination();
  for (const Detector d : {Detector::hashset, Detector::constant_memory}) {
    const RunOutcome outcome = run_arrival(instance, 1000, d);
    REQUIRE(outcome.verdict == ArrivalVerdict::diverges);
    REQUIRE(outcome.witness.has_value());
    // The witness must recur without ever visiting the destination.
    Configuration c = *outcome.witness;
    for (int i = 0;; ++i) {
      REQUIRE(i <= 1000);
      step_inplace(instance.graph, c);
      CHECK(c.position != instance.destination);
      if (c == *outcome.witness) break;
    }
  }
}

TEST_CASE("budget exhaustion is an explicit verdict, never a wrong one") {
  const ArrivalInstance instance = unreachable_destination();
  const RunOutcome outcome = run_arrival(instance, 1, Detector::hashset);
  CHECK(outcome.verdict == ArrivalVerdict::undecided);
  CHECK(outcome.steps == 1);
  const RunOutcome brent = run_arrival(instance, 0, Detector::constant_memory);
  CHECK(brent.verdict == ArrivalVerdict::undecided);
}

TEST_CASE("detectors agree and arrival step counts are minimal") {
  Rng rng(2024);
  int arrivals_seen = 0, divergences_seen = 0;
  for (int i = 0; i < 300; ++i) {
    const ArrivalInstance instance = gen_random_arrival(rng, rng.between(1, 8));
    const RunOutcome a = run_arrival(instance, 200000, Detector::hashset);
    const RunOutcome b = run_arrival(instance, 200000, Detector::constant_memory);
    REQUIRE(a.verdict != ArrivalVerdict::undecided);  // n*2^n <= 8*256 configurations
    CHECK(a.verdict == b.verdict);

    if (a.verdict == ArrivalVerdict::arrives) {
      ++arrivals_seen;
      CHECK(a.steps == b.steps);
      // Replay: destination first visited exactly at `steps`.
      const std::uint64_t steps = a.steps.convert_to<std::uint64_t>();
      Configuration c = initial_configuration(instance.graph, instance.origin);
      for (std::uint64_t s = 0; s < steps; ++s) {
        CHECK(c.position != instance.destination);
        step_inplace(instance.graph, c);
      }
      CHECK(c.position == instance.destination);
    } else {
      ++divergences_seen;
      REQUIRE(a.witness.has_value());
      REQUIRE(b.witness.has_value());
      CHECK(*a.witness == *b.witness);
    }
  }
  CHECK(arrivals_seen > 20);
  CHECK(divergences_seen > 20);
}

TEST_CASE("trace is empty for zero steps and deterministic otherwise") {
  Rng rng(5);
  const ArrivalInstance instance = gen_random_arrival(rng, 6);
  CHECK(trace_arrival(instance, 0).empty());

  const auto t1 = trace_arrival(instance, 64);
  const auto t2 = trace_arrival(instance, 64);
  REQUIRE(t1.size() == 64);
  for (std::size_t i = 0; i < t1.size(); ++i) {
    CHECK(t1[i].position == t2[i].position);
    CHECK(t1[i].switch_bit == t2[i].switch_bit);
  }
}

TEST_CASE("a trace replays through step to reproduce itself") {
  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    const ArrivalInstance instance = gen_random_arrival(rng, rng.between(1, 10));
    const auto trace = trace_arrival(instance, 100);
    Configuration c = initial_configuration(instance.graph, instance.origin);
    for (const TraceEntry& entry : trace) {
      CHECK(entry.position == c.position);
      CHECK(entry.switch_bit == c.switches.test(c.position));
      step_inplace(instance.graph, c);
    }
  }
}

TEST_CASE("run_arrival on a parsed instance honours exact semantics") {
  const auto instance = parse_arrival("switchgraph v1 arrival\nn 3\nv 0 1 2\nv 1 1 1\nv 2 2 2\ns 0\nt 2\n");
  // The train takes s0 to vertex 1 and stays in its self-loop; the single
  // train never returns to vertex 0 to consume the s1 edge toward 2.
  const RunOutcome outcome = run_arrival(instance);
  CHECK(outcome.verdict == ArrivalVerdict::diverges);
}
