#include "doctest.h"

#include <fstream>
#include <sstream>

#include "switchkit/counters.hpp"
#include "switchkit/generators.hpp"
#include "switchkit/io.hpp"
#include "switchkit/model.hpp"

using namespace switchkit;

namespace {

std::string read_data_file(const std::string& name) {
  std::ifstream in(std::string(SWITCHKIT_TEST_DATA_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("parse smallest well-formed arrival instance") {
  const auto instance = parse_arrival("switchgraph v1 arrival\nn 1\nv 0 0 0\ns 0\nt 0\n");
  CHECK(instance.graph.size() == 1);
  CHECK(instance.origin == 0);
  CHECK(instance.destination == 0);
  CHECK(instance.graph.is_sink(0));
}

TEST_CASE("dangling vertex reference is rejected with position") {
  const char* text = "switchgraph v1 arrival\nn 1\nv 0 0 5\ns 0\nt 0\n";
  try {
    parse_arrival(text);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 7);
    CHECK(std::string(e.what()).find("dangling") != std::string::npos);
  }
}

TEST_CASE("the 4-bit counter figure parses to the expected shape") {
  const auto instance = parse_arrival(read_data_file("figure_counter.sg"));
  const SwitchGraph& g = instance.graph;
  REQUIRE(g.size() == 7);  // C0..C4, A, B
  // dashed chain C0 -> C1 -> ... -> C4 -> B
  for (VertexId i = 0; i < 4; ++i) CHECK(g.s1[i] == i + 1);
  CHECK(g.s1[4] == 6);
  // solid: C0 -> A, every other Ci bends back to C0
  CHECK(g.s0[0] == 5);
  for (VertexId i = 1; i <= 4; ++i) CHECK(g.s0[i] == 0);
  CHECK(g.label(0) == "C0");
  CHECK(g.label(5) == "A");
  CHECK(g.label(6) == "B");
}

TEST_CASE("parse errors carry a reason") {
  const auto expect_error = [](const std::string& text, const std::string& needle) {
    try {
      parse_instance(text);
      FAIL("expected ParseError for: ", needle);
    } catch (const ParseError& e) {
      INFO("text:\n", text);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };

  expect_error("", "empty input");
  expect_error("graph v1 arrival\n", "header");
  expect_error("switchgraph v2 arrival\nn 1\nv 0 0 0\ns 0\nt 0\n", "version");
  expect_error("switchgraph v1 maze\nn 1\nv 0 0 0\ns 0\nt 0\n", "unknown instance kind");
  expect_error("switchgraph v1 arrival\nv 0 0 0\nn 1\ns 0\nt 0\n", "'v' line before 'n'");
  expect_error("switchgraph v1 arrival\nn 1\nv 0 0 0\nt 0\n", "missing 's'");
  expect_error("switchgraph v1 arrival\nn 1\nv 0 0 0\ns 0\n", "missing 't'");
  expect_error("switchgraph v1 arrival\nn 2\nv 0 0 0\ns 0\nt 0\n", "expected 2 vertex lines");
  expect_error("switchgraph v1 arrival\nn 2\nv 0 0 0\nv 0 1 1\ns 0\nt 0\n", "duplicate vertex id");
  expect_error("switchgraph v1 arrival\nn 1\nv 0 0 0\ns 0\nt 0\nballs 5\n", "only valid for digicomp");
  expect_error("switchgraph v1 arrival\nn 1\nv 0 0 0\ns 0\nt 0\nk 5\n", "only valid for dag");
  expect_error("switchgraph v1 digicomp\nn 1\nv 0 0 0\ns 0\nt 0\n", "missing 'balls'");
  expect_error("switchgraph v1 digicomp\nn 1\nv 0 0 0\ns 0\nt 0\nballs -3\n", "decimal");
  expect_error("switchgraph v1 dag\nn 2\nv 0 1 1\nv 1 0\ns 0\nt 1\n", "missing 'k'");
  expect_error("switchgraph v1 dag\nn 2\nv 0 2 1 1\nv 1 0\ns 0\nt 1\nk 1\n",
               "successor count does not match");
  expect_error("switchgraph v1 dag\nn 1\nv 0 1 0\ns 0\nt 0\nk 1\n", "self-loop");
  expect_error("switchgraph v1 arrival\nn 1\nv 0 zero 0\ns 0\nt 0\n", "expected");
  expect_error("switchgraph v1 arrival\nn 1\nv 0 0 0\ns 0\nt 0\nfoo 1\n", "unknown directive");
}

TEST_CASE("kind mismatch is reported") {
  const std::string digicomp = read_data_file("golden_digicomp.sg");
  CHECK_THROWS_AS(parse_arrival(digicomp), ParseError);
  CHECK_THROWS_AS(parse_dag(digicomp), ParseError);
  CHECK_NOTHROW(parse_digicomp(digicomp));
}

TEST_CASE("comments and blank lines are ignored") {
  const auto instance = parse_arrival(
      "# a comment\n\nswitchgraph v1 arrival # trailing\n  n 1\n\nv 0 0 0 # self\ns 0\nt 0\n");
  CHECK(instance.graph.size() == 1);
}

TEST_CASE("serialize emits canonical text") {
  const char* canonical = "switchgraph v1 arrival\nn 1\nv 0 0 0\ns 0\nt 0\n";
  CHECK(serialize(parse_arrival(canonical)) == canonical);
}

TEST_CASE("serialize then parse is the identity on the golden corpus") {
  for (const char* name : {"trivial_arrival.sg", "unreachable_arrival.sg", "figure_counter.sg",
                           "diamond.sg", "golden_digicomp.sg"}) {
    const ParsedInstance parsed = parse_instance(read_data_file(name));
    const std::string canonical = serialize(parsed);
    CHECK(serialize(parse_instance(canonical)) == canonical);
  }
}

TEST_CASE("round trip preserves parsed instances exactly") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const DigicompInstance instance =
        gen_random_acyclic_digicomp(rng, rng.between(1, 12), SwitchGraphGenParams{1000, true});
    const DigicompInstance back = parse_digicomp(serialize(instance));
    CHECK(back.graph.s0 == instance.graph.s0);
    CHECK(back.graph.s1 == instance.graph.s1);
    CHECK(back.origin == instance.origin);
    CHECK(back.destination == instance.destination);
    CHECK(back.balls == instance.balls);

    const DagInstance dag = gen_random_dag(rng, rng.between(1, 10));
    const DagInstance dag_back = parse_dag(serialize(dag));
    CHECK(dag_back.successors == dag.successors);
    CHECK(dag_back.source == dag.source);
    CHECK(dag_back.sink == dag.sink);
    CHECK(dag_back.threshold == dag.threshold);
  }
}

TEST_CASE("serialized counters re-parse with identical ids") {
  const CounterGadget gadget = build_train_counter(BigNat(22));
  const ArrivalInstance harness = train_counter_harness(gadget);
  const ArrivalInstance back = parse_arrival(serialize(harness));
  CHECK(back.graph.s0 == harness.graph.s0);
  CHECK(back.graph.s1 == harness.graph.s1);
  CHECK(back.graph.labels == harness.graph.labels);
  CHECK(back.origin == harness.origin);
}

TEST_CASE("labels with spaces survive a round trip") {
  const auto instance =
      parse_arrival("switchgraph v1 arrival\nn 1\nv 0 0 0 fancy label text\ns 0\nt 0\n");
  CHECK(instance.graph.label(0) == "fancy label text");
  CHECK(parse_arrival(serialize(instance)).graph.label(0) == "fancy label text");
}

TEST_CASE("check_acyclic accepts self-loops only") {
  SwitchGraph g;
  for (int i = 0; i < 4; ++i) g.add_vertex(static_cast<VertexId>(i), static_cast<VertexId>(i));
  CHECK(check_acyclic(g));
}

TEST_CASE("check_acyclic reports a two-cycle witness") {
  SwitchGraph g;
  g.add_vertex(1, 1);
  g.add_vertex(0, 0);
  const auto witness = find_cycle(g);
  REQUIRE(witness.has_value());
  CHECK(*witness == std::vector<VertexId>{0, 1});
}

TEST_CASE("cycle witnesses verify by edge-following") {
  Rng rng(11);
  int cyclic_seen = 0;
  for (int i = 0; i < 200; ++i) {
    const ArrivalInstance instance = gen_random_arrival(rng, rng.between(2, 10));
    const auto witness = find_cycle(instance.graph);
    if (!witness) continue;
    ++cyclic_seen;
    const auto& cycle = *witness;
    REQUIRE(cycle.size() >= 2);
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      const VertexId u = cycle[j];
      const VertexId w = cycle[(j + 1) % cycle.size()];
      CHECK(u != w);
      CHECK((instance.graph.s0[u] == w || instance.graph.s1[u] == w));
    }
  }
  CHECK(cyclic_seen > 50);  // random maps are overwhelmingly cyclic
}

TEST_CASE("topological order rejects cyclic graphs with a witness") {
  SwitchGraph g;
  g.add_vertex(1, 1);
  g.add_vertex(0, 0);
  CHECK_THROWS_AS(topological_order(g), NotAcyclicError);
}

TEST_CASE("export_dot renders a self-loop as two styled edges") {
  SwitchGraph g;
  g.add_vertex(0, 0);
  const std::string dot = export_dot(g);
  CHECK(dot.find("v0 -> v0 [style=solid];") != std::string::npos);
  CHECK(dot.find("v0 -> v0 [style=dashed];") != std::string::npos);
}

TEST_CASE("export_dot emits exactly 2n edges") {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    const ArrivalInstance instance = gen_random_arrival(rng, rng.between(1, 12));
    const std::string dot = export_dot(instance.graph);
    std::size_t edges = 0;
    for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2))
      ++edges;
    CHECK(edges == 2 * instance.graph.size());
  }
}

TEST_CASE("export_dot styles match the figure conventions") {
  const auto instance = parse_arrival(read_data_file("figure_counter.sg"));
  const std::string dot = export_dot(instance.graph);
  // solid C1 -> C0 bend, dashed C0 -> C1 chain link, per the drawing
  CHECK(dot.find("v1 -> v0 [style=solid];") != std::string::npos);
  CHECK(dot.find("v0 -> v1 [style=dashed];") != std::string::npos);
  CHECK(dot.find("v0 -> v5 [style=solid];") != std::string::npos);   // C0 -> A
  CHECK(dot.find("v4 -> v6 [style=dashed];") != std::string::npos);  // C4 -> B
}

TEST_CASE("export_dot marks and colors annotate nodes") {
  SwitchGraph g;
  g.add_vertex(0, 0, "C0");
  const std::string dot = export_dot(g, {{0, "entry"}}, {{0, "orange"}});
  CHECK(dot.find("label=\"0:C0 (entry)\"") != std::string::npos);
  CHECK(dot.find("fillcolor=orange") != std::string::npos);
}

TEST_CASE("validate_graph rejects out-of-range targets") {
  SwitchGraph g;
  g.add_vertex(0, 0);
  g.s1[0] = 9;
  CHECK_THROWS_AS(validate_graph(g), ValidationError);
}
