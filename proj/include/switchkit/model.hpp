#ifndef SWITCHKIT_MODEL_HPP
#define SWITCHKIT_MODEL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "switchkit/bignat.hpp"
#include "switchkit/bitvec.hpp"

namespace switchkit {

// Dense vertex index, contiguous in [0, n) within one graph.
using VertexId = std::uint32_t;

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class NotAcyclicError : public std::runtime_error {
 public:
  explicit NotAcyclicError(std::vector<VertexId> cycle)
      : std::runtime_error("graph has a non-self-loop cycle"), cycle_(std::move(cycle)) {}

  const std::vector<VertexId>& cycle() const { return cycle_; }

 private:
  std::vector<VertexId> cycle_;
};

class EnumerationLimitError : public std::runtime_error {
 public:
  explicit EnumerationLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Switch graph: two total successor maps over a dense vertex set. Solid edges
// are s0, dashed edges are s1. Labels are optional metadata only.
struct SwitchGraph {
  std::vector<VertexId> s0;
  std::vector<VertexId> s1;
  std::vector<std::string> labels;  // empty, or one entry per vertex ("" = unlabeled)

  std::size_t size() const { return s0.size(); }

  VertexId add_vertex(VertexId s0_target, VertexId s1_target, std::string label = {}) {
    s0.push_back(s0_target);
    s1.push_back(s1_target);
    if (!labels.empty() || !label.empty()) {
      labels.resize(s0.size() - 1);
      labels.push_back(std::move(label));
    }
    return static_cast<VertexId>(s0.size() - 1);
  }

  std::string label(VertexId v) const {
    return v < labels.size() ? labels[v] : std::string{};
  }

  bool is_sink(VertexId v) const { return s0[v] == v && s1[v] == v; }
};

// Throws ValidationError unless both maps are total with in-range targets.
void validate_graph(const SwitchGraph& graph);

struct ArrivalInstance {
  SwitchGraph graph;
  VertexId origin = 0;
  VertexId destination = 0;
};

struct DigicompInstance {
  SwitchGraph graph;
  VertexId origin = 0;
  VertexId destination = 0;
  BigNat balls;  // T, released sequentially from origin
};

// DAG with explicit successor lists; parallel edges allowed, no self-loops.
struct DagInstance {
  std::vector<std::vector<VertexId>> successors;
  VertexId source = 0;
  VertexId sink = 0;
  BigNat threshold;  // k, the path-count threshold

  std::size_t size() const { return successors.size(); }
};

void validate_instance(const ArrivalInstance& instance);
void validate_instance(const DigicompInstance& instance);
void validate_instance(const DagInstance& instance);

// Train (or ball) position plus every switch state; the unit of cycle
// detection. Switch bit 0 routes via s0, bit 1 via s1.
struct Configuration {
  VertexId position = 0;
  BitVec switches;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.position == b.position && a.switches == b.switches;
  }
  friend bool operator!=(const Configuration& a, const Configuration& b) { return !(a == b); }
};

inline Configuration initial_configuration(const SwitchGraph& graph, VertexId origin) {
  return Configuration{origin, BitVec(graph.size())};
}

// Acyclic in the paper's sense: the directed graph on {v -> s0(v), v -> s1(v)}
// has no cycles aside from self-loops. On failure the witness is a vertex
// sequence v0 .. v(k-1) with k >= 2 where each consecutive pair (cyclically)
// is an edge.
std::optional<std::vector<VertexId>> find_cycle(const SwitchGraph& graph);
inline bool check_acyclic(const SwitchGraph& graph) { return !find_cycle(graph).has_value(); }

// Same check for explicit DAGs, where self-loops also count as cycles.
std::optional<std::vector<VertexId>> find_cycle(const DagInstance& dag);
inline bool check_acyclic(const DagInstance& dag) { return !find_cycle(dag).has_value(); }

// Topological order of the self-loop-stripped switch graph. Throws
// NotAcyclicError with a witness when none exists.
std::vector<VertexId> topological_order(const SwitchGraph& graph);
std::vector<VertexId> topological_order(const DagInstance& dag);

}  // namespace switchkit

#endif
