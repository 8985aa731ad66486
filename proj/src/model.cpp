#include "switchkit/model.hpp"

#include <algorithm>
#include <queue>

namespace switchkit {

void validate_graph(const SwitchGraph& graph) {
  const std::size_t n = graph.size();
  if (graph.s1.size() != n)
    throw ValidationError("successor maps differ in length");
  if (!graph.labels.empty() && graph.labels.size() != n)
    throw ValidationError("label table length mismatch");
  for (std::size_t v = 0; v < n; ++v) {
    if (graph.s0[v] >= n)
      throw ValidationError("s0 target out of range at vertex " + std::to_string(v));
    if (graph.s1[v] >= n)
      throw ValidationError("s1 target out of range at vertex " + std::to_string(v));
  }
}

void validate_instance(const ArrivalInstance& instance) {
  validate_graph(instance.graph);
  if (instance.origin >= instance.graph.size())
    throw ValidationError("origin out of range");
  if (instance.destination >= instance.graph.size())
    throw ValidationError("destination out of range");
}

void validate_instance(const DigicompInstance& instance) {
  validate_graph(instance.graph);
  if (instance.origin >= instance.graph.size())
    throw ValidationError("origin out of range");
  if (instance.destination >= instance.graph.size())
    throw ValidationError("destination out of range");
  if (instance.balls < 0)
    throw ValidationError("balls must be non-negative");
}

void validate_instance(const DagInstance& dag) {
  const std::size_t n = dag.size();
  if (n == 0)
    throw ValidationError("dag has no vertices");
  for (std::size_t v = 0; v < n; ++v)
    for (VertexId w : dag.successors[v]) {
      if (w >= n)
        throw ValidationError("successor out of range at vertex " + std::to_string(v));
      if (w == v)
        throw ValidationError("self-loop at vertex " + std::to_string(v));
    }
  if (dag.source >= n)
    throw ValidationError("source out of range");
  if (dag.sink >= n)
    throw ValidationError("sink out of range");
  if (dag.threshold < 0)
    throw ValidationError("threshold must be non-negative");
}

namespace {

// Iterative DFS cycle search over an adjacency callback. Self-loops are the
// caller's business: the switch-graph adapter strips them, the DAG adapter
// reports them.
template <typename Succ>
std::optional<std::vector<VertexId>> find_cycle_impl(std::size_t n, Succ successors_of) {
  enum class Color : std::uint8_t { white, gray, black };
  std::vector<Color> color(n, Color::white);
  std::vector<VertexId> parent(n, 0);

  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != Color::white) continue;

    struct Frame {
      VertexId v;
      std::size_t next_edge;
    };
    std::vector<Frame> stack;
    stack.push_back({static_cast<VertexId>(root), 0});
    color[root] = Color::gray;

    while (!stack.empty()) {
      Frame& frame = stack.back();
      const auto succ = successors_of(frame.v);
      if (frame.next_edge < succ.size()) {
        const VertexId w = succ[frame.next_edge++];
        if (w == frame.v) {
          // Self-loop witness (DAG adapter only passes these through).
          return std::vector<VertexId>{frame.v};
        }
        if (color[w] == Color::white) {
          color[w] = Color::gray;
          parent[w] = frame.v;
          stack.push_back({w, 0});
        } else if (color[w] == Color::gray) {
          // Walk back from frame.v to w along parents.
          std::vector<VertexId> cycle;
          VertexId cur = frame.v;
          cycle.push_back(cur);
          while (cur != w) {
            cur = parent[cur];
            cycle.push_back(cur);
          }
          std::reverse(cycle.begin(), cycle.end());
          return cycle;
        }
      } else {
        color[frame.v] = Color::black;
        stack.pop_back();
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<VertexId>> find_cycle(const SwitchGraph& graph) {
  std::vector<VertexId> buf;
  return find_cycle_impl(graph.size(), [&](VertexId v) -> const std::vector<VertexId>& {
    buf.clear();
    if (graph.s0[v] != v) buf.push_back(graph.s0[v]);
    if (graph.s1[v] != v) buf.push_back(graph.s1[v]);
    return buf;
  });
}

std::optional<std::vector<VertexId>> find_cycle(const DagInstance& dag) {
  return find_cycle_impl(dag.size(),
                         [&](VertexId v) -> const std::vector<VertexId>& { return dag.successors[v]; });
}

namespace {

template <typename OutEdges>
std::vector<VertexId> topo_impl(std::size_t n, OutEdges for_each_edge,
                                std::optional<std::vector<VertexId>> witness) {
  if (witness)
    throw NotAcyclicError(std::move(*witness));

  std::vector<std::uint32_t> indegree(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for_each_edge(static_cast<VertexId>(v), [&](VertexId w) { ++indegree[w]; });

  std::vector<VertexId> order;
  order.reserve(n);
  // Smallest-id-first makes the order (and everything built on it) canonical.
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(static_cast<VertexId>(v));

  while (!ready.empty()) {
    const VertexId v = ready.top();
    ready.pop();
    order.push_back(v);
    for_each_edge(v, [&](VertexId w) {
      if (--indegree[w] == 0) ready.push(w);
    });
  }
  return order;
}

}  // namespace

std::vector<VertexId> topological_order(const SwitchGraph& graph) {
  return topo_impl(
      graph.size(),
      [&](VertexId v, auto&& emit) {
        if (graph.s0[v] != v) emit(graph.s0[v]);
        if (graph.s1[v] != v) emit(graph.s1[v]);
      },
      find_cycle(graph));
}

std::vector<VertexId> topological_order(const DagInstance& dag) {
  return topo_impl(
      dag.size(),
      [&](VertexId v, auto&& emit) {
        for (VertexId w : dag.successors[v]) emit(w);
      },
      find_cycle(dag));
}

}  // namespace switchkit
