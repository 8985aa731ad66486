#include "switchkit/generators.hpp"

#include <stdexcept>

namespace switchkit {

DagInstance gen_random_dag(Rng& rng, std::size_t n, const DagGenParams& params) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  DagInstance dag;
  dag.successors.resize(n);
  for (std::size_t v = 0; v + 1 < n; ++v) {
    const std::uint64_t degree = rng.below(params.max_out_degree + 1);
    for (std::uint64_t e = 0; e < degree; ++e)
      dag.successors[v].push_back(static_cast<VertexId>(rng.between(v + 1, n - 1)));
  }
  dag.source = 0;
  dag.sink = static_cast<VertexId>(n - 1);
  dag.threshold = BigNat(rng.between(1, params.max_threshold));
  return dag;
}

DigicompInstance gen_random_acyclic_digicomp(Rng& rng, std::size_t n,
                                             const SwitchGraphGenParams& params) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  DigicompInstance instance;
  SwitchGraph& graph = instance.graph;
  graph.s0.resize(n);
  graph.s1.resize(n);

  for (std::size_t v = 0; v < n; ++v) {
    const bool last = v + 1 == n;
    if (last || rng.chance(1, 6)) {
      // Sink; the last vertex always is one.
      graph.s0[v] = static_cast<VertexId>(v);
      graph.s1[v] = static_cast<VertexId>(v);
      continue;
    }
    const auto forward = [&] { return static_cast<VertexId>(rng.between(v + 1, n - 1)); };
    graph.s0[v] = forward();
    graph.s1[v] = forward();
    if (params.allow_self_loops && rng.chance(1, 5)) {
      // Single self-loop on one slot only: both would make it a sink.
      if (rng.chance(1, 2))
        graph.s0[v] = static_cast<VertexId>(v);
      else
        graph.s1[v] = static_cast<VertexId>(v);
    }
  }

  instance.origin = 0;
  instance.destination = static_cast<VertexId>(rng.below(n));
  instance.balls = BigNat(rng.below(params.max_balls + 1));
  return instance;
}

ArrivalInstance gen_random_arrival(Rng& rng, std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  ArrivalInstance instance;
  instance.graph.s0.resize(n);
  instance.graph.s1.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    instance.graph.s0[v] = static_cast<VertexId>(rng.below(n));
    instance.graph.s1[v] = static_cast<VertexId>(rng.below(n));
  }
  instance.origin = static_cast<VertexId>(rng.below(n));
  instance.destination = static_cast<VertexId>(rng.below(n));
  return instance;
}

}  // namespace switchkit
