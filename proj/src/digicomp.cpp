#include "switchkit/digicomp.hpp"

namespace switchkit {

DigicompResult run_digicomp_naive(const DigicompInstance& instance, std::uint64_t step_budget) {
  validate_instance(instance);
  if (auto cycle = find_cycle(instance.graph))
    throw NotAcyclicError(std::move(*cycle));

  const SwitchGraph& graph = instance.graph;
  const std::size_t n = graph.size();

  DigicompResult result;
  result.counts.arrivals.assign(n, BigNat(0));
  result.counts.final_switches = BitVec(n);
  BitVec& switches = result.counts.final_switches;

  std::uint64_t used = 0;
  for (BigNat ball = 0; ball < instance.balls; ++ball) {
    if (used >= step_budget) {
      result.verdict = DigicompVerdict::budget_exhausted;
      result.steps_used = used;
      return result;
    }
    ++used;  // release
    VertexId pos = instance.origin;
    result.counts.arrivals[pos] += 1;
    while (!graph.is_sink(pos)) {
      if (used >= step_budget) {
        result.verdict = DigicompVerdict::budget_exhausted;
        result.steps_used = used;
        return result;
      }
      ++used;  // move
      const bool bit = switches.test(pos);
      switches.flip(pos);
      pos = bit ? graph.s1[pos] : graph.s0[pos];
      result.counts.arrivals[pos] += 1;
    }
  }

  result.verdict =
      result.counts.arrivals[instance.destination] > 0 ? DigicompVerdict::yes : DigicompVerdict::no;
  result.steps_used = used;
  return result;
}

DigicompResult run_digicomp_fast(const DigicompInstance& instance) {
  validate_instance(instance);
  const SwitchGraph& graph = instance.graph;
  const std::size_t n = graph.size();
  const std::vector<VertexId> order = topological_order(graph);  // throws if cyclic

  std::vector<BigNat> incoming(n, BigNat(0));  // external arrivals, self-bounces excluded
  incoming[instance.origin] += instance.balls;

  DigicompResult result;
  result.counts.arrivals.assign(n, BigNat(0));
  result.counts.final_switches = BitVec(n);

  for (const VertexId v : order) {
    const BigNat& c = incoming[v];
    const bool self0 = graph.s0[v] == v;
    const bool self1 = graph.s1[v] == v;
    if (self0 && self1) {
      // Sink: balls stop on arrival, no toggle.
      result.counts.arrivals[v] = c;
    } else if (self0) {
      result.counts.arrivals[v] = 2 * c;
      if (c > 0) incoming[graph.s1[v]] += c;
    } else if (self1) {
      result.counts.arrivals[v] = c > 0 ? 2 * c - 1 : BigNat(0);
      if (c > 0) {
        incoming[graph.s0[v]] += c;
        result.counts.final_switches.set(v, true);
      }
    } else {
      result.counts.arrivals[v] = c;
      const BigNat up = half_up(c);
      const BigNat down = half_down(c);
      if (up > 0) incoming[graph.s0[v]] += up;
      if (down > 0) incoming[graph.s1[v]] += down;
      result.counts.final_switches.set(v, bit_at(c, 0));
    }
  }

  result.verdict =
      result.counts.arrivals[instance.destination] > 0 ? DigicompVerdict::yes : DigicompVerdict::no;
  return result;
}

bool parity_diagnostic(const BallCounts& counts, VertexId vertex) {
  return counts.final_switches.test(vertex);
}

}  // namespace switchkit
