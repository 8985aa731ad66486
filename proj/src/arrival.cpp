#include "switchkit/arrival.hpp"

#include <limits>
#include <unordered_set>

namespace switchkit {

namespace {

struct ConfigHash {
  std::size_t operator()(const Configuration& c) const {
    return static_cast<std::size_t>(c.switches.hash() * 0x9e3779b97f4a7c15ull ^ c.position);
  }
};

RunOutcome run_hashset(const ArrivalInstance& instance, std::uint64_t budget) {
  const SwitchGraph& graph = instance.graph;
  Configuration config = initial_configuration(graph, instance.origin);
  std::unordered_set<Configuration, ConfigHash> visited;

  for (std::uint64_t executed = 0;; ++executed) {
    if (config.position == instance.destination)
      return RunOutcome{ArrivalVerdict::arrives, BigNat(executed), std::nullopt};
    if (auto [it, inserted] = visited.insert(config); !inserted)
      return RunOutcome{ArrivalVerdict::diverges, BigNat(executed), config};
    if (executed == budget)
      return RunOutcome{ArrivalVerdict::undecided, BigNat(executed), std::nullopt};
    step_inplace(graph, config);
  }
}

// The run is analysed through g(c) = c when c sits on the destination, else
// step(c). Destination configurations become fixed points, so the rho shape
// of g encodes the verdict: cycle length 1 means the train arrived (a true
// step never fixes a configuration because it always flips one bit), and the
// tail length mu is then exactly the minimal arrival step count. A longer
// cycle can never contain the destination, and its entry configuration c_mu
// is the first repeated one.
RunOutcome run_brent(const ArrivalInstance& instance, std::uint64_t budget) {
  const SwitchGraph& graph = instance.graph;
  const VertexId dest = instance.destination;

  const auto advance = [&](Configuration& c) {
    if (c.position != dest) step_inplace(graph, c);
  };

  // Phase 1 (Brent): find the cycle length lambda. hare_index <= 2(mu+lambda),
  // so capping it at 2*budget+2 guarantees a decision whenever mu+lambda fits
  // in the budget.
  Configuration tortoise = initial_configuration(graph, instance.origin);
  Configuration hare = tortoise;
  advance(hare);
  std::uint64_t power = 1, lambda = 1, hare_index = 1;
  const std::uint64_t cap = (budget > (std::numeric_limits<std::uint64_t>::max() - 2) / 2)
                                ? std::numeric_limits<std::uint64_t>::max()
                                : 2 * budget + 2;
  while (tortoise != hare) {
    if (hare_index >= cap)
      return RunOutcome{ArrivalVerdict::undecided, BigNat(hare_index), std::nullopt};
    if (power == lambda) {
      tortoise = hare;
      power *= 2;
      lambda = 0;
    }
    advance(hare);
    ++lambda;
    ++hare_index;
  }

  // Phase 2: find mu with two aligned pointers lambda apart.
  Configuration front = initial_configuration(graph, instance.origin);
  for (std::uint64_t i = 0; i < lambda; ++i) advance(front);
  Configuration back = initial_configuration(graph, instance.origin);
  std::uint64_t mu = 0;
  while (back != front) {
    advance(back);
    advance(front);
    ++mu;
  }

  if (back.position == dest)
    return RunOutcome{ArrivalVerdict::arrives, BigNat(mu), std::nullopt};
  return RunOutcome{ArrivalVerdict::diverges, BigNat(mu + lambda), back};
}

}  // namespace

RunOutcome run_arrival(const ArrivalInstance& instance, std::uint64_t budget, Detector detector) {
  validate_instance(instance);
  return detector == Detector::hashset ? run_hashset(instance, budget)
                                       : run_brent(instance, budget);
}

std::vector<TraceEntry> trace_arrival(const ArrivalInstance& instance, std::uint64_t max_steps) {
  validate_instance(instance);
  Configuration config = initial_configuration(instance.graph, instance.origin);
  std::vector<TraceEntry> trace;
  trace.reserve(max_steps);
  for (std::uint64_t i = 0; i < max_steps; ++i) {
    trace.push_back(TraceEntry{config.position, config.switches.test(config.position)});
    step_inplace(instance.graph, config);
  }
  return trace;
}

}  // namespace switchkit
