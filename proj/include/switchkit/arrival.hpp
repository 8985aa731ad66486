#ifndef SWITCHKIT_ARRIVAL_HPP
#define SWITCHKIT_ARRIVAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "switchkit/model.hpp"

namespace switchkit {

// One train move: from v to s_i(v) where i is the switch bit at v, toggling
// that bit.
inline void step_inplace(const SwitchGraph& graph, Configuration& config) {
  const VertexId v = config.position;
  const bool bit = config.switches.test(v);
  config.switches.flip(v);
  config.position = bit ? graph.s1[v] : graph.s0[v];
}

inline Configuration step(const SwitchGraph& graph, Configuration config) {
  step_inplace(graph, config);
  return config;
}

enum class Detector {
  hashset,          // stores visited configurations, Theta(visited * n) bits
  constant_memory,  // two-speed traversal, O(n) bits, more steps
};

enum class ArrivalVerdict { arrives, diverges, undecided };

struct RunOutcome {
  ArrivalVerdict verdict = ArrivalVerdict::undecided;
  // arrives: minimal step count to the first visit of the destination.
  // undecided: steps executed before the budget ran out.
  // diverges: step index at which the recurrence was established.
  BigNat steps;
  // diverges only: a configuration that occurs at two distinct times before
  // any visit to the destination.
  std::optional<Configuration> witness;
};

inline constexpr std::uint64_t kDefaultStepBudget = 10'000'000;

// Exact decision when the budget permits. Arrival is checked on entry to a
// vertex, including step 0 at the origin. The configuration space is finite
// (at most n * 2^n), so a repeated configuration before arrival proves
// divergence; `undecided` is reported otherwise, never a wrong verdict.
RunOutcome run_arrival(const ArrivalInstance& instance,
                       std::uint64_t budget = kDefaultStepBudget,
                       Detector detector = Detector::hashset);

struct TraceEntry {
  VertexId position;
  bool switch_bit;  // bit consumed at `position` by this step
};

// Prefix of the unique run, exactly max_steps entries (the train never halts).
std::vector<TraceEntry> trace_arrival(const ArrivalInstance& instance, std::uint64_t max_steps);

}  // namespace switchkit

#endif
