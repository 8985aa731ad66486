#ifndef SWITCHKIT_DIGICOMP_HPP
#define SWITCHKIT_DIGICOMP_HPP

#include <cstdint>

#include "switchkit/model.hpp"

namespace switchkit {

// Per-vertex ball bookkeeping. `arrivals` counts one arrival per entry event,
// so a vertex whose self-loop bounces a ball counts that ball twice.
struct BallCounts {
  std::vector<BigNat> arrivals;
  BitVec final_switches;
};

enum class DigicompVerdict { yes, no, budget_exhausted };

struct DigicompResult {
  BallCounts counts;
  DigicompVerdict verdict = DigicompVerdict::no;
  std::uint64_t steps_used = 0;  // naive engine only
};

inline constexpr std::uint64_t kDefaultNaiveBudget = 1'000'000;

// Sequential ball dropping with the train step rule; switch states persist
// across balls, and a ball stops (without toggling) when it arrives at a sink.
// The budget counts ball releases plus moves; exhausting it yields verdict
// budget_exhausted with partial counts. This engine exists as an oracle.
// Throws NotAcyclicError on cyclic input.
DigicompResult run_digicomp_naive(const DigicompInstance& instance,
                                  std::uint64_t step_budget = kDefaultNaiveBudget);

// Topological-order evaluator, polynomial in n and the bit-length of T.
// A vertex with two non-self exits that receives c arrivals forwards
// ceil(c/2) along s0 and floor(c/2) along s1, ending with switch c mod 2.
// A vertex with one self-looping exit bounces balls through the loop at most
// once each, which closes to: arrivals 2c (loop on s0, final switch 0) or
// max(2c-1, 0) (loop on s1, final switch min(c,1)), forwarding all c to the
// non-self successor. Sinks absorb. Throws NotAcyclicError on cyclic input.
DigicompResult run_digicomp_fast(const DigicompInstance& instance);

// Final switch bit at `vertex`; equals arrivals(vertex) mod 2 whenever the
// vertex has no self-loop (every entry toggles exactly once).
bool parity_diagnostic(const BallCounts& counts, VertexId vertex);

}  // namespace switchkit

#endif
