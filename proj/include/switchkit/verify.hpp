#ifndef SWITCHKIT_VERIFY_HPP
#define SWITCHKIT_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "switchkit/bignat.hpp"
#include "switchkit/model.hpp"

namespace switchkit {

struct PropertyReport {
  PropertyReport() = default;
  explicit PropertyReport(std::string property_name) : name(std::move(property_name)) {}

  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> notes;  // first few counterexamples, serialized

  bool ok() const { return failures == 0; }
};

struct SuiteResult {
  std::string suite;
  std::vector<PropertyReport> properties;

  bool ok() const {
    for (const auto& p : properties)
      if (!p.ok()) return false;
    return true;
  }
};

// Single-T law checks; empty string on success, else a diagnostic.
// Train: the harness trace over 2(T+1) entries is (A^T B)^2 and the fragment
// switch vector is all-zeros after each B-exit.
std::string check_train_counter_law(const BigNat& target);
// Ball: the first D-exit happens at ball T+1 exactly.
std::string check_ball_counter_law(const BigNat& target);

// Gadget invariants: size law (exhaustive plus random large targets), both
// exit-sequence laws (exhaustive to exhaustive_max, plus random train targets
// below 2^20), and rebuild determinism.
SuiteResult run_counters_suite(std::uint64_t exhaustive_max, std::uint64_t random_cases,
                               std::uint64_t seed);

// Proposition 1 end-to-end on random acyclic instances (n <= 10, T <= 32):
// ARRIVAL verdict of the reduction equals the Digicomp verdict of the source,
// across both detectors, plus naive/fast engine agreement, the size formula,
// and certificate sanity.
SuiteResult run_prop1_suite(std::uint64_t cases, std::uint64_t seed);

struct Prop2Options {
  // Test hook: corrupt the produced instance before checking. Used for
  // fault-injection sanity (a mutated reduction must make the suite fail).
  std::function<void(DigicompInstance&)> corrupt;
};

// Proposition 2 end-to-end on random DAGs (n <= 8, degree <= 4, k <= 20):
// dual path oracles agree, produced verdict matches [count >= k], counter
// entry sees exactly the path count, the even-count invariant holds, the
// output is acyclic, splitting and layering preserve path counts, the size
// formula holds, and the s0/s1 assignment is correctness-neutral.
SuiteResult run_prop2_suite(std::uint64_t cases, std::uint64_t seed,
                            const Prop2Options& options = {});

// Composition (n <= 6, degree <= 3, k <= 8): Proposition 2 then Proposition 1
// yields an ARRIVAL instance whose verdict equals [path count >= k].
SuiteResult run_compose_suite(std::uint64_t cases, std::uint64_t seed);

// Closing-remark diagnostic over the Proposition 2 sampling: the final switch
// bit at (t, n-1) equals the path count mod 2.
SuiteResult run_parity_suite(std::uint64_t cases, std::uint64_t seed);

// Naive and fast Digicomp engines produce identical BallCounts and verdicts.
SuiteResult run_engine_agreement_suite(std::uint64_t cases, std::uint64_t seed, std::size_t n_max,
                                       std::uint64_t t_max);

std::string format_report(const SuiteResult& result);

}  // namespace switchkit

#endif
