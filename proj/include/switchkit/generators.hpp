#ifndef SWITCHKIT_GENERATORS_HPP
#define SWITCHKIT_GENERATORS_HPP

#include <cstdint>
#include <random>

#include "switchkit/model.hpp"

namespace switchkit {

// Seeded deterministic randomness. mt19937_64 output is pinned by the
// standard; the bounded draws below avoid std::uniform_int_distribution,
// whose sequence is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform-ish draw in [0, bound); bound >= 1. Modulo bias is irrelevant at
  // the bounds used here and keeps the sequence platform-stable.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {  // inclusive
    return lo + below(hi - lo + 1);
  }

  bool chance(std::uint64_t numer, std::uint64_t denom) { return below(denom) < numer; }

 private:
  std::mt19937_64 engine_;
};

struct DagGenParams {
  std::size_t max_out_degree = 4;  // parallel edges allowed
  std::uint64_t max_threshold = 20;
};

// Acyclic by construction: edges only point from lower to higher id, source
// is 0, sink is the last vertex. Degree-0 vertices are allowed anywhere.
DagInstance gen_random_dag(Rng& rng, std::size_t n, const DagGenParams& params = {});

struct SwitchGraphGenParams {
  std::uint64_t max_balls = 32;
  bool allow_self_loops = true;  // single self-loops on interior vertices
};

// Acyclic switch graph (paper sense) with the last vertex a guaranteed sink:
// every successor points strictly forward or to the vertex itself.
// Origin is 0; destination is any vertex, so both verdicts occur.
DigicompInstance gen_random_acyclic_digicomp(Rng& rng, std::size_t n,
                                             const SwitchGraphGenParams& params = {});

// Unrestricted switch graph (cycles likely) for exercising divergence.
ArrivalInstance gen_random_arrival(Rng& rng, std::size_t n);

}  // namespace switchkit

#endif
