#ifndef SWITCHKIT_REDUCTIONS_HPP
#define SWITCHKIT_REDUCTIONS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "switchkit/digicomp.hpp"
#include "switchkit/model.hpp"

namespace switchkit {

// Provenance for produced instances: which role each produced vertex plays,
// plus the reduction parameters. Serialized as structured text next to the
// produced instance so reductions can be audited after the fact.
struct VertexRole {
  enum class Type : std::uint8_t {
    original,      // copy of a source-instance vertex (vertex = source id)
    layer_copy,    // layered copy (v, i): vertex = post-split id v, layer = i
    counter_node,  // counter chain node (vertex = chain index)
    f_sink,        // the absorbing failure vertex F
    d_sink,        // the fresh destination D
  };
  Type type = Type::original;
  VertexId vertex = 0;
  std::uint32_t layer = 0;
};

std::string role_to_string(const VertexRole& role);

struct ReductionCertificate {
  std::string kind;  // "digicomp-to-arrival" | "dagpaths-to-digicomp"
  std::string source_digest;
  std::string produced_digest;
  std::vector<VertexRole> roles;  // index = produced vertex id, covers all
  // dagpaths-to-digicomp only:
  std::size_t split_vertex_count = 0;
  std::vector<std::pair<VertexId, VertexId>> split_routers;  // (post-split id, original vertex)
  BigNat balls;      // T emitted with the produced instance
  BigNat threshold;  // k (dagpaths-to-digicomp only)

  std::string to_text() const;
};

// FNV-1a 64 over the canonical serialization; provenance only, not crypto.
std::string instance_digest(const std::string& canonical_text);

// Proposition 1 construction: wrap the acyclic instance in a train counter
// for T. Port A enters at the origin, port B falls into a fresh self-loop F,
// and every sink of the source graph is re-targeted to the counter entry.
// Produced size = |V| + floor(log2 T) + 2 for T >= 1; T = 0 maps to a
// trivially diverging two-vertex instance. Throws NotAcyclicError.
std::pair<ArrivalInstance, ReductionCertificate> reduce_digicomp_to_arrival(
    const DigicompInstance& instance);

// Splits every vertex of out-degree d > 2 into a balanced binary tree of d-1
// two-way routing vertices (the original vertex becomes the root; d-2 fresh
// vertices are appended). Path counts from source to sink are preserved
// exactly. Already-small DAGs are returned unchanged.
DagInstance split_outdegree(const DagInstance& dag);
// Fresh routing vertices introduced by split_outdegree, as (new id, original
// vertex) pairs in the same deterministic order the split emits them.
std::vector<std::pair<VertexId, VertexId>> split_outdegree_routers(const DagInstance& dag);

// Layers an out-degree <= 2 DAG: copies (v, i) for i in [0, n), edges
// (u, i) -> (v, i+1) for u != t, plus the chain (t, i) -> (t, i+1). The
// (s, 0) -> (t, n-1) path count equals the input s -> t path count.
// Produced vertex (v, i) has id i*n + v.
DagInstance layer_dag(const DagInstance& dag);

// Proposition 2 construction: split, layer, pick s0/s1 deterministically
// (lower target id on s0; degree-1 vertices put the real edge on s0 and F on
// s1; degree-0 vertices point both slots at F), then feed (t, n-1) into a
// ball counter for k-1 whose F port joins F and whose D port is the new
// destination (k = 1 wires (t, n-1) straight to D). Emits T = 2^(n-1) balls
// from (s, 0), n being the post-split vertex count. Throws
// std::invalid_argument for k = 0.
std::pair<DigicompInstance, ReductionCertificate> reduce_dagpaths_to_digicomp(
    const DagInstance& dag);

// Exact number of distinct source -> sink walks (parallel edges counted
// separately) by exhaustive depth-first enumeration. Throws
// EnumerationLimitError beyond `guard` paths. Verification oracle.
BigNat count_paths_bruteforce(const DagInstance& dag, std::uint64_t guard = 1'000'000);

// Path count via topological-order accumulation; exact for any n. Throws
// NotAcyclicError on cyclic input.
BigNat count_paths_dp(const DagInstance& dag);

// Checked form of the proof's implicit assumption: under the emitted ball
// budget every layered copy at layer <= n-2 receives an even arrival count,
// so each halving is exact. Returns false (and names the vertex) otherwise.
bool check_even_count_invariant(const ReductionCertificate& certificate, const BallCounts& counts,
                                std::string* violation = nullptr);

}  // namespace switchkit

#endif
