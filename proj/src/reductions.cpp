#include "switchkit/reductions.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "switchkit/counters.hpp"
#include "switchkit/io.hpp"

namespace switchkit {

std::string role_to_string(const VertexRole& role) {
  switch (role.type) {
    case VertexRole::Type::original: return "original " + std::to_string(role.vertex);
    case VertexRole::Type::layer_copy:
      return "layer " + std::to_string(role.vertex) + " " + std::to_string(role.layer);
    case VertexRole::Type::counter_node: return "counter " + std::to_string(role.vertex);
    case VertexRole::Type::f_sink: return "F";
    case VertexRole::Type::d_sink: return "D";
  }
  return "?";
}

std::string ReductionCertificate::to_text() const {
  std::ostringstream out;
  out << "certificate v1 " << kind << "\n";
  out << "source " << source_digest << "\n";
  out << "produced " << produced_digest << "\n";
  if (kind == "dagpaths-to-digicomp") {
    out << "split-n " << split_vertex_count << "\n";
    for (const auto& [id, orig] : split_routers)
      out << "router " << id << " " << orig << "\n";
  }
  out << "balls " << balls << "\n";
  if (kind == "dagpaths-to-digicomp") out << "k " << threshold << "\n";
  for (std::size_t v = 0; v < roles.size(); ++v)
    out << "role " << v << " " << role_to_string(roles[v]) << "\n";
  return out.str();
}

std::string instance_digest(const std::string& canonical_text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical_text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = hex[h & 15];
  return out;
}

std::pair<ArrivalInstance, ReductionCertificate> reduce_digicomp_to_arrival(
    const DigicompInstance& instance) {
  validate_instance(instance);
  if (auto cycle = find_cycle(instance.graph))
    throw NotAcyclicError(std::move(*cycle));

  ReductionCertificate cert;
  cert.kind = "digicomp-to-arrival";
  cert.source_digest = instance_digest(serialize(instance));
  cert.balls = instance.balls;

  if (instance.balls == 0) {
    // No ball ever reaches anything: a two-vertex instance that diverges.
    ArrivalInstance produced;
    produced.graph.add_vertex(0, 0, "F");
    produced.graph.add_vertex(1, 1, "D");
    produced.origin = 0;
    produced.destination = 1;
    cert.roles = {VertexRole{VertexRole::Type::f_sink, 0, 0},
                  VertexRole{VertexRole::Type::d_sink, 0, 0}};
    cert.produced_digest = instance_digest(serialize(produced));
    return {std::move(produced), std::move(cert)};
  }

  const std::size_t n = instance.graph.size();
  ArrivalInstance produced;
  produced.graph = instance.graph;

  // Sinks of the source graph, noted before any re-targeting.
  std::vector<VertexId> sinks;
  for (std::size_t v = 0; v < n; ++v)
    if (instance.graph.is_sink(static_cast<VertexId>(v))) sinks.push_back(static_cast<VertexId>(v));

  const CounterGadget counter = build_train_counter(instance.balls);
  const VertexId f_id = static_cast<VertexId>(n + counter.size());
  const VertexId entry =
      append_gadget(produced.graph, counter, instance.origin, f_id, "C");
  produced.graph.add_vertex(f_id, f_id, "F");

  // Each finished ball hands the train back to the counter for the next one.
  for (const VertexId v : sinks) {
    produced.graph.s0[v] = entry;
    produced.graph.s1[v] = entry;
  }

  produced.origin = entry;
  produced.destination = instance.destination;

  cert.roles.reserve(produced.graph.size());
  for (std::size_t v = 0; v < n; ++v)
    cert.roles.push_back(VertexRole{VertexRole::Type::original, static_cast<VertexId>(v), 0});
  for (std::size_t i = 0; i < counter.size(); ++i)
    cert.roles.push_back(VertexRole{VertexRole::Type::counter_node, static_cast<VertexId>(i), 0});
  cert.roles.push_back(VertexRole{VertexRole::Type::f_sink, 0, 0});
  cert.produced_digest = instance_digest(serialize(produced));
  return {std::move(produced), std::move(cert)};
}

namespace {

DagInstance split_impl(const DagInstance& dag, std::vector<std::pair<VertexId, VertexId>>* routers) {
  validate_instance(dag);
  DagInstance out = dag;

  const std::size_t n = dag.size();
  for (std::size_t v = 0; v < n; ++v) {
    if (dag.successors[v].size() <= 2) continue;
    const std::vector<VertexId> targets = dag.successors[v];
    out.successors[v].clear();

    // Balanced binary routing tree rooted at v; fresh ids in creation order.
    const auto alloc_router = [&]() -> VertexId {
      const VertexId id = static_cast<VertexId>(out.successors.size());
      out.successors.emplace_back();
      if (routers) routers->emplace_back(id, static_cast<VertexId>(v));
      return id;
    };
    const auto build = [&](auto&& self, VertexId node, std::size_t lo, std::size_t hi) -> void {
      const std::size_t len = hi - lo;
      if (len == 2) {
        out.successors[node] = {targets[lo], targets[lo + 1]};
        return;
      }
      const std::size_t mid = lo + (len + 1) / 2;
      VertexId left;
      if (mid - lo == 1) {
        left = targets[lo];
      } else {
        left = alloc_router();
        self(self, left, lo, mid);
      }
      VertexId right;
      if (hi - mid == 1) {
        right = targets[mid];
      } else {
        right = alloc_router();
        self(self, right, mid, hi);
      }
      out.successors[node] = {left, right};
    };
    build(build, static_cast<VertexId>(v), 0, targets.size());
  }
  return out;
}

}  // namespace

DagInstance split_outdegree(const DagInstance& dag) { return split_impl(dag, nullptr); }

std::vector<std::pair<VertexId, VertexId>> split_outdegree_routers(const DagInstance& dag) {
  std::vector<std::pair<VertexId, VertexId>> routers;
  split_impl(dag, &routers);
  return routers;
}

DagInstance layer_dag(const DagInstance& dag) {
  validate_instance(dag);
  const std::size_t n = dag.size();
  for (std::size_t v = 0; v < n; ++v)
    if (dag.successors[v].size() > 2)
      throw std::invalid_argument("layer_dag requires out-degree at most 2");

  DagInstance out;
  out.successors.resize(n * n);
  out.threshold = dag.threshold;
  const auto id = [n](VertexId v, std::size_t layer) {
    return static_cast<VertexId>(layer * n + v);
  };

  for (std::size_t layer = 0; layer + 1 < n; ++layer) {
    for (std::size_t v = 0; v < n; ++v) {
      if (static_cast<VertexId>(v) == dag.sink) {
        out.successors[id(dag.sink, layer)].push_back(id(dag.sink, layer + 1));
      } else {
        for (VertexId w : dag.successors[v])
          out.successors[id(static_cast<VertexId>(v), layer)].push_back(id(w, layer + 1));
      }
    }
  }
  out.source = id(dag.source, 0);
  out.sink = id(dag.sink, n - 1);
  return out;
}

std::pair<DigicompInstance, ReductionCertificate> reduce_dagpaths_to_digicomp(
    const DagInstance& dag) {
  validate_instance(dag);
  if (dag.threshold < 1)
    throw std::invalid_argument("path-count threshold k must be at least 1");

  ReductionCertificate cert;
  cert.kind = "dagpaths-to-digicomp";
  cert.source_digest = instance_digest(serialize(dag));
  cert.threshold = dag.threshold;
  cert.split_routers.clear();

  DagInstance split = split_impl(dag, &cert.split_routers);
  if (auto cycle = find_cycle(split))
    throw NotAcyclicError(std::move(*cycle));
  const std::size_t n = split.size();
  cert.split_vertex_count = n;
  const DagInstance layered = layer_dag(split);
  const std::size_t copies = layered.size();  // n^2

  const BigNat k = dag.threshold;
  const bool has_counter = k >= 2;
  const CounterGadget counter =
      has_counter ? build_ball_counter(k - 1) : CounterGadget{};
  const std::size_t counter_size = has_counter ? counter.size() : 0;

  const VertexId f_id = static_cast<VertexId>(copies);
  const VertexId d_id = static_cast<VertexId>(copies + 1 + counter_size);

  DigicompInstance produced;
  SwitchGraph& graph = produced.graph;
  graph.s0.resize(copies);
  graph.s1.resize(copies);
  graph.labels.resize(copies);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t layer = 0; layer < n; ++layer)
      graph.labels[layer * n + v] = "v" + std::to_string(v) + "l" + std::to_string(layer);

  for (std::size_t l = 0; l < copies; ++l) {
    const std::vector<VertexId>& succ = layered.successors[l];
    if (static_cast<VertexId>(l) == layered.sink) {
      // (t, n-1): feeds the ball counter (or D directly when k = 1).
      const VertexId target = has_counter ? static_cast<VertexId>(copies + 1) : d_id;
      graph.s0[l] = target;
      graph.s1[l] = target;
    } else if (succ.size() == 2) {
      graph.s0[l] = std::min(succ[0], succ[1]);
      graph.s1[l] = std::max(succ[0], succ[1]);
    } else if (succ.size() == 1) {
      graph.s0[l] = succ[0];
      graph.s1[l] = f_id;
    } else {
      graph.s0[l] = f_id;
      graph.s1[l] = f_id;
    }
  }

  graph.add_vertex(f_id, f_id, "F");
  if (has_counter)
    append_gadget(graph, counter, f_id, d_id, "X");
  graph.add_vertex(d_id, d_id, "D");

  produced.origin = layered.source;
  produced.destination = d_id;
  produced.balls = pow2(static_cast<unsigned>(n - 1));
  cert.balls = produced.balls;

  cert.roles.reserve(graph.size());
  for (std::size_t l = 0; l < copies; ++l)
    cert.roles.push_back(VertexRole{VertexRole::Type::layer_copy,
                                    static_cast<VertexId>(l % n),
                                    static_cast<std::uint32_t>(l / n)});
  cert.roles.push_back(VertexRole{VertexRole::Type::f_sink, 0, 0});
  for (std::size_t i = 0; i < counter_size; ++i)
    cert.roles.push_back(VertexRole{VertexRole::Type::counter_node, static_cast<VertexId>(i), 0});
  cert.roles.push_back(VertexRole{VertexRole::Type::d_sink, 0, 0});
  cert.produced_digest = instance_digest(serialize(produced));
  return {std::move(produced), std::move(cert)};
}

BigNat count_paths_bruteforce(const DagInstance& dag, std::uint64_t guard) {
  validate_instance(dag);
  std::uint64_t paths = 0;
  std::uint64_t visits = 0;
  const std::uint64_t visit_guard =
      guard > std::numeric_limits<std::uint64_t>::max() / 64 ? guard : guard * 64;

  const auto visit = [&](auto&& self, VertexId v) -> void {
    if (++visits > visit_guard)
      throw EnumerationLimitError("path enumeration exceeded the visit budget");
    if (v == dag.sink) {
      if (++paths > guard)
        throw EnumerationLimitError("more than " + std::to_string(guard) + " paths");
      return;  // a walk cannot revisit the sink in a DAG
    }
    for (VertexId w : dag.successors[v]) self(self, w);
  };
  visit(visit, dag.source);
  return BigNat(paths);
}

BigNat count_paths_dp(const DagInstance& dag) {
  validate_instance(dag);
  const std::vector<VertexId> order = topological_order(dag);  // throws if cyclic
  std::vector<BigNat> ways(dag.size(), BigNat(0));
  ways[dag.source] = 1;
  for (const VertexId v : order) {
    if (ways[v] == 0) continue;
    for (VertexId w : dag.successors[v]) ways[w] += ways[v];
  }
  return ways[dag.sink];
}

bool check_even_count_invariant(const ReductionCertificate& certificate, const BallCounts& counts,
                                std::string* violation) {
  const std::size_t n = certificate.split_vertex_count;
  for (std::size_t v = 0; v < certificate.roles.size() && v < counts.arrivals.size(); ++v) {
    const VertexRole& role = certificate.roles[v];
    if (role.type != VertexRole::Type::layer_copy) continue;
    if (n >= 2 && role.layer <= n - 2 && bit_at(counts.arrivals[v], 0)) {
      if (violation)
        *violation = "odd arrival count " + to_decimal(counts.arrivals[v]) + " at produced vertex " +
                     std::to_string(v) + " (layer " + std::to_string(role.layer) + ")";
      return false;
    }
  }
  return true;
}

}  // namespace switchkit
