#include "switchkit/counters.hpp"

#include <stdexcept>

#include "switchkit/arrival.hpp"

namespace switchkit {

namespace {

void require_positive(const BigNat& target) {
  if (target < 1)
    throw std::invalid_argument(
        "counter target must be at least 1; wire the edge directly to the port target for T = 0");
}

}  // namespace

CounterGadget build_train_counter(const BigNat& target) {
  require_positive(target);
  const unsigned m = floor_log2(target);

  CounterGadget gadget;
  gadget.kind = CounterGadget::Kind::train;
  gadget.target = target;
  gadget.entry = 0;
  gadget.s0.resize(m + 1);
  gadget.s1.resize(m + 1);

  // Flattened form of the 2T / 2T+1 doubling constructions: the s1 chain
  // C_0 -> ... -> C_m -> B, with s0(C_0) = A and s0(C_i) echoing bit b_{m-i}
  // of T (1: one extra visit to A, 0: straight back to C_0).
  gadget.s0[0] = CounterGadget::Exit::a();
  for (unsigned i = 1; i <= m; ++i)
    gadget.s0[i] = bit_at(target, m - i) ? CounterGadget::Exit::a()
                                         : CounterGadget::Exit::local(0);
  for (unsigned i = 0; i < m; ++i) gadget.s1[i] = CounterGadget::Exit::local(i + 1);
  gadget.s1[m] = CounterGadget::Exit::b();
  return gadget;
}

CounterGadget build_ball_counter(const BigNat& target) {
  require_positive(target);
  const unsigned m = floor_log2(target);

  CounterGadget gadget;
  gadget.kind = CounterGadget::Kind::ball;
  gadget.target = target;
  gadget.entry = 0;
  gadget.s0.resize(m + 1);
  gadget.s1.resize(m + 1);

  // Chain X_0 .. X_m. X_j passes every other arrival to X_{j+1} and diverts
  // the rest to F: bit 0 forwards odd-numbered arrivals, bit 1 even-numbered
  // ones. The base X_m sends its second arrival to D.
  for (unsigned j = 0; j < m; ++j) {
    if (bit_at(target, j)) {
      gadget.s0[j] = CounterGadget::Exit::a();
      gadget.s1[j] = CounterGadget::Exit::local(j + 1);
    } else {
      gadget.s0[j] = CounterGadget::Exit::local(j + 1);
      gadget.s1[j] = CounterGadget::Exit::a();
    }
  }
  gadget.s0[m] = CounterGadget::Exit::a();
  gadget.s1[m] = CounterGadget::Exit::b();
  return gadget;
}

VertexId append_gadget(SwitchGraph& graph, const CounterGadget& gadget, VertexId port_a_target,
                       VertexId port_b_target, const std::string& label_prefix) {
  const VertexId base = static_cast<VertexId>(graph.size());
  const auto resolve = [&](const CounterGadget::Exit& exit) -> VertexId {
    switch (exit.to) {
      case CounterGadget::Exit::To::vertex: return base + exit.vertex;
      case CounterGadget::Exit::To::port_a: return port_a_target;
      case CounterGadget::Exit::To::port_b: return port_b_target;
    }
    return 0;
  };
  for (std::size_t i = 0; i < gadget.size(); ++i) {
    std::string label;
    if (!label_prefix.empty()) label = label_prefix + std::to_string(i);
    graph.add_vertex(resolve(gadget.s0[i]), resolve(gadget.s1[i]), std::move(label));
  }
  return base + gadget.entry;
}

ArrivalInstance train_counter_harness(const CounterGadget& gadget) {
  if (gadget.kind != CounterGadget::Kind::train)
    throw std::invalid_argument("train harness requires a train counter");
  ArrivalInstance harness;
  const VertexId a_id = static_cast<VertexId>(gadget.size());
  const VertexId b_id = a_id + 1;
  const VertexId entry = append_gadget(harness.graph, gadget, a_id, b_id, "C");
  // Both exits feed the next entry, so the trace shows the repeating pattern.
  harness.graph.add_vertex(entry, entry, "A");
  harness.graph.add_vertex(entry, entry, "B");
  harness.origin = entry;
  harness.destination = b_id;
  return harness;
}

DigicompInstance ball_counter_harness(const CounterGadget& gadget) {
  if (gadget.kind != CounterGadget::Kind::ball)
    throw std::invalid_argument("ball harness requires a ball counter");
  DigicompInstance harness;
  const VertexId f_id = static_cast<VertexId>(gadget.size());
  const VertexId d_id = f_id + 1;
  harness.origin = append_gadget(harness.graph, gadget, f_id, d_id, "X");
  harness.graph.add_vertex(f_id, f_id, "F");
  harness.graph.add_vertex(d_id, d_id, "D");
  harness.destination = d_id;
  harness.balls = gadget.target + 1;  // ball T+1 is the first to reach D
  return harness;
}

namespace {

std::string trace_train(const CounterGadget& gadget, std::uint64_t entries) {
  const ArrivalInstance harness = train_counter_harness(gadget);
  const VertexId a_id = static_cast<VertexId>(gadget.size());
  const VertexId b_id = a_id + 1;

  std::string exits;
  exits.reserve(entries);
  Configuration config = initial_configuration(harness.graph, harness.origin);
  // Every entry reaches a port within size()+1 moves.
  const std::uint64_t guard = entries * (gadget.size() + 2) * 2 + 16;
  for (std::uint64_t moves = 0; exits.size() < entries; ++moves) {
    if (moves > guard)
      throw std::logic_error("train counter failed to reach a port");
    step_inplace(harness.graph, config);
    if (config.position == a_id)
      exits.push_back('A');
    else if (config.position == b_id)
      exits.push_back('B');
  }
  return exits;
}

std::string trace_ball(const CounterGadget& gadget, std::uint64_t entries) {
  const DigicompInstance harness = ball_counter_harness(gadget);
  const SwitchGraph& graph = harness.graph;
  const VertexId f_id = static_cast<VertexId>(gadget.size());

  std::string exits;
  exits.reserve(entries);
  BitVec switches(graph.size());
  for (std::uint64_t ball = 0; ball < entries; ++ball) {
    VertexId pos = harness.origin;
    std::uint64_t guard = 2 * graph.size() + 2;
    while (!graph.is_sink(pos)) {
      if (guard-- == 0)
        throw std::logic_error("ball failed to reach a sink");
      const bool bit = switches.test(pos);
      switches.flip(pos);
      pos = bit ? graph.s1[pos] : graph.s0[pos];
    }
    exits.push_back(pos == f_id ? 'F' : 'D');
  }
  return exits;
}

}  // namespace

std::string counter_exit_trace(const CounterGadget& gadget, std::uint64_t entries) {
  if (entries == 0) return {};
  return gadget.kind == CounterGadget::Kind::train ? trace_train(gadget, entries)
                                                   : trace_ball(gadget, entries);
}

}  // namespace switchkit
