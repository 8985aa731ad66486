#ifndef SWITCHKIT_COUNTERS_HPP
#define SWITCHKIT_COUNTERS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "switchkit/model.hpp"

namespace switchkit {

// A generated counter sub-graph. Ports are external attachment points, not
// fragment vertices: port_a is the high-traffic exit (A for train counters,
// F for ball counters) and port_b the threshold exit (B, respectively D).
// The caller wires them when splicing the fragment into a host graph.
struct CounterGadget {
  enum class Kind { train, ball };

  struct Exit {
    enum class To { vertex, port_a, port_b };
    To to = To::vertex;
    VertexId vertex = 0;  // valid when to == vertex

    static Exit local(VertexId v) { return Exit{To::vertex, v}; }
    static Exit a() { return Exit{To::port_a, 0}; }
    static Exit b() { return Exit{To::port_b, 0}; }

    friend bool operator==(const Exit& x, const Exit& y) {
      return x.to == y.to && (x.to != To::vertex || x.vertex == y.vertex);
    }
  };

  Kind kind = Kind::train;
  BigNat target;                // T
  std::vector<Exit> s0, s1;     // one entry per fragment vertex
  VertexId entry = 0;           // C_0 (train) / X_0 (ball)

  std::size_t size() const { return s0.size(); }

  char port_a_name() const { return kind == Kind::train ? 'A' : 'F'; }
  char port_b_name() const { return kind == Kind::train ? 'B' : 'D'; }
};

// Train counter for T >= 1: entered repeatedly at C_0, exactly T consecutive
// entries exit via port A, the next exits via port B, after which every
// fragment switch is 0 again and the pattern repeats with period T+1.
// Emits exactly floor(log2 T) + 1 vertices. Throws std::invalid_argument for
// T = 0 (attach the caller's edge directly to B's target instead).
CounterGadget build_train_counter(const BigNat& target);

// Ball counter for T >= 1: among balls entering sequentially at X_0, balls
// 1..T all exit to port F and ball T+1 is the first to exit to D. Behaviour
// after the first D-exit is unspecified. Emits exactly floor(log2 T) + 1
// vertices. Throws std::invalid_argument for T = 0.
CounterGadget build_ball_counter(const BigNat& target);

// Appends the fragment to `graph`, resolving port references to the given
// vertices. Returns the entry vertex id in the host graph. Fragment vertex i
// lands at id base+i where base is the host size before the call.
VertexId append_gadget(SwitchGraph& graph, const CounterGadget& gadget, VertexId port_a_target,
                       VertexId port_b_target, const std::string& label_prefix = {});

// Test harness: wraps the gadget with instrumented port sinks and returns the
// exit-port sequence for the given number of entries, e.g. "AAB" or "FFD".
// Train counters loop every exit back to the entry (replayed with the train
// step rule); ball counters drop each ball fresh at the entry.
std::string counter_exit_trace(const CounterGadget& gadget, std::uint64_t entries);

// The harness graphs behind counter_exit_trace, exposed for the CLI's
// generator: train harnesses loop both ports back to the entry, ball
// harnesses make both ports true sinks. Port vertices sit at ids size() and
// size()+1 respectively.
ArrivalInstance train_counter_harness(const CounterGadget& gadget);
DigicompInstance ball_counter_harness(const CounterGadget& gadget);

}  // namespace switchkit

#endif
