#ifndef SWITCHKIT_IO_HPP
#define SWITCHKIT_IO_HPP

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "switchkit/model.hpp"

namespace switchkit {

enum class InstanceKind { arrival, digicomp, dag };

const char* kind_name(InstanceKind kind);

using ParsedInstance = std::variant<ArrivalInstance, DigicompInstance, DagInstance>;

// Line-oriented UTF-8 text, '#' starts a comment. Grammar:
//   switchgraph v1 <kind>        kind in {arrival, digicomp, dag}
//   n <count>
//   v <id> <s0> <s1> [label]     (dag kind: v <id> <succ-count> <succ>...)
//   s <id>
//   t <id>
//   balls <decimal>              (digicomp only)
//   k <decimal>                  (dag only)
// Throws ParseError with line/column on any malformed input; the returned
// instance is fully validated.
ParsedInstance parse_instance(std::string_view text);
ParsedInstance parse_instance(std::string_view text, InstanceKind expected);

ArrivalInstance parse_arrival(std::string_view text);
DigicompInstance parse_digicomp(std::string_view text);
DagInstance parse_dag(std::string_view text);

// Canonical form: fixed field order, one vertex per line, ascending id, no
// comments. parse(serialize(x)) reproduces x exactly, and serialize(parse(t))
// reproduces canonical text t byte for byte.
std::string serialize(const ArrivalInstance& instance);
std::string serialize(const DigicompInstance& instance);
std::string serialize(const DagInstance& instance);
std::string serialize(const ParsedInstance& instance);

// Graphviz export: one node per vertex, one solid edge per s0 entry and one
// dashed edge per s1 entry (2n edges total, self-loops included). Marks are
// extra port/role annotations appended to node labels; colors fill the
// matching nodes (role coloring for reduction outputs).
using DotMarks = std::map<VertexId, std::string>;
std::string export_dot(const SwitchGraph& graph, const DotMarks& marks = {},
                       const DotMarks& colors = {});

}  // namespace switchkit

#endif
