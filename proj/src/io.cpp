#include "switchkit/io.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

namespace switchkit {

const char* kind_name(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::arrival: return "arrival";
    case InstanceKind::digicomp: return "digicomp";
    case InstanceKind::dag: return "dag";
  }
  return "?";
}

namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;  // 1-based
};

// One logical line: directive token plus arguments, comments stripped.
// Labels are whitespace-normalized (tokens joined by single spaces).
struct Line {
  std::vector<Token> tokens;
  std::size_t number;
};

std::vector<Line> scan_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);

    Line line;
    line.number = line_no;
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      if (i >= raw.size()) break;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      line.tokens.push_back(Token{std::string(raw.substr(start, i - start)), line_no, start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

[[noreturn]] void fail(const std::string& what, const Token& at) {
  throw ParseError(what, at.line, at.column);
}

[[noreturn]] void fail_line(const std::string& what, const Line& line) {
  throw ParseError(what, line.number, line.tokens.front().column);
}

std::uint64_t parse_u64(const Token& tok, const char* what) {
  if (tok.text.empty()) fail(std::string("expected ") + what, tok);
  std::uint64_t value = 0;
  for (char c : tok.text) {
    if (c < '0' || c > '9')
      fail(std::string("expected ") + what + ", got '" + tok.text + "'", tok);
    if (value > (std::numeric_limits<std::uint64_t>::max() - (c - '0')) / 10)
      fail(std::string(what) + " out of range: '" + tok.text + "'", tok);
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return value;
}

VertexId parse_vertex(const Token& tok, std::uint64_t n, const char* what) {
  const std::uint64_t value = parse_u64(tok, what);
  if (value >= n)
    fail(std::string("dangling vertex reference: ") + what + " " + tok.text +
             " not in [0, " + std::to_string(n) + ")",
         tok);
  return static_cast<VertexId>(value);
}

BigNat parse_nat(const Token& tok, const char* what) {
  for (char c : tok.text)
    if (c < '0' || c > '9')
      fail(std::string("expected decimal ") + what + ", got '" + tok.text + "'", tok);
  return BigNat(tok.text);
}

void expect_argc(const Line& line, std::size_t argc, const char* form) {
  if (line.tokens.size() != argc + 1)
    fail_line(std::string("expected '") + form + "'", line);
}

ParsedInstance parse_impl(std::string_view text) {
  const std::vector<Line> lines = scan_lines(text);
  if (lines.empty())
    throw ParseError("empty input, expected 'switchgraph v1 <kind>' header", 1, 1);

  // Header.
  const Line& header = lines.front();
  if (header.tokens[0].text != "switchgraph")
    fail("expected 'switchgraph v1 <kind>' header", header.tokens[0]);
  expect_argc(header, 2, "switchgraph v1 <kind>");
  if (header.tokens[1].text != "v1")
    fail("unsupported format version '" + header.tokens[1].text + "'", header.tokens[1]);
  InstanceKind kind;
  const std::string& kind_text = header.tokens[2].text;
  if (kind_text == "arrival")
    kind = InstanceKind::arrival;
  else if (kind_text == "digicomp")
    kind = InstanceKind::digicomp;
  else if (kind_text == "dag")
    kind = InstanceKind::dag;
  else
    fail("unknown instance kind '" + kind_text + "'", header.tokens[2]);

  bool have_n = false;
  std::uint64_t n = 0;
  std::vector<const Line*> vertex_lines;
  std::optional<Token> origin_tok, dest_tok, balls_tok, k_tok;

  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const std::string& directive = line.tokens[0].text;
    if (directive == "n") {
      if (have_n) fail_line("duplicate 'n' line", line);
      expect_argc(line, 1, "n <count>");
      n = parse_u64(line.tokens[1], "vertex count");
      if (n == 0) fail("vertex count must be at least 1", line.tokens[1]);
      if (n > std::numeric_limits<VertexId>::max())
        fail("vertex count out of range", line.tokens[1]);
      have_n = true;
    } else if (directive == "v") {
      if (!have_n) fail_line("'v' line before 'n' line", line);
      vertex_lines.push_back(&line);
    } else if (directive == "s") {
      if (origin_tok) fail_line("duplicate 's' line", line);
      expect_argc(line, 1, "s <id>");
      origin_tok = line.tokens[1];
    } else if (directive == "t") {
      if (dest_tok) fail_line("duplicate 't' line", line);
      expect_argc(line, 1, "t <id>");
      dest_tok = line.tokens[1];
    } else if (directive == "balls") {
      if (kind != InstanceKind::digicomp)
        fail_line("'balls' field is only valid for digicomp instances", line);
      if (balls_tok) fail_line("duplicate 'balls' line", line);
      expect_argc(line, 1, "balls <decimal>");
      balls_tok = line.tokens[1];
    } else if (directive == "k") {
      if (kind != InstanceKind::dag)
        fail_line("'k' field is only valid for dag instances", line);
      if (k_tok) fail_line("duplicate 'k' line", line);
      expect_argc(line, 1, "k <decimal>");
      k_tok = line.tokens[1];
    } else {
      fail("unknown directive '" + directive + "'", line.tokens[0]);
    }
  }

  const Token& header_tok = header.tokens[0];
  if (!have_n) throw ParseError("missing 'n' line", header_tok.line, header_tok.column);
  if (!origin_tok) throw ParseError("missing 's' line", header_tok.line, header_tok.column);
  if (!dest_tok) throw ParseError("missing 't' line", header_tok.line, header_tok.column);
  if (kind == InstanceKind::digicomp && !balls_tok)
    throw ParseError("missing 'balls' line", header_tok.line, header_tok.column);
  if (kind == InstanceKind::dag && !k_tok)
    throw ParseError("missing 'k' line", header_tok.line, header_tok.column);
  if (vertex_lines.size() != n)
    throw ParseError("expected " + std::to_string(n) + " vertex lines, found " +
                         std::to_string(vertex_lines.size()),
                     header_tok.line, header_tok.column);

  std::vector<bool> seen(n, false);
  const auto check_duplicate = [&](VertexId id, const Token& tok) {
    if (seen[id]) fail("duplicate vertex id " + tok.text, tok);
    seen[id] = true;
  };

  if (kind == InstanceKind::dag) {
    DagInstance dag;
    dag.successors.resize(n);
    for (const Line* line : vertex_lines) {
      if (line->tokens.size() < 3)
        fail_line("expected 'v <id> <succ-count> <succ>...'", *line);
      const VertexId id = parse_vertex(line->tokens[1], n, "vertex id");
      check_duplicate(id, line->tokens[1]);
      const std::uint64_t deg = parse_u64(line->tokens[2], "successor count");
      if (line->tokens.size() != 3 + deg)
        fail_line("successor count does not match successor list length", *line);
      dag.successors[id].reserve(deg);
      for (std::uint64_t j = 0; j < deg; ++j) {
        const VertexId w = parse_vertex(line->tokens[3 + j], n, "successor");
        if (w == id) fail("self-loop at vertex " + line->tokens[1].text, line->tokens[3 + j]);
        dag.successors[id].push_back(w);
      }
    }
    dag.source = parse_vertex(*origin_tok, n, "source");
    dag.sink = parse_vertex(*dest_tok, n, "sink");
    dag.threshold = parse_nat(*k_tok, "threshold");
    validate_instance(dag);
    return dag;
  }

  SwitchGraph graph;
  graph.s0.resize(n);
  graph.s1.resize(n);
  bool any_label = false;
  std::vector<std::string> labels(n);
  for (const Line* line : vertex_lines) {
    if (line->tokens.size() < 4)
      fail_line("expected 'v <id> <s0-target> <s1-target> [label]'", *line);
    const VertexId id = parse_vertex(line->tokens[1], n, "vertex id");
    check_duplicate(id, line->tokens[1]);
    graph.s0[id] = parse_vertex(line->tokens[2], n, "s0 target");
    graph.s1[id] = parse_vertex(line->tokens[3], n, "s1 target");
    if (line->tokens.size() > 4) {
      std::string label;
      for (std::size_t j = 4; j < line->tokens.size(); ++j) {
        if (!label.empty()) label += ' ';
        label += line->tokens[j].text;
      }
      labels[id] = std::move(label);
      any_label = true;
    }
  }
  if (any_label) graph.labels = std::move(labels);

  const VertexId origin = parse_vertex(*origin_tok, n, "origin");
  const VertexId destination = parse_vertex(*dest_tok, n, "destination");

  if (kind == InstanceKind::arrival) {
    ArrivalInstance instance{std::move(graph), origin, destination};
    validate_instance(instance);
    return instance;
  }
  DigicompInstance instance{std::move(graph), origin, destination, parse_nat(*balls_tok, "balls")};
  validate_instance(instance);
  return instance;
}

InstanceKind kind_of(const ParsedInstance& parsed) {
  if (std::holds_alternative<ArrivalInstance>(parsed)) return InstanceKind::arrival;
  if (std::holds_alternative<DigicompInstance>(parsed)) return InstanceKind::digicomp;
  return InstanceKind::dag;
}

void write_graph(std::ostringstream& out, const SwitchGraph& graph) {
  out << "n " << graph.size() << "\n";
  for (std::size_t v = 0; v < graph.size(); ++v) {
    out << "v " << v << " " << graph.s0[v] << " " << graph.s1[v];
    const std::string label = graph.label(static_cast<VertexId>(v));
    if (!label.empty()) out << " " << label;
    out << "\n";
  }
}

}  // namespace

ParsedInstance parse_instance(std::string_view text) { return parse_impl(text); }

ParsedInstance parse_instance(std::string_view text, InstanceKind expected) {
  ParsedInstance parsed = parse_impl(text);
  if (kind_of(parsed) != expected)
    throw ParseError(std::string("expected a ") + kind_name(expected) + " instance, found " +
                         kind_name(kind_of(parsed)),
                     1, 1);
  return parsed;
}

ArrivalInstance parse_arrival(std::string_view text) {
  return std::get<ArrivalInstance>(parse_instance(text, InstanceKind::arrival));
}

DigicompInstance parse_digicomp(std::string_view text) {
  return std::get<DigicompInstance>(parse_instance(text, InstanceKind::digicomp));
}

DagInstance parse_dag(std::string_view text) {
  return std::get<DagInstance>(parse_instance(text, InstanceKind::dag));
}

std::string serialize(const ArrivalInstance& instance) {
  std::ostringstream out;
  out << "switchgraph v1 arrival\n";
  write_graph(out, instance.graph);
  out << "s " << instance.origin << "\n";
  out << "t " << instance.destination << "\n";
  return out.str();
}

std::string serialize(const DigicompInstance& instance) {
  std::ostringstream out;
  out << "switchgraph v1 digicomp\n";
  write_graph(out, instance.graph);
  out << "s " << instance.origin << "\n";
  out << "t " << instance.destination << "\n";
  out << "balls " << instance.balls << "\n";
  return out.str();
}

std::string serialize(const DagInstance& dag) {
  std::ostringstream out;
  out << "switchgraph v1 dag\n";
  out << "n " << dag.size() << "\n";
  for (std::size_t v = 0; v < dag.size(); ++v) {
    out << "v " << v << " " << dag.successors[v].size();
    for (VertexId w : dag.successors[v]) out << " " << w;
    out << "\n";
  }
  out << "s " << dag.source << "\n";
  out << "t " << dag.sink << "\n";
  out << "k " << dag.threshold << "\n";
  return out.str();
}

std::string serialize(const ParsedInstance& instance) {
  return std::visit([](const auto& x) { return serialize(x); }, instance);
}

namespace {

std::string dot_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const SwitchGraph& graph, const DotMarks& marks, const DotMarks& colors) {
  std::ostringstream out;
  out << "digraph switchgraph {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  for (std::size_t v = 0; v < graph.size(); ++v) {
    std::string label = std::to_string(v);
    if (const std::string name = graph.label(static_cast<VertexId>(v)); !name.empty())
      label += ":" + name;
    if (const auto it = marks.find(static_cast<VertexId>(v)); it != marks.end())
      label += " (" + it->second + ")";
    out << "  v" << v << " [label=\"" << dot_escape(label) << "\"";
    if (const auto it = colors.find(static_cast<VertexId>(v)); it != colors.end())
      out << ",style=filled,fillcolor=" << it->second;
    out << "];\n";
  }
  for (std::size_t v = 0; v < graph.size(); ++v) {
    out << "  v" << v << " -> v" << graph.s0[v] << " [style=solid];\n";
    out << "  v" << v << " -> v" << graph.s1[v] << " [style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace switchkit
