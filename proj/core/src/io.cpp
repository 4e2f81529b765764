// Copyright 2026 The efgc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "efgc/io.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "efgc/errors.hpp"

namespace efgc {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string w; in >> w;) line.words.push_back(std::move(w));
    if (!line.words.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

Rational rational_at(const std::string& word, std::size_t line) {
  try {
    return parse_rational(word);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

void expect_header(const std::vector<Line>& lines, const std::string& magic) {
  if (lines.empty() || lines[0].words.size() != 2 || lines[0].words[0] != magic || lines[0].words[1] != "v1") {
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected header '" + magic + " v1'");
  }
}

std::pair<std::string, std::string> split_assignment(const std::string& word, std::size_t line) {
  const auto eq = word.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == word.size()) {
    throw ParseError(line, "expected NAME=VALUE, got '" + word + "'");
  }
  return {word.substr(0, eq), word.substr(eq + 1)};
}

bool closure_at(const std::string& word, std::size_t line) {
  if (word == "closed") return true;
  if (word == "open") return false;
  throw ParseError(line, "expected 'closed' or 'open', got '" + word + "'");
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const auto lines = tokenize(text);
  expect_header(lines, "efgc-instance");
  std::optional<Variant> variant;
  std::optional<std::vector<std::string>> vertices;
  std::vector<EdgeSpec> edges;
  std::set<std::string> edge_ids;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> agent_lines;
  std::set<std::string> agent_names;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, w] = lines[i];
    const std::string& kind = w[0];
    if (kind == "variant") {
      if (w.size() != 2) throw ParseError(number, "expected 'variant gc|vdgc'");
      if (variant) throw ParseError(number, "variant given twice");
      if (w[1] == "gc") {
        variant = Variant::GC;
      } else if (w[1] == "vdgc") {
        variant = Variant::VDGC;
      } else {
        throw ParseError(number, "unknown variant '" + w[1] + "'");
      }
    } else if (kind == "vertices") {
      if (vertices) throw ParseError(number, "vertices given twice");
      vertices.emplace(w.begin() + 1, w.end());
    } else if (kind == "edge") {
      if (w.size() != 4) throw ParseError(number, "expected 'edge ID TAIL HEAD'");
      if (!edge_ids.insert(w[1]).second) throw ParseError(number, "duplicate edge id '" + w[1] + "'");
      edges.push_back({w[1], w[2], w[3]});
    } else if (kind == "agent") {
      if (w.size() < 2) throw ParseError(number, "expected 'agent NAME EDGE=VALUE...'");
      if (!agent_names.insert(w[1]).second) throw ParseError(number, "duplicate agent '" + w[1] + "'");
      agent_lines.emplace_back(number, w);
    } else {
      throw ParseError(number, "unknown directive '" + kind + "'");
    }
  }
  const std::size_t last = lines.empty() ? 1 : lines.back().number;
  if (!variant) throw ParseError(last, "missing 'variant' line");
  if (!vertices) throw ParseError(last, "missing 'vertices' line");

  Instance inst;
  inst.graph = Graph(*vertices, edges);
  inst.variant = *variant;
  for (const auto& [number, w] : agent_lines) {
    inst.agents.push_back(w[1]);
    std::vector<Rational> row(inst.graph.edge_count(), Rational(0));
    std::set<EdgeIndex> given;
    for (std::size_t j = 2; j < w.size(); ++j) {
      const auto [edge, value] = split_assignment(w[j], number);
      const auto e = inst.graph.find_edge(edge);
      if (!e) throw ParseError(number, "unknown edge '" + edge + "'");
      if (!given.insert(*e).second) throw ParseError(number, "utility for edge '" + edge + "' given twice");
      row[*e] = rational_at(value, number);
    }
    inst.utilities.push_back(std::move(row));
  }
  check_instance(inst);
  return normalize(std::move(inst));
}

std::string emit_instance(const Instance& instance) {
  std::ostringstream out;
  out << "efgc-instance v1\n";
  out << "variant " << variant_name(instance.variant) << "\n";
  out << "vertices";
  for (const auto& v : instance.graph.vertices()) out << ' ' << v;
  out << "\n";
  for (const auto& e : instance.graph.edges()) {
    out << "edge " << e.id << ' ' << instance.graph.vertex_name(e.tail) << ' '
        << instance.graph.vertex_name(e.head) << "\n";
  }
  for (AgentIndex a = 0; a < instance.agent_count(); ++a) {
    out << "agent " << instance.agents[a];
    for (EdgeIndex e = 0; e < instance.edge_count(); ++e) {
      out << ' ' << instance.graph.edge(e).id << '=' << to_string(instance.utility(a, e));
    }
    out << "\n";
  }
  return out.str();
}

std::string emit_assignment(const Assignment& assignment, const Instance& instance) {
  std::ostringstream out;
  out << "efgc-assignment v1\n";
  for (AgentIndex a = 0; a < assignment.pieces.size(); ++a) {
    for (const auto& p : assignment.pieces[a].parts) {
      out << "piece " << instance.agents.at(a) << ' ' << instance.graph.edge(p.edge).id << ' '
          << to_string(p.lo) << ' ' << to_string(p.hi) << ' ' << (p.lo_closed ? "closed" : "open") << ' '
          << (p.hi_closed ? "closed" : "open") << "\n";
    }
  }
  return out.str();
}

Assignment parse_assignment(std::string_view text, const Instance& instance) {
  const auto lines = tokenize(text);
  expect_header(lines, "efgc-assignment");
  Assignment assignment;
  assignment.pieces.resize(instance.agent_count());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, w] = lines[i];
    if (w[0] != "piece" || w.size() != 7) {
      throw ParseError(number, "expected 'piece AGENT EDGE LO HI closed|open closed|open'");
    }
    const auto a = instance.find_agent(w[1]);
    if (!a) throw ParseError(number, "unknown agent '" + w[1] + "'");
    const auto e = instance.graph.find_edge(w[2]);
    if (!e) throw ParseError(number, "unknown edge '" + w[2] + "'");
    EdgePiece p;
    p.edge = *e;
    p.lo = rational_at(w[3], number);
    p.hi = rational_at(w[4], number);
    p.lo_closed = closure_at(w[5], number);
    p.hi_closed = closure_at(w[6], number);
    assignment.pieces[*a].parts.push_back(std::move(p));
  }
  return assignment;
}

LinearFile parse_linear(std::string_view text) {
  const auto lines = tokenize(text);
  expect_header(lines, "efgc-linear");
  LinearFile file;
  std::map<std::string, VariableId> ids;
  bool have_vars = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [number, w] = lines[i];
    const std::string& kind = w[0];
    if (kind == "vars") {
      if (have_vars) throw ParseError(number, "vars given twice");
      have_vars = true;
      for (std::size_t j = 1; j < w.size(); ++j) {
        if (ids.count(w[j])) throw ParseError(number, "duplicate variable '" + w[j] + "'");
        ids[w[j]] = file.system.add_variable(w[j]);
        file.variables.push_back(w[j]);
      }
      continue;
    }
    if (kind != "form" && kind != "eq" && kind != "ge" && kind != "gt") {
      throw ParseError(number, "unknown directive '" + kind + "'");
    }
    if (!have_vars) throw ParseError(number, "'vars' must come first");
    if (w.size() < 2) throw ParseError(number, "missing constant");
    LinearForm form(rational_at(w[1], number));
    for (std::size_t j = 2; j < w.size(); ++j) {
      const auto [name, value] = split_assignment(w[j], number);
      const auto it = ids.find(name);
      if (it == ids.end()) throw ParseError(number, "unknown variable '" + name + "'");
      form.add_term(it->second, rational_at(value, number));
    }
    if (kind == "form") {
      file.forms.push_back(std::move(form));
    } else {
      file.system.add(std::move(form), kind == "eq" ? Relation::Eq : kind == "ge" ? Relation::Ge : Relation::Gt);
    }
  }
  if (!have_vars) throw ParseError(lines.empty() ? 1 : lines.back().number, "missing 'vars' line");
  return file;
}

}  // namespace efgc
