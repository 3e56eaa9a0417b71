#pragma once

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "conceptkit/classic.hpp"
#include "conceptkit/dm.hpp"
#include "conceptkit/enriched.hpp"
#include "conceptkit/equivalence.hpp"
#include "conceptkit/laws.hpp"
#include "conceptkit/summation.hpp"

namespace conceptkit {

using ordered_json = nlohmann::ordered_json;

/// A parsed context file: name, payload and provenance.
struct ContextDocument {
  std::string name;
  std::variant<ClassicContext, EnrichedContext> payload;
  std::string source_path;
  std::string format;  // "cxt" or "csv"

  const ClassicContext& classic() const {
    if (const auto* c = std::get_if<ClassicContext>(&payload)) return *c;
    throw ValidationError("document '" + name + "' does not hold a classic context");
  }
};

namespace iodetail {

inline std::vector<std::string_view> split_lines(std::string_view bytes,
                                                 bool& trailing_newline) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= bytes.size()) {
    std::size_t nl = bytes.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(bytes.substr(start));
      trailing_newline = false;
      break;
    }
    lines.push_back(bytes.substr(start, nl - start));
    start = nl + 1;
    if (start == bytes.size()) {
      trailing_newline = true;
      break;
    }
  }
  return lines;
}

inline std::size_t parse_count(std::string_view line, std::size_t lineno,
                               const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
  if (ec != std::errc{} || ptr != line.data() + line.size())
    throw ParseError(lineno, std::string("malformed ") + what + " count: '" +
                                 std::string(line) + "'");
  return value;
}

}  // namespace iodetail

/// Parse the Burmeister .cxt interchange format. Grammar: a "B" line, a name
/// line, object and attribute counts, one blank line, object names, attribute
/// names, then incidence rows of '.'/'X'. LF line endings only.
inline ContextDocument parse_cxt(std::string_view bytes, const std::string& path = "") {
  if (auto cr = bytes.find('\r'); cr != std::string_view::npos) {
    std::size_t line = 1 + static_cast<std::size_t>(
                               std::count(bytes.begin(), bytes.begin() + cr, '\n'));
    throw ParseError(line, "CR line ending; the format requires LF");
  }
  bool trailing_newline = false;
  auto lines = iodetail::split_lines(bytes, trailing_newline);
  auto need = [&](std::size_t idx, const char* what) -> std::string_view {
    if (idx >= lines.size())
      throw ParseError(idx + 1, std::string("unexpected end of file, expected ") + what);
    return lines[idx];
  };

  if (need(0, "header 'B'") != "B") throw ParseError(1, "malformed header, expected 'B'");
  std::string name(need(1, "context name"));
  std::size_t objects = iodetail::parse_count(need(2, "object count"), 3, "object");
  std::size_t attributes = iodetail::parse_count(need(3, "attribute count"), 4, "attribute");
  if (!need(4, "blank separator line").empty())
    throw ParseError(5, "expected blank line after the counts");

  std::size_t at = 5;
  std::vector<std::string> object_names, attribute_names;
  for (std::size_t i = 0; i < objects; ++i)
    object_names.emplace_back(need(at + i, "object name"));
  at += objects;
  for (std::size_t i = 0; i < attributes; ++i)
    attribute_names.emplace_back(need(at + i, "attribute name"));
  at += attributes;

  Carrier entities, attrs;
  try {
    entities = Carrier(name.empty() ? "objects" : name + ".objects",
                       std::move(object_names));
    attrs = Carrier(name.empty() ? "attributes" : name + ".attributes",
                    std::move(attribute_names));
  } catch (const DuplicateElementError& e) {
    throw ParseError(at, e.what());
  }

  std::vector<Bitset> rows(objects, Bitset(attributes));
  for (std::size_t i = 0; i < objects; ++i) {
    std::string_view row = need(at + i, "incidence row");
    if (row.size() != attributes)
      throw ParseError(at + i + 1, "incidence row has length " +
                                       std::to_string(row.size()) + ", expected " +
                                       std::to_string(attributes));
    for (std::size_t j = 0; j < attributes; ++j) {
      char ch = row[j];
      if (ch == 'X' || ch == 'x')
        rows[i].set(j);
      else if (ch != '.')
        throw ParseError(at + i + 1,
                         std::string("illegal incidence character '") + ch + "'");
    }
  }
  at += objects;
  for (std::size_t i = at; i < lines.size(); ++i)
    if (!lines[i].empty())
      throw ParseError(i + 1, "trailing content after the incidence rows");

  return ContextDocument{std::move(name),
                         ClassicContext(entities, attrs, Relation(entities, attrs, rows)),
                         path, "cxt"};
}

/// Canonical .cxt bytes: LF endings and a trailing newline, 'X'/'.' cells.
inline std::string write_cxt(const ClassicContext& ctx, const std::string& name) {
  std::string out = "B\n" + name + "\n";
  out += std::to_string(ctx.entities.size()) + "\n";
  out += std::to_string(ctx.attributes.size()) + "\n\n";
  for (const auto& e : ctx.entities.elements()) out += e + "\n";
  for (const auto& a : ctx.attributes.elements()) out += a + "\n";
  for (std::size_t i = 0; i < ctx.entities.size(); ++i) {
    for (std::size_t j = 0; j < ctx.attributes.size(); ++j)
      out += ctx.incidence.contains(i, j) ? 'X' : '.';
    out += '\n';
  }
  return out;
}

/// CSV cross-table: header row lists the attributes, each following row is an
/// entity name followed by 'X' (has) or blank cells.
inline ContextDocument parse_csv_context(std::string_view bytes,
                                         const std::string& path = "") {
  bool trailing_newline = false;
  auto lines = iodetail::split_lines(bytes, trailing_newline);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, "empty cross-table");

  auto split_cells = [](std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      std::size_t comma = line.find(',', start);
      std::string cell(line.substr(start, comma == std::string_view::npos
                                              ? std::string_view::npos
                                              : comma - start));
      while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t'))
        cell.erase(cell.begin());
      while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t' ||
                               cell.back() == '\r'))
        cell.pop_back();
      cells.push_back(std::move(cell));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return cells;
  };

  auto header = split_cells(lines[0]);
  if (header.size() < 2) throw ParseError(1, "cross-table header needs attribute columns");
  std::vector<std::string> attribute_names(header.begin() + 1, header.end());

  std::vector<std::string> entity_names;
  std::vector<Bitset> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto cells = split_cells(lines[i]);
    if (cells.size() != header.size())
      throw ParseError(i + 1, "row has " + std::to_string(cells.size()) +
                                  " cells, expected " + std::to_string(header.size()));
    entity_names.push_back(cells[0]);
    Bitset row(attribute_names.size());
    for (std::size_t j = 1; j < cells.size(); ++j) {
      if (cells[j] == "X" || cells[j] == "x")
        row.set(j - 1);
      else if (!cells[j].empty())
        throw ParseError(i + 1, "illegal cell '" + cells[j] + "', expected X or blank");
    }
    rows.push_back(std::move(row));
  }

  Carrier entities, attrs;
  try {
    entities = Carrier("objects", std::move(entity_names));
    attrs = Carrier("attributes", std::move(attribute_names));
  } catch (const DuplicateElementError& e) {
    throw ParseError(lines.size(), e.what());
  }
  return ContextDocument{
      header[0].empty() ? "cross-table" : header[0],
      ClassicContext(entities, attrs, Relation(entities, attrs, std::move(rows))), path,
      "csv"};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Load a context file, dispatching on the extension (.cxt or .csv).
inline ContextDocument load_context(const std::string& path) {
  auto bytes = read_file(path);
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
    return parse_csv_context(bytes, path);
  return parse_cxt(bytes, path);
}

// --- rendering ---------------------------------------------------------------

/// Cross-table text rendering with element names on both axes.
inline std::string render_matrix(const Relation& r) {
  std::size_t head = 0;
  for (const auto& e : r.source().elements()) head = std::max(head, e.size());
  std::vector<std::size_t> widths(r.target().size());
  for (std::size_t j = 0; j < r.target().size(); ++j)
    widths[j] = r.target().element(j).size();

  std::string out(head, ' ');
  for (std::size_t j = 0; j < r.target().size(); ++j) {
    out += ' ';
    out += r.target().element(j);
  }
  out += '\n';
  for (std::size_t i = 0; i < r.source().size(); ++i) {
    std::string row = r.source().element(i);
    row.resize(head, ' ');
    for (std::size_t j = 0; j < r.target().size(); ++j) {
      row += ' ';
      std::string cell(widths[j], ' ');
      cell[(widths[j] - 1) / 2] = r.contains(i, j) ? 'X' : '.';
      row += cell;
    }
    out += row + '\n';
  }
  return out;
}

inline std::string render_set(const Bitset& s, const Carrier& c) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    if (!first) out += ",";
    out += c.element(i);
    first = false;
  });
  return out + "}";
}

// --- Hasse covers and DOT ------------------------------------------------------

/// Transitive reduction of the (antisymmetric) concept order: (i,j) is a
/// cover iff i < j with nothing strictly between.
template <class Lattice>
inline std::vector<std::pair<std::size_t, std::size_t>> hasse_covers(const Lattice& l) {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (i == j || !l.leq(i, j)) continue;
      bool direct = true;
      for (std::size_t k = 0; k < l.size() && direct; ++k)
        if (k != i && k != j && l.leq(i, k) && l.leq(k, j)) direct = false;
      if (direct) covers.emplace_back(i, j);
    }
  return covers;
}

/// DOT rendering with reduced labeling: each entity appears at its generator
/// concept and each attribute at its own; edges are the Hasse covers, drawn
/// upward, with the top concept emitted first.
inline std::string emit_dot(const ConceptLattice& lattice) {
  ConceptLabels labels = concept_labels(lattice);
  auto covers = hasse_covers(lattice);
  std::string out = "digraph concept_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    std::string attr_part, ent_part;
    for (const auto& a : labels.attribute_labels[i])
      attr_part += (attr_part.empty() ? "" : ",") + a;
    for (const auto& e : labels.entity_labels[i])
      ent_part += (ent_part.empty() ? "" : ",") + e;
    out += "  c" + std::to_string(i) + " [label=\"" + attr_part + "\\n" + ent_part +
           "\"];\n";
  }
  for (const auto& [lo, hi] : covers)
    out += "  c" + std::to_string(lo) + " -> c" + std::to_string(hi) + ";\n";
  return out + "}\n";
}

// --- JSON --------------------------------------------------------------------

inline ordered_json names_json(const Bitset& s, const Carrier& c) {
  ordered_json arr = ordered_json::array();
  s.for_each([&](std::size_t i) { arr.push_back(c.element(i)); });
  return arr;
}

inline ordered_json relation_json(const Relation& r) {
  ordered_json j;
  j["source"] = r.source().name();
  j["target"] = r.target().name();
  j["source_elements"] = r.source().elements();
  j["target_elements"] = r.target().elements();
  ordered_json pairs = ordered_json::array();
  for (const auto& [a, b] : r.pairs()) pairs.push_back(ordered_json::array({a, b}));
  j["pairs"] = pairs;
  return j;
}

inline ordered_json concepts_json(const ConceptLattice& lattice) {
  const auto& ctx = lattice.context();
  ConceptLabels labels = concept_labels(lattice);
  ordered_json j;
  ordered_json concepts = ordered_json::array();
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    ordered_json c;
    c["extent"] = names_json(lattice.at(i).extent, ctx.entities);
    c["intent"] = names_json(lattice.at(i).intent, ctx.attributes);
    c["entity_labels"] = labels.entity_labels[i];
    c["attribute_labels"] = labels.attribute_labels[i];
    concepts.push_back(std::move(c));
  }
  j["concepts"] = std::move(concepts);
  ordered_json covers = ordered_json::array();
  for (const auto& [lo, hi] : hasse_covers(lattice))
    covers.push_back(ordered_json::array({lo, hi}));
  j["covers"] = std::move(covers);
  return j;
}

inline ordered_json context_json(const EnrichedContext& ctx) {
  ordered_json j;
  j["source_order"] = relation_json(ctx.source_order().relation());
  j["forward"] = relation_json(ctx.forward());
  j["backward"] = relation_json(ctx.backward());
  j["target_order"] = relation_json(ctx.target_order().relation());
  return j;
}

inline ordered_json sum_json(const SumOrder& s) {
  ordered_json j;
  j["elements"] = s.order().carrier().elements();
  ordered_json tags = ordered_json::array();
  for (auto t : s.tags()) tags.push_back(static_cast<int>(t));
  j["tags"] = std::move(tags);
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < s.order().size(); ++i) {
    std::string row;
    for (std::size_t k = 0; k < s.order().size(); ++k)
      row += s.order().leq(i, k) ? 'X' : '.';
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

inline ordered_json quad_json(const QuadLattice& dm) {
  const auto& ctx = dm.context();
  ordered_json j;
  ordered_json concepts = ordered_json::array();
  for (const auto& q : dm.concepts()) {
    ordered_json c;
    c["phi0"] = names_json(q.phi0, ctx.source_order().carrier());
    c["phi1"] = names_json(q.phi1, ctx.target_order().carrier());
    c["psi0"] = names_json(q.psi0, ctx.source_order().carrier());
    c["psi1"] = names_json(q.psi1, ctx.target_order().carrier());
    concepts.push_back(std::move(c));
  }
  j["concepts"] = std::move(concepts);
  ordered_json covers = ordered_json::array();
  for (const auto& [lo, hi] : hasse_covers(dm))
    covers.push_back(ordered_json::array({lo, hi}));
  j["covers"] = std::move(covers);
  return j;
}

inline ordered_json equivalence_json(const EquivalenceResult& r) {
  ordered_json j;
  j["isomorphic"] = r.ok();
  j["concepts"] = r.lattice.size();
  if (r.ok()) {
    ordered_json mapping = ordered_json::array();
    for (std::size_t i = 0; i < r.witness->forward.size(); ++i)
      mapping.push_back(ordered_json::array({i, r.witness->forward[i]}));
    j["mapping"] = std::move(mapping);
  } else {
    j["counterexamples"] = r.counterexamples;
  }
  return j;
}

inline ordered_json laws_json(const LawReport& report, std::uint64_t seed) {
  ordered_json j;
  j["seed"] = seed;
  ordered_json laws = ordered_json::array();
  for (const auto& l : report.laws) {
    ordered_json e;
    e["name"] = l.name;
    e["passed"] = l.passed;
    e["failed"] = l.failed;
    if (l.failed) e["counterexample"] = l.counterexample;
    laws.push_back(std::move(e));
  }
  j["laws"] = std::move(laws);
  j["all_pass"] = report.all_pass();
  return j;
}

}  // namespace conceptkit
