#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coxlink/analysis.hpp"
#include "coxlink/chord.hpp"
#include "coxlink/errors.hpp"
#include "coxlink/graph.hpp"
#include "coxlink/matrix.hpp"
#include "coxlink/polynomial.hpp"

namespace coxlink {

/// Text form of a chord system.
///
///     # comment
///     format: chord-diagram 1
///     name: triangle          (optional)
///     points: 6
///     chord: 0 3              (tail head, one line per chord)
///     chord: 1 4
///     chord: 2 5
///     order: 1 2 3            (optional; chord numbers in list order)
///
/// Without an order line, the chord order is the list order.
struct DiagramDocument {
  std::optional<std::string> name;
  int points = 0;
  std::vector<OrientedChord> chords;
  std::optional<std::vector<int>> order;  // 1-based chord numbers, l_1 first
  friend bool operator==(const DiagramDocument&, const DiagramDocument&) = default;
};

/// Text form of a graph: `format: graph 1`, `vertices: n`, `edge: u v` lines
/// with 0-based vertices, optional `name:`.
struct GraphDocument {
  std::optional<std::string> name;
  SimpleGraph graph;
};

namespace detail {

struct Line {
  std::size_t number;
  std::string key;
  std::string value;
  std::size_t value_column;  // 1-based column where the value starts
};

inline std::vector<Line> split_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const auto first = raw.find_first_not_of(" \t");
    if (first == std::string::npos || raw[first] == '#') continue;
    const auto colon = raw.find(':', first);
    if (colon == std::string::npos) throw ParseError(number, first + 1, "expected 'key: value'");
    std::string key = raw.substr(first, colon - first);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    auto vstart = raw.find_first_not_of(" \t", colon + 1);
    if (vstart == std::string::npos) vstart = raw.size();
    std::string value = raw.substr(vstart);
    while (!value.empty() && (value.back() == ' ' || value.back() == '\t')) value.pop_back();
    out.push_back({number, std::move(key), std::move(value), vstart + 1});
  }
  return out;
}

// Whitespace-separated integers with their columns.
inline std::vector<int> integers(const Line& l, std::size_t expected = 0) {
  std::vector<int> out;
  std::size_t i = 0;
  const std::string& v = l.value;
  while (i < v.size()) {
    while (i < v.size() && (v[i] == ' ' || v[i] == '\t')) ++i;
    if (i == v.size()) break;
    const std::size_t start = i;
    while (i < v.size() && v[i] != ' ' && v[i] != '\t') ++i;
    const std::string tok = v.substr(start, i - start);
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || x < -1'000'000 || x > 1'000'000)
      throw ParseError(l.number, l.value_column + start, "expected an integer, found '" + tok + "'");
    out.push_back(static_cast<int>(x));
  }
  if (expected && out.size() != expected)
    throw ParseError(l.number, l.value_column,
                     "expected " + std::to_string(expected) + " integers, found " + std::to_string(out.size()));
  return out;
}

inline void expect_format(const std::vector<Line>& lines, const std::string& kind) {
  if (lines.empty()) throw ParseError(1, 1, "empty document");
  const Line& f = lines.front();
  if (f.key != "format") throw ParseError(f.number, 1, "document must start with 'format: " + kind + " 1'");
  std::istringstream in(f.value);
  std::string k;
  int version = 0;
  in >> k >> version;
  if (k != kind) throw ParseError(f.number, f.value_column, "expected format '" + kind + "', found '" + k + "'");
  if (version != 1) throw ParseError(f.number, f.value_column, "unsupported " + kind + " schema version");
}

}  // namespace detail

inline DiagramDocument parse_diagram(const std::string& text) {
  const auto lines = detail::split_lines(text);
  detail::expect_format(lines, "chord-diagram");
  DiagramDocument doc;
  std::optional<std::size_t> points_line;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& l = lines[k];
    if (l.key == "name") {
      if (doc.name) throw ParseError(l.number, 1, "duplicate 'name'");
      doc.name = l.value;
    } else if (l.key == "points") {
      if (points_line) throw ParseError(l.number, 1, "duplicate 'points'");
      points_line = l.number;
      doc.points = detail::integers(l, 1)[0];
    } else if (l.key == "chord") {
      const auto v = detail::integers(l, 2);
      doc.chords.push_back({v[0], v[1]});
    } else if (l.key == "order") {
      if (doc.order) throw ParseError(l.number, 1, "duplicate 'order'");
      doc.order = detail::integers(l);
    } else {
      throw ParseError(l.number, 1, "unknown key '" + l.key + "'");
    }
  }
  if (!points_line) throw ParseError(lines.back().number, 1, "missing 'points'");
  return doc;
}

/// Validates the document and builds the chord system.
inline ChordSystem to_system(const DiagramDocument& doc) {
  if (doc.chords.empty()) throw ValidationError("document lists no chords");
  if (doc.points != 2 * static_cast<int>(doc.chords.size()))
    throw ValidationError("points must be twice the number of chords (" + std::to_string(doc.points) + " points, " +
                          std::to_string(doc.chords.size()) + " chords)");
  if (!doc.order) return ChordSystem(doc.chords);
  std::vector<int> order;
  for (int k : *doc.order) order.push_back(k - 1);
  if (order.size() != doc.chords.size()) throw ValidationError("order must list every chord number 1..n once");
  for (int k : order)
    if (k < 0 || k >= static_cast<int>(doc.chords.size()))
      throw ValidationError("order must be a permutation of 1.." + std::to_string(doc.chords.size()));
  return ChordSystem(doc.chords, std::move(order));
}

/// Document for a system; the order line is written only when the order is
/// not the list order.
inline DiagramDocument to_document(const ChordSystem& s, std::optional<std::string> name = std::nullopt) {
  DiagramDocument doc;
  doc.name = std::move(name);
  doc.points = s.points();
  doc.chords = s.chords();
  bool identity = true;
  for (int p = 0; p < s.size(); ++p) identity = identity && s.id_at(p) == p;
  if (!identity) {
    std::vector<int> order;
    for (int id : s.order()) order.push_back(id + 1);
    doc.order = std::move(order);
  }
  return doc;
}

inline std::string emit(const DiagramDocument& doc) {
  std::ostringstream os;
  os << "format: chord-diagram 1\n";
  if (doc.name) os << "name: " << *doc.name << '\n';
  os << "points: " << doc.points << '\n';
  for (const auto& c : doc.chords) os << "chord: " << c.tail << ' ' << c.head << '\n';
  if (doc.order) {
    os << "order:";
    for (int k : *doc.order) os << ' ' << k;
    os << '\n';
  }
  return os.str();
}

inline GraphDocument parse_graph(const std::string& text) {
  const auto lines = detail::split_lines(text);
  detail::expect_format(lines, "graph");
  GraphDocument doc;
  std::optional<int> n;
  std::vector<std::pair<detail::Line, std::pair<int, int>>> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& l = lines[k];
    if (l.key == "name") {
      if (doc.name) throw ParseError(l.number, 1, "duplicate 'name'");
      doc.name = l.value;
    } else if (l.key == "vertices") {
      if (n) throw ParseError(l.number, 1, "duplicate 'vertices'");
      n = detail::integers(l, 1)[0];
      if (*n < 1 || *n > SimpleGraph::kMaxVertices)
        throw ParseError(l.number, l.value_column, "vertex count must be between 1 and 64");
    } else if (l.key == "edge") {
      const auto v = detail::integers(l, 2);
      edges.push_back({l, {v[0], v[1]}});
    } else {
      throw ParseError(l.number, 1, "unknown key '" + l.key + "'");
    }
  }
  if (!n) throw ParseError(lines.back().number, 1, "missing 'vertices'");
  doc.graph = SimpleGraph(*n);
  for (const auto& [l, e] : edges) {
    if (e.first < 0 || e.first >= *n || e.second < 0 || e.second >= *n)
      throw ValidationError("line " + std::to_string(l.number) + ": edge endpoint out of range");
    if (e.first == e.second) throw ValidationError("line " + std::to_string(l.number) + ": self-loop");
    if (doc.graph.adjacent(e.first, e.second))
      throw ValidationError("line " + std::to_string(l.number) + ": repeated edge");
    doc.graph.add_edge(e.first, e.second);
  }
  return doc;
}

inline std::string emit(const GraphDocument& doc) {
  std::ostringstream os;
  os << "format: graph 1\n";
  if (doc.name) os << "name: " << *doc.name << '\n';
  os << "vertices: " << doc.graph.size() << '\n';
  for (auto [u, v] : doc.graph.edges()) os << "edge: " << u << ' ' << v << '\n';
  return os.str();
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

/// Six significant digits.
inline std::string format_measure(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6Lg", x);
  return buf;
}

inline std::string format_tolerance(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.0Le", x);
  return buf;
}

namespace detail {

inline std::string matrix_block(const IntMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      cells.push_back(m(i, j).str());
      width = std::max(width, cells.back().size());
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << "   ";
    for (std::size_t j = 0; j < m.size(); ++j) os << ' ' << std::setw(static_cast<int>(width)) << cells[i * m.size() + j];
    os << '\n';
  }
  return os.str();
}

inline nlohmann::json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

inline nlohmann::json matrix_json(const IntMatrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(integer_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json poly_json(const IntPolynomial& p) {
  auto c = nlohmann::json::array();
  for (const auto& x : p.coefficients()) c.push_back(integer_json(x));
  return {{"coefficients", std::move(c)}, {"text", p.to_string()}};
}

inline double rounded(long double x) { return std::stod(format_measure(x)); }

}  // namespace detail

inline std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  const ChordSystem& s = r.system;
  if (!r.name.empty()) os << "name: " << r.name << '\n';
  os << "chords: " << s.size() << '\n';
  os << "order:";
  for (int p = 0; p < s.size(); ++p) {
    const auto& c = s.at(p);
    os << " " << (s.id_at(p) + 1) << "(" << c.tail << "->" << c.head << ")";
  }
  os << '\n';
  os << "coxeter type: " << (r.coxeter_type ? "yes" : "no") << '\n';
  os << "A (incidence adjacency):\n" << detail::matrix_block(r.adjacency);
  os << "B (bilinear form):\n" << detail::matrix_block(r.form);
  os << "M (Seifert matrix):\n" << detail::matrix_block(r.seifert);
  os << "h* (monodromy):\n" << detail::matrix_block(r.monodromy);
  os << "c (Coxeter element of 2I - A):\n" << detail::matrix_block(r.coxeter);
  os << "char poly det(tI - h*): " << r.char_poly << '\n';
  os << "canonical form: " << r.canonical << '\n';
  os << "coxeter poly det(tI - c): " << r.coxeter_poly << '\n';
  os << "classification: " << to_string(r.classification) << '\n';
  os << "definiteness of 2I - A: " << to_string(r.definiteness) << '\n';
  os << "mahler measure: " << format_measure(r.mahler) << " (tol " << format_tolerance(r.root_tol) << ")\n";
  os << "spectral radius of c: " << format_measure(r.spectral_radius) << " (tol " << format_tolerance(r.root_tol)
     << ")\n";
  os << "lehmer gate: " << to_string(r.gate.verdict) << " (tol " << format_tolerance(r.gate_tol) << ")\n";
  os << "h* = -c: "
     << (r.minus_coxeter_check ? (*r.minus_coxeter_check ? "holds" : "FAILS") : "skipped (not of Coxeter type)")
     << '\n';
  return os.str();
}

inline nlohmann::json report_json(const AnalysisReport& r) {
  nlohmann::json j;
  if (!r.name.empty()) j["name"] = r.name;
  j["chords"] = r.system.size();
  auto order = nlohmann::json::array();
  for (int p = 0; p < r.system.size(); ++p) {
    const auto& c = r.system.at(p);
    order.push_back({{"chord", r.system.id_at(p) + 1}, {"tail", c.tail}, {"head", c.head}});
  }
  j["order"] = std::move(order);
  j["coxeter_type"] = r.coxeter_type;
  j["A"] = detail::matrix_json(r.adjacency);
  j["B"] = detail::matrix_json(r.form);
  j["M"] = detail::matrix_json(r.seifert);
  j["monodromy"] = detail::matrix_json(r.monodromy);
  j["coxeter_element"] = detail::matrix_json(r.coxeter);
  j["char_poly"] = detail::poly_json(r.char_poly);
  j["canonical_char_poly"] = detail::poly_json(r.canonical);
  j["coxeter_poly"] = detail::poly_json(r.coxeter_poly);
  j["classification"] = to_string(r.classification);
  j["definiteness"] = to_string(r.definiteness);
  j["mahler_measure"] = detail::rounded(r.mahler);
  j["spectral_radius"] = detail::rounded(r.spectral_radius);
  j["root_tolerance"] = static_cast<double>(r.root_tol);
  j["lehmer_gate"] = to_string(r.gate.verdict);
  j["gate_tolerance"] = static_cast<double>(r.gate_tol);
  j["monodromy_is_minus_coxeter"] = r.minus_coxeter_check ? nlohmann::json(*r.minus_coxeter_check) : nlohmann::json();
  return j;
}

inline std::string render_machine(const AnalysisReport& r) { return report_json(r).dump(2) + "\n"; }

}  // namespace coxlink
