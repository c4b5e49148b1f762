// coxlink: command-line front end.
//
//   coxlink analyze FILE        matrices, polynomials and verdicts for a chord system
//   coxlink realize [GRAPH]     chord diagram whose incidence graph is GRAPH
//   coxlink orderings FILE      Coxeter-type orderings up to sink/source moves
//   coxlink lehmer-scan N       Lehmer gate over all diagrams with up to N chords
//   coxlink render FILE         SVG drawing
//
// Exit status: 0 ok, 1 usage or parse error, 2 invalid input, 3 not
// realizable, 4 inconclusive (budget), 5 internal theorem violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coxlink/coxlink.hpp"

namespace {

using namespace coxlink;
using nlohmann::json;

enum Exit { kOk = 0, kUsage = 1, kInvalid = 2, kNotRealizable = 3, kInconclusive = 4, kViolation = 5 };

struct Common {
  double tol = static_cast<double>(kRootTolerance);
  double gate_tol = static_cast<double>(kGateTolerance);
  std::string format = "text";
  std::string svg;
};

bool machine(const Common& c) { return c.format == "machine"; }

void maybe_svg(const Common& c, const ChordSystem& s, const std::string& title) {
  if (c.svg.empty()) return;
  SvgOptions o;
  o.title = title;
  write_file(c.svg, render_svg(s, o));
}

std::string load_name(const DiagramDocument& doc, const std::string& path) { return doc.name.value_or(path); }

std::string order_text(const ChordSystem& s) {
  std::ostringstream os;
  for (int p = 0; p < s.size(); ++p) {
    const auto& c = s.at(p);
    os << (p ? " " : "") << s.id_at(p) + 1 << "(" << c.tail << "->" << c.head << ")";
  }
  return os.str();
}

json system_json(const ChordSystem& s) {
  json chords = json::array();
  for (const auto& c : s.chords()) chords.push_back({c.tail, c.head});
  json order = json::array();
  for (int id : s.order()) order.push_back(id + 1);
  return {{"chords", chords}, {"order", order}};
}

int run_analyze(const std::string& path, const Common& c, bool require_coxeter, bool slope) {
  const DiagramDocument doc = parse_diagram(read_file(path));
  ChordSystem s = to_system(doc);
  if (slope) s = slope_order(s.diagram());
  AnalysisOptions opt;
  opt.root_tol = c.tol;
  opt.gate_tol = c.gate_tol;
  opt.require_coxeter = require_coxeter;
  const AnalysisReport r = analyze(s, opt, load_name(doc, path));
  std::cout << (machine(c) ? render_machine(r) : render_text(r));
  maybe_svg(c, s, r.name);
  return kOk;
}

struct RealizeArgs {
  std::string graph_path;
  std::string method = "auto";
  std::vector<int> arms;
  int size = 0;
  std::vector<int> parts;
  std::size_t budget = kDefaultBudget;
  std::string output;
};

// Vertex v of g is realized by chord map[v]; the document lists chords in
// chord-id order and orders them by vertex where that order is Coxeter-type.
int emit_realization(const Realization& r, const SimpleGraph& g, const std::string& name, const RealizeArgs& a,
                     const Common& c) {
  if (!verify_realization(g, r)) throw TheoremViolation("realization does not reproduce the graph");
  std::optional<ChordSystem> s = coxeter_system_for_order(r.diagram, r.chord_of_vertex);
  const bool vertex_order = s.has_value();
  if (!s) s = slope_order(r.diagram);
  const std::string text = emit(to_document(*s, name));
  if (!a.output.empty()) write_file(a.output, text);
  if (machine(c)) {
    json j{{"status", "realized"}, {"name", name}, {"document", text}, {"system", system_json(*s)},
           {"vertex_order", vertex_order}};
    json cov = json::array();
    for (int x : r.chord_of_vertex) cov.push_back(x + 1);
    j["chord_of_vertex"] = cov;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
    std::cout << "# chord of vertex:";
    for (std::size_t v = 0; v < r.chord_of_vertex.size(); ++v) std::cout << ' ' << v << "->" << r.chord_of_vertex[v] + 1;
    std::cout << "\n# ordering: " << (vertex_order ? "vertex order (Coxeter type)" : "slope order (Coxeter type)") << "\n";
  }
  maybe_svg(c, *s, name);
  return kOk;
}

std::vector<int> identity_map(int n) {
  std::vector<int> m(n);
  for (int k = 0; k < n; ++k) m[k] = k;
  return m;
}

// Map from g's vertices onto chords of the standard diagram d, or a
// validation error when g is not the requested family.
Realization matched(const SimpleGraph& g, const ChordDiagram& d, const std::string& family) {
  auto iso = find_isomorphism(g, incidence_graph(d));
  if (!iso) throw ValidationError("graph is not " + family);
  return {d, *iso};
}

int run_realize(const RealizeArgs& a, const Common& c) {
  std::optional<GraphDocument> doc;
  if (!a.graph_path.empty()) doc = parse_graph(read_file(a.graph_path));
  const std::string method = a.method;
  auto need_graph = [&] {
    if (!doc) throw ValidationError("method '" + method + "' needs a graph file");
    return doc->graph;
  };
  std::string name = doc ? doc->name.value_or(a.graph_path) : method;

  if (method == "star") {
    if (a.arms.empty()) throw ValidationError("--arms is required for the star method");
    const SimpleGraph g = star_graph(a.arms);
    if (doc && !isomorphic(doc->graph, g)) throw ValidationError("graph is not the requested star");
    std::ostringstream nm;
    nm << "star";
    for (int p : a.arms) nm << ' ' << p;
    if (!doc) name = nm.str();
    const SimpleGraph& target = doc ? doc->graph : g;
    Realization r = realize_tree(target);
    return emit_realization(r, target, name, a, c);
  }
  if (method == "cycle") {
    const int n = doc ? doc->graph.size() : a.size;
    if (!doc) name = "cycle " + std::to_string(n);
    const ChordDiagram d = realize_cycle(n);
    const SimpleGraph g = doc ? doc->graph : graphs::cycle(n);
    return emit_realization(doc ? matched(g, d, "a cycle") : Realization{d, identity_map(n)}, g, name, a, c);
  }
  if (method == "complete") {
    const int n = doc ? doc->graph.size() : a.size;
    if (!doc) name = "complete " + std::to_string(n);
    const ChordDiagram d = realize_complete(n);
    const SimpleGraph g = doc ? doc->graph : graphs::complete(n);
    return emit_realization(doc ? matched(g, d, "complete") : Realization{d, identity_map(n)}, g, name, a, c);
  }
  if (method == "bipartite") {
    int p = 0, q = 0;
    if (a.parts.size() == 2) {
      p = a.parts[0];
      q = a.parts[1];
    } else if (doc) {
      // Find the bipartition sizes by trying every split.
      for (int x = 1; x < doc->graph.size() && !p; ++x)
        if (isomorphic(doc->graph, graphs::complete_bipartite(x, doc->graph.size() - x))) {
          p = x;
          q = doc->graph.size() - x;
        }
      if (!p) throw ValidationError("graph is not complete bipartite");
    } else {
      throw ValidationError("--parts P Q is required for the bipartite method");
    }
    if (!doc) name = "bipartite " + std::to_string(p) + " " + std::to_string(q);
    const ChordDiagram d = realize_complete_bipartite(p, q);
    const SimpleGraph g = doc ? doc->graph : graphs::complete_bipartite(p, q);
    return emit_realization(doc ? matched(g, d, "complete bipartite") : Realization{d, identity_map(p + q)}, g, name,
                            a, c);
  }

  const SimpleGraph g = need_graph();
  if (method == "tree" || (method == "auto" && g.is_tree())) return emit_realization(realize_tree(g), g, name, a, c);
  if (method != "brute" && method != "auto") throw ValidationError("unknown method '" + method + "'");

  const auto witness = obstruction_check(g);
  if (witness) {
    if (machine(c)) {
      std::cout << json{{"status", "non-realizable"},
                        {"reason", "obstruction"},
                        {"triple", witness->triple},
                        {"apex", witness->apex},
                        {"cycle", witness->cycle}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "non-realizable: obstruction witness\n";
      std::cout << "  independent triple:";
      for (int v : witness->triple) std::cout << ' ' << v;
      std::cout << "\n  common neighbour: " << witness->apex << "\n  induced cycle:";
      for (int v : witness->cycle) std::cout << ' ' << v;
      std::cout << "\n";
    }
    return kNotRealizable;
  }
  const BruteForceResult res = brute_force_realize(g, a.budget);
  if (res.status == RealizeStatus::found) return emit_realization(*res.realization, g, name, a, c);
  const bool none = res.status == RealizeStatus::none;
  if (machine(c)) {
    std::cout << json{{"status", none ? "non-realizable" : "inconclusive"},
                      {"reason", none ? "exhaustive search" : "budget exhausted"},
                      {"matchings_visited", res.visited}}
                     .dump(2)
              << "\n";
  } else if (none) {
    std::cout << "non-realizable: exhaustive search over " << res.visited << " matchings found no realization\n";
  } else {
    std::cout << "inconclusive: budget of " << a.budget << " matchings exhausted without a realization\n";
  }
  return none ? kNotRealizable : kInconclusive;
}

int run_orderings(const std::string& path, const Common& c, std::size_t budget) {
  const DiagramDocument doc = parse_diagram(read_file(path));
  const ChordSystem input = to_system(doc);
  const OrderingsResult o = coxeter_orderings(input.diagram(), budget);
  if (machine(c)) {
    json orbits = json::array();
    for (const auto& b : o.orbits) {
      json arcs = json::array();
      for (auto [lo, hi] : to_directed(b.representative).arcs()) arcs.push_back({lo + 1, hi + 1});
      orbits.push_back({{"size", b.size},
                        {"representative", system_json(b.representative)},
                        {"over", arcs},
                        {"char_poly", b.char_poly.to_string()},
                        {"canonical", canonical_form(b.char_poly).to_string()}});
    }
    std::cout << json{{"name", load_name(doc, path)},
                      {"acyclic_orientations", o.acyclic},
                      {"coxeter_type", o.coxeter_type},
                      {"complete", o.complete},
                      {"orbits", orbits}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "name: " << load_name(doc, path) << "\n";
    std::cout << "acyclic orientations: " << o.acyclic << "\n";
    std::cout << "coxeter-type directed diagrams: " << o.coxeter_type << "\n";
    std::cout << "sink/source orbits: " << o.orbits.size() << "\n";
    for (std::size_t k = 0; k < o.orbits.size(); ++k) {
      const auto& b = o.orbits[k];
      std::cout << "orbit " << k + 1 << " (" << b.size << " directed diagrams)\n";
      std::cout << "  order: " << order_text(b.representative) << "\n";
      std::cout << "  over:";
      for (auto [lo, hi] : to_directed(b.representative).arcs()) std::cout << ' ' << hi + 1 << '>' << lo + 1;
      std::cout << "\n  char poly: " << b.char_poly << "\n  canonical: " << canonical_form(b.char_poly) << "\n";
    }
    if (!o.complete) std::cout << "PARTIAL: orientation budget of " << budget << " exhausted\n";
  }
  return o.complete ? kOk : kInconclusive;
}

int run_scan(int max_chords, const Common& c, std::size_t budget, int cap) {
  const ScanResult r = lehmer_scan(max_chords, c.gate_tol, budget, cap);
  if (machine(c)) {
    json rows = json::array();
    for (const auto& row : r.rows) {
      json jr{{"chords", row.chords}, {"diagrams", row.diagrams}, {"coxeter_type", row.relations},
              {"orbits", row.orbits}, {"trivial", row.trivial},   {"pass", row.pass}};
      jr["min_measure"] = row.min_measure ? json(std::stod(format_measure(*row.min_measure))) : json();
      rows.push_back(jr);
    }
    json j{{"rows", rows}, {"complete", r.complete}, {"gate_tolerance", c.gate_tol},
           {"lehmer_measure", std::stod(format_measure(lehmer_measure()))}};
    if (r.min_measure) {
      j["min_measure"] = std::stod(format_measure(*r.min_measure));
      j["witness"] = system_json(*r.witness);
      j["witness_poly"] = r.witness_poly.to_string();
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "chords  diagrams  coxeter-type  orbits  trivial  pass  min measure > 1\n";
    for (const auto& row : r.rows) {
      char line[160];
      std::snprintf(line, sizeof line, "%6d  %8zu  %12zu  %6zu  %7zu  %4zu  %s\n", row.chords, row.diagrams,
                    row.relations, row.orbits, row.trivial, row.pass,
                    row.min_measure ? format_measure(*row.min_measure).c_str() : "-");
      std::cout << line;
    }
    std::cout << "lehmer bound: " << format_measure(lehmer_measure()) << " (gate tol " << format_tolerance(c.gate_tol)
              << ")\n";
    std::cout << "gate failures: 0\n";
    if (r.min_measure) {
      std::cout << "least measure > 1: " << format_measure(*r.min_measure) << "\n";
      std::cout << "  polynomial: " << r.witness_poly << "\n";
      std::cout << "  system: " << order_text(*r.witness) << "\n";
    } else {
      std::cout << "least measure > 1: none (every measure is 1)\n";
    }
    if (!r.complete) std::cout << "PARTIAL: orientation budget exhausted\n";
  }
  return r.complete ? kOk : kInconclusive;
}

int run_render(const std::string& path, const Common& c) {
  const DiagramDocument doc = parse_diagram(read_file(path));
  const ChordSystem s = to_system(doc);
  SvgOptions o;
  o.title = load_name(doc, path);
  const std::string svg = render_svg(s, o);
  if (c.svg.empty()) std::cout << svg;
  else write_file(c.svg, svg);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter links of ordered chord diagrams"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol", common.tol, "root-finder tolerance")->capture_default_str();
    sub->add_option("--gate-tol", common.gate_tol, "Lehmer gate margin")->capture_default_str();
    sub->add_option("--format", common.format, "output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
  };

  std::string path;
  bool require_coxeter = false, slope = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "analyze a chord system");
  analyze_cmd->add_option("file", path, "diagram document")->required();
  analyze_cmd->add_flag("--require-coxeter", require_coxeter, "reject systems not of Coxeter type");
  analyze_cmd->add_flag("--slope-order", slope, "replace the order and orientations by the slope ordering");
  analyze_cmd->add_option("--svg", common.svg, "also write an SVG drawing");
  add_common(analyze_cmd);

  RealizeArgs ra;
  auto* realize_cmd = app.add_subcommand("realize", "realize a graph as a chord diagram");
  realize_cmd->add_option("graph", ra.graph_path, "graph document");
  realize_cmd->add_option("--method", ra.method, "auto, tree, cycle, complete, bipartite, star or brute")
      ->check(CLI::IsMember({"auto", "tree", "cycle", "complete", "bipartite", "star", "brute"}))
      ->capture_default_str();
  realize_cmd->add_option("--arms", ra.arms, "star arm lengths");
  realize_cmd->add_option("--size", ra.size, "vertex count for cycle and complete");
  realize_cmd->add_option("--parts", ra.parts, "part sizes P Q for bipartite")->expected(2);
  realize_cmd->add_option("--budget", ra.budget, "matchings the brute-force search may visit")->capture_default_str();
  realize_cmd->add_option("--output,-o", ra.output, "write the diagram document here");
  realize_cmd->add_option("--svg", common.svg, "also write an SVG drawing");
  add_common(realize_cmd);

  std::size_t orient_budget = kDefaultOrientationBudget;
  auto* orderings_cmd = app.add_subcommand("orderings", "Coxeter-type orderings up to sink/source moves");
  orderings_cmd->add_option("file", path, "diagram document")->required();
  orderings_cmd->add_option("--budget", orient_budget, "acyclic orientations to examine")->capture_default_str();
  add_common(orderings_cmd);

  int max_chords = 0, cap = kScanCap;
  auto* scan_cmd = app.add_subcommand("lehmer-scan", "Lehmer gate over all small diagrams");
  scan_cmd->add_option("max_chords", max_chords, "largest chord count")->required();
  scan_cmd->add_option("--budget", orient_budget, "acyclic orientations per diagram")->capture_default_str();
  scan_cmd->add_option("--cap", cap, "refuse chord counts above this")->capture_default_str();
  add_common(scan_cmd);

  auto* render_cmd = app.add_subcommand("render", "draw a chord system as SVG");
  render_cmd->add_option("file", path, "diagram document")->required();
  render_cmd->add_option("--svg", common.svg, "output path (default: standard output)");
  add_common(render_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze_cmd) return run_analyze(path, common, require_coxeter, slope);
    if (*realize_cmd) return run_realize(ra, common);
    if (*orderings_cmd) return run_orderings(path, common, orient_budget);
    if (*scan_cmd) return run_scan(max_chords, common, orient_budget, cap);
    if (*render_cmd) return run_render(path, common);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const TheoremViolation& e) {
    std::cerr << "internal error (theorem violation): " << e.what() << "\n";
    return kViolation;
  } catch (const RootFindingError& e) {
    std::cerr << "internal error (root finder): " << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
