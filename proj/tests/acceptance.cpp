// Acceptance checks: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coxlink/coxlink.hpp"

using namespace coxlink;

namespace {

constexpr long double kLehmerMeasure = 1.1762808182599175065L;

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << "failed: ";
      else note << "; ";
      note << what;
      ok = false;
    }
  }
};

ChordSystem load(const std::string& name) {
  return to_system(parse_diagram(read_file(std::string(COXLINK_DATA_DIR) + "/diagrams/" + name)));
}

IntPolynomial poly_of(const ChordSystem& s) { return char_poly(monodromy(seifert_matrix(s))); }

IntPolynomial minus_t(const IntPolynomial& p) {
  std::vector<Integer> c = p.coefficients();
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return IntPolynomial(std::move(c));
}

ChordDiagram random_diagram(std::mt19937_64& rng, int n) {
  std::vector<int> p(2 * n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k < n; ++k) pairs.emplace_back(p[2 * k], p[2 * k + 1]);
  return ChordDiagram(pairs);
}

// A random Coxeter-type system: a random chord order when it admits
// Coxeter-type orientations, otherwise the slope ordering followed by a
// random walk of sink/source moves.
ChordSystem random_coxeter_system(std::mt19937_64& rng, int n, int& from_order) {
  const ChordDiagram d = random_diagram(rng, n);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  if (auto s = coxeter_system_for_order(d, order)) {
    ++from_order;
    return *s;
  }
  DirectedDiagram dd = to_directed(slope_order(d));
  for (int step = 0; step < 3 * n; ++step) {
    std::vector<int> movable;
    for (int k = 0; k < n; ++k)
      if (dd.is_sink(k) || dd.is_source(k)) movable.push_back(k);
    dd = sink_source_move(dd, movable[std::uniform_int_distribution<std::size_t>(0, movable.size() - 1)(rng)]);
  }
  return order_from_directed(dd);
}

Outcome criterion1() {
  Outcome o;
  const ChordSystem s = load("triangle.txt");
  const IntPolynomial p = poly_of(s);
  o.require(is_coxeter_type(s), "triangle is not of Coxeter type");
  o.require(canonical_form(p) == canonical_form(IntPolynomial{1, 1, -1, -1}), "char poly " + p.to_string());
  o.note << "char poly " << p;
  return o;
}

Outcome criterion2() {
  Outcome o;
  const ChordSystem s = load("triangle-mirror.txt");
  const IntPolynomial p = poly_of(s);
  o.require(!is_coxeter_type(s), "mirror ordering is of Coxeter type");
  o.require(canonical_form(p) == canonical_form(IntPolynomial{1, -1, 1, -1}), "char poly " + p.to_string());
  o.note << "char poly " << p;
  return o;
}

Outcome criterion3() {
  Outcome o;
  const ChordSystem a = load("square-coxeter.txt");
  o.require(is_coxeter_type(a), "square (a) not of Coxeter type");
  const DirectedDiagram da = to_directed(a);
  int moves = 0;
  for (int k = 0; k < a.size(); ++k) {
    if (!da.is_sink(k) && !da.is_source(k)) continue;
    const ChordSystem b = order_from_directed(sink_source_move(da, k));
    o.require(is_coxeter_type(b), "square (b) not of Coxeter type");
    o.require(!(to_directed(b) == da), "move left the directed diagram unchanged");
    o.require(equivalent(poly_of(b), IntPolynomial{1, 0, -2, 0, 1}), "(b) char poly " + poly_of(b).to_string());
    ++moves;
  }
  o.require(moves > 0, "no sink or source in (a)");
  o.require(equivalent(poly_of(a), IntPolynomial{1, 0, -2, 0, 1}), "(a) char poly " + poly_of(a).to_string());
  const OrderingsResult r = coxeter_orderings(a.diagram());
  o.require(r.orbits.size() == 1, "orbit count " + std::to_string(r.orbits.size()));
  const ChordSystem cyclic = load("square-cyclic.txt");
  o.require(!is_coxeter_type(cyclic), "cyclic ordering is of Coxeter type");
  o.require(equivalent(poly_of(cyclic), IntPolynomial{1, -1, 0, -1, 1}), "cyclic char poly " + poly_of(cyclic).to_string());
  o.note << "(a), (b): " << poly_of(a) << " via " << moves << " single moves; cyclic: " << poly_of(cyclic);
  return o;
}

Outcome criterion4() {
  Outcome o;
  const OrderingsResult r = coxeter_orderings(load("pentagon.txt").diagram());
  o.require(r.complete, "enumeration incomplete");
  o.require(r.orbits.size() == 2, "orbit count " + std::to_string(r.orbits.size()));
  const IntPolynomial d1{1, -1, 0, 0, -1, 1}, d2{1, 0, -1, -1, 0, 1};
  bool saw1 = false, saw2 = false;
  for (const auto& b : r.orbits) {
    const IntPolynomial shown = minus_t(b.char_poly);
    saw1 = saw1 || equivalent(shown, d1);
    saw2 = saw2 || equivalent(shown, d2);
  }
  o.require(saw1 && saw2, "orbit polynomials do not match");
  o.note << r.orbits.size() << " orbits of " << r.coxeter_type << " Coxeter-type directed diagrams";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const AnalysisReport r = analyze(load("triangle-with-tail.txt"), {}, "triangle with tail");
  o.require(equivalent(r.char_poly, IntPolynomial{1, 1, -3, 1, 1}), "char poly " + r.char_poly.to_string());
  o.require(std::fabs(static_cast<double>(r.mahler) - 2.36921) <= 1e-4, "measure " + format_measure(r.mahler));
  o.require(r.classification == CoxeterClass::higher, "classification " + to_string(r.classification));
  o.note << "char poly " << r.char_poly << ", measure " << format_measure(r.mahler) << ", "
         << to_string(r.classification);
  return o;
}

Outcome criterion6() {
  Outcome o;
  const SimpleGraph g = star_graph({2, 3, 7});
  const Realization real = realize_tree(g);
  o.require(verify_realization(g, real), "realization check");
  const auto s = coxeter_system_for_order(real.diagram, real.chord_of_vertex);
  o.require(s.has_value(), "vertex order admits no Coxeter-type orientation");
  if (!s) return o;
  const AnalysisReport r = analyze(*s, {}, "star 2 3 7");
  o.require(canonical_form(r.char_poly) == canonical_form(lehmer_polynomial()), "char poly " + r.char_poly.to_string());
  o.require(std::fabs(static_cast<double>(r.mahler - kLehmerMeasure)) <= 1e-6, "measure " + format_measure(r.mahler));
  o.require(r.classification == CoxeterClass::higher, "classification " + to_string(r.classification));
  const ChordSystem shipped = load("star-2-3-7.txt");
  o.require(canonical_form(poly_of(shipped)) == canonical_form(lehmer_polynomial()), "shipped star document");
  o.note << "char poly " << r.canonical << ", measure " << format_measure(r.mahler) << ", "
         << to_string(r.classification);
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(20240611);
  int failures = 0, from_order = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 12;
    const ChordSystem s = random_coxeter_system(rng, n, from_order);
    if (!is_coxeter_type(s)) {
      ++failures;
      continue;
    }
    const IntMatrix b = bilinear_form(s), m = seifert_matrix(s);
    if (symmetrize(m) != b || monodromy(m) != -coxeter_element(b)) ++failures;
  }
  o.require(failures == 0, std::to_string(failures) + " identity failures");
  o.note << "1000 systems (" << from_order << " from random orders, " << 1000 - from_order
         << " from moves), " << failures << " failures";
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 rng(77);
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial)
    if (!is_coxeter_type(slope_order(random_diagram(rng, 1 + trial % 12)))) ++failures;
  o.require(failures == 0, std::to_string(failures) + " failures");
  o.note << "1000 diagrams, " << failures << " failures";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t systems = 0, disagreements = 0, counts[3] = {0, 0, 0};
  for (int n = 1; n <= 6; ++n)
    for (const ChordDiagram& d : matchings::all_up_to_dihedral(n))
      for_each_coxeter_relation(d, kDefaultOrientationBudget, [&](const Orientation& later) {
        const IntMatrix b = bilinear_form(system_of(d, later));
        const Definiteness def = definiteness(b);
        const CoxeterClass cls = classify(char_poly(coxeter_element(b)));
        const bool agree = (def == Definiteness::positive_definite) == (cls == CoxeterClass::spherical) &&
                           (def == Definiteness::positive_semidefinite) == (cls == CoxeterClass::affine);
        ++systems;
        ++counts[static_cast<int>(cls)];
        if (!agree) ++disagreements;
        return true;
      });
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements");

  auto cls_of = [](const ChordSystem& s) { return classify(char_poly(coxeter_element(bilinear_form(s)))); };
  for (int n = 1; n <= 8; ++n) {
    const Realization r = realize_tree(graphs::path(n));
    o.require(cls_of(*coxeter_system_for_order(r.diagram, r.chord_of_vertex)) == CoxeterClass::spherical,
              "A" + std::to_string(n) + " not spherical");
  }
  for (int n = 3; n <= 8; ++n)
    o.require(cls_of(slope_order(realize_cycle(n))) == CoxeterClass::affine,
              "cycle " + std::to_string(n) + " not affine");
  o.require(cls_of(load("star-2-3-7.txt")) == CoxeterClass::higher, "star 2 3 7 not higher");
  o.note << systems << " systems up to 6 chords (" << counts[0] << " spherical, " << counts[1] << " affine, "
         << counts[2] << " higher), " << disagreements << " disagreements; A1..A8, cycles 3..8, star checked";
  return o;
}

Outcome criterion10() {
  Outcome o;
  try {
    const ScanResult r = lehmer_scan(7);
    o.require(r.complete, "scan incomplete");
    o.require(r.rows.size() == 7, "row count");
    for (const auto& row : r.rows) {
      if (row.chords <= 3) o.require(row.pass == 0, "nontrivial measure at " + std::to_string(row.chords) + " chords");
      if (row.min_measure) o.require(*row.min_measure >= kLehmerMeasure - 1e-6L, "measure below the bound");
    }
    std::size_t orbits = 0, trivial = 0;
    for (const auto& row : r.rows) orbits += row.orbits, trivial += row.trivial;
    o.note << orbits << " orbits, " << trivial << " cyclotomic, 0 gate failures, least measure > 1: "
           << (r.min_measure ? format_measure(*r.min_measure) : std::string("none"));
  } catch (const TheoremViolation& e) {
    o.require(false, e.what());
  }
  return o;
}

Outcome criterion11() {
  Outcome o;
  const auto c5 = brute_force_realize(graphs::cycle(5));
  o.require(c5.status == RealizeStatus::found && verify_realization(graphs::cycle(5), *c5.realization), "C5 not found");
  for (int n = 3; n <= 5; ++n) {
    const auto all = all_realizations(graphs::cycle(n));
    o.require(all.size() == 1, "cycle " + std::to_string(n) + " has " + std::to_string(all.size()) +
                                   " realizations up to symmetry");
  }
  const SimpleGraph q3 = graphs::hypercube(3);
  const auto start = std::chrono::steady_clock::now();
  const auto q = brute_force_realize(q3);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(q.status == RealizeStatus::none, "Q3 search: " + to_string(q.status));
  const auto w = obstruction_check(q3);
  o.require(w.has_value() && valid_witness(q3, *w), "Q3 obstruction witness");

  int checked = 0;
  auto check = [&](const SimpleGraph& g, const Realization& r, const std::string& what) {
    ++checked;
    o.require(verify_realization(g, r), what);
  };
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 10; ++n) {
    check(graphs::path(n), realize_tree(graphs::path(n)), "path");
    for (int t = 0; t < 20; ++t) {
      SimpleGraph g(n);
      for (int v = 1; v < n; ++v) g.add_edge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
      check(g, realize_tree(g), "random tree");
    }
  }
  auto identity = [](int n) {
    std::vector<int> m(n);
    std::iota(m.begin(), m.end(), 0);
    return m;
  };
  for (int n = 3; n <= 8; ++n) check(graphs::cycle(n), {realize_cycle(n), identity(n)}, "cycle");
  for (int n = 1; n <= 6; ++n) check(graphs::complete(n), {realize_complete(n), identity(n)}, "complete");
  for (int p = 1; p <= 6; ++p)
    for (int q = 1; p + q <= 7; ++q)
      check(graphs::complete_bipartite(p, q), {realize_complete_bipartite(p, q), identity(p + q)}, "bipartite");
  for (const auto& arms : std::vector<std::vector<int>>{{2, 3, 7}, {2, 3, 5}, {3, 3, 3}, {2, 2, 2, 2}, {4, 1, 6}})
    check(star_graph(arms), realize_tree(star_graph(arms)), "star");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", secs);
  o.note << "C5 found and unique for n = 3..5; Q3 none after " << q.visited << " matchings (" << buf
         << " s) with witness; " << checked << " constructive realizations verified";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"triangle, Coxeter type", criterion1},
      {"triangle, other ordering", criterion2},
      {"4-cycle orderings", criterion3},
      {"5-cycle orbits", criterion4},
      {"triangle with tail", criterion5},
      {"star 2 3 7", criterion6},
      {"identities on random Coxeter-type systems", criterion7},
      {"slope ordering is of Coxeter type", criterion8},
      {"definiteness agrees with classification", criterion9},
      {"Lehmer gate up to 7 chords", criterion10},
      {"realizability", criterion11},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    if (!o.ok) ++failed;
    std::printf("%-4s criterion %2zu  %-44s %s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.note.str().c_str());
  }
  std::printf("SKIP criterion 12  %-44s %s\n", "link equivalence claims",
              "excluded: topological link identifications are not checked; char-poly invariance is covered above");
  std::fflush(stdout);
  return failed;
}
