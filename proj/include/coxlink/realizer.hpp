#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxlink/chord.hpp"
#include "coxlink/errors.hpp"
#include "coxlink/graph.hpp"

namespace coxlink {

/// A diagram together with the chord realizing each graph vertex.
struct Realization {
  ChordDiagram diagram;
  std::vector<int> chord_of_vertex;
};

/// Join result. Chords of the first diagram keep their ids; `from_second[j]`
/// is the new id of chord j of the second diagram (k2 maps to k1).
struct JoinResult {
  ChordDiagram diagram;
  std::vector<int> from_second;
};

/// One-vertex join of two realizations along the chords k1 and k2. The shared
/// chord runs from E to W; the first diagram occupies the left half of the
/// boundary and the second the right half, so only the shared chord meets
/// both.
inline JoinResult join_mapped(const ChordDiagram& d1, const ChordDiagram& d2, int k1, int k2) {
  d1.check(k1);
  d2.check(k2);
  const int n1 = d1.points(), n2 = d2.points();
  const int a = d1.chord(k1).a, b = d1.chord(k1).b;
  const int c = d2.chord(k2).a, d = d2.chord(k2).b;

  // Counterclockwise sequence of (diagram, old point); diagram 0 = shared.
  std::vector<std::pair<int, int>> seq;
  seq.emplace_back(0, 0);  // E
  for (int x = c + 1; x < d; ++x) seq.emplace_back(2, x);
  for (int x = a + 1; x < b; ++x) seq.emplace_back(1, x);
  seq.emplace_back(0, 1);  // W
  for (int x = b + 1; x != a + n1; ++x) seq.emplace_back(1, x % n1);
  for (int x = d + 1; x != c + n2; ++x) seq.emplace_back(2, x % n2);

  std::vector<int> pos1(n1, -1), pos2(n2, -1);
  int east = -1, west = -1;
  for (int p = 0; p < static_cast<int>(seq.size()); ++p) {
    auto [which, x] = seq[p];
    if (which == 0) (x == 0 ? east : west) = p;
    else if (which == 1) pos1[x] = p;
    else pos2[x] = p;
  }
  std::vector<std::pair<int, int>> chords;
  for (int i = 0; i < d1.size(); ++i)
    chords.push_back(i == k1 ? std::pair{east, west} : std::pair{pos1[d1.chord(i).a], pos1[d1.chord(i).b]});
  std::vector<int> from_second(d2.size(), -1);
  for (int j = 0; j < d2.size(); ++j) {
    if (j == k2) {
      from_second[j] = k1;
      continue;
    }
    from_second[j] = static_cast<int>(chords.size());
    chords.emplace_back(pos2[d2.chord(j).a], pos2[d2.chord(j).b]);
  }
  return {ChordDiagram(chords), std::move(from_second)};
}

inline ChordDiagram join(const ChordDiagram& d1, const ChordDiagram& d2, int k1, int k2) {
  return join_mapped(d1, d2, k1, k2).diagram;
}

/// Trees by repeated joins with a crossing pair, attaching children in
/// depth-first order from vertex 0.
inline Realization realize_tree(const SimpleGraph& t) {
  if (!t.is_tree()) throw ValidationError("realize_tree() needs a tree");
  const ChordDiagram cross(std::vector<std::pair<int, int>>{{0, 2}, {1, 3}});
  Realization r{ChordDiagram(std::vector<std::pair<int, int>>{{0, 1}}), std::vector<int>(t.size(), -1)};
  r.chord_of_vertex[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    std::vector<int> children;
    for (SimpleGraph::Row nb = t.neighbors(u); nb; nb &= nb - 1) {
      const int v = std::countr_zero(nb);
      if (r.chord_of_vertex[v] < 0) children.push_back(v);
    }
    for (int v : children) {
      JoinResult j = join_mapped(r.diagram, cross, r.chord_of_vertex[u], 0);
      r.diagram = std::move(j.diagram);
      r.chord_of_vertex[v] = j.from_second[1];
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(*it);
  }
  return r;
}

/// Chord k joins 2k and 2k+3 (mod 2n); chord k crosses exactly k-1 and k+1.
inline ChordDiagram realize_cycle(int n) {
  if (n < 3) throw ValidationError("realize_cycle() needs n >= 3");
  std::vector<std::pair<int, int>> c;
  for (int k = 0; k < n; ++k) c.emplace_back(2 * k, (2 * k + 3) % (2 * n));
  return ChordDiagram(c);
}

/// n diameters: chord k joins k and k+n.
inline ChordDiagram realize_complete(int n) {
  if (n < 1) throw ValidationError("realize_complete() needs n >= 1");
  std::vector<std::pair<int, int>> c;
  for (int k = 0; k < n; ++k) c.emplace_back(k, k + n);
  return ChordDiagram(c);
}

/// p nested chords (a, 2p+q-1-a) crossed by q nested chords
/// (p+b, 2p+2q-1-b). Chord ids follow the vertex numbering of
/// graphs::complete_bipartite.
inline ChordDiagram realize_complete_bipartite(int p, int q) {
  if (p < 1 || q < 1) throw ValidationError("realize_complete_bipartite() needs p, q >= 1");
  std::vector<std::pair<int, int>> c;
  for (int a = 0; a < p; ++a) c.emplace_back(a, 2 * p + q - 1 - a);
  for (int b = 0; b < q; ++b) c.emplace_back(p + b, 2 * p + 2 * q - 1 - b);
  return ChordDiagram(c);
}

/// Star(p_1, ..., p_k): k paths sharing an end vertex. Each arm is listed
/// from its tip towards the hub and the hub comes last, so every edge points
/// from the lower vertex towards the hub.
inline SimpleGraph star_graph(const std::vector<int>& arms) {
  if (arms.empty()) throw ValidationError("star_graph() needs at least one arm");
  int n = 1;
  for (int p : arms) {
    if (p < 1) throw ValidationError("star arm lengths must be positive");
    n += p - 1;
  }
  SimpleGraph g(n);
  const int hub = n - 1;
  int next = 0;
  for (int p : arms) {
    for (int k = 0; k + 1 < p; ++k) g.add_edge(next + k, k + 2 < p ? next + k + 1 : hub);
    next += p - 1;
  }
  return g;
}

struct ObstructionWitness {
  std::vector<int> triple;  // three independent vertices
  int apex = -1;            // adjacent to all of them
  std::vector<int> cycle;   // induced cycle through the triple, in cyclic order
};

namespace detail {

// Depth-first search for induced cycles whose least vertex is `start`.
template <class Visit>
bool induced_cycles_from(const SimpleGraph& g, int start, int cap, std::vector<int>& path,
                         SimpleGraph::Row on_path, Visit& visit) {
  const int last = path.back();
  for (SimpleGraph::Row nb = g.neighbors(last); nb; nb &= nb - 1) {
    const int w = std::countr_zero(nb);
    if (w <= start || (on_path >> w) & 1u) continue;
    if (static_cast<int>(path.size()) >= cap) continue;
    // w may touch the path only at `last`, and at `start` only as a closing step.
    const SimpleGraph::Row touches = g.neighbors(w) & on_path & ~SimpleGraph::bit(last);
    if (touches & ~SimpleGraph::bit(start)) continue;
    path.push_back(w);
    const bool closes = touches != 0;
    bool stop = false;
    if (closes) {
      // Each cycle is seen in both directions; keep one.
      if (path[1] < w && visit(path)) stop = true;
    } else {
      stop = induced_cycles_from(g, start, cap, path, on_path | SimpleGraph::bit(w), visit);
    }
    path.pop_back();
    if (stop) return true;
  }
  return false;
}

}  // namespace detail

/// Visits every induced cycle with at most `cap` vertices once. The visitor
/// returns true to stop.
template <class Visit>
void for_each_induced_cycle(const SimpleGraph& g, int cap, Visit visit) {
  for (int s = 0; s < g.size(); ++s) {
    std::vector<int> path{s};
    if (detail::induced_cycles_from(g, s, cap, path, SimpleGraph::bit(s), visit)) return;
  }
}

/// Searches for three independent vertices with a common neighbour lying on
/// one induced cycle. A witness proves the graph is not realizable; its
/// absence proves nothing.
inline std::optional<ObstructionWitness> obstruction_check(const SimpleGraph& g, int cycle_cap = 12) {
  std::optional<ObstructionWitness> found;
  for_each_induced_cycle(g, cycle_cap, [&](const std::vector<int>& cyc) {
    if (cyc.size() < 6) return false;
    SimpleGraph::Row on = 0;
    for (int v : cyc) on |= SimpleGraph::bit(v);
    for (int s = 0; s < g.size(); ++s) {
      if ((on >> s) & 1u) continue;
      std::vector<int> nb;
      for (int v : cyc)
        if (g.adjacent(s, v)) nb.push_back(v);
      for (std::size_t x = 0; x < nb.size(); ++x)
        for (std::size_t y = x + 1; y < nb.size(); ++y)
          for (std::size_t z = y + 1; z < nb.size(); ++z) {
            const int a = nb[x], b = nb[y], c = nb[z];
            if (g.adjacent(a, b) || g.adjacent(a, c) || g.adjacent(b, c)) continue;
            found = ObstructionWitness{{a, b, c}, s, cyc};
            return true;
          }
    }
    return false;
  });
  return found;
}

/// Checks every condition a witness must satisfy.
inline bool valid_witness(const SimpleGraph& g, const ObstructionWitness& w) {
  if (w.triple.size() != 3 || w.apex < 0 || w.apex >= g.size() || w.cycle.size() < 3) return false;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!g.adjacent(w.apex, w.triple[i])) return false;
    for (std::size_t j = i + 1; j < 3; ++j)
      if (w.triple[i] == w.triple[j] || g.adjacent(w.triple[i], w.triple[j])) return false;
    if (std::find(w.cycle.begin(), w.cycle.end(), w.triple[i]) == w.cycle.end()) return false;
  }
  const std::size_t m = w.cycle.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == m - 1);
      if (w.cycle[i] == w.cycle[j] || g.adjacent(w.cycle[i], w.cycle[j]) != consecutive) return false;
    }
  return true;
}

enum class RealizeStatus { found, none, inconclusive };

inline std::string to_string(RealizeStatus s) {
  switch (s) {
    case RealizeStatus::found: return "found";
    case RealizeStatus::none: return "none";
    case RealizeStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

struct BruteForceResult {
  RealizeStatus status = RealizeStatus::none;
  std::optional<Realization> realization;
  std::size_t visited = 0;
};

inline constexpr std::size_t kDefaultBudget = 5'000'000;

namespace detail {

inline std::vector<int> degree_sequence(const std::vector<SimpleGraph::Row>& rows) {
  std::vector<int> d;
  d.reserve(rows.size());
  for (auto r : rows) d.push_back(std::popcount(r));
  std::sort(d.begin(), d.end());
  return d;
}

inline SimpleGraph from_rows(const std::vector<SimpleGraph::Row>& rows) {
  SimpleGraph h(static_cast<int>(rows.size()));
  for (int u = 0; u < h.size(); ++u)
    for (SimpleGraph::Row r = rows[u] & ~((SimpleGraph::bit(u) << 1) - 1); r; r &= r - 1)
      h.add_edge(u, std::countr_zero(r));
  return h;
}

}  // namespace detail

/// Calls `visit(partners, chord_of_vertex)` for every dihedral-canonical
/// matching whose incidence graph is isomorphic to g, in increasing partner
/// order; the visitor returns false to stop. Returns the number of matchings
/// visited and whether the budget ran out.
template <class Visit>
std::pair<std::size_t, bool> for_each_realization(const SimpleGraph& g, std::size_t budget, Visit visit) {
  const int n = g.size();
  if (n < 1) throw ValidationError("graph must have at least one vertex");
  if (2 * n > SimpleGraph::kMaxVertices) throw ValidationError("graph too large for exhaustive search");
  std::vector<SimpleGraph::Row> grows(n);
  for (int v = 0; v < n; ++v) grows[v] = g.neighbors(v);
  const auto want_degrees = detail::degree_sequence(grows);
  bool exhausted = false;
  const std::size_t visited = matchings::for_each(n, [&](const std::vector<int>& p) {
    if (budget == 0) {
      exhausted = true;
      return false;
    }
    --budget;
    const auto rows = matchings::crossing_rows(p);
    if (detail::degree_sequence(rows) != want_degrees) return true;
    if (!matchings::is_canonical(p)) return true;
    const auto iso = find_isomorphism(g, detail::from_rows(rows));
    if (!iso) return true;
    return visit(p, *iso);
  });
  return {exhausted ? visited - 1 : visited, exhausted};
}

/// Exhaustive realization oracle. Returns the least matching (in partner
/// order) realizing g, "none" after a complete search, or "inconclusive"
/// when more than `budget` matchings would be needed.
inline BruteForceResult brute_force_realize(const SimpleGraph& g, std::size_t budget = kDefaultBudget) {
  BruteForceResult out;
  auto [visited, exhausted] = for_each_realization(g, budget, [&](const std::vector<int>& p, const std::vector<int>& iso) {
    out.realization = Realization{matchings::from_partner_array(p), iso};
    return false;
  });
  out.visited = visited;
  out.status = out.realization ? RealizeStatus::found
                               : exhausted ? RealizeStatus::inconclusive : RealizeStatus::none;
  return out;
}

/// Every realization of g up to rotation and reflection.
inline std::vector<ChordDiagram> all_realizations(const SimpleGraph& g, std::size_t budget = kDefaultBudget) {
  std::vector<ChordDiagram> out;
  auto [visited, exhausted] = for_each_realization(g, budget, [&](const std::vector<int>& p, const std::vector<int>&) {
    out.push_back(matchings::from_partner_array(p));
    return true;
  });
  (void)visited;
  if (exhausted) throw ValidationError("search budget exhausted before all realizations were found");
  return out;
}

/// True iff `chord_of_vertex` is an isomorphism from g onto the incidence
/// graph of the diagram.
inline bool verify_realization(const SimpleGraph& g, const Realization& r) {
  const int n = g.size();
  if (r.diagram.size() != n || static_cast<int>(r.chord_of_vertex.size()) != n) return false;
  std::vector<bool> used(n, false);
  for (int c : r.chord_of_vertex) {
    if (c < 0 || c >= n || used[c]) return false;
    used[c] = true;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.adjacent(u, v) != interleaved(r.diagram.chord(r.chord_of_vertex[u]), r.diagram.chord(r.chord_of_vertex[v])))
        return false;
  return true;
}

}  // namespace coxlink
