#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "coxlink/chord.hpp"
#include "coxlink/errors.hpp"
#include "coxlink/forms.hpp"
#include "coxlink/graph.hpp"
#include "coxlink/polynomial.hpp"

namespace coxlink {

/// Orientation of the incidence graph: `later[i]` is the set of chords lying
/// over chord i.
using Orientation = std::vector<SimpleGraph::Row>;

namespace detail {

struct OrientationHash {
  std::size_t operator()(const Orientation& o) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto r : o) {
      h ^= r + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

// Chord with its base orientation a -> b.
inline OrientedChord base(const Chord& c) { return {c.a, c.b}; }

}  // namespace detail

/// Orientations making the system Coxeter-type for the given over-relation:
/// for each crossing pair with j over i, link(l_i, l_j) must be -1. Solved
/// per component by propagation from its least chord, which keeps its base
/// orientation a -> b. Empty when the sign constraints are inconsistent.
inline std::optional<std::vector<OrientedChord>> coxeter_orientations(const ChordDiagram& d,
                                                                      const Orientation& later) {
  const int n = d.size();
  std::vector<int> sign(n, 0);
  for (int s = 0; s < n; ++s) {
    if (sign[s] != 0) continue;
    sign[s] = 1;
    std::vector<int> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int i = queue[qi];
      for (int j = 0; j < n; ++j) {
        if (j == i || !interleaved(d.chord(i), d.chord(j))) continue;
        // Required o_i * o_j so that the earlier chord links the later one by -1.
        const bool j_over_i = (later[i] >> j) & 1u;
        const int l0 = j_over_i ? link(detail::base(d.chord(i)), detail::base(d.chord(j)))
                                : link(detail::base(d.chord(j)), detail::base(d.chord(i)));
        const int want = -l0 * sign[i];
        if (sign[j] == 0) {
          sign[j] = want;
          queue.push_back(j);
        } else if (sign[j] != want) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<OrientedChord> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const OrientedChord b = detail::base(d.chord(i));
    out.push_back(sign[i] > 0 ? b : b.reversed());
  }
  return out;
}

/// Over-relation induced by a chord order (order[position] = chord id).
inline Orientation orientation_of_order(const ChordDiagram& d, const std::vector<int>& order) {
  const int n = d.size();
  if (static_cast<int>(order.size()) != n) throw ValidationError("order must list every chord once");
  std::vector<int> pos(n, -1);
  for (int p = 0; p < n; ++p) {
    d.check(order[p]);
    if (pos[order[p]] >= 0) throw ValidationError("order must be a permutation of the chords");
    pos[order[p]] = p;
  }
  Orientation later(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && interleaved(d.chord(i), d.chord(j)) && pos[j] > pos[i]) later[i] |= SimpleGraph::bit(j);
  return later;
}

/// Least-id-first linear extension of an acyclic over-relation.
inline std::vector<int> linear_extension(const Orientation& later) {
  const int n = static_cast<int>(later.size());
  std::vector<int> indegree(n, 0);
  for (int i = 0; i < n; ++i)
    for (SimpleGraph::Row r = later[i]; r; r &= r - 1) ++indegree[std::countr_zero(r)];
  std::vector<int> order;
  SimpleGraph::Row ready = 0;
  for (int v = 0; v < n; ++v)
    if (indegree[v] == 0) ready |= SimpleGraph::bit(v);
  while (ready) {
    const int v = std::countr_zero(ready);
    ready &= ready - 1;
    order.push_back(v);
    for (SimpleGraph::Row r = later[v]; r; r &= r - 1) {
      const int w = std::countr_zero(r);
      if (--indegree[w] == 0) ready |= SimpleGraph::bit(w);
    }
  }
  if (static_cast<int>(order.size()) != n) throw ValidationError("over-relation is cyclic");
  return order;
}

/// The Coxeter-type system with this chord order, if the order admits one.
inline std::optional<ChordSystem> coxeter_system_for_order(const ChordDiagram& d, const std::vector<int>& order) {
  auto o = coxeter_orientations(d, orientation_of_order(d, order));
  if (!o) return std::nullopt;
  return ChordSystem(std::move(*o), order);
}

inline ChordSystem system_of(const ChordDiagram& d, const Orientation& later) {
  auto o = coxeter_orientations(d, later);
  if (!o) throw ValidationError("over-relation admits no Coxeter-type orientation");
  return ChordSystem(std::move(*o), linear_extension(later));
}

/// Visits every acyclic orientation of g (edges oriented in lexicographic
/// edge order, lower endpoint over first). The visitor returns false to
/// stop. Returns false if the visit limit was reached first.
template <class Visit>
bool for_each_acyclic_orientation(const SimpleGraph& g, std::size_t limit, Visit visit) {
  const int n = g.size();
  const auto edges = g.edges();
  Orientation later(n, 0);
  std::size_t count = 0;
  bool stopped = false, exhausted = false;
  // reaches(u, v): some directed path u -> v in the current partial orientation.
  auto reaches = [&](int u, int v) {
    SimpleGraph::Row seen = SimpleGraph::bit(u), frontier = seen;
    while (frontier) {
      const int x = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const SimpleGraph::Row fresh = later[x] & ~seen;
      if ((fresh >> v) & 1u) return true;
      seen |= fresh;
      frontier |= fresh;
    }
    return false;
  };
  auto rec = [&](auto&& self, std::size_t e) -> void {
    if (stopped || exhausted) return;
    if (e == edges.size()) {
      if (count == limit) {
        exhausted = true;
        return;
      }
      ++count;
      if (!visit(static_cast<const Orientation&>(later))) stopped = true;
      return;
    }
    auto [u, v] = edges[e];
    for (int dir = 0; dir < 2 && !stopped && !exhausted; ++dir) {
      const int lo = dir == 0 ? u : v, hi = dir == 0 ? v : u;
      if (reaches(hi, lo)) continue;
      later[lo] |= SimpleGraph::bit(hi);
      self(self, e + 1);
      later[lo] &= ~SimpleGraph::bit(hi);
    }
  };
  rec(rec, 0);
  return !exhausted;
}

/// Orientation after moving chord k from bottom to top or back.
inline Orientation flip_at(const Orientation& later, int k) {
  Orientation out = later;
  const SimpleGraph::Row up = later[k];
  SimpleGraph::Row down = 0;
  for (int i = 0; i < static_cast<int>(later.size()); ++i)
    if ((later[i] >> k) & 1u) down |= SimpleGraph::bit(i);
  out[k] = down;
  for (SimpleGraph::Row r = up; r; r &= r - 1) out[std::countr_zero(r)] |= SimpleGraph::bit(k);
  for (SimpleGraph::Row r = down; r; r &= r - 1) out[std::countr_zero(r)] &= ~SimpleGraph::bit(k);
  return out;
}

inline bool is_source(const Orientation& later, int k) {
  for (std::size_t i = 0; i < later.size(); ++i)
    if ((later[i] >> k) & 1u) return false;
  return true;
}
inline bool is_sink(const Orientation& later, int k) { return later[k] == 0; }

struct CoxeterOrbit {
  ChordSystem representative;
  IntPolynomial char_poly;
  std::size_t size = 0;
};

struct OrderingsResult {
  std::vector<CoxeterOrbit> orbits;
  std::size_t acyclic = 0;        // acyclic orientations examined
  std::size_t coxeter_type = 0;   // of which admit Coxeter-type orientations
  bool complete = true;           // false if the budget ran out
};

inline constexpr std::size_t kDefaultOrientationBudget = 1'000'000;

/// Calls visit(later) for every Coxeter-type over-relation of the diagram.
template <class Visit>
bool for_each_coxeter_relation(const ChordDiagram& d, std::size_t budget, Visit visit) {
  return for_each_acyclic_orientation(incidence_graph(d), budget, [&](const Orientation& later) {
    if (!coxeter_orientations(d, later)) return true;
    return visit(later);
  });
}

/// Coxeter-type directed diagrams on d grouped into sink/source orbits, in
/// order of first appearance; each orbit is reported by its first member.
inline OrderingsResult coxeter_orderings(const ChordDiagram& d, std::size_t budget = kDefaultOrientationBudget) {
  OrderingsResult out;
  std::vector<Orientation> members;
  std::unordered_map<Orientation, int, detail::OrientationHash> index;
  out.complete = for_each_acyclic_orientation(incidence_graph(d), budget, [&](const Orientation& later) {
    ++out.acyclic;
    if (!coxeter_orientations(d, later)) return true;
    index.emplace(later, static_cast<int>(members.size()));
    members.push_back(later);
    return true;
  });
  out.coxeter_type = members.size();

  std::vector<int> parent(members.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const int n = d.size();
  for (std::size_t m = 0; m < members.size(); ++m)
    for (int k = 0; k < n; ++k) {
      if (!is_source(members[m], k) && !is_sink(members[m], k)) continue;
      auto it = index.find(flip_at(members[m], k));
      if (it == index.end()) continue;  // beyond the budget
      const int a = find(static_cast<int>(m)), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> orbit_of_root(members.size(), -1);
  for (std::size_t m = 0; m < members.size(); ++m) {
    const int r = find(static_cast<int>(m));
    if (orbit_of_root[r] < 0) {
      orbit_of_root[r] = static_cast<int>(out.orbits.size());
      ChordSystem s = system_of(d, members[m]);
      IntPolynomial p = char_poly(monodromy(seifert_matrix(s)));
      out.orbits.push_back({std::move(s), std::move(p), 0});
    }
    ++out.orbits[orbit_of_root[r]].size;
  }
  return out;
}

}  // namespace coxlink
