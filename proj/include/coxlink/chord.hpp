#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numbers>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "coxlink/errors.hpp"
#include "coxlink/graph.hpp"

namespace coxlink {

/// Unordered chord; endpoints normalized so that a < b.
struct Chord {
  int a = 0;
  int b = 0;
  friend bool operator==(const Chord&, const Chord&) = default;
};

struct OrientedChord {
  int tail = 0;
  int head = 0;
  OrientedChord reversed() const { return {head, tail}; }
  Chord unoriented() const { return {std::min(tail, head), std::max(tail, head)}; }
  friend bool operator==(const OrientedChord&, const OrientedChord&) = default;
};

/// Perfect matching on the points 0..2n-1, read counterclockwise on the
/// boundary circle. Chord indices are stable identities.
class ChordDiagram {
 public:
  ChordDiagram() = default;

  explicit ChordDiagram(const std::vector<std::pair<int, int>>& pairs) {
    chords_.reserve(pairs.size());
    for (auto [x, y] : pairs) chords_.push_back({std::min(x, y), std::max(x, y)});
    validate();
  }

  explicit ChordDiagram(std::vector<Chord> chords) : chords_(std::move(chords)) {
    for (auto& c : chords_)
      if (c.a > c.b) std::swap(c.a, c.b);
    validate();
  }

  int size() const noexcept { return static_cast<int>(chords_.size()); }
  int points() const noexcept { return 2 * size(); }

  const Chord& chord(int i) const {
    check(i);
    return chords_[i];
  }
  const std::vector<Chord>& chords() const noexcept { return chords_; }

  int owner(int point) const {
    if (point < 0 || point >= points()) throw ValidationError("endpoint index out of range");
    return owner_[point];
  }
  int partner(int point) const {
    const Chord& c = chords_[owner(point)];
    return c.a == point ? c.b : c.a;
  }

  void check(int i) const {
    if (i < 0 || i >= size()) throw ValidationError("chord index " + std::to_string(i) + " out of range");
  }

  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;

 private:
  void validate() {
    if (chords_.empty()) throw ValidationError("a chord diagram needs at least one chord");
    const int np = points();
    owner_.assign(np, -1);
    for (int i = 0; i < size(); ++i) {
      for (int p : {chords_[i].a, chords_[i].b}) {
        if (p < 0 || p >= np)
          throw ValidationError("endpoint " + std::to_string(p) + " outside 0.." + std::to_string(np - 1));
        if (owner_[p] >= 0)
          throw ValidationError("endpoint " + std::to_string(p) + " used by more than one chord");
        owner_[p] = i;
      }
      if (chords_[i].a == chords_[i].b) throw ValidationError("chord endpoints must differ");
    }
  }

  std::vector<Chord> chords_;
  std::vector<int> owner_;
};

inline bool interleaved(const Chord& x, const Chord& y) {
  const bool c_in = x.a < y.a && y.a < x.b;
  const bool d_in = x.a < y.b && y.b < x.b;
  return c_in != d_in;
}

inline bool crosses(const ChordDiagram& d, int i, int j) {
  d.check(i);
  d.check(j);
  if (i == j) throw ValidationError("crosses() needs two distinct chords");
  return interleaved(d.chord(i), d.chord(j));
}

/// Linking number of two oriented chords as oriented 0-spheres: -1 when the
/// counterclockwise order is (tail_i, tail_j, head_i, head_j), +1 for the
/// opposite interleaving, 0 when they do not cross. Antisymmetric.
inline int link(const OrientedChord& x, const OrientedChord& y) {
  if (!interleaved(x.unoriented(), y.unoriented())) return 0;
  // Is y.tail on the counterclockwise arc from x.tail to x.head?
  const bool tail_inside =
      x.tail < x.head ? (x.tail < y.tail && y.tail < x.head) : (y.tail > x.tail || y.tail < x.head);
  return tail_inside ? -1 : 1;
}

inline SimpleGraph incidence_graph(const ChordDiagram& d) {
  SimpleGraph g(d.size());
  for (int i = 0; i < d.size(); ++i)
    for (int j = i + 1; j < d.size(); ++j)
      if (interleaved(d.chord(i), d.chord(j))) g.add_edge(i, j);
  return g;
}

/// Ordered, oriented chord diagram. Chords keep their diagram identity; the
/// total order is stored separately as order()[position] = chord id, so
/// position p is the chord written l_{p+1} in the usual notation.
class ChordSystem {
 public:
  ChordSystem() = default;

  explicit ChordSystem(std::vector<OrientedChord> chords) : chords_(std::move(chords)) {
    order_.resize(chords_.size());
    std::iota(order_.begin(), order_.end(), 0);
    validate();
  }

  ChordSystem(std::vector<OrientedChord> chords, std::vector<int> order)
      : chords_(std::move(chords)), order_(std::move(order)) {
    validate();
  }

  int size() const noexcept { return static_cast<int>(chords_.size()); }
  int points() const noexcept { return 2 * size(); }

  const OrientedChord& chord(int id) const {
    diagram_.check(id);
    return chords_[id];
  }
  const std::vector<OrientedChord>& chords() const noexcept { return chords_; }
  const std::vector<int>& order() const noexcept { return order_; }

  int id_at(int position) const {
    diagram_.check(position);
    return order_[position];
  }
  int position_of(int id) const {
    diagram_.check(id);
    return position_[id];
  }
  const OrientedChord& at(int position) const { return chords_[id_at(position)]; }

  const ChordDiagram& diagram() const noexcept { return diagram_; }

  ChordSystem with_order(std::vector<int> order) const { return ChordSystem(chords_, std::move(order)); }
  ChordSystem with_reversed(int id) const {
    auto c = chords_;
    diagram_.check(id);
    c[id] = c[id].reversed();
    return ChordSystem(std::move(c), order_);
  }

  friend bool operator==(const ChordSystem& x, const ChordSystem& y) {
    return x.chords_ == y.chords_ && x.order_ == y.order_;
  }

 private:
  void validate() {
    std::vector<Chord> plain;
    plain.reserve(chords_.size());
    for (const auto& c : chords_) {
      if (c.tail == c.head) throw ValidationError("chord tail and head must differ");
      plain.push_back(c.unoriented());
    }
    diagram_ = ChordDiagram(std::move(plain));
    if (order_.size() != chords_.size()) throw ValidationError("order must list every chord once");
    position_.assign(chords_.size(), -1);
    for (std::size_t p = 0; p < order_.size(); ++p) {
      const int id = order_[p];
      if (id < 0 || id >= size() || position_[id] >= 0)
        throw ValidationError("order must be a permutation of the chords");
      position_[id] = static_cast<int>(p);
    }
  }

  std::vector<OrientedChord> chords_;
  std::vector<int> order_;
  std::vector<int> position_;
  ChordDiagram diagram_;
};

/// Linking number of the chords with identities i and j.
inline int linking_number(const ChordSystem& s, int i, int j) {
  if (i == j) throw ValidationError("linking_number() needs two distinct chords");
  return link(s.chord(i), s.chord(j));
}

/// Incidence graph with vertices labelled by order position.
inline SimpleGraph ordered_incidence_graph(const ChordSystem& s) {
  SimpleGraph g(s.size());
  for (int p = 0; p < s.size(); ++p)
    for (int q = p + 1; q < s.size(); ++q)
      if (interleaved(s.at(p).unoriented(), s.at(q).unoriented())) g.add_edge(p, q);
  return g;
}

/// Linking number with the earlier chord first, for positions p < q.
inline int ordered_link(const ChordSystem& s, int p, int q) { return link(s.at(p), s.at(q)); }

/// Every crossing pair links -1 when read earlier-chord first.
inline bool is_coxeter_type(const ChordSystem& s) {
  for (int p = 0; p < s.size(); ++p)
    for (int q = p + 1; q < s.size(); ++q)
      if (ordered_link(s, p, q) > 0) return false;
  return true;
}

namespace geometry {

/// Endpoint k of a 2n-point diagram sits at angle pi*k/n, rotated by a fixed
/// offset so that no chord is vertical.
inline double endpoint_offset(int n) { return 1.0 / (100.0 * n); }

inline double endpoint_angle(int k, int n) {
  return std::numbers::pi * k / n + endpoint_offset(n);
}

/// Slope rank of the chord {a, b}: chords sorted by this integer are sorted by
/// increasing slope dy/dx of the offset geometry. The direction angle of the
/// chord is (m + eps) * pi / (2n) modulo pi with m = (a + b + n) mod 2n and
/// 0 < eps < 1; mapping it into (-pi/2, pi/2) gives the rank below.
inline int slope_rank(const Chord& c, int n) {
  const int m = (c.a + c.b + n) % (2 * n);
  return m < n ? m : m - 2 * n;
}

}  // namespace geometry

/// Coxeter-type ordering by slopes: chords sorted by increasing slope (ties
/// are parallel and never cross, broken by id) and oriented left to right.
inline ChordSystem slope_order(const ChordDiagram& d) {
  const int n = d.size();
  std::vector<OrientedChord> oriented;
  oriented.reserve(n);
  for (const auto& c : d.chords()) {
    const double xa = std::cos(geometry::endpoint_angle(c.a, n));
    const double xb = std::cos(geometry::endpoint_angle(c.b, n));
    oriented.push_back(xa < xb ? OrientedChord{c.a, c.b} : OrientedChord{c.b, c.a});
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return geometry::slope_rank(d.chord(x), n) < geometry::slope_rank(d.chord(y), n);
  });
  return ChordSystem(std::move(oriented), std::move(order));
}

/// Oriented diagram plus, for every crossing pair, which chord lies over the
/// other (the later one in any compatible order).
class DirectedDiagram {
 public:
  DirectedDiagram() = default;

  /// `later[i][j]` true means chord j lies over chord i; must be defined on
  /// exactly the crossing pairs and antisymmetric there.
  DirectedDiagram(std::vector<OrientedChord> chords, const std::vector<std::vector<bool>>& later)
      : chords_(std::move(chords)) {
    std::vector<Chord> plain;
    for (const auto& c : chords_) plain.push_back(c.unoriented());
    diagram_ = ChordDiagram(std::move(plain));
    const int n = diagram_.size();
    if (static_cast<int>(later.size()) != n) throw ValidationError("relation size mismatch");
    rel_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(later[i].size()) != n) throw ValidationError("relation size mismatch");
      for (int j = 0; j < n; ++j) {
        const bool cross = i != j && interleaved(diagram_.chord(i), diagram_.chord(j));
        if (later[i][j] && !cross) throw ValidationError("over-relation defined on a non-crossing pair");
        if (cross && later[i][j] == later[j][i])
          throw ValidationError("exactly one chord of each crossing pair must lie over the other");
        rel_[i * n + j] = later[i][j] ? 1 : (cross ? -1 : 0);
      }
    }
  }

  int size() const noexcept { return diagram_.size(); }
  const ChordDiagram& diagram() const noexcept { return diagram_; }
  const OrientedChord& chord(int id) const {
    diagram_.check(id);
    return chords_[id];
  }
  const std::vector<OrientedChord>& chords() const noexcept { return chords_; }

  /// True iff chords `upper` and `lower` cross and `upper` lies over `lower`.
  bool lies_over(int upper, int lower) const { return rel(lower, upper) > 0; }

  bool is_source(int k) const { return extreme(k, -1); }
  bool is_sink(int k) const { return extreme(k, +1); }

  /// Edges (lower, upper) of the directed incidence graph.
  std::vector<std::pair<int, int>> arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        if (rel(i, j) > 0) out.emplace_back(i, j);
    return out;
  }

  friend bool operator==(const DirectedDiagram&, const DirectedDiagram&) = default;

 private:
  friend DirectedDiagram sink_source_move(const DirectedDiagram&, int);

  int rel(int i, int j) const {
    diagram_.check(i);
    diagram_.check(j);
    return rel_[static_cast<std::size_t>(i) * size() + j];
  }
  // All defined relations at k have sign `want` (as seen from k).
  bool extreme(int k, int want) const {
    diagram_.check(k);
    for (int j = 0; j < size(); ++j)
      if (rel(k, j) != 0 && rel(k, j) != -want) return false;
    return true;
  }

  std::vector<OrientedChord> chords_;
  ChordDiagram diagram_;
  std::vector<std::int8_t> rel_;  // rel(i,j) = +1: j over i; -1: i over j; 0: disjoint
};

inline DirectedDiagram to_directed(const ChordSystem& s) {
  const int n = s.size();
  std::vector<std::vector<bool>> later(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && interleaved(s.chord(i).unoriented(), s.chord(j).unoriented()) &&
          s.position_of(j) > s.position_of(i))
        later[i][j] = true;
  return DirectedDiagram(s.chords(), later);
}

/// Turns source k into a sink or vice versa. The band of k passes through the
/// disk, which also reverses k's orientation; this keeps every entry of the
/// bilinear form unchanged.
inline DirectedDiagram sink_source_move(const DirectedDiagram& dd, int k) {
  if (!dd.is_source(k) && !dd.is_sink(k))
    throw ValidationError("chord " + std::to_string(k) + " is neither a source nor a sink");
  DirectedDiagram out = dd;
  const int n = dd.size();
  for (int j = 0; j < n; ++j) {
    out.rel_[static_cast<std::size_t>(k) * n + j] = static_cast<std::int8_t>(-dd.rel(k, j));
    out.rel_[static_cast<std::size_t>(j) * n + k] = static_cast<std::int8_t>(-dd.rel(j, k));
  }
  out.chords_[k] = dd.chord(k).reversed();
  return out;
}

/// A compatible total order by topological sort, smallest id first among
/// the available chords.
inline ChordSystem order_from_directed(const DirectedDiagram& dd) {
  const int n = dd.size();
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (auto [lo, hi] : dd.arcs()) {
    succ[lo].push_back(hi);
    ++indegree[hi];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<int> order;
  order.reserve(n);
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int w : succ[v])
      if (--indegree[w] == 0) ready.push(w);
  }
  if (static_cast<int>(order.size()) != n)
    throw ValidationError("over-relation is cyclic; no compatible chord order exists");
  return ChordSystem(dd.chords(), std::move(order));
}

namespace matchings {

/// Partner array of a diagram: partner[p] is the other endpoint of p's chord.
inline std::vector<int> partner_array(const ChordDiagram& d) {
  std::vector<int> p(d.points());
  for (const auto& c : d.chords()) {
    p[c.a] = c.b;
    p[c.b] = c.a;
  }
  return p;
}

inline ChordDiagram from_partner_array(const std::vector<int>& p) {
  std::vector<std::pair<int, int>> chords;
  for (int x = 0; x < static_cast<int>(p.size()); ++x)
    if (x < p[x]) chords.emplace_back(x, p[x]);
  return ChordDiagram(chords);
}

/// Image of a partner array under x -> (sign * x + shift) mod N.
inline std::vector<int> dihedral_image(const std::vector<int>& p, int shift, bool reflect) {
  const int np = static_cast<int>(p.size());
  auto map = [&](int x) { return ((reflect ? -x : x) + shift % np + 2 * np) % np; };
  std::vector<int> q(np);
  for (int x = 0; x < np; ++x) q[map(x)] = map(p[x]);
  return q;
}

/// Lexicographically least partner array over rotations and reflections.
inline std::vector<int> canonical_partners(const std::vector<int>& p) {
  std::vector<int> best = p;
  const int np = static_cast<int>(p.size());
  for (int reflect = 0; reflect < 2; ++reflect)
    for (int r = 0; r < np; ++r) {
      auto q = dihedral_image(p, r, reflect != 0);
      if (q < best) best = std::move(q);
    }
  return best;
}

inline bool is_canonical(const std::vector<int>& p) {
  const int np = static_cast<int>(p.size());
  for (int reflect = 0; reflect < 2; ++reflect)
    for (int r = 0; r < np; ++r)
      if (dihedral_image(p, r, reflect != 0) < p) return false;
  return true;
}

/// Same diagram up to rotation and reflection of the endpoint circle.
inline bool equivalent(const ChordDiagram& x, const ChordDiagram& y) {
  return x.size() == y.size() &&
         canonical_partners(partner_array(x)) == canonical_partners(partner_array(y));
}

/// Visits every perfect matching of 2n points in increasing partner-array
/// order. The visitor returns false to stop; the return value is the number
/// of matchings visited.
template <class Visitor>
std::size_t for_each(int n, Visitor&& visit) {
  const int np = 2 * n;
  std::vector<int> p(np, -1);
  std::size_t visited = 0;
  bool stop = false;
  std::function<void(int)> rec = [&](int matched) {
    if (stop) return;
    if (matched == np) {
      ++visited;
      if (!visit(static_cast<const std::vector<int>&>(p))) stop = true;
      return;
    }
    int x = 0;
    while (p[x] >= 0) ++x;
    for (int y = x + 1; y < np && !stop; ++y) {
      if (p[y] >= 0) continue;
      p[x] = y;
      p[y] = x;
      rec(matched + 2);
      p[x] = p[y] = -1;
    }
  };
  if (n >= 1) rec(0);
  return visited;
}

/// Adjacency rows of the incidence graph of a partner array.
inline std::vector<SimpleGraph::Row> crossing_rows(const std::vector<int>& p) {
  const int np = static_cast<int>(p.size());
  std::vector<int> id(np, -1);
  std::vector<Chord> chords;
  for (int x = 0; x < np; ++x)
    if (x < p[x]) {
      id[x] = id[p[x]] = static_cast<int>(chords.size());
      chords.push_back({x, p[x]});
    }
  std::vector<SimpleGraph::Row> rows(chords.size(), 0);
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j)
      if (interleaved(chords[i], chords[j])) {
        rows[i] |= SimpleGraph::bit(static_cast<int>(j));
        rows[j] |= SimpleGraph::bit(static_cast<int>(i));
      }
  return rows;
}

/// Canonical representatives of all diagrams with n chords.
inline std::vector<ChordDiagram> all_up_to_dihedral(int n) {
  std::vector<ChordDiagram> out;
  for_each(n, [&](const std::vector<int>& p) {
    if (is_canonical(p)) out.push_back(from_partner_array(p));
    return true;
  });
  return out;
}

}  // namespace matchings

}  // namespace coxlink
