#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "coxlink/errors.hpp"

namespace coxlink {

/// Undirected simple graph on at most 64 vertices. Vertex indices double as
/// the vertex order wherever an order is needed.
class SimpleGraph {
 public:
  static constexpr int kMaxVertices = 64;
  using Row = std::uint64_t;

  SimpleGraph() = default;
  explicit SimpleGraph(int n) : rows_(check_count(n), 0) {}

  SimpleGraph(int n, const std::vector<std::pair<int, int>>& edges) : SimpleGraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int size() const noexcept { return static_cast<int>(rows_.size()); }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ValidationError("self-loops are not allowed");
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
  }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[u] >> v) & 1u;
  }

  Row neighbors(int u) const {
    check_vertex(u);
    return rows_[u];
  }

  int degree(int u) const { return std::popcount(neighbors(u)); }

  std::size_t edge_count() const {
    std::size_t m = 0;
    for (Row r : rows_) m += std::popcount(r);
    return m / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u)
      for (int v = u + 1; v < size(); ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  /// Graph with vertex `perm[v]` playing the role of old vertex v.
  SimpleGraph relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != size()) throw ValidationError("permutation size mismatch");
    SimpleGraph g(size());
    for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
    return g;
  }

  SimpleGraph induced(const std::vector<int>& vertices) const {
    SimpleGraph g(static_cast<int>(vertices.size()));
    for (std::size_t a = 0; a < vertices.size(); ++a)
      for (std::size_t b = a + 1; b < vertices.size(); ++b)
        if (adjacent(vertices[a], vertices[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
    return g;
  }

  int component_count() const {
    Row seen = 0;
    int comps = 0;
    for (int s = 0; s < size(); ++s) {
      if ((seen >> s) & 1u) continue;
      ++comps;
      Row frontier = bit(s);
      seen |= frontier;
      while (frontier) {
        const int u = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const Row fresh = rows_[u] & ~seen;
        seen |= fresh;
        frontier |= fresh;
      }
    }
    return comps;
  }

  bool is_connected() const { return size() > 0 && component_count() == 1; }
  bool is_tree() const {
    return is_connected() && edge_count() == static_cast<std::size_t>(size() - 1);
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

  static Row bit(int v) { return Row{1} << v; }

 private:
  static std::size_t check_count(int n) {
    if (n < 0 || n > kMaxVertices) throw ValidationError("graph vertex count out of range");
    return static_cast<std::size_t>(n);
  }
  void check_vertex(int v) const {
    if (v < 0 || v >= size()) throw ValidationError("vertex index out of range");
  }

  std::vector<Row> rows_;
};

namespace graphs {

inline SimpleGraph path(int n) {
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline SimpleGraph cycle(int n) {
  if (n < 3) throw ValidationError("a cycle needs at least 3 vertices");
  SimpleGraph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline SimpleGraph complete(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline SimpleGraph complete_bipartite(int p, int q) {
  SimpleGraph g(p + q);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < q; ++b) g.add_edge(a, p + b);
  return g;
}

/// Vertices are bit strings of length `dim`; edges join strings at Hamming distance 1.
inline SimpleGraph hypercube(int dim) {
  const int n = 1 << dim;
  SimpleGraph g(n);
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (v < (v ^ (1 << b))) g.add_edge(v, v ^ (1 << b));
  return g;
}

}  // namespace graphs

namespace detail {

// Colour refinement to a stable equitable partition. Colours are renumbered by
// sorted signature, so the result is label-independent.
inline std::vector<int> refine(const SimpleGraph& g, std::vector<int> colour) {
  const int n = g.size();
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    const int ncol = colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
    for (int v = 0; v < n; ++v) {
      std::vector<int> s(ncol + 1, 0);
      s[0] = colour[v];
      for (SimpleGraph::Row r = g.neighbors(v); r; r &= r - 1) ++s[1 + colour[std::countr_zero(r)]];
      sig[v] = {std::move(s), v};
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& [s, v] : sig) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    std::vector<int> out(n);
    for (const auto& [s, v] : sig) out[v] = ids.at(s);
    if (next == ncol) return out;
    colour = std::move(out);
  }
}

inline bool extend_iso(const SimpleGraph& g, const SimpleGraph& h, const std::vector<int>& cg,
                       const std::vector<int>& ch, std::vector<int>& map, std::vector<bool>& used,
                       int v) {
  const int n = g.size();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[w] || cg[v] != ch[w]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == h.adjacent(map[u], w);
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (extend_iso(g, h, cg, ch, map, used, v + 1)) return true;
    used[w] = false;
  }
  return false;
}

inline std::vector<int> individualize(std::vector<int> colour, int v) {
  for (auto& c : colour) c *= 2;
  for (auto& c : colour) ++c;
  colour[v] -= 1;
  return colour;
}

inline void canonical_search(const SimpleGraph& g, const std::vector<int>& colour,
                             std::vector<SimpleGraph::Row>& best, bool& have_best) {
  const int n = g.size();
  // Target: first smallest non-singleton cell.
  std::vector<int> count(n, 0);
  for (int c : colour) ++count[c];
  int target = -1;
  for (int c = 0; c < n; ++c)
    if (count[c] > 1 && (target < 0 || count[c] < count[target])) target = c;
  if (target < 0) {
    // Discrete: colour is a labeling.
    std::vector<SimpleGraph::Row> code(n, 0);
    for (int u = 0; u < n; ++u)
      for (SimpleGraph::Row r = g.neighbors(u); r; r &= r - 1)
        code[colour[u]] |= SimpleGraph::bit(colour[std::countr_zero(r)]);
    if (!have_best || code > best) {
      best = std::move(code);
      have_best = true;
    }
    return;
  }
  for (int v = 0; v < n; ++v)
    if (colour[v] == target) canonical_search(g, refine(g, individualize(colour, v)), best, have_best);
}

}  // namespace detail

/// Isomorphism g -> h as a vertex map, found by backtracking over colour
/// classes of the refined partition.
inline std::optional<std::vector<int>> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h) {
  const int n = g.size();
  if (h.size() != n || g.edge_count() != h.edge_count()) return std::nullopt;
  // Refine g and h jointly so the colour names agree.
  SimpleGraph both(2 * n);
  for (auto [u, v] : g.edges()) both.add_edge(u, v);
  for (auto [u, v] : h.edges()) both.add_edge(n + u, n + v);
  if (2 * n > SimpleGraph::kMaxVertices) {
    std::vector<int> cg(n, 0), ch(n, 0), map(n, -1);
    std::vector<bool> used(n, false);
    if (detail::extend_iso(g, h, cg, ch, map, used, 0)) return map;
    return std::nullopt;
  }
  const auto colour = detail::refine(both, std::vector<int>(2 * n, 0));
  std::vector<int> cg(colour.begin(), colour.begin() + n), ch(colour.begin() + n, colour.end());
  auto sg = cg, sh = ch;
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return std::nullopt;
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  if (detail::extend_iso(g, h, cg, ch, map, used, 0)) return map;
  return std::nullopt;
}

inline bool isomorphic(const SimpleGraph& g, const SimpleGraph& h) {
  return find_isomorphism(g, h).has_value();
}

/// Canonical adjacency code: equal iff the graphs are isomorphic.
/// Individualization-refinement without automorphism pruning, so the cost
/// grows factorially on highly symmetric graphs; intended for n <= 8.
inline std::vector<SimpleGraph::Row> canonical_form(const SimpleGraph& g) {
  std::vector<SimpleGraph::Row> best;
  bool have = false;
  if (g.size() == 0) return best;
  detail::canonical_search(g, detail::refine(g, std::vector<int>(g.size(), 0)), best, have);
  best.insert(best.begin(), static_cast<SimpleGraph::Row>(g.size()));
  return best;
}

}  // namespace coxlink
