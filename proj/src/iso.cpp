#include "homg/iso.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace homg {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (int(perm.size()) != g.n())
    throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<char> seen(g.n(), 0);
  for (int p : perm) {
    if (p < 0 || p >= g.n() || seen[p])
      throw std::invalid_argument("relabel: not a permutation");
    seen[p] = 1;
  }
  Graph out(g.n());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

namespace {

// Upper-triangle adjacency bits in graph6 order, MSB first; lexicographic
// comparison of words equals comparison of the bit-string.
using Key = std::array<std::uint64_t, 2>;

Key key_from_positions(const Graph& g, const std::vector<int>& old_at) {
  Key k{0, 0};
  int t = 0;
  for (int j = 1; j < g.n(); ++j)
    for (int i = 0; i < j; ++i, ++t)
      if (g.has_edge(old_at[i], old_at[j])) k[t / 64] |= 1ull << (63 - t % 64);
  return k;
}

// Split color classes by sorted neighbour-color multisets until stable.
// New color ids are ranks of (old color, signature), so ties resolve the
// same way on every run.
void refine(const Graph& g, std::vector<int>& colors) {
  const int n = g.n();
  int ncolors = 0;
  for (int c : colors) ncolors = std::max(ncolors, c + 1);
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> sigs(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{colors[v]};
      VertexSet nb = g.neighbors(v);
      while (nb) {
        int w = __builtin_ctz(nb);
        nb &= nb - 1;
        s.push_back(colors[w]);
      }
      std::sort(s.begin() + 1, s.end());
      sigs[v] = {std::move(s), v};
    }
    auto sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    int next = -1;
    std::vector<int> fresh(n);
    for (int r = 0; r < n; ++r) {
      if (r == 0 || sorted[r].first != sorted[r - 1].first) ++next;
      fresh[sorted[r].second] = next;
    }
    if (next + 1 == ncolors) {
      colors = fresh;  // normalized ranks, stable partition
      return;
    }
    ncolors = next + 1;
    colors = fresh;
  }
}

struct CanonSearch {
  const Graph& g;
  Key best{~0ull, ~0ull};
  std::vector<int> best_perm{};
  bool have = false;

  void leaf(const std::vector<int>& colors) {
    std::vector<int> old_at(g.n());
    for (int v = 0; v < g.n(); ++v) old_at[colors[v]] = v;
    Key k = key_from_positions(g, old_at);
    if (!have || k < best) {
      have = true;
      best = k;
      best_perm = colors;
    }
  }

  void run(std::vector<int> colors) {
    refine(g, colors);
    const int n = g.n();
    std::vector<int> cell_size(n, 0);
    for (int c : colors) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (cell_size[c] > 1 && (target < 0 || cell_size[c] < cell_size[target]))
        target = c;
    if (target < 0) {
      leaf(colors);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      auto next = colors;
      next[v] = n;  // fresh singleton color, renormalized by refine
      run(std::move(next));
    }
  }
};

}  // namespace

CanonicalForm canon(const Graph& g) {
  const int n = g.n();
  std::vector<int> identity(n);
  for (int v = 0; v < n; ++v) identity[v] = v;
  // Vertex-uniform degenerate cases would branch factorially; their
  // canonical form is trivially the identity labeling.
  if (g.edge_count() == 0 || g.edge_count() == n * (n - 1) / 2)
    return {graph6_encode(g), identity};
  CanonSearch search{g};
  search.run(std::vector<int>(n, 0));
  return {graph6_encode(relabel(g, search.best_perm)), search.best_perm};
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  return canon(a).g6 == canon(b).g6;
}

namespace {

void aut_rec(const Graph& g, const std::vector<int>& colors, std::vector<int>& map,
             VertexSet used, int v, std::vector<std::vector<int>>& out) {
  const int n = g.n();
  if (v == n) {
    out.push_back(map);
    return;
  }
  for (int w = 0; w < n; ++w) {
    if ((used >> w) & 1) continue;
    if (colors[w] != colors[v]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      if (g.has_edge(u, v) != g.has_edge(map[u], w)) ok = false;
    if (!ok) continue;
    map[v] = w;
    aut_rec(g, colors, map, used | (VertexSet(1) << w), v + 1, out);
  }
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const Graph& g) {
  std::vector<int> colors(g.n(), 0);
  refine(g, colors);
  std::vector<std::vector<int>> out;
  std::vector<int> map(g.n(), -1);
  aut_rec(g, colors, map, 0, 0, out);
  return out;  // generated in lexicographic order
}

}  // namespace homg
