#include "homg/cores.hpp"

#include "homg/homsolver.hpp"

namespace homg {

namespace {

VertexSet all_vertices(const Graph& g) {
  return VertexSet((1u << g.n()) - 1);
}

bool retracts_without(const Graph& h, int v) {
  Graph smaller = induced(h, VertexSet(all_vertices(h) & ~(1u << v)));
  return find_hom(h, smaller).has_value();
}

}  // namespace

bool is_core(const Graph& h) {
  for (int v = 0; v < h.n(); ++v)
    if (retracts_without(h, v)) return false;
  return true;
}

Graph compute_core(const Graph& h) {
  Graph cur = h;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (int v = 0; v < cur.n(); ++v) {
      Graph smaller = induced(cur, VertexSet(all_vertices(cur) & ~(1u << v)));
      if (find_hom(cur, smaller).has_value()) {
        cur = smaller;
        shrunk = true;
        break;
      }
    }
  }
  return cur;
}

namespace {

bool has_k4(const Graph& h) {
  for (int a = 0; a < h.n(); ++a)
    for (int b = a + 1; b < h.n(); ++b) {
      if (!h.has_edge(a, b)) continue;
      // Two adjacent common neighbours of an edge complete a K4.
      VertexSet common = h.neighbors(a) & h.neighbors(b);
      VertexSet c = common;
      while (c) {
        int x = __builtin_ctz(c);
        c &= c - 1;
        if (h.neighbors(x) & c) return true;
      }
    }
  return false;
}

bool is_cycle_graph(const Graph& g) {
  if (g.n() < 3 || g.edge_count() != g.n()) return false;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

}  // namespace

bool quick_core_filter(const Graph& h) {
  if (h.n() != 7)
    throw std::invalid_argument("quick_core_filter expects exactly 7 vertices");
  return !is_k_colorable(h, 3) && !has_k4(h) && h.max_degree() <= 4;
}

bool min_degree_check(const Graph& h) {
  return h.min_degree() >= 2;
}

bool has_induced_odd_hole_or_antihole(const Graph& h) {
  for (std::uint32_t s = 0; s < (1u << h.n()); ++s) {
    int k = __builtin_popcount(s);
    if (k < 5 || k % 2 == 0) continue;
    Graph sub = induced(h, VertexSet(s));
    if (is_cycle_graph(sub) || is_cycle_graph(complement(sub))) return true;
  }
  return false;
}

}  // namespace homg
