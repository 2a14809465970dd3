#include "homg/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace homg {

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = kMaxVertices;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

Graph clique(int k) {
  Graph g(k);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(k);
  for (int v = 0; v < k; ++v) g.add_edge(v, (v + 1) % k);
  return g;
}

Graph complement(const Graph& g) {
  Graph c(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

Graph add_universal(const Graph& g, int p) {
  if (p < 0) throw std::invalid_argument("cannot add a negative vertex count");
  Graph out(g.n() + p);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int w = g.n(); w < out.n(); ++w)
    for (int v = 0; v < w; ++v) out.add_edge(v, w);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.n() + b.n());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(a.n() + u, a.n() + v);
  return out;
}

namespace {

// The seven-vertex sporadic cores share a rigid five-cycle 0-1-2-3-4; the two
// extra vertices are 5 and 6.  Each graph is given by the extra vertices'
// neighbourhoods.
Graph sporadic7(VertexSet nbr5, VertexSet nbr6, bool edge56) {
  Graph g = cycle(5);
  Graph out(7);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (int v = 0; v < 5; ++v) {
    if ((nbr5 >> v) & 1) out.add_edge(5, v);
    if ((nbr6 >> v) & 1) out.add_edge(6, v);
  }
  if (edge56) out.add_edge(5, 6);
  return out;
}

constexpr VertexSet vs(std::initializer_list<int> verts) {
  VertexSet s = 0;
  for (int v : verts) s |= VertexSet(1) << v;
  return s;
}

}  // namespace

Graph named(const std::string& name) {
  if (name == "grotzsch") {
    // Outer five-cycle 0..4, inner vertex 5+i adjacent to outer (i-1) and
    // (i+1) mod 5, hub 10 adjacent to all inner vertices.
    Graph g(11);
    for (int i = 0; i < 5; ++i) {
      g.add_edge(i, (i + 1) % 5);
      g.add_edge(5 + i, (i + 1) % 5);
      g.add_edge(5 + i, (i + 4) % 5);
      g.add_edge(10, 5 + i);
    }
    return g;
  }
  if (name == "petersen") {
    // Outer five-cycle 0..4, spokes i--5+i, inner pentagram step two.
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
      g.add_edge(i, (i + 1) % 5);
      g.add_edge(i, 5 + i);
      g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
  }
  if (name == "g1") return sporadic7(vs({0, 3, 4}), vs({0, 1, 2}), false);
  if (name == "g2") return sporadic7(vs({0, 1, 2}), vs({0, 2, 3, 4}), false);
  if (name == "g3") return sporadic7(vs({0, 1, 2, 3}), vs({0, 2, 3, 4}), false);
  if (name == "g4") return sporadic7(vs({0, 1, 2}), vs({0, 3, 4}), true);
  if (name == "g5") return sporadic7(vs({0, 1, 3, 4}), vs({0, 2, 4}), false);
  if (name == "g6") return sporadic7(vs({0, 1, 3, 4}), vs({0, 2, 3, 4}), false);
  if (name == "c5p1") return add_universal(cycle(5), 1);
  if (name == "c5p2") return add_universal(cycle(5), 2);
  throw std::invalid_argument("unknown graph name: " + name);
}

std::vector<std::string> named_graph_list() {
  return {"grotzsch", "petersen", "g1", "g2", "g3",
          "g4",       "g5",       "g6", "c5p1", "c5p2"};
}

Graph induced(const Graph& g, VertexSet keep) {
  if (keep >> g.n())
    throw std::invalid_argument("induced set contains vertices out of range");
  std::vector<int> map(g.n(), -1);
  int m = 0;
  for (int v = 0; v < g.n(); ++v)
    if ((keep >> v) & 1) map[v] = m++;
  Graph out(m);
  for (auto [u, v] : g.edges())
    if (map[u] >= 0 && map[v] >= 0) out.add_edge(map[u], map[v]);
  return out;
}

std::optional<int> odd_girth(const Graph& g) {
  // Shortest odd closed walk through s, via BFS over (vertex, parity)
  // states.  A shortest odd closed walk is a shortest odd cycle.
  int best = -1;
  for (int s = 0; s < g.n(); ++s) {
    std::vector<int> dist(2 * g.n(), -1);
    std::vector<int> queue{2 * s};
    dist[2 * s] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      int cur = queue[head];
      int v = cur / 2, parity = cur % 2;
      VertexSet nb = g.neighbors(v);
      while (nb) {
        int w = __builtin_ctz(nb);
        nb &= nb - 1;
        int nxt = 2 * w + 1 - parity;
        if (dist[nxt] < 0) {
          dist[nxt] = dist[cur] + 1;
          queue.push_back(nxt);
        }
      }
    }
    int odd = dist[2 * s + 1];
    if (odd >= 0 && (best < 0 || odd < best)) best = odd;
  }
  if (best < 0) return std::nullopt;
  return best;
}

VertexSet component_of(const Graph& g, int v) {
  VertexSet seen = VertexSet(1) << v;
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    while (frontier) {
      int u = __builtin_ctz(frontier);
      frontier &= frontier - 1;
      next |= g.neighbors(u);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  return set_size(component_of(g, 0)) == g.n();
}

std::string graph6_encode(const Graph& g) {
  std::string out;
  out.push_back(char(g.n() + 63));
  int acc = 0, nbits = 0;
  for (int j = 1; j < g.n(); ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(char(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(char((acc << (6 - nbits)) + 63));
  return out;
}

Graph graph6_decode(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("graph6: empty string");
  for (char c : s)
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6: byte out of printable range");
  int n = s[0] - 63;
  if (n > kMaxVertices)
    throw std::invalid_argument("graph6: more than 16 vertices unsupported");
  int nbits = n * (n - 1) / 2;
  size_t expect = 1 + (nbits + 5) / 6;
  if (s.size() != expect)
    throw std::invalid_argument("graph6: length does not match vertex count");
  Graph g(n);
  int bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if ((s[1 + bit / 6] - 63) >> (5 - bit % 6) & 1) g.add_edge(i, j);
  // Padding bits beyond the triangle must be zero.
  for (int b = nbits; b < 6 * int(s.size() - 1); ++b)
    if ((s[1 + b / 6] - 63) >> (5 - b % 6) & 1)
      throw std::invalid_argument("graph6: nonzero padding bits");
  return g;
}

Graph read_edge_list(std::istream& in) {
  int n, m;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: bad header");
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("edge list: vertex count out of range");
  if (m < 0) throw std::invalid_argument("edge list: negative edge count");
  Graph g(n);
  for (int e = 0; e < m; ++e) {
    int u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge list: endpoint out of range");
    g.add_edge(u, v);
  }
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  auto es = g.edges();
  out << g.n() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

}  // namespace homg
