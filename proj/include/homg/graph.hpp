#pragma once

// Simple undirected graphs on at most 16 vertices, stored as one adjacency
// bitmask per vertex.  Everything downstream (solver targets, cores,
// polymorphism search) assumes this cap, so the constructor enforces it.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace homg {

constexpr int kMaxVertices = 16;

// Subset of the vertex range [0,16), one bit per vertex.
using VertexSet = std::uint16_t;

inline int set_size(VertexSet s) { return __builtin_popcount(s); }

// Thrown when an operation would blow past its documented enumeration budget.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Graph {
public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("graph order must be in [0,16]");
  }

  int n() const { return n_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj_[u] |= VertexSet(1) << v;
    adj_[v] |= VertexSet(1) << u;
  }

  VertexSet neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return set_size(neighbors(v)); }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += set_size(adj_[v]);
    return twice / 2;
  }

  int min_degree() const;
  int max_degree() const;

  // Edges as (u,v) pairs with u < v, ascending.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
  }

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

Graph clique(int k);
Graph cycle(int k);  // k >= 3
Graph complement(const Graph& g);
// g plus p extra vertices adjacent to everything (including each other).
Graph add_universal(const Graph& g, int p);
Graph disjoint_union(const Graph& a, const Graph& b);

// Fixed catalogue of graphs used throughout: "grotzsch", "petersen",
// "g1".."g6", "c5p1", "c5p2".  Unknown names throw.
Graph named(const std::string& name);
std::vector<std::string> named_graph_list();

// Subgraph induced by `keep`, vertices relabelled in ascending order.
Graph induced(const Graph& g, VertexSet keep);

// Length of a shortest odd cycle; nullopt when the graph is bipartite.
// A shortest odd cycle is automatically chordless, so this equals the
// length of the smallest induced odd cycle.
std::optional<int> odd_girth(const Graph& g);

bool is_connected(const Graph& g);
// Vertex set of the component containing v.
VertexSet component_of(const Graph& g, int v);

std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& s);

// Text format: header "n m", then m lines "u v".
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace homg
