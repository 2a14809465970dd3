#pragma once

// Homomorphism search G -> H.  Targets are bit-row graphs (n <= 16); sources
// may be much larger (power graphs for polymorphism search), so they get a
// plain adjacency-list representation.  Search is backtracking over
// per-variable target bitmasks with AC-3 propagation and
// smallest-domain-first variable order; ties and value order are by lowest
// index, so identical inputs always produce identical witnesses.

#include <functional>
#include <optional>
#include <vector>

#include "homg/graph.hpp"

namespace homg {

// Source-side graph: adjacency lists, no vertex cap beyond memory.
struct AdjGraph {
  int n = 0;
  std::vector<std::vector<int>> nbr;

  AdjGraph() = default;
  explicit AdjGraph(int n) : n(n), nbr(n) {}
  static AdjGraph from_graph(const Graph& g);

  void add_edge(int u, int v) {
    nbr[u].push_back(v);
    nbr[v].push_back(u);
  }
  long long edge_count() const;
};

// Partial assignment of target vertices to source vertices; -1 = unassigned.
// A default-constructed (empty) map means "no pins" for any source size.
struct PartialMap {
  PartialMap() = default;
  explicit PartialMap(int size) : image(size, -1) {}

  std::vector<int> image;

  int size() const { return int(image.size()); }
  bool assigned(int v) const { return image[v] >= 0; }
  void set(int v, int x) { image[v] = x; }
};

// Pins with an image outside [0, h.n) are reported as std::invalid_argument,
// distinct from an unsatisfiable instance (which returns nullopt).
std::optional<PartialMap> find_hom(const AdjGraph& g, const Graph& h,
                                   const PartialMap& pins = {});
std::optional<PartialMap> find_hom(const Graph& g, const Graph& h,
                                   const PartialMap& pins = {});

// Enumerate homomorphisms in deterministic order; callback returns false to
// stop early.
void for_each_hom(const AdjGraph& g, const Graph& h, const PartialMap& pins,
                  const std::function<bool(const std::vector<int>&)>& cb);

// First homomorphism, in deviation order, that differs from every table in
// `forbidden` (each a total map).  The search branches on the first variable
// where the solution deviates from forbidden[0], so it never enumerates the
// solution space.
std::optional<PartialMap> find_hom_excluding(
    const AdjGraph& g, const Graph& h, const PartialMap& pins,
    const std::vector<std::vector<int>>& forbidden);

// Exhaustive |V_h|^|V_g| oracle; independent of the solver machinery.
// Budget: at most 10^7 candidate maps, else budget_error.
long long count_homs(const Graph& g, const Graph& h);

bool is_k_colorable(const Graph& g, int k);

}  // namespace homg
