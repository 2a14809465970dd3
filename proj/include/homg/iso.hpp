#pragma once

// Canonical labeling by color refinement plus backtracking over the
// refinement-compatible labelings, minimizing the upper-triangle adjacency
// bit-string.  Small graphs only; no partition-backtracking shortcuts.

#include <string>
#include <vector>

#include "homg/graph.hpp"

namespace homg {

struct CanonicalForm {
  std::string g6;         // graph6 of the relabelled graph
  std::vector<int> perm;  // perm[old] = new; applying it yields g6's graph
};

// Relabel g so vertex v becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

CanonicalForm canon(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

// All edge-preserving bijections, each as perm[old] = new, sorted
// lexicographically.  Meant for n <= 10.
std::vector<std::vector<int>> automorphisms(const Graph& g);

}  // namespace homg
