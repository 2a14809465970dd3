#pragma once

// Core recognition and computation, plus the cheap structural filters used
// when sieving 7-vertex candidates.

#include "homg/graph.hpp"

namespace homg {

// True iff no proper retraction exists: for every vertex v there is no
// homomorphism from h into h minus v.
bool is_core(const Graph& h);

// Smallest induced subgraph C with h -> C, found by greedily deleting
// vertices in ascending order and restarting after every success.  The
// result is deterministic; equality with other valid answers holds only up
// to isomorphism.
Graph compute_core(const Graph& h);

// Sufficient condition for a 7-vertex graph to be a core: not 3-colorable,
// no K4 subgraph, max degree at most 4.  Throws unless |V| = 7.
bool quick_core_filter(const Graph& h);

// Necessary condition for cores on >= 3 vertices: minimum degree >= 2.
bool min_degree_check(const Graph& h);

// Some odd k >= 5 with an induced k-cycle or induced complement of one.
bool has_induced_odd_hole_or_antihole(const Graph& h);

}  // namespace homg
