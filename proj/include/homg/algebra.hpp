#pragma once
// Graph powers, polymorphism search, semiprojection exclusion, projectivity
// certification, and (in)decomposability witnesses.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homg/graph.hpp"
#include "homg/homsolver.hpp"

namespace homg {

// Tuple <-> index codec, most significant coordinate first: the tuple
// (t_0..t_{m-1}) over n values has index sum t_j * n^(m-1-j). Fixed so
// witness tables are portable.
long long encode_tuple(const std::vector<int>& t, int n);
std::vector<int> decode_tuple(long long index, int n, int m);

// m-th categorical power of h: vertices are m-tuples in index order, edges
// join tuples adjacent in every coordinate. Throws budget_error when n^m
// exceeds 4096.
AdjGraph power(const Graph& h, int m);

// Converts a small adjacency-list graph back to the bitmask representation.
// Requires at most 16 vertices and no loops.
Graph to_graph16(const AdjGraph& g);

// Total operation V^m -> V given by a table in tuple-index order.
struct Polymorphism {
    int vertex_count = 0;
    int arity = 0;
    std::vector<int> table;

    bool operator==(const Polymorphism&) const = default;
};

// Table of the coordinate projection pi_i of arity m over n values.
std::vector<int> projection_table(int n, int m, int i);

// True iff the table is a homomorphism power(h, m) -> h. Throws on
// malformed tables or when the power budget is exceeded.
bool is_polymorphism(const Graph& h, const Polymorphism& f);

bool is_projection(const Polymorphism& f);
bool is_idempotent(const Polymorphism& f);

// All endomorphisms of h, sorted by table. Requires at most 10 vertices.
std::vector<std::vector<int>> unary_polymorphisms(const Graph& h);

// A homomorphism power(h, m) -> h extending the pins (indexed by tuple
// index) and differing from the forbidden table when one is given.
std::optional<Polymorphism> find_polymorphism(
    const Graph& h, int m, const PartialMap& pins = {},
    const std::optional<std::vector<int>>& forbidden = std::nullopt);

// Largest arity at which a semiprojection could still exist for a core on
// at least 3 vertices: floor((n-1)/delta) + 1 for minimum degree delta.
// Throws when h has an isolated vertex.
int semiprojection_arity_bound(const Graph& h);

// A polymorphism that is not a projection yet agrees with coordinate i on
// every tuple with fewer than m distinct entries, for some i, or none. At
// arity 2 these are exactly the idempotent non-projection binary
// polymorphisms. Requires m >= 2; throws budget_error when n^m > 4096.
std::optional<Polymorphism> find_semiprojection(const Graph& h, int m);

enum class ProjStatus { projective, not_projective, not_applicable };

std::string to_string(ProjStatus s);

// Bundled pp-definition of disequality that evaluated to NEQ on the graph.
struct TemplateCertificate {
    std::string family;
    int param = 0;
    int neq_arity = 0;
};

// Exhaustive semiprojection exclusion over every arity up to the bound.
struct SearchCertificate {
    int bound = 0;
    std::vector<int> arities_checked;
};

struct ProjectivityVerdict {
    ProjStatus status = ProjStatus::not_applicable;
    std::string reason;
    std::optional<TemplateCertificate> pp_certificate;
    std::optional<SearchCertificate> search_certificate;
    std::optional<Polymorphism> witness;
    // "disconnected", "decomposable" or "semiprojection" when a witness is
    // present.
    std::string witness_kind;
};

// Certification logic, never guessing:
//   not_applicable  fewer than 3 vertices, bipartite, not a core, or the
//                   semiprojection search exceeds its budget with no
//                   bundled pp-definition available
//   not_projective  disconnected or decomposable (explicit witness built),
//                   or a semiprojection was found
//   projective      a bundled pp-definition of disequality verified, or no
//                   semiprojection exists at any arity up to the bound
// With gather_both set, a template-certified graph additionally runs the
// search when affordable so both certificates are stored.
ProjectivityVerdict is_projective(const Graph& h, bool gather_both = false);

// Factor pair (a, b) with h isomorphic to the categorical product a x b and
// both factors on at least 2 vertices, searched over all graphs of the
// factor sizes up to isomorphism. Requires at most 9 vertices.
std::optional<std::pair<Graph, Graph>> decompose(const Graph& h);
bool is_decomposable(const Graph& h);

// Binary witness for a graph isomorphic to a x b: transport to the product,
// pair up the coordinates, transport back. Not a projection when both
// factors have an edge. Throws when h is not isomorphic to a x b.
Polymorphism product_polymorphism(const Graph& h, const Graph& a, const Graph& b);

// Binary witness for a disconnected graph: first argument on its own
// component, second elsewhere. Throws when h is connected.
Polymorphism piecewise_polymorphism(const Graph& h);

}  // namespace homg
