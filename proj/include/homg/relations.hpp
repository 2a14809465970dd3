#pragma once
// Finite relations over small vertex domains, pp formula evaluation, the
// qfpp-definability decision by atom closure, walls, and the cycle-relation
// constructions used by the hardness reductions.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homg/graph.hpp"

namespace homg {

// n-ary relation over domain {0..k-1}, stored as a sorted duplicate-free
// tuple list so equality and serialization are deterministic.
class Relation {
public:
    Relation(int domain_size, int arity);
    Relation(int domain_size, int arity, std::vector<std::vector<int>> tuples);

    int domain_size() const { return k_; }
    int arity() const { return n_; }
    std::size_t size() const { return tuples_.size(); }
    const std::vector<std::vector<int>>& tuples() const { return tuples_; }
    bool contains(const std::vector<int>& t) const;
    void add(std::vector<int> t);

    bool operator==(const Relation&) const = default;

private:
    void validate_tuple(const std::vector<int>& t) const;

    int k_ = 0;
    int n_ = 0;
    std::vector<std::vector<int>> tuples_;
};

// E_h as a binary relation (both orientations of every edge).
Relation edge_relation(const Graph& h);
// All (x, y) with x != y over domain k.
Relation neq_relation(int k);
// All (x, x) over domain k.
Relation eq_relation(int k);

// Atom over formula variables: Edge(i, j) in the graph the formula is
// evaluated on, or Eq(i, j). Edge(i, i) is permitted and never holds since
// graphs are loopless.
struct PPAtom {
    bool is_edge = true;
    int i = 0;
    int j = 0;

    bool operator==(const PPAtom&) const = default;
};

// Variables 0..free_count-1 are free, the remaining exist_count are
// existentially quantified.
struct PPFormula {
    int free_count = 0;
    int exist_count = 0;
    std::vector<PPAtom> atoms;

    bool operator==(const PPFormula&) const = default;
};

// The relation of free-variable assignments admitting an existential
// extension satisfying every atom. Existential extensions are searched
// lazily with early exit. Throws budget_error when the assignment space
// k^(free+exist) exceeds 2^30.
Relation pp_evaluate(const PPFormula& f, const Graph& h);

// True iff r equals the intersection of all Edge/Eq atoms over its own
// coordinates that contain r. Throws budget_error when k^arity > 1e7.
bool qfpp_definable(const Relation& r, const Graph& h);

// R(x_1..x_n) defined by E(x_1,x_2) ^ E(x_2,x_3) ^ ... ^ E(x_k,x_1): the
// first k entries traverse a closed k-walk, the remaining n-k entries are
// unconstrained. Requires k odd and k <= n.
Relation cycle_relation(const Graph& h, int k, int n);

// For |xs| equal to the odd girth of h this decides "induced |xs|-cycle":
// a closed walk of minimum odd length can repeat no vertex and admits no
// chord. Requires h non-bipartite and |xs| equal to the odd girth.
bool induced_kcycle_check(const Graph& h, const std::vector<int>& xs);

// Same vertex set, keeping exactly the edges lying on some simple k-cycle.
Graph cycle_edge_subgraph(const Graph& h, int k);

// Partial finitary operation f : D -> {0..k-1} with D a set of m-tuples.
class PartialOp {
public:
    PartialOp(int domain_size, int arity);

    int domain_size() const { return k_; }
    int arity() const { return m_; }
    std::size_t defined_count() const { return entries_.size(); }
    const std::vector<std::pair<std::vector<int>, int>>& entries() const {
        return entries_;
    }

    // Adds one mapping; re-defining a tuple to a different value throws.
    void define(const std::vector<int>& args, int value);
    std::optional<int> apply(const std::vector<int>& args) const;

private:
    int k_ = 0;
    int m_ = 0;
    std::vector<std::pair<std::vector<int>, int>> entries_;
};

// Constant partial map of the given value on the listed argument tuples.
PartialOp constant_partial_op(int domain_size, int arity,
                              const std::vector<std::vector<int>>& dom,
                              int value);

// True iff for every matrix whose columns all lie in r and whose rows all
// lie in dom(f), the column of row images lies in r. Enumerates whichever
// of the column side (|r|^m) and the row side (|dom|^n) is smaller; throws
// budget_error when both exceed 1e7.
bool is_partial_polymorphism(const PartialOp& f, const Relation& r);

// n x m matrix of vertex indices; rows index relation coordinates.
struct WallMatrix {
    std::vector<std::vector<int>> rows;

    int row_count() const { return static_cast<int>(rows.size()); }
    int col_count() const {
        return rows.empty() ? 0 : static_cast<int>(rows.front().size());
    }
};

// True iff every column of m lies in r and every ordered row pair (i, i')
// has some column j where (m[i][j], m[i'][j]) is a non-edge of h. Pairs
// with i = i' hold automatically because graphs are loopless. Throws on
// ragged rows, zero columns, row count differing from the arity of r, or
// entries outside the vertex range.
bool check_wall(const WallMatrix& m, const Relation& r, const Graph& h);

// Given a passing wall, tries each constant partial map on the rows of m;
// a constant value a accepted as a partial polymorphism of r forces the
// constant tuple (a,..,a) into r, which is returned. Throws when the wall
// check fails.
std::optional<int> triviality_witness(const WallMatrix& m, const Relation& r,
                                      const Graph& h);

// Bundled pp-definitions of disequality, by family name:
//   "clique"            single Edge atom (param ignored)
//   "odd_cycle"         (k-2)-walk chain, param = odd cycle length k >= 3
//   "grotzsch"          3-walk chain
//   "petersen"          3-walk chain
//   "complement_cycle"  triangle-tower with p-2 mutually adjacent extras,
//                       param = p >= 3, for the complement of C_{2p+1}
//   "c5_plus"           triangle-tower with p mutually adjacent extras,
//                       param = p >= 0, for C_5 plus p universal vertices
// Free variables are 0 and 1. Throws on unknown names or bad parameters.
PPFormula neq_pp_template(const std::string& name, int param = 0);

// Text format: header "k n", then one tuple of n integers per line.
Relation read_relation(std::istream& in);
void write_relation(std::ostream& out, const Relation& r);

// Text format: header "n m", then n rows of m integers.
WallMatrix read_wall(std::istream& in);
void write_wall(std::ostream& out, const WallMatrix& m);

}  // namespace homg
