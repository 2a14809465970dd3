#include "homg/relations.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace homg {

namespace {

// pow with an explicit cap so budget checks never overflow.
long long capped_pow(long long base, int exp, long long cap) {
    long long v = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && v > cap / base) return cap + 1;
        v *= base;
    }
    return v;
}

}  // namespace

Relation::Relation(int domain_size, int arity) : k_(domain_size), n_(arity) {
    if (k_ < 0) throw std::invalid_argument("negative domain size");
    if (n_ < 0) throw std::invalid_argument("negative arity");
}

Relation::Relation(int domain_size, int arity,
                   std::vector<std::vector<int>> tuples)
    : Relation(domain_size, arity) {
    for (const auto& t : tuples) validate_tuple(t);
    std::sort(tuples.begin(), tuples.end());
    tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
    tuples_ = std::move(tuples);
}

void Relation::validate_tuple(const std::vector<int>& t) const {
    if (static_cast<int>(t.size()) != n_)
        throw std::invalid_argument("tuple arity mismatch");
    for (int x : t)
        if (x < 0 || x >= k_)
            throw std::invalid_argument("tuple entry outside domain");
}

bool Relation::contains(const std::vector<int>& t) const {
    return std::binary_search(tuples_.begin(), tuples_.end(), t);
}

void Relation::add(std::vector<int> t) {
    validate_tuple(t);
    auto it = std::lower_bound(tuples_.begin(), tuples_.end(), t);
    if (it != tuples_.end() && *it == t) return;
    tuples_.insert(it, std::move(t));
}

Relation edge_relation(const Graph& h) {
    Relation r(h.n(), 2);
    for (auto [u, v] : h.edges()) {
        r.add({u, v});
        r.add({v, u});
    }
    return r;
}

Relation neq_relation(int k) {
    Relation r(k, 2);
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            if (x != y) r.add({x, y});
    return r;
}

Relation eq_relation(int k) {
    Relation r(k, 2);
    for (int x = 0; x < k; ++x) r.add({x, x});
    return r;
}

namespace {

void validate_formula(const PPFormula& f) {
    if (f.free_count < 0 || f.exist_count < 0)
        throw std::invalid_argument("negative variable count");
    int total = f.free_count + f.exist_count;
    for (const auto& a : f.atoms)
        if (a.i < 0 || a.i >= total || a.j < 0 || a.j >= total)
            throw std::invalid_argument("atom variable out of range");
}

bool atom_holds(const PPAtom& a, const Graph& h, const std::vector<int>& asg) {
    if (a.is_edge) return h.has_edge(asg[a.i], asg[a.j]);
    return asg[a.i] == asg[a.j];
}

// Depth-first search over variables last..total-1 in index order, checking
// each atom as soon as its later variable is assigned. Returns true on the
// first full satisfying extension.
bool extend(const Graph& h, const std::vector<std::vector<PPAtom>>& by_var,
            std::vector<int>& asg, int v) {
    int total = static_cast<int>(asg.size());
    if (v == total) return true;
    for (int val = 0; val < h.n(); ++val) {
        asg[v] = val;
        bool ok = true;
        for (const auto& a : by_var[v])
            if (!atom_holds(a, h, asg)) {
                ok = false;
                break;
            }
        if (ok && extend(h, by_var, asg, v + 1)) return true;
    }
    return false;
}

}  // namespace

Relation pp_evaluate(const PPFormula& f, const Graph& h) {
    validate_formula(f);
    int k = h.n();
    int total = f.free_count + f.exist_count;
    if (capped_pow(k, total, 1LL << 30) > (1LL << 30))
        throw budget_error("pp evaluation budget exceeded");

    // Bucket each atom under its larger variable so the search can test it
    // at the earliest point both endpoints are set.
    std::vector<std::vector<PPAtom>> by_var(total);
    for (const auto& a : f.atoms) by_var[std::max(a.i, a.j)].push_back(a);

    Relation result(k, f.free_count);
    if (k == 0 && total > 0) return result;

    std::vector<int> asg(total, 0);
    std::vector<int> free_part(f.free_count, 0);
    while (true) {
        for (int i = 0; i < f.free_count; ++i) asg[i] = free_part[i];
        bool ok = true;
        for (int v = 0; v < f.free_count && ok; ++v)
            for (const auto& a : by_var[v])
                if (!atom_holds(a, h, asg)) {
                    ok = false;
                    break;
                }
        if (ok && extend(h, by_var, asg, f.free_count))
            result.add(free_part);

        int pos = f.free_count - 1;
        while (pos >= 0 && free_part[pos] == k - 1) free_part[pos--] = 0;
        if (pos < 0) break;
        ++free_part[pos];
    }
    return result;
}

bool qfpp_definable(const Relation& r, const Graph& h) {
    if (r.domain_size() != h.n())
        throw std::invalid_argument("relation domain differs from vertex count");
    int k = r.domain_size();
    int n = r.arity();
    if (capped_pow(k, n, 10'000'000) > 10'000'000)
        throw budget_error("qfpp closure budget exceeded");

    // Candidate atoms over the relation's own coordinates. Edge(i, i) is
    // included: it is empty on loopless graphs and captures r = {}.
    std::vector<PPAtom> kept;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            PPAtom edge{true, i, j};
            bool super = true;
            for (const auto& t : r.tuples())
                if (!h.has_edge(t[i], t[j])) {
                    super = false;
                    break;
                }
            if (super) kept.push_back(edge);
            if (i < j) {
                bool eq_super = true;
                for (const auto& t : r.tuples())
                    if (t[i] != t[j]) {
                        eq_super = false;
                        break;
                    }
                if (eq_super) kept.push_back(PPAtom{false, i, j});
            }
        }

    // The closure contains r by construction, so equality is a size check.
    if (k == 0) return n > 0 || r.size() == 1;
    long long closure = 0;
    std::vector<int> t(n, 0);
    while (true) {
        bool ok = true;
        for (const auto& a : kept) {
            bool holds = a.is_edge ? h.has_edge(t[a.i], t[a.j]) : t[a.i] == t[a.j];
            if (!holds) {
                ok = false;
                break;
            }
        }
        if (ok && ++closure > static_cast<long long>(r.size())) return false;

        int pos = n - 1;
        while (pos >= 0 && t[pos] == k - 1) t[pos--] = 0;
        if (pos < 0) break;
        ++t[pos];
    }
    return closure == static_cast<long long>(r.size());
}

namespace {

void closed_walks(const Graph& h, int k, std::vector<int>& seq,
                  std::vector<std::vector<int>>& out) {
    int depth = static_cast<int>(seq.size());
    if (depth == k) {
        if (h.has_edge(seq.back(), seq.front())) out.push_back(seq);
        return;
    }
    for (int v = 0; v < h.n(); ++v) {
        if (depth > 0 && !h.has_edge(seq.back(), v)) continue;
        seq.push_back(v);
        closed_walks(h, k, seq, out);
        seq.pop_back();
    }
}

}  // namespace

Relation cycle_relation(const Graph& h, int k, int n) {
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("walk length must be odd");
    if (k > n) throw std::invalid_argument("walk length exceeds arity");

    std::vector<std::vector<int>> walks;
    std::vector<int> seq;
    closed_walks(h, k, seq, walks);

    Relation r(h.n(), n);
    for (const auto& w : walks) {
        std::vector<int> t(w);
        t.resize(n, 0);
        while (true) {
            r.add(t);
            int pos = n - 1;
            while (pos >= k && t[pos] == h.n() - 1) t[pos--] = 0;
            if (pos < k) break;
            ++t[pos];
        }
    }
    return r;
}

bool induced_kcycle_check(const Graph& h, const std::vector<int>& xs) {
    auto og = odd_girth(h);
    if (!og) throw std::invalid_argument("graph has no odd cycle");
    if (static_cast<int>(xs.size()) != *og)
        throw std::invalid_argument("tuple length differs from odd girth");
    for (int x : xs)
        if (x < 0 || x >= h.n())
            throw std::invalid_argument("vertex out of range");
    int k = *og;
    for (int i = 0; i < k; ++i)
        if (!h.has_edge(xs[i], xs[(i + 1) % k])) return false;
    return true;
}

namespace {

bool path_of_length(const Graph& h, int cur, int target, int edges_left,
                    VertexSet visited) {
    if (edges_left == 0) return cur == target;
    for (int w = 0; w < h.n(); ++w) {
        if (!h.has_edge(cur, w)) continue;
        if (visited & (VertexSet(1) << w)) continue;
        if (w == target && edges_left > 1) continue;
        if (path_of_length(h, w, target, edges_left - 1,
                           visited | (VertexSet(1) << w)))
            return true;
    }
    return false;
}

}  // namespace

Graph cycle_edge_subgraph(const Graph& h, int k) {
    Graph out(h.n());
    if (k < 3 || k > h.n()) return out;
    for (auto [u, v] : h.edges()) {
        // A k-cycle through uv is a simple u-v path with k-1 edges.
        if (path_of_length(h, u, v, k - 1, VertexSet(1) << u))
            out.add_edge(u, v);
    }
    return out;
}

PartialOp::PartialOp(int domain_size, int arity) : k_(domain_size), m_(arity) {
    if (k_ < 0) throw std::invalid_argument("negative domain size");
    if (m_ < 0) throw std::invalid_argument("negative arity");
}

void PartialOp::define(const std::vector<int>& args, int value) {
    if (static_cast<int>(args.size()) != m_)
        throw std::invalid_argument("argument arity mismatch");
    for (int x : args)
        if (x < 0 || x >= k_)
            throw std::invalid_argument("argument outside domain");
    if (value < 0 || value >= k_)
        throw std::invalid_argument("value outside domain");
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), args,
        [](const auto& e, const std::vector<int>& a) { return e.first < a; });
    if (it != entries_.end() && it->first == args) {
        if (it->second != value)
            throw std::invalid_argument("conflicting redefinition");
        return;
    }
    entries_.insert(it, {args, value});
}

std::optional<int> PartialOp::apply(const std::vector<int>& args) const {
    auto it = std::lower_bound(
        entries_.begin(), entries_.end(), args,
        [](const auto& e, const std::vector<int>& a) { return e.first < a; });
    if (it != entries_.end() && it->first == args) return it->second;
    return std::nullopt;
}

PartialOp constant_partial_op(int domain_size, int arity,
                              const std::vector<std::vector<int>>& dom,
                              int value) {
    PartialOp f(domain_size, arity);
    for (const auto& t : dom) f.define(t, value);
    return f;
}

namespace {

// Columns drawn from r, every row required in dom(f), image column in r.
bool check_by_columns(const PartialOp& f, const Relation& r) {
    int m = f.arity();
    int n = r.arity();
    auto count = static_cast<long long>(r.size());
    std::vector<int> pick(m, 0);
    std::vector<int> row(m), image(n);
    if (count == 0) return true;
    while (true) {
        bool applies = true;
        for (int i = 0; i < n && applies; ++i) {
            for (int j = 0; j < m; ++j) row[j] = r.tuples()[pick[j]][i];
            auto val = f.apply(row);
            if (!val)
                applies = false;
            else
                image[i] = *val;
        }
        if (applies && !r.contains(image)) return false;

        int pos = m - 1;
        while (pos >= 0 && pick[pos] == count - 1) pick[pos--] = 0;
        if (pos < 0) break;
        ++pick[pos];
    }
    return true;
}

// Rows drawn from dom(f), every column required in r, image column in r.
bool check_by_rows(const PartialOp& f, const Relation& r) {
    int m = f.arity();
    int n = r.arity();
    auto count = static_cast<long long>(f.defined_count());
    std::vector<int> pick(n, 0);
    std::vector<int> col(n), image(n);
    if (count == 0) return true;
    while (true) {
        bool applies = true;
        for (int j = 0; j < m && applies; ++j) {
            for (int i = 0; i < n; ++i) col[i] = f.entries()[pick[i]].first[j];
            if (!r.contains(col)) applies = false;
        }
        if (applies) {
            for (int i = 0; i < n; ++i) image[i] = f.entries()[pick[i]].second;
            if (!r.contains(image)) return false;
        }

        int pos = n - 1;
        while (pos >= 0 && pick[pos] == count - 1) pick[pos--] = 0;
        if (pos < 0) break;
        ++pick[pos];
    }
    return true;
}

}  // namespace

bool is_partial_polymorphism(const PartialOp& f, const Relation& r) {
    if (f.domain_size() != r.domain_size())
        throw std::invalid_argument("operation and relation domains differ");
    constexpr long long kBudget = 10'000'000;
    long long col_side =
        capped_pow(static_cast<long long>(r.size()), f.arity(), kBudget);
    long long row_side = capped_pow(
        static_cast<long long>(f.defined_count()), r.arity(), kBudget);
    if (col_side <= row_side) {
        if (col_side > kBudget)
            throw budget_error("partial polymorphism check budget exceeded");
        return check_by_columns(f, r);
    }
    if (row_side > kBudget)
        throw budget_error("partial polymorphism check budget exceeded");
    return check_by_rows(f, r);
}

bool check_wall(const WallMatrix& m, const Relation& r, const Graph& h) {
    int n = m.row_count();
    int cols = m.col_count();
    if (n != r.arity()) throw std::invalid_argument("row count differs from arity");
    if (cols < 1) throw std::invalid_argument("wall needs at least one column");
    for (const auto& row : m.rows) {
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("ragged wall rows");
        for (int x : row)
            if (x < 0 || x >= h.n())
                throw std::invalid_argument("wall entry outside vertex range");
    }
    if (r.domain_size() != h.n())
        throw std::invalid_argument("relation domain differs from vertex count");

    std::vector<int> col(n);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < n; ++i) col[i] = m.rows[i][j];
        if (!r.contains(col)) return false;
    }
    for (int i = 0; i < n; ++i)
        for (int i2 = 0; i2 < n; ++i2) {
            bool found = false;
            for (int j = 0; j < cols && !found; ++j)
                if (!h.has_edge(m.rows[i][j], m.rows[i2][j])) found = true;
            if (!found) return false;
        }
    return true;
}

std::optional<int> triviality_witness(const WallMatrix& m, const Relation& r,
                                      const Graph& h) {
    if (!check_wall(m, r, h))
        throw std::invalid_argument("wall check failed");
    int cols = m.col_count();
    for (int a = 0; a < h.n(); ++a) {
        auto f = constant_partial_op(h.n(), cols, m.rows, a);
        if (!is_partial_polymorphism(f, r)) continue;
        // The wall itself is a qualifying matrix, so acceptance forces the
        // constant tuple into r.
        std::vector<int> constant(r.arity(), a);
        if (!r.contains(constant))
            throw std::logic_error("accepted constant map without constant tuple");
        return a;
    }
    return std::nullopt;
}

namespace {

// Chain of `len` edges from variable 0 to variable 1 through len-1
// existential variables.
PPFormula walk_template(int len) {
    PPFormula f;
    f.free_count = 2;
    f.exist_count = len - 1;
    int prev = 0;
    for (int step = 1; step < len; ++step) {
        int var = step + 1;
        f.atoms.push_back(PPAtom{true, prev, var});
        prev = var;
    }
    f.atoms.push_back(PPAtom{true, prev, 1});
    return f;
}

// Path 0-x2-x3-1 with `extras` further existential variables adjacent to
// all four path variables and to each other.
PPFormula tower_template(int extras) {
    PPFormula f;
    f.free_count = 2;
    f.exist_count = 2 + extras;
    f.atoms.push_back(PPAtom{true, 0, 2});
    f.atoms.push_back(PPAtom{true, 2, 3});
    f.atoms.push_back(PPAtom{true, 3, 1});
    for (int j = 0; j < extras; ++j) {
        int w = 4 + j;
        f.atoms.push_back(PPAtom{true, 0, w});
        f.atoms.push_back(PPAtom{true, 2, w});
        f.atoms.push_back(PPAtom{true, 3, w});
        f.atoms.push_back(PPAtom{true, 1, w});
    }
    for (int j = 0; j < extras; ++j)
        for (int j2 = j + 1; j2 < extras; ++j2)
            f.atoms.push_back(PPAtom{true, 4 + j, 4 + j2});
    return f;
}

}  // namespace

PPFormula neq_pp_template(const std::string& name, int param) {
    if (name == "clique") return walk_template(1);
    if (name == "odd_cycle") {
        if (param < 3 || param % 2 == 0)
            throw std::invalid_argument("odd_cycle needs an odd length >= 3");
        return walk_template(param - 2);
    }
    if (name == "grotzsch" || name == "petersen") return walk_template(3);
    if (name == "complement_cycle") {
        if (param < 3)
            throw std::invalid_argument("complement_cycle needs param >= 3");
        return tower_template(param - 2);
    }
    if (name == "c5_plus") {
        if (param < 0) throw std::invalid_argument("c5_plus needs param >= 0");
        return tower_template(param);
    }
    throw std::invalid_argument("unknown template: " + name);
}

Relation read_relation(std::istream& in) {
    int k = 0, n = 0;
    if (!(in >> k >> n)) throw std::invalid_argument("missing relation header");
    Relation r(k, n);
    std::vector<int> t(n);
    while (true) {
        int first = 0;
        if (!(in >> first)) break;
        if (n == 0) throw std::invalid_argument("tuple data for nullary relation");
        t[0] = first;
        for (int i = 1; i < n; ++i)
            if (!(in >> t[i])) throw std::invalid_argument("truncated tuple");
        r.add(t);
    }
    return r;
}

void write_relation(std::ostream& out, const Relation& r) {
    out << r.domain_size() << ' ' << r.arity() << '\n';
    for (const auto& t : r.tuples()) {
        for (std::size_t i = 0; i < t.size(); ++i)
            out << (i ? " " : "") << t[i];
        out << '\n';
    }
}

WallMatrix read_wall(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("missing wall header");
    if (n < 0 || m < 1) throw std::invalid_argument("bad wall dimensions");
    WallMatrix w;
    w.rows.assign(n, std::vector<int>(m));
    for (auto& row : w.rows)
        for (auto& x : row)
            if (!(in >> x)) throw std::invalid_argument("truncated wall row");
    return w;
}

void write_wall(std::ostream& out, const WallMatrix& m) {
    out << m.row_count() << ' ' << m.col_count() << '\n';
    for (const auto& row : m.rows) {
        for (std::size_t j = 0; j < row.size(); ++j)
            out << (j ? " " : "") << row[j];
        out << '\n';
    }
}

}  // namespace homg
