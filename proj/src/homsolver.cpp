#include "homg/homsolver.hpp"

#include <algorithm>
#include <cmath>

namespace homg {

AdjGraph AdjGraph::from_graph(const Graph& g) {
  AdjGraph out(g.n());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  return out;
}

long long AdjGraph::edge_count() const {
  long long twice = 0;
  for (auto& list : nbr) twice += (long long)list.size();
  return twice / 2;
}

namespace {

// DomainStore + trail.  Backtracking restores domains to a saved trail mark;
// an assigned variable is one whose mask is a single bit.
class Csp {
public:
  Csp(const AdjGraph& g, const Graph& h) : g_(g), h_(h) {
    std::uint16_t full = std::uint16_t((1u << h.n()) - 1);
    dom_.assign(g.n, full);
  }

  bool apply_pins(const PartialMap& pins) {
    if (pins.size() == 0) return true;
    if (pins.size() != g_.n)
      throw std::invalid_argument("pins sized for a different source graph");
    for (int v = 0; v < g_.n; ++v) {
      if (!pins.assigned(v)) continue;
      int x = pins.image[v];
      if (x < 0 || x >= h_.n())
        throw std::invalid_argument("pin image outside target range");
      if (!narrow(v, std::uint16_t(std::uint16_t(1) << x))) return false;
    }
    return true;
  }

  // Restrict v's domain; queues v for propagation on change.
  bool narrow(int v, std::uint16_t mask) {
    std::uint16_t next = dom_[v] & mask;
    if (next == dom_[v]) return true;
    trail_.emplace_back(v, dom_[v]);
    dom_[v] = next;
    if (next == 0) return false;
    queue_.push_back(v);
    return true;
  }

  // AC-3 restricted to the edge constraint: a value for u survives iff it
  // has a neighbour in every adjacent variable's domain.
  bool propagate() {
    while (!queue_.empty()) {
      int v = queue_.back();
      queue_.pop_back();
      std::uint16_t support = 0;
      std::uint16_t dv = dom_[v];
      while (dv) {
        int x = __builtin_ctz(dv);
        dv &= dv - 1;
        support |= h_.neighbors(x);
      }
      for (int u : g_.nbr[v])
        if (!narrow(u, support)) {
          queue_.clear();
          return false;
        }
    }
    return true;
  }

  // Full domains are not arc-consistent in general (isolated target
  // vertices support nothing), so entry points queue everything once.
  void seed_all() {
    for (int v = 0; v < g_.n; ++v)
      if (!g_.nbr[v].empty()) queue_.push_back(v);
  }

  size_t mark() const { return trail_.size(); }

  void undo(size_t mark) {
    while (trail_.size() > mark) {
      auto [v, old] = trail_.back();
      trail_.pop_back();
      dom_[v] = old;
    }
    queue_.clear();
  }

  int pick_branch_var() const {
    int best = -1, best_size = 0;
    for (int v = 0; v < g_.n; ++v) {
      int s = __builtin_popcount(dom_[v]);
      if (s > 1 && (best < 0 || s < best_size)) {
        best = v;
        best_size = s;
      }
    }
    return best;
  }

  // Enumerate solutions; cb returns false to stop.  Returns false if
  // stopped early.
  bool search(const std::function<bool(const std::vector<int>&)>& cb) {
    int v = pick_branch_var();
    if (v < 0) {
      for (int u = 0; u < g_.n; ++u)
        if (dom_[u] == 0) return true;  // empty domain, dead branch
      std::vector<int> map(g_.n);
      for (int u = 0; u < g_.n; ++u) map[u] = __builtin_ctz(dom_[u]);
      verify(map);
      return cb(map);
    }
    std::uint16_t dv = dom_[v];
    while (dv) {
      int x = __builtin_ctz(dv);
      dv &= dv - 1;
      size_t m = mark();
      if (narrow(v, std::uint16_t(std::uint16_t(1) << x)) && propagate())
        if (!search(cb)) return false;
      undo(m);
    }
    return true;
  }

  // Soundness guard: never surface an unchecked map.
  void verify(const std::vector<int>& map) const {
    for (int v = 0; v < g_.n; ++v)
      for (int u : g_.nbr[v])
        if (!h_.has_edge(map[v], map[u]))
          throw std::logic_error("solver produced a non-homomorphism");
  }

  std::uint16_t dom(int v) const { return dom_[v]; }

private:
  const AdjGraph& g_;
  const Graph& h_;
  std::vector<std::uint16_t> dom_;
  std::vector<std::pair<int, std::uint16_t>> trail_;
  std::vector<int> queue_;
};

std::optional<PartialMap> run_single(Csp& csp, const AdjGraph& g) {
  std::optional<PartialMap> out;
  csp.search([&](const std::vector<int>& map) {
    PartialMap pm(g.n);
    pm.image = map;
    out = std::move(pm);
    return false;
  });
  return out;
}

}  // namespace

std::optional<PartialMap> find_hom(const AdjGraph& g, const Graph& h,
                                   const PartialMap& pins) {
  Csp csp(g, h);
  if (!csp.apply_pins(pins)) return std::nullopt;
  csp.seed_all();
  if (!csp.propagate()) return std::nullopt;
  return run_single(csp, g);
}

std::optional<PartialMap> find_hom(const Graph& g, const Graph& h,
                                   const PartialMap& pins) {
  return find_hom(AdjGraph::from_graph(g), h, pins);
}

void for_each_hom(const AdjGraph& g, const Graph& h, const PartialMap& pins,
                  const std::function<bool(const std::vector<int>&)>& cb) {
  Csp csp(g, h);
  if (!csp.apply_pins(pins)) return;
  csp.seed_all();
  if (!csp.propagate()) return;
  csp.search(cb);
}

std::optional<PartialMap> find_hom_excluding(
    const AdjGraph& g, const Graph& h, const PartialMap& pins,
    const std::vector<std::vector<int>>& forbidden) {
  if (forbidden.empty()) return find_hom(g, h, pins);
  for (auto& f : forbidden)
    if (int(f.size()) != g.n)
      throw std::invalid_argument("forbidden table sized for different source");
  const std::vector<int>& f0 = forbidden[0];

  Csp csp(g, h);
  if (!csp.apply_pins(pins)) return std::nullopt;
  csp.seed_all();
  if (!csp.propagate()) return std::nullopt;

  auto not_forbidden = [&](const std::vector<int>& map) {
    for (size_t i = 1; i < forbidden.size(); ++i)
      if (map == forbidden[i]) return false;
    return true;
  };

  // Branch j holds solutions agreeing with f0 before j and deviating at j.
  // After exploring branch j we commit map[j] = f0[j] and move on; a failed
  // commit means every solution deviates earlier, so we are done.
  for (int j = 0; j < g.n; ++j) {
    if (f0[j] < 0 || f0[j] >= h.n())
      throw std::invalid_argument("forbidden table image outside target");
    std::uint16_t bit = std::uint16_t(std::uint16_t(1) << f0[j]);
    size_t m = csp.mark();
    std::optional<PartialMap> found;
    if (csp.narrow(j, std::uint16_t(~bit)) && csp.propagate()) {
      csp.search([&](const std::vector<int>& map) {
        if (!not_forbidden(map)) return true;
        PartialMap pm(g.n);
        pm.image = map;
        found = std::move(pm);
        return false;
      });
    }
    if (found) return found;
    csp.undo(m);
    if (!csp.narrow(j, bit) || !csp.propagate()) return std::nullopt;
  }
  return std::nullopt;  // only f0 itself remains
}

long long count_homs(const Graph& g, const Graph& h) {
  if (h.n() == 0) return g.n() == 0 ? 1 : 0;
  double total = std::pow(double(h.n()), double(g.n()));
  if (total > 1e7) throw budget_error("count_homs: more than 10^7 maps");
  auto es = g.edges();
  std::vector<int> map(g.n(), 0);
  long long count = 0;
  for (;;) {
    bool ok = true;
    for (auto [u, v] : es)
      if (!h.has_edge(map[u], map[v])) {
        ok = false;
        break;
      }
    if (ok) ++count;
    int pos = g.n() - 1;
    while (pos >= 0 && map[pos] == h.n() - 1) map[pos--] = 0;
    if (pos < 0) break;
    ++map[pos];
  }
  return count;
}

bool is_k_colorable(const Graph& g, int k) {
  if (k < 0) throw std::invalid_argument("negative color count");
  return find_hom(g, clique(k)).has_value();
}

}  // namespace homg
