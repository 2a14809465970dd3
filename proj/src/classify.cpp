#include "homg/classify.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "homg/cores.hpp"
#include "homg/iso.hpp"

namespace homg {

namespace {

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask & (std::uint64_t(1) << bit)) g.add_edge(u, v);
    return g;
}

// One graph per isomorphism class: keep a mask iff its encoding equals its
// own canonical form.
std::vector<Graph> self_canonical_graphs(int n, int jobs) {
    if (jobs < 1) throw std::invalid_argument("worker count must be positive");
    int pairs = n * (n - 1) / 2;
    std::uint64_t total = std::uint64_t(1) << pairs;

    auto scan = [n](std::uint64_t lo, std::uint64_t hi, std::vector<Graph>& out) {
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            Graph g = graph_from_mask(n, mask);
            if (graph6_encode(g) == canon(g).g6) out.push_back(g);
        }
    };

    std::vector<std::vector<Graph>> parts(jobs);
    if (jobs == 1) {
        scan(0, total, parts[0]);
    } else {
        std::vector<std::thread> workers;
        std::uint64_t chunk = total / jobs + 1;
        for (int w = 0; w < jobs; ++w) {
            std::uint64_t lo = std::min(total, w * chunk);
            std::uint64_t hi = std::min(total, (w + 1) * chunk);
            workers.emplace_back(scan, lo, hi, std::ref(parts[w]));
        }
        for (auto& t : workers) t.join();
    }

    std::vector<Graph> reps;
    for (auto& part : parts)
        reps.insert(reps.end(), part.begin(), part.end());
    std::sort(reps.begin(), reps.end(), [](const Graph& a, const Graph& b) {
        return graph6_encode(a) < graph6_encode(b);
    });
    return reps;
}

std::string matched_name(const Graph& g) {
    int n = g.n();
    std::vector<std::pair<std::string, Graph>> candidates;
    if (n >= 1) candidates.emplace_back("K" + std::to_string(n), clique(n));
    if (n >= 5 && n % 2 == 1)
        candidates.emplace_back("C" + std::to_string(n), cycle(n));
    if (n >= 7 && n % 2 == 1)
        candidates.emplace_back("co-C" + std::to_string(n),
                                complement(cycle(n)));
    if (n >= 6) candidates.emplace_back("C5+" + std::to_string(n - 5),
                                        add_universal(cycle(5), n - 5));
    if (n == 7)
        for (int i = 1; i <= 6; ++i)
            candidates.emplace_back("G" + std::to_string(i),
                                    named("g" + std::to_string(i)));
    if (n == 10) candidates.emplace_back("petersen", named("petersen"));
    if (n == 11) candidates.emplace_back("grotzsch", named("grotzsch"));

    std::string own = graph6_encode(g);
    for (const auto& [name, cand] : candidates)
        if (canon(cand).g6 == own) return name;
    return "";
}

ClassificationRecord build_record(const Graph& g) {
    ClassificationRecord rec;
    rec.g6 = graph6_encode(g);
    rec.vertex_count = g.n();
    rec.edge_count = g.edge_count();
    rec.core = true;
    rec.odd_girth_value = odd_girth(g);
    rec.connected = is_connected(g);
    rec.verdict = is_projective(g, true);
    rec.matched_name = matched_name(g);
    return rec;
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 0 || n > 8)
        throw std::invalid_argument("enumeration limited to 8 vertices");
    return self_canonical_graphs(n, 1);
}

std::vector<ClassificationRecord> classify_cores(int n, int jobs,
                                                 bool allow_eight) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("classification limited to 8 vertices");
    if (n == 8 && !allow_eight)
        throw std::invalid_argument("8-vertex scan needs the explicit flag");

    std::vector<ClassificationRecord> records;
    for (const Graph& g : self_canonical_graphs(n, jobs))
        if (is_core(g)) records.push_back(build_record(g));
    // reps arrive sorted by canonical form already; keep the guarantee
    // independent of that detail.
    std::sort(records.begin(), records.end(),
              [](const ClassificationRecord& a, const ClassificationRecord& b) {
                  return a.g6 < b.g6;
              });
    return records;
}

ConjectureReport verify_conjecture(int n, int jobs) {
    if (n > 7)
        throw std::invalid_argument("conjecture check limited to 7 vertices");
    ConjectureReport report;
    report.max_n = n;
    for (int size = 3; size <= n; ++size) {
        for (const auto& rec : classify_cores(size, jobs)) {
            if (!rec.connected) continue;
            ++report.cores_checked;
            bool decomposable = is_decomposable(graph6_decode(rec.g6));
            switch (rec.verdict.status) {
                case ProjStatus::projective:
                    if (decomposable) report.counterexamples.push_back(rec);
                    break;
                case ProjStatus::not_projective:
                    if (!decomposable) report.counterexamples.push_back(rec);
                    break;
                case ProjStatus::not_applicable:
                    report.undecided.push_back(rec);
                    break;
            }
        }
    }
    return report;
}

std::string record_json_line(const ClassificationRecord& rec) {
    nlohmann::json j;
    j["g6"] = rec.g6;
    j["vertices"] = rec.vertex_count;
    j["edges"] = rec.edge_count;
    j["core"] = rec.core;
    if (rec.odd_girth_value)
        j["odd_girth"] = *rec.odd_girth_value;
    else
        j["odd_girth"] = nullptr;
    j["connected"] = rec.connected;
    j["status"] = to_string(rec.verdict.status);
    j["reason"] = rec.verdict.reason;
    j["name"] = rec.matched_name;
    if (rec.verdict.pp_certificate) {
        j["pp_certificate"] = {
            {"family", rec.verdict.pp_certificate->family},
            {"param", rec.verdict.pp_certificate->param},
            {"neq_arity", rec.verdict.pp_certificate->neq_arity}};
    } else {
        j["pp_certificate"] = nullptr;
    }
    if (rec.verdict.search_certificate) {
        j["search_certificate"] = {
            {"bound", rec.verdict.search_certificate->bound},
            {"arities", rec.verdict.search_certificate->arities_checked}};
    } else {
        j["search_certificate"] = nullptr;
    }
    if (rec.verdict.witness) {
        j["witness"] = {{"arity", rec.verdict.witness->arity},
                        {"table", rec.verdict.witness->table}};
        j["witness_kind"] = rec.verdict.witness_kind;
    } else {
        j["witness"] = nullptr;
        j["witness_kind"] = nullptr;
    }
    return j.dump();
}

}  // namespace homg
