#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include <json.hpp>

#include "homg/classify.hpp"
#include "homg/cores.hpp"
#include "homg/graph.hpp"
#include "homg/iso.hpp"

using namespace homg;

TEST_CASE("enumeration counts match the catalogue of small graphs") {
    CHECK(enumerate_graphs(1).size() == 1);
    CHECK(enumerate_graphs(2).size() == 2);
    CHECK(enumerate_graphs(3).size() == 4);
    CHECK(enumerate_graphs(4).size() == 11);
    CHECK(enumerate_graphs(5).size() == 34);
    CHECK(enumerate_graphs(6).size() == 156);
    CHECK_THROWS_AS(enumerate_graphs(9), std::invalid_argument);
}

TEST_CASE("enumeration returns sorted self-canonical representatives") {
    for (int n = 2; n <= 5; ++n) {
        auto reps = enumerate_graphs(n);
        std::vector<std::string> encodings;
        for (const Graph& g : reps) {
            CHECK(graph6_encode(g) == canon(g).g6);
            encodings.push_back(graph6_encode(g));
        }
        CHECK(std::is_sorted(encodings.begin(), encodings.end()));

        // oracle: one representative per isomorphism class over all bitmasks
        std::set<std::string> classes;
        int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask & (1u << bit)) g.add_edge(u, v);
            classes.insert(canon(g).g6);
        }
        CHECK(classes == std::set<std::string>(encodings.begin(), encodings.end()));
    }
}

TEST_CASE("core classification on up to six vertices") {
    auto expect_names = [](int n, const std::set<std::string>& want) {
        auto recs = classify_cores(n);
        std::set<std::string> got;
        for (const auto& r : recs) got.insert(r.matched_name);
        CHECK(got == want);
        CHECK(recs.size() == want.size());
        for (const auto& r : recs) {
            CHECK(r.core);
            CHECK(r.vertex_count == n);
            CHECK(!r.matched_name.empty());
        }
    };
    expect_names(1, {"K1"});
    expect_names(2, {"K2"});
    expect_names(3, {"K3"});
    expect_names(4, {"K4"});
    expect_names(5, {"K5", "C5"});
    expect_names(6, {"K6", "C5+1"});
}

TEST_CASE("classified cores meet the degree and hole conditions") {
    // on >= 3 vertices every core has minimum degree 2, and a core is a
    // clique exactly when it has no induced odd hole or antihole
    for (int n = 3; n <= 6; ++n) {
        for (const auto& r : classify_cores(n)) {
            Graph g = graph6_decode(r.g6);
            CHECK(min_degree_check(g));
            bool is_clique = 2 * r.edge_count == n * (n - 1);
            CHECK(has_induced_odd_hole_or_antihole(g) == !is_clique);
        }
    }
}

TEST_CASE("classification records carry consistent fields") {
    auto recs = classify_cores(5);
    REQUIRE(recs.size() == 2);
    std::vector<std::string> encodings;
    for (const auto& r : recs) encodings.push_back(r.g6);
    CHECK(std::is_sorted(encodings.begin(), encodings.end()));

    for (const auto& r : recs) {
        Graph g = graph6_decode(r.g6);
        CHECK(graph6_encode(g) == canon(g).g6);
        CHECK(is_core(g));
        CHECK(r.edge_count == g.edge_count());
        CHECK(r.connected);
        CHECK(r.verdict.status == ProjStatus::projective);
        CHECK(r.verdict.pp_certificate.has_value());
        CHECK(r.verdict.search_certificate.has_value());
        if (r.matched_name == "C5") {
            CHECK(r.edge_count == 5);
            CHECK(r.odd_girth_value == 5);
        } else {
            CHECK(r.matched_name == "K5");
            CHECK(r.edge_count == 10);
            CHECK(r.odd_girth_value == 3);
        }
    }
}

TEST_CASE("matched names really are isomorphic to their records") {
    for (int n = 3; n <= 6; ++n) {
        for (const auto& r : classify_cores(n)) {
            REQUIRE(!r.matched_name.empty());
            Graph g = graph6_decode(r.g6);
            Graph bundled = [&]() {
                if (r.matched_name == "C5+1") return named("c5p1");
                if (r.matched_name[0] == 'K')
                    return clique(std::stoi(r.matched_name.substr(1)));
                if (r.matched_name[0] == 'C')
                    return cycle(std::stoi(r.matched_name.substr(1)));
                throw std::logic_error("unexpected name");
            }();
            CHECK(is_isomorphic(g, bundled));
        }
    }
}

TEST_CASE("worker count does not change the classification") {
    for (int n : {4, 5}) {
        auto one = classify_cores(n, 1);
        auto three = classify_cores(n, 3);
        REQUIRE(one.size() == three.size());
        for (std::size_t i = 0; i < one.size(); ++i)
            CHECK(record_json_line(one[i]) == record_json_line(three[i]));
    }
}

TEST_CASE("eight-vertex classification is gated") {
    CHECK_THROWS_AS(classify_cores(8), std::invalid_argument);
    CHECK_THROWS_AS(classify_cores(0), std::invalid_argument);
    CHECK_THROWS_AS(classify_cores(9, 1, true), std::invalid_argument);
}

TEST_CASE("record serialization is valid deterministic JSON") {
    auto recs = classify_cores(3);
    REQUIRE(recs.size() == 1);
    std::string line = record_json_line(recs[0]);
    CHECK(line == record_json_line(recs[0]));
    CHECK(line.find('\n') == std::string::npos);

    auto j = nlohmann::json::parse(line);
    CHECK(j["g6"] == "Bw");
    CHECK(j["vertices"] == 3);
    CHECK(j["edges"] == 3);
    CHECK(j["core"] == true);
    CHECK(j["odd_girth"] == 3);
    CHECK(j["connected"] == true);
    CHECK(j["status"] == "projective");
    CHECK(j["name"] == "K3");
    CHECK(j["pp_certificate"]["family"] == "clique");
    CHECK(j["search_certificate"]["bound"] == 2);
}

TEST_CASE("projective-iff-indecomposable holds through five vertices") {
    ConjectureReport report = verify_conjecture(5);
    CHECK(report.max_n == 5);
    CHECK(report.cores_checked == 4);  // K3, K4, K5, C5
    CHECK(report.counterexamples.empty());
    CHECK(report.undecided.empty());
    CHECK_THROWS_AS(verify_conjecture(8), std::invalid_argument);
}
