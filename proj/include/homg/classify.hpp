#pragma once
// Exhaustive enumeration of small graphs up to isomorphism, core
// classification with projectivity certificates, and the record-by-record
// projective-iff-indecomposable check.

#include <optional>
#include <string>
#include <vector>

#include "homg/algebra.hpp"
#include "homg/graph.hpp"

namespace homg {

struct ClassificationRecord {
    std::string g6;  // canonical form; the stored graph equals it
    int vertex_count = 0;
    int edge_count = 0;
    bool core = false;
    std::optional<int> odd_girth_value;
    bool connected = false;
    ProjectivityVerdict verdict;
    // Bundled graph isomorphic to this record, e.g. "K7", "C5+1", "G3";
    // empty when none matches.
    std::string matched_name;
};

// One representative per isomorphism class: a graph is kept iff its
// upper-triangle encoding equals its own canonical form, so the order is
// deterministic. Requires n <= 8.
std::vector<Graph> enumerate_graphs(int n);

// Records for every core on exactly n vertices, sorted by canonical form.
// jobs > 1 splits the bitmask scan across threads; the merged result is
// identical for any worker count. n = 8 runs only with allow_eight set
// (exploratory, exactness unverified).
std::vector<ClassificationRecord> classify_cores(int n, int jobs = 1,
                                                 bool allow_eight = false);

struct ConjectureReport {
    int max_n = 0;
    int cores_checked = 0;
    std::vector<ClassificationRecord> counterexamples;
    std::vector<ClassificationRecord> undecided;
};

// Checks projective <=> indecomposable for every connected core on 3..n
// vertices. Requires n <= 7.
ConjectureReport verify_conjecture(int n, int jobs = 1);

// Compact single-line JSON rendering of one record; key order is fixed.
std::string record_json_line(const ClassificationRecord& rec);

}  // namespace homg
