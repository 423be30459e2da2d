#pragma once

#include "bdk/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bdk {

struct SuiteParams {
    int max_vertices = 3;
    int max_mult = 2;
    long max_n = 3;
    long max_m = 3;
    int random_cases = 500;
    unsigned long long seed = 20260811ULL;
};

struct OracleFailure {
    std::string key; // sortable case identifier
    std::string graph_text;
    std::string params;
    std::string expected;
    std::string actual;
};

struct OracleReport {
    std::string suite;
    long cases = 0;
    std::vector<OracleFailure> failures;
    std::optional<unsigned long long> seed; // recorded for the seeded suites

    bool passed() const { return failures.empty(); }
    std::string to_string() const;
};

/// All strongly connected multigraphs with at most max_vertices vertices and
/// entrywise multiplicity at most max_mult, deduplicated by vertex matrix,
/// in a fixed order (vertex count, then lexicographic matrix entries).
std::vector<DirectedGraph> enumerate_test_graphs(int max_vertices, int max_mult);

/// Suite names accepted by run_suite, in display order.
const std::vector<std::string>& suite_names();

/// Run one oracle suite. Every suite compares two independently implemented
/// computations; a correct build reports zero failures.
OracleReport run_suite(const std::string& name, const SuiteParams& params = {});

} // namespace bdk
