#include "bdk/graph.hpp"

#include "bdk/errors.hpp"
#include "bdk/verification.hpp"
#include "test_graphs.hpp"

#include <doctest.h>

#include <numeric>

using namespace bdk;
using namespace bdk::testing;

TEST_CASE("vertex matrix examples") {
    CHECK(vertex_matrix(cycle(1)) == IntMatrix(1, 1, {1}));
    // 3-cycle a->b->c->a with range->source as written
    const DirectedGraph g({"a", "b", "c"},
                          {{"e0", 0, 1}, {"e1", 1, 2}, {"e2", 2, 0}});
    CHECK(vertex_matrix(g) == IntMatrix(3, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0}));
    CHECK(vertex_matrix(from_matrix({{2, 1}, {1, 2}})) == IntMatrix(2, 2, {2, 1, 1, 2}));
}

TEST_CASE("strong connectivity") {
    CHECK(is_strongly_connected(cycle(3)));
    CHECK(is_strongly_connected(cycle(1)));
    CHECK(!is_strongly_connected(DirectedGraph({"a", "b"}, {{"e0", 0, 1}})));
    CHECK(!is_strongly_connected(DirectedGraph({"v"}, {}))); // no nonempty path
}

TEST_CASE("period examples") {
    for (int j = 1; j <= 3; ++j) CHECK(period(cycle(j)) == j);
    // 3-cycle with a chord that closes a 2-cycle: gcd(3, 2) = 1
    DirectedGraph chord({"a", "b", "c"},
                        {{"e0", 1, 0}, {"e1", 2, 1}, {"e2", 0, 2}, {"e3", 0, 1}});
    CHECK(period(chord) == 1);
    CHECK(period(from_matrix({{2, 1}, {1, 2}})) == 1); // loops give length-1 cycles
    CHECK_THROWS_AS(period(DirectedGraph({"a", "b"}, {{"e0", 0, 1}})), NotStronglyConnected);
}

namespace {

// Independent oracle: closed-path lengths up to 2|E^0| detected through
// diagonal entries of matrix powers.
long period_oracle(const DirectedGraph& g) {
    const IntMatrix a = vertex_matrix(g);
    IntMatrix p = IntMatrix::identity(a.rows());
    long gcd_len = 0;
    for (int k = 1; k <= 2 * a.rows(); ++k) {
        p = p * a;
        for (int v = 0; v < a.rows(); ++v)
            if (p(v, v) > 0) {
                gcd_len = std::gcd(gcd_len, static_cast<long>(k));
                break;
            }
    }
    return gcd_len;
}

} // namespace

TEST_CASE("period agrees with exhaustive closed-path enumeration") {
    for (const DirectedGraph& g : enumerate_test_graphs(3, 2)) CHECK(period(g) == period_oracle(g));
    for (const DirectedGraph& g : enumerate_test_graphs(4, 1)) CHECK(period(g) == period_oracle(g));
}

TEST_CASE("cyclic classes") {
    SUBCASE("C_2 with l = 2") {
        const CyclicClasses cc = cyclic_classes(cycle(2), 2);
        CHECK(cc.classes == std::vector<std::vector<int>>{{0}, {1}});
        CHECK(cc.anchor == 0);
    }
    SUBCASE("l = 1 puts everything in one class") {
        const CyclicClasses cc = cyclic_classes(cycle(3), 1);
        CHECK(cc.classes == std::vector<std::vector<int>>{{0, 1, 2}});
    }
    SUBCASE("C_4 with l = 2 alternates") {
        const CyclicClasses cc = cyclic_classes(cycle(4), 2);
        CHECK(cc.classes == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
    }
    CHECK_THROWS_AS(cyclic_classes(cycle(3), 2), InvalidModulus);
}

TEST_CASE("cyclic classes shift by one along edges") {
    for (const DirectedGraph& g : enumerate_test_graphs(3, 2)) {
        const long p = period(g);
        for (long l = 1; l <= p; ++l) {
            if (p % l != 0) continue;
            const CyclicClasses cc = cyclic_classes(g, l);
            std::vector<int> idx(g.vertex_count());
            for (int j = 0; j < static_cast<int>(cc.classes.size()); ++j)
                for (int v : cc.classes[j]) idx[v] = j;
            for (const auto& e : g.edges()) CHECK(idx[e.source] == (idx[e.range] + 1) % l);
        }
    }
}

TEST_CASE("block graph examples") {
    SUBCASE("C_1(3) is the 3-cycle") {
        const DirectedGraph b = block_graph(cycle(1), 3);
        REQUIRE(b.vertex_count() == 3);
        CHECK(vertex_matrix(b) == IntMatrix(3, 3, {0, 0, 1, 1, 0, 0, 0, 1, 0}));
        CHECK(period(b) == 3);
    }
    SUBCASE("E(1) = E") {
        for (const DirectedGraph& g : {cycle(2), bouquet(2), from_matrix({{1, 2}, {1, 0}})}) {
            const DirectedGraph b = block_graph(g, 1);
            CHECK(vertex_matrix(b) == vertex_matrix(g));
        }
    }
    SUBCASE("B_2(2) has 1 + 2 vertices") {
        CHECK(block_graph(bouquet(2), 2).vertex_count() == 3);
    }
}

TEST_CASE("block graph size, sources, and row-finiteness") {
    for (const DirectedGraph& g : enumerate_test_graphs(2, 2)) {
        for (long n = 1; n <= 3; ++n) {
            const DirectedGraph b = block_graph(g, n);
            // |E(n)^0| = sum of |E^k| for k < n
            long expected = 0;
            IntMatrix pow = IntMatrix::identity(g.vertex_count());
            const IntMatrix a = vertex_matrix(g);
            for (long k = 0; k < n; ++k) {
                for (int i = 0; i < pow.rows(); ++i)
                    for (int j = 0; j < pow.cols(); ++j) expected += pow(i, j).convert_to<long>();
                pow = pow * a;
            }
            CHECK(b.vertex_count() == expected);
            CHECK(b.has_no_sources());
            CHECK(b.has_no_sinks());
        }
    }
}

TEST_CASE("residues") {
    const DirectedGraph c1 = cycle(1);
    Path mu{0, {0, 0, 0, 0, 0}}; // |mu| = 5
    CHECK(residue(mu, 3).length() == 2);
    CHECK(residue(Path{0, {0, 0, 0, 0}}, 4).length() == 0);
    CHECK(residue(Path{0, {0, 0, 0, 0}}, 4).range_vertex == 0);
    CHECK(residue(Path{0, {0}}, 2) == Path{0, {0}});
    CHECK(path_range(c1, residue(mu, 3)) == 0);
}

TEST_CASE("paths compose range to source") {
    const DirectedGraph g = cycle(2);
    Path p{0, {}};
    CHECK(path_range(g, p) == 0);
    CHECK(path_source(g, p) == 0);
    // from v0, the edge with range v0 has source v1
    p = path_extend(g, p, g.edges_with_range(0)[0]);
    CHECK(path_range(g, p) == 0);
    CHECK(path_source(g, p) == 1);
    CHECK_THROWS_AS(path_extend(g, p, g.edges_with_range(0)[0]), PreconditionViolated);
}

TEST_CASE("graph text format round-trips") {
    const std::string text =
        "bdk-graph v1\n"
        "# a two-vertex graph with parallel edges\n"
        "vertex a\n"
        "vertex b\n"
        "edge a b 2\n"
        "edge b a\n"
        "edge a a\n";
    const DirectedGraph g = parse_graph(text);
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 4);
    CHECK(vertex_matrix(g) == IntMatrix(2, 2, {1, 2, 1, 0}));
    const std::string canonical = write_graph(g);
    CHECK(parse_graph(canonical).vertex_count() == 2);
    CHECK(vertex_matrix(parse_graph(canonical)) == vertex_matrix(g));
    // canonical output is a fixed point of print-parse-print
    CHECK(write_graph(parse_graph(canonical)) == canonical);
}

TEST_CASE("parse rejections") {
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("bdk-graph v2\nvertex a\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("bdk-graph v1\nvertex a\nvertex a\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("bdk-graph v1\nvertex a\nedge a b\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("bdk-graph v1\nvertex a\nedge a a 0\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("bdk-graph v1\nvertex a\nfoo a\n"), ParseError);
    // sources and sinks are rejected at parse time
    CHECK_THROWS_AS(parse_graph("bdk-graph v1\nvertex a\nvertex b\nedge a a\nedge a b\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("bdk-graph v1\nvertex a\nvertex b\nedge a a\nedge b a\n"), ParseError);
}
