#pragma once

#include "bdk/matrix.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace bdk {

/// Finite directed multigraph. An edge e points from its source s(e) to its
/// range r(e); a path e1...en satisfies s(e_i) = r(e_{i+1}), so paths grow by
/// appending edges at the source end. Vertex order is declaration order and
/// fixes all matrix indexing.
class DirectedGraph {
public:
    struct Edge {
        std::string id;
        int range;
        int source;
    };

    DirectedGraph(std::vector<std::string> vertex_ids, std::vector<Edge> edges);

    int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[e]; }

    /// Edge indices e with r(e) = v, in declaration order.
    const std::vector<int>& edges_with_range(int v) const { return by_range_[v]; }
    /// Edge indices e with s(e) = v, in declaration order.
    const std::vector<int>& edges_with_source(int v) const { return by_source_[v]; }

    /// vE^1 nonempty for every v (the standing no-sources hypothesis).
    bool has_no_sources() const;
    /// E^1 v nonempty for every v.
    bool has_no_sinks() const;

private:
    std::vector<std::string> vertex_ids_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> by_range_;
    std::vector<std::vector<int>> by_source_;
};

/// A finite path anchored at its range vertex; empty paths are vertices.
struct Path {
    int range_vertex = -1;
    std::vector<int> edges; // e1...en with s(e_i) = r(e_{i+1})

    int length() const { return static_cast<int>(edges.size()); }
    bool operator==(const Path& other) const = default;
};

int path_range(const DirectedGraph& g, const Path& p);
int path_source(const DirectedGraph& g, const Path& p);
/// p followed by edge e; requires s(p) = r(e).
Path path_extend(const DirectedGraph& g, const Path& p, int e);
std::string path_id(const DirectedGraph& g, const Path& p);

/// The ordered partition Lambda_0..Lambda_{l-1} of the vertices, cyclically
/// shifted by edges: r(e) in Lambda_i implies s(e) in Lambda_{i+1 mod l}.
struct CyclicClasses {
    long l = 1;
    std::vector<std::vector<int>> classes; // vertex indices, ascending per class
    int anchor = 0;                        // first declared vertex; classes[0] contains it

    int class_of(int v) const;
};

/// A_E(v, w) = number of edges with range v and source w.
IntMatrix vertex_matrix(const DirectedGraph& g);

/// Every ordered vertex pair joined by a nonempty path.
bool is_strongly_connected(const DirectedGraph& g);

/// gcd of all closed-path lengths, via a search-tree level assignment.
long period(const DirectedGraph& g);

CyclicClasses cyclic_classes(const DirectedGraph& g, long l);

/// Paths of length < n with range v, ordered by (length, edge-index sequence).
std::vector<Path> paths_below(const DirectedGraph& g, int n);

/// The block graph E(n): vertices are E^{<n}, edges are pairs (e, mu) with
/// mu in s(e)E^{<n}, source mu, range e*mu (or r(e) when |mu| = n-1).
DirectedGraph block_graph(const DirectedGraph& g, long n);

/// The residue [mu]_n: the prefix of mu of length |mu| mod n.
Path residue(const Path& mu, long n);

// --- text format ------------------------------------------------------------
//
// Line oriented; '#' starts a comment. Header "bdk-graph v1", then
// "vertex <id>" and "edge <range> <source> [mult]" lines.

/// Parse; rejects malformed input and, per the standing hypotheses of every
/// downstream operation, graphs with sources or sinks.
DirectedGraph parse_graph(const std::string& text);
DirectedGraph load_graph_file(const std::string& path);

/// Canonical writer: vertices in declaration order, edges sorted by
/// (range, source) and merged into multiplicity counts.
std::string write_graph(const DirectedGraph& g);

} // namespace bdk
