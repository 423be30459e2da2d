#include "bdk/graph.hpp"

#include "bdk/errors.hpp"
#include "bdk/integer.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace bdk {

DirectedGraph::DirectedGraph(std::vector<std::string> vertex_ids, std::vector<Edge> edges)
    : vertex_ids_(std::move(vertex_ids)), edges_(std::move(edges)) {
    std::unordered_set<std::string> seen;
    for (const auto& id : vertex_ids_)
        if (!seen.insert(id).second) throw ParseError("duplicate vertex id: " + id);
    seen.clear();
    by_range_.resize(vertex_ids_.size());
    by_source_.resize(vertex_ids_.size());
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        const Edge& ed = edges_[e];
        if (!seen.insert(ed.id).second) throw ParseError("duplicate edge id: " + ed.id);
        if (ed.range < 0 || ed.range >= vertex_count() || ed.source < 0 || ed.source >= vertex_count())
            throw ParseError("edge endpoint names an undeclared vertex: " + ed.id);
        by_range_[ed.range].push_back(e);
        by_source_[ed.source].push_back(e);
    }
}

bool DirectedGraph::has_no_sources() const {
    for (const auto& es : by_range_)
        if (es.empty()) return false;
    return true;
}

bool DirectedGraph::has_no_sinks() const {
    for (const auto& es : by_source_)
        if (es.empty()) return false;
    return true;
}

int path_range(const DirectedGraph& g, const Path& p) {
    return p.edges.empty() ? p.range_vertex : g.edge(p.edges.front()).range;
}

int path_source(const DirectedGraph& g, const Path& p) {
    return p.edges.empty() ? p.range_vertex : g.edge(p.edges.back()).source;
}

Path path_extend(const DirectedGraph& g, const Path& p, int e) {
    if (g.edge(e).range != path_source(g, p))
        throw PreconditionViolated("path_extend: edges do not compose");
    Path q = p;
    q.edges.push_back(e);
    return q;
}

std::string path_id(const DirectedGraph& g, const Path& p) {
    if (p.edges.empty()) return g.vertex_ids()[p.range_vertex];
    std::string s;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        if (i) s += '.';
        s += g.edge(p.edges[i]).id;
    }
    return s;
}

int CyclicClasses::class_of(int v) const {
    for (int j = 0; j < static_cast<int>(classes.size()); ++j)
        for (int w : classes[j])
            if (w == v) return j;
    return -1;
}

IntMatrix vertex_matrix(const DirectedGraph& g) {
    IntMatrix a(g.vertex_count(), g.vertex_count());
    for (const auto& e : g.edges()) a(e.range, e.source) += 1;
    return a;
}

namespace {

// BFS along the path-extension orientation: from v across any e with
// r(e) = v to s(e). Returns levels, or an empty vector if not all reached.
std::vector<long> search_levels(const DirectedGraph& g, int root) {
    std::vector<long> level(g.vertex_count(), -1);
    std::queue<int> q;
    level[root] = 0;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e : g.edges_with_range(v)) {
            int w = g.edge(e).source;
            if (level[w] < 0) {
                level[w] = level[v] + 1;
                q.push(w);
            }
        }
    }
    for (long lv : level)
        if (lv < 0) return {};
    return level;
}

bool all_reached_reverse(const DirectedGraph& g, int root) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<int> q;
    seen[root] = 1;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int e : g.edges_with_source(v)) {
            int w = g.edge(e).range;
            if (!seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
        }
    }
    for (char c : seen)
        if (!c) return false;
    return true;
}

} // namespace

bool is_strongly_connected(const DirectedGraph& g) {
    if (g.vertex_count() == 0) return false;
    if (g.vertex_count() == 1) return g.edge_count() > 0; // a loop gives the nonempty path
    if (search_levels(g, 0).empty()) return false;
    return all_reached_reverse(g, 0);
}

long period(const DirectedGraph& g) {
    if (!is_strongly_connected(g)) throw NotStronglyConnected("period: graph is not strongly connected");
    const std::vector<long> level = search_levels(g, 0);
    long p = 0;
    for (const auto& e : g.edges()) p = std::gcd(p, level[e.range] + 1 - level[e.source]);
    // strong connectivity guarantees a closed path, hence a nonzero gcd
    if (p <= 0) throw InternalInconsistency("period: level assignment produced no cycle defect");
    return p;
}

CyclicClasses cyclic_classes(const DirectedGraph& g, long l) {
    if (!is_strongly_connected(g)) throw NotStronglyConnected("cyclic_classes: graph is not strongly connected");
    if (l < 1 || period(g) % l != 0) throw InvalidModulus("cyclic_classes: l does not divide the period");
    const std::vector<long> level = search_levels(g, 0);
    CyclicClasses cc;
    cc.l = l;
    cc.anchor = 0;
    cc.classes.assign(l, {});
    for (int v = 0; v < g.vertex_count(); ++v) cc.classes[level[v] % l].push_back(v);
    return cc;
}

std::vector<Path> paths_below(const DirectedGraph& g, int n) {
    std::vector<Path> all;
    std::vector<Path> current;
    for (int v = 0; v < g.vertex_count(); ++v) current.push_back(Path{v, {}});
    all = current;
    for (int len = 1; len < n; ++len) {
        std::vector<Path> next;
        for (const Path& p : current)
            for (int e : g.edges_with_range(path_source(g, p))) next.push_back(path_extend(g, p, e));
        std::sort(next.begin(), next.end(), [](const Path& a, const Path& b) { return a.edges < b.edges; });
        all.insert(all.end(), next.begin(), next.end());
        current = std::move(next);
    }
    return all;
}

DirectedGraph block_graph(const DirectedGraph& g, long n) {
    if (n < 1) throw PreconditionViolated("block_graph: n must be positive");
    if (!g.has_no_sources()) throw PreconditionViolated("block_graph: graph has a source");
    const std::vector<Path> verts = paths_below(g, static_cast<int>(n));
    std::map<std::vector<int>, std::map<int, int>> index_by_edges; // edges -> range anchor -> index
    std::vector<std::string> ids;
    ids.reserve(verts.size());
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        index_by_edges[verts[i].edges][verts[i].range_vertex] = i;
        ids.push_back(path_id(g, verts[i]));
    }
    auto index_of = [&](const Path& p) {
        return index_by_edges.at(p.edges).at(path_range(g, p));
    };
    std::vector<DirectedGraph::Edge> edges;
    for (int e = 0; e < g.edge_count(); ++e) {
        for (const Path& mu : verts) {
            if (path_range(g, mu) != g.edge(e).source) continue; // need mu in s(e)E^{<n}
            int range_index;
            if (mu.length() < n - 1) {
                Path emu;
                emu.range_vertex = g.edge(e).range;
                emu.edges.push_back(e);
                emu.edges.insert(emu.edges.end(), mu.edges.begin(), mu.edges.end());
                range_index = index_of(emu);
            } else {
                range_index = index_of(Path{g.edge(e).range, {}});
            }
            edges.push_back({"(" + g.edge(e).id + "," + path_id(g, mu) + ")", range_index, index_of(mu)});
        }
    }
    return DirectedGraph(std::move(ids), std::move(edges));
}

Path residue(const Path& mu, long n) {
    if (n < 1) throw PreconditionViolated("residue: n must be positive");
    Path out = mu;
    out.edges.resize(mu.length() % n);
    return out;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#') break;
        tokens.push_back(tok);
    }
    return tokens;
}

} // namespace

DirectedGraph parse_graph(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    bool header_seen = false;
    std::vector<std::string> vertex_ids;
    std::unordered_map<std::string, int> vertex_index;
    std::vector<DirectedGraph::Edge> edges;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;
        if (!header_seen) {
            if (tok.size() != 2 || tok[0] != "bdk-graph" || tok[1] != "v1")
                throw ParseError("graph: missing 'bdk-graph v1' header");
            header_seen = true;
            continue;
        }
        if (tok[0] == "vertex") {
            if (tok.size() != 2) throw ParseError("graph line " + std::to_string(line_no) + ": expected 'vertex <id>'");
            if (vertex_index.count(tok[1])) throw ParseError("graph line " + std::to_string(line_no) + ": duplicate vertex " + tok[1]);
            vertex_index[tok[1]] = static_cast<int>(vertex_ids.size());
            vertex_ids.push_back(tok[1]);
        } else if (tok[0] == "edge") {
            if (tok.size() != 3 && tok.size() != 4)
                throw ParseError("graph line " + std::to_string(line_no) + ": expected 'edge <range> <source> [mult]'");
            auto r = vertex_index.find(tok[1]);
            auto s = vertex_index.find(tok[2]);
            if (r == vertex_index.end() || s == vertex_index.end())
                throw ParseError("graph line " + std::to_string(line_no) + ": edge endpoint not declared");
            long mult = 1;
            if (tok.size() == 4) {
                try {
                    mult = std::stol(tok[3]);
                } catch (...) {
                    throw ParseError("graph line " + std::to_string(line_no) + ": bad multiplicity");
                }
                if (mult < 1) throw ParseError("graph line " + std::to_string(line_no) + ": multiplicity must be >= 1");
            }
            for (long k = 0; k < mult; ++k)
                edges.push_back({"e" + std::to_string(edges.size()), r->second, s->second});
        } else {
            throw ParseError("graph line " + std::to_string(line_no) + ": unknown directive " + tok[0]);
        }
    }
    if (!header_seen) throw ParseError("graph: empty input");
    if (vertex_ids.empty()) throw ParseError("graph: no vertices declared");
    DirectedGraph g(std::move(vertex_ids), std::move(edges));
    // standing hypothesis of every operation downstream
    if (!g.has_no_sources()) throw ParseError("graph: has a source (a vertex receiving no edge)");
    if (!g.has_no_sinks()) throw ParseError("graph: has a sink (a vertex emitting no edge)");
    return g;
}

DirectedGraph load_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_graph(buf.str());
}

std::string write_graph(const DirectedGraph& g) {
    std::ostringstream os;
    os << "bdk-graph v1\n";
    for (const auto& id : g.vertex_ids()) os << "vertex " << id << "\n";
    std::map<std::pair<int, int>, long> mult;
    for (const auto& e : g.edges()) mult[{e.range, e.source}] += 1;
    for (const auto& [key, m] : mult) {
        os << "edge " << g.vertex_ids()[key.first] << " " << g.vertex_ids()[key.second];
        if (m > 1) os << " " << m;
        os << "\n";
    }
    return os.str();
}

} // namespace bdk
