#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "isinglab/errors.hpp"

namespace isinglab {

// Girth of an acyclic graph.
inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

// Membership mask over edge ids, 64 ids per word.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int capacity_bits)
        : words_((capacity_bits + 63) / 64, 0), capacity_(capacity_bits) {}

    static EdgeSet from_u64(std::uint64_t mask, int capacity_bits) {
        EdgeSet s(std::max(capacity_bits, 1));
        if (!s.words_.empty()) s.words_[0] = mask;
        return s;
    }

    int capacity() const { return capacity_; }
    bool test(int id) const {
        return id >= 0 && id < capacity_ && (words_[id / 64] >> (id % 64) & 1u);
    }
    void set(int id) { words_.at(id / 64) |= std::uint64_t{1} << (id % 64); }
    void reset(int id) { words_.at(id / 64) &= ~(std::uint64_t{1} << (id % 64)); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }

    std::vector<int> ids() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    // First word; valid whenever capacity <= 64 (all enumeration engines enforce that).
    std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

    friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
        return a.ids() == b.ids();
    }

private:
    std::vector<std::uint64_t> words_;
    int capacity_ = 0;
};

// Undirected multigraph with stable edge ids. Immutable after construction;
// delete/contract return new graphs that keep surviving ids (never reused).
class Graph {
public:
    struct Edge {
        int u, v, id;
        bool is_loop() const { return u == v; }
        int other(int w) const { return w == u ? v : u; }
    };

    Graph() = default;

    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_list)
        : n_(vertex_count) {
        if (vertex_count < 0) throw ArgumentError("negative vertex count");
        edges_.reserve(edge_list.size());
        int id = 0;
        for (auto [u, v] : edge_list) {
            check_vertex(u);
            check_vertex(v);
            edges_.push_back({u, v, id++});
        }
        next_id_ = id;
        finish();
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    // One past the largest id ever assigned; capacity for EdgeSet masks.
    int edge_id_bound() const { return next_id_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool simple() const { return simple_; }

    bool has_edge_id(int id) const {
        return id >= 0 && id < next_id_ && id_index_[id] >= 0;
    }
    const Edge& edge(int id) const {
        if (!has_edge_id(id)) throw ArgumentError("unknown edge id " + std::to_string(id));
        return edges_[id_index_[id]];
    }

    // (edge id, other endpoint); loops appear once with other == v.
    const std::vector<std::pair<int, int>>& incident(int v) const {
        check_vertex(v);
        return inc_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        int d = 0;
        for (auto [id, w] : inc_[v]) d += (w == v) ? 2 : 1;  // loop counts twice
        return d;
    }

    EdgeSet full_edge_set() const {
        EdgeSet s(std::max(next_id_, 1));
        for (const auto& e : edges_) s.set(e.id);
        return s;
    }

    Graph deleted(int edge_id) const {
        const Edge& e = edge(edge_id);
        (void)e;
        Graph g;
        g.n_ = n_;
        g.next_id_ = next_id_;
        for (const auto& ed : edges_)
            if (ed.id != edge_id) g.edges_.push_back(ed);
        g.finish();
        return g;
    }

    // Contract e = {u,v}: merge v into u (u < v kept), drop e, retain loops and
    // parallels produced by the merge. Vertices above v shift down by one.
    Graph contracted(int edge_id) const {
        const Edge& e = edge(edge_id);
        if (e.is_loop()) throw InvalidMoveError("cannot contract a loop");
        int keep = std::min(e.u, e.v), gone = std::max(e.u, e.v);
        auto remap = [&](int w) {
            if (w == gone) return keep;
            return w > gone ? w - 1 : w;
        };
        Graph g;
        g.n_ = n_ - 1;
        g.next_id_ = next_id_;
        for (const auto& ed : edges_) {
            if (ed.id == edge_id) continue;
            g.edges_.push_back({remap(ed.u), remap(ed.v), ed.id});
        }
        g.finish();
        return g;
    }

    int component_count() const {
        std::vector<int> par(n_);
        std::iota(par.begin(), par.end(), 0);
        auto find = [&](int x) {
            while (par[x] != x) x = par[x] = par[par[x]];
            return x;
        };
        int comps = n_;
        for (const auto& e : edges_) {
            int a = find(e.u), b = find(e.v);
            if (a != b) { par[a] = b; --comps; }
        }
        return comps;
    }

    bool connected() const { return n_ <= 1 || component_count() == 1; }

    // Dimension of the GF(2) cycle space: |E| - |V| + #components.
    int cycle_space_dimension() const {
        return edge_count() - n_ + component_count();
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw ArgumentError("vertex index " + std::to_string(v) + " out of range [0," +
                                std::to_string(n_) + ")");
    }

    void finish() {
        std::sort(edges_.begin(), edges_.end(),
                  [](const Edge& a, const Edge& b) { return a.id < b.id; });
        id_index_.assign(std::max(next_id_, 1), -1);
        inc_.assign(n_, {});
        simple_ = true;
        std::set<std::pair<int, int>> seen;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const Edge& e = edges_[i];
            id_index_[e.id] = static_cast<int>(i);
            inc_[e.u].push_back({e.id, e.v});
            if (!e.is_loop()) inc_[e.v].push_back({e.id, e.u});
            auto key = std::minmax(e.u, e.v);
            if (e.is_loop() || !seen.insert({key.first, key.second}).second) simple_ = false;
        }
    }

    int n_ = 0;
    int next_id_ = 0;
    bool simple_ = true;
    std::vector<Edge> edges_;
    std::vector<int> id_index_;
    std::vector<std::vector<std::pair<int, int>>> inc_;
};

inline int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

// Shortest cycle length; loops give 1, parallel pairs 2, forests kInfiniteGirth.
inline int girth(const Graph& g) {
    std::set<std::pair<int, int>> seen;
    bool parallel = false;
    for (const auto& e : g.edges()) {
        if (e.is_loop()) return 1;
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert({key.first, key.second}).second) parallel = true;
    }
    if (parallel) return 2;
    // Simple graph: BFS from every vertex; a non-tree edge scanned at (u,w)
    // closes a cycle of length dist[u]+dist[w]+1. The minimum over all roots
    // is exact for unweighted graphs.
    const int n = g.vertex_count();
    int best = kInfiniteGirth;
    std::vector<int> dist(n), parent(n);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        queue.clear();
        queue.push_back(root);
        dist[root] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            if (best != kInfiniteGirth && 2 * dist[u] >= best) break;
            for (auto [id, w] : g.incident(u)) {
                (void)id;
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u] && dist[w] >= dist[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

// --- text formats ------------------------------------------------------

// Edge list: first line is the vertex count, then "u v" per edge.
// '#' lines and blank lines are ignored. u == v makes a loop; repeated
// lines make parallel edges. Edge ids follow input order.
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) { n = -1; continue; }
                throw ParseError("expected vertex count", lineno);
            }
            if (n < 0) throw ParseError("negative vertex count", lineno);
            std::string rest;
            if (ls >> rest) throw ParseError("trailing tokens after vertex count", lineno);
            continue;
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        long u, v;
        if (!(ls >> u) || !(ls >> v)) throw ParseError("expected two vertex indices", lineno);
        std::string rest;
        if (ls >> rest) throw ParseError("trailing tokens after edge", lineno);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex index out of range 0.." + std::to_string(n - 1), lineno);
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    if (n < 0) throw ParseError("empty input, expected vertex count");
    return Graph(n, edges);
}

inline std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << "\n";
    for (const auto& e : g.edges()) out << e.u << " " << e.v << "\n";
    return out.str();
}

// graph6 decoding (simple graphs, printable ASCII encoding).
inline Graph parse_graph6(const std::string& s_in) {
    std::string s = s_in;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw ParseError("empty graph6 string");
    std::size_t pos = 0;
    auto byte = [&](std::size_t i) -> int {
        if (i >= s.size()) throw ParseError("graph6 string truncated");
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range");
        return c - 63;
    };
    long long n;
    if (byte(0) != 63) {
        n = byte(0);
        pos = 1;
    } else if (s.size() > 1 && byte(1) != 63) {
        n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
        pos = 4;
    } else {
        n = 0;
        for (int i = 2; i < 8; ++i) n = (n << 6) | byte(i);
        pos = 8;
    }
    if (n > 1'000'000) throw ParseError("graph6 vertex count too large");
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    int cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bit == 0) {
                cur = byte(pos++);
                bit = 6;
            }
            --bit;
            if (cur >> bit & 1) edges.push_back({i, j});
        }
    }
    return Graph(static_cast<int>(n), edges);
}

// Loads either format: a first non-blank token that parses as an integer is
// treated as an edge list, anything else as graph6.
inline Graph load_graph(const std::string& text) {
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) throw ParseError("empty graph input");
    char c = text[i];
    if (c == '#' || (c >= '0' && c <= '9')) return parse_edge_list(text);
    return parse_graph6(text);
}

}  // namespace isinglab
