#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "isinglab/canonical.hpp"
#include "isinglab/errors.hpp"
#include "isinglab/graph.hpp"

namespace isinglab {

inline Graph cycle_graph(int n) {
    if (n < 3) throw ArgumentError("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph(n, e);
}

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph(n, e);
}

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph(n, e);
}

inline Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
    return Graph(leaves + 1, e);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.push_back({i, a + j});
    return Graph(a + b, e);
}

// Two triangles glued at vertex 2.
inline Graph bowtie_graph() {
    return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

inline Graph petersen_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({5 + i, 5 + (i + 2) % 5});
        e.push_back({i, 5 + i});
    }
    return Graph(10, e);
}

// Hubs 0,1 joined by three internally disjoint paths with a, b, c edges.
// Paths of length 1 give parallel hub edges (a multigraph).
inline Graph theta_graph(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw ArgumentError("theta path lengths must be >= 1");
    std::vector<std::pair<int, int>> e;
    int next = 2;
    auto add_path = [&](int len) {
        int prev = 0;
        for (int i = 0; i + 1 < len; ++i) {
            e.push_back({prev, next});
            prev = next++;
        }
        e.push_back({prev, 1});
    };
    add_path(a);
    add_path(b);
    add_path(c);
    return Graph(next, e);
}

inline Graph grid_graph(int rows, int cols) {
    std::vector<std::pair<int, int>> e;
    auto id = [&](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) e.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < rows) e.push_back({id(r, c), id(r + 1, c)});
        }
    return Graph(rows * cols, e);
}

inline Graph cube_graph() {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < 8; ++v)
        for (int b = 0; b < 3; ++b)
            if (v < (v ^ (1 << b))) e.push_back({v, v ^ (1 << b)});
    return Graph(8, e);
}

inline Graph prism_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
        e.push_back({i, (i + 1) % n});
        e.push_back({n + i, n + (i + 1) % n});
        e.push_back({i, n + i});
    }
    return Graph(2 * n, e);
}

// --- random families -------------------------------------------------------

// Pairing model with rejection of loops and parallel edges.
inline Graph random_regular_graph(int degree, int n, std::uint64_t seed) {
    if (degree < 1 || n < 1) throw ArgumentError("random regular: degree and n must be positive");
    if ((static_cast<long long>(degree) * n) % 2 != 0)
        throw ArgumentError("random regular: d*n must be even");
    if (degree >= n) throw ArgumentError("random regular: need degree < n");
    std::mt19937_64 rng(seed);
    std::vector<int> points(n * degree);
    for (int i = 0; i < n * degree; ++i) points[i] = i / degree;
    for (int attempt = 0; attempt < 20000; ++attempt) {
        std::shuffle(points.begin(), points.end(), rng);
        std::set<std::pair<int, int>> seen;
        std::vector<std::pair<int, int>> edges;
        bool ok = true;
        for (int i = 0; i < n * degree; i += 2) {
            int u = points[i], v = points[i + 1];
            if (u == v) { ok = false; break; }
            auto key = std::minmax(u, v);
            if (!seen.insert({key.first, key.second}).second) { ok = false; break; }
            edges.push_back({u, v});
        }
        if (ok) return Graph(n, edges);
    }
    throw ConvergenceError("random regular: rejection sampling failed");
}

inline Graph random_gnp_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) e.push_back({i, j});
    return Graph(n, e);
}

// Uniform endpoints; loops and parallels welcome.
inline Graph random_multigraph(int n, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < m; ++i) e.push_back({pick(rng), pick(rng)});
    return Graph(n, e);
}

// --- exhaustive isomorph-free families --------------------------------------

// Connected simple graphs with <= n_max vertices and max degree <= delta_max,
// one representative per isomorphism class. Grows vertex by vertex: every
// connected graph has a non-cut vertex, so each class on k+1 vertices arises
// from one on k vertices plus a new vertex; duplicates fall to the
// certificate set.
inline std::vector<Graph> all_connected_graphs(int n_max, int delta_max) {
    if (n_max < 1) throw ArgumentError("all_connected_graphs: n_max must be >= 1");
    std::vector<Graph> out;
    std::vector<Graph> level{Graph(1, {})};
    out.push_back(level[0]);
    for (int n = 2; n <= n_max; ++n) {
        std::set<std::vector<std::uint32_t>> seen;
        std::vector<Graph> next;
        for (const Graph& g : level) {
            int k = g.vertex_count();
            std::vector<int> room;  // vertices with spare degree
            for (int v = 0; v < k; ++v)
                if (g.degree(v) < delta_max) room.push_back(v);
            const int r = static_cast<int>(room.size());
            for (std::uint32_t sub = 1; sub < (1u << r); ++sub) {
                if (std::popcount(sub) > delta_max) continue;
                std::vector<std::pair<int, int>> edges;
                for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
                for (int i = 0; i < r; ++i)
                    if (sub >> i & 1) edges.push_back({room[i], k});
                Graph cand(k + 1, edges);
                auto cert = canonical_certificate(cand);
                if (seen.insert(std::move(cert)).second) next.push_back(std::move(cand));
            }
        }
        for (const Graph& g : next) out.push_back(g);
        level = std::move(next);
    }
    return out;
}

// Connected simple graphs with <= m_max edges (all vertex counts), one per
// isomorphism class. Level m -> m+1 by adding an edge between existing
// vertices or hanging a new leaf; deleting a non-bridge edge or a leaf
// inverts the step, so every class is reached.
inline std::vector<Graph> all_connected_graphs_by_edges(int m_max) {
    std::vector<Graph> out;
    std::vector<Graph> level{Graph(1, {})};
    out.push_back(level[0]);
    for (int m = 1; m <= m_max; ++m) {
        std::set<std::vector<std::uint32_t>> seen;
        std::vector<Graph> next;
        for (const Graph& g : level) {
            int k = g.vertex_count();
            std::set<std::pair<int, int>> present;
            for (const auto& e : g.edges()) present.insert(std::minmax(e.u, e.v));
            std::vector<std::pair<int, int>> base;
            for (const auto& e : g.edges()) base.push_back({e.u, e.v});
            auto offer = [&](Graph cand) {
                auto cert = canonical_certificate(cand);
                if (seen.insert(std::move(cert)).second) next.push_back(std::move(cand));
            };
            for (int u = 0; u < k; ++u)
                for (int v = u + 1; v < k; ++v) {
                    if (present.count({u, v})) continue;
                    auto edges = base;
                    edges.push_back({u, v});
                    offer(Graph(k, edges));
                }
            for (int u = 0; u < k; ++u) {
                auto edges = base;
                edges.push_back({u, k});
                offer(Graph(k + 1, edges));
            }
        }
        for (const Graph& g : next) out.push_back(g);
        level = std::move(next);
    }
    return out;
}

}  // namespace isinglab
