#include <catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "isinglab/canonical.hpp"
#include "isinglab/generators.hpp"
#include "isinglab/graph.hpp"

using namespace isinglab;

namespace {

// permutation brute force, the certificate oracle
std::vector<std::uint32_t> certificate_oracle(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint32_t> best;
    do {
        std::vector<std::uint32_t> rows;
        for (int i = 0; i < n; ++i) {
            std::uint32_t row = 0;
            for (int j = 0; j < i; ++j)
                if (adj[perm[i]] >> perm[j] & 1) row |= 1u << (i - 1 - j);
            rows.push_back(row);
        }
        if (best.empty() || rows > best) best = rows;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<std::uint32_t> cert{static_cast<std::uint32_t>(n)};
    cert.insert(cert.end(), best.begin(), best.end());
    return cert;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> e;
    for (const auto& ed : g.edges()) e.push_back({perm[ed.u], perm[ed.v]});
    return Graph(g.vertex_count(), e);
}

// labeled census of connected graphs on exactly n vertices, deduplicated by
// certificate; independent of the augmentation generators
int census_connected(int n, int delta_cap) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    std::set<std::vector<std::uint32_t>> classes;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) edges.push_back(pairs[i]);
        Graph g(n, edges);
        if (max_degree(g) > delta_cap) continue;
        if (!g.connected()) continue;
        classes.insert(canonical_certificate(g));
    }
    return static_cast<int>(classes.size());
}

}  // namespace

TEST_CASE("canonical certificate matches the permutation oracle") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g = random_gnp_graph(n, 0.4, rng());
        REQUIRE(canonical_certificate(g) == certificate_oracle(g));
    }
}

TEST_CASE("certificates are relabeling invariants") {
    std::mt19937_64 rng(18);
    for (int t = 0; t < 60; ++t) {
        int n = 3 + static_cast<int>(rng() % 6);
        Graph g = random_gnp_graph(n, 0.45, rng());
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        REQUIRE(canonical_certificate(g) == canonical_certificate(relabel(g, perm)));
    }
    REQUIRE_THROWS_AS(canonical_certificate(Graph(2, {{0, 0}})), ArgumentError);
}

TEST_CASE("connected-graph generator matches the labeled census") {
    // all connected graphs: 1, 1, 2, 6, 21 classes on n = 1..5
    auto all = all_connected_graphs(5, 4);
    std::map<int, int> by_n;
    for (const auto& g : all) by_n[g.vertex_count()]++;
    REQUIRE(by_n[1] == 1);
    REQUIRE(by_n[2] == 1);
    REQUIRE(by_n[3] == 2);
    REQUIRE(by_n[4] == 6);
    REQUIRE(by_n[5] == 21);
    for (int n = 2; n <= 5; ++n) REQUIRE(by_n[n] == census_connected(n, n));

    // bounded degree: census oracle per vertex count
    auto cubic = all_connected_graphs(6, 3);
    std::map<int, int> cubic_by_n;
    for (const auto& g : cubic) {
        REQUIRE(max_degree(g) <= 3);
        REQUIRE(g.connected());
        cubic_by_n[g.vertex_count()]++;
    }
    for (int n = 1; n <= 6; ++n) REQUIRE(cubic_by_n[n] == census_connected(n, 3));
}

TEST_CASE("edge-count generator matches the labeled census") {
    auto all = all_connected_graphs_by_edges(6);
    std::map<int, int> by_m;
    std::set<std::vector<std::uint32_t>> certs;
    for (const auto& g : all) {
        by_m[g.edge_count()]++;
        REQUIRE(g.connected());
        REQUIRE(certs.insert(canonical_certificate(g)).second);  // no isomorphs
    }
    // connected graphs with 0..6 edges: 1, 1, 1, 3, 5, 12, 30
    REQUIRE(by_m[0] == 1);
    REQUIRE(by_m[1] == 1);
    REQUIRE(by_m[2] == 1);
    REQUIRE(by_m[3] == 3);
    REQUIRE(by_m[4] == 5);
    REQUIRE(by_m[5] == 12);
    REQUIRE(by_m[6] == 30);

    // independent cross-check: count classes with m edges over all vertex
    // counts via the labeled census
    for (int m = 3; m <= 5; ++m) {
        std::set<std::vector<std::uint32_t>> classes;
        for (int n = 2; n <= m + 1; ++n) {
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
                if (std::popcount(mask) != m) continue;
                std::vector<std::pair<int, int>> edges;
                for (std::size_t i = 0; i < pairs.size(); ++i)
                    if (mask >> i & 1) edges.push_back(pairs[i]);
                Graph g(n, edges);
                if (!g.connected()) continue;
                classes.insert(canonical_certificate(g));
            }
        }
        REQUIRE(by_m[m] == static_cast<int>(classes.size()));
    }
}

TEST_CASE("random regular graphs") {
    for (std::uint64_t seed : {1ull, 2ull, 77ull}) {
        Graph g = random_regular_graph(3, 10, seed);
        REQUIRE(g.simple());
        for (int v = 0; v < 10; ++v) REQUIRE(g.degree(v) == 3);
    }
    // deterministic under a fixed seed
    Graph a = random_regular_graph(3, 8, 42), b = random_regular_graph(3, 8, 42);
    REQUIRE(format_edge_list(a) == format_edge_list(b));
    REQUIRE_THROWS_AS(random_regular_graph(3, 9, 1), ArgumentError);  // d*n odd
}

TEST_CASE("theta graphs") {
    Graph t = theta_graph(2, 3, 4);
    REQUIRE(t.vertex_count() == 2 + 1 + 2 + 3);
    REQUIRE(t.edge_count() == 9);
    REQUIRE(girth(t) == 5);
    REQUIRE(max_degree(t) == 3);
    REQUIRE(theta_graph(1, 2, 2).simple());
    REQUIRE_FALSE(theta_graph(1, 1, 2).simple());
}
