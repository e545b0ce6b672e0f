#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "isinglab/blocks.hpp"
#include "isinglab/generators.hpp"

using namespace isinglab;

namespace {

bool subgraph_connected(const Graph& g, const std::vector<int>& ids) {
    std::set<int> verts;
    for (int id : ids) {
        verts.insert(g.edge(id).u);
        verts.insert(g.edge(id).v);
    }
    if (verts.empty()) return false;
    std::set<int> seen{*verts.begin()};
    std::vector<int> stack{*verts.begin()};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int id : ids) {
            const auto& e = g.edge(id);
            int other = -1;
            if (e.u == u) other = e.v;
            else if (e.v == u) other = e.u;
            if (other >= 0 && !seen.count(other)) {
                seen.insert(other);
                stack.push_back(other);
            }
        }
    }
    return seen.size() == verts.size();
}

// 2-connected in the K2-counts convention: connected, and for >= 2 edges no
// vertex whose removal disconnects the rest; loops are 2-connected alone.
bool subgraph_two_connected(const Graph& g, const std::vector<int>& ids) {
    if (ids.empty()) return false;
    if (!subgraph_connected(g, ids)) return false;
    if (ids.size() == 1) return true;
    std::set<int> verts;
    for (int id : ids) {
        if (g.edge(id).is_loop()) return false;  // a loop cannot share a block
        verts.insert(g.edge(id).u);
        verts.insert(g.edge(id).v);
    }
    for (int cut : verts) {
        std::vector<int> rest;
        std::set<int> touched;
        for (int id : ids) {
            const auto& e = g.edge(id);
            if (e.u == cut || e.v == cut) continue;
            rest.push_back(id);
            touched.insert(e.u);
            touched.insert(e.v);
        }
        std::size_t remaining = verts.size() - 1;
        if (remaining <= 1) continue;  // a lone vertex is connected
        if (remaining > touched.size()) return false;  // removal isolated a vertex
        if (!subgraph_connected(g, rest)) return false;
    }
    return true;
}

// Oracle: blocks are the maximal 2-connected edge subsets.
std::set<std::vector<int>> blocks_oracle(const Graph& g) {
    std::vector<int> all;
    for (const auto& e : g.edges()) all.push_back(e.id);
    const int m = static_cast<int>(all.size());
    REQUIRE(m <= 12);
    std::vector<std::vector<int>> two_conn;
    for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<int> ids;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) ids.push_back(all[i]);
        if (subgraph_two_connected(g, ids)) two_conn.push_back(ids);
    }
    std::set<std::vector<int>> maximal;
    for (const auto& s : two_conn) {
        bool is_max = true;
        for (const auto& t : two_conn)
            if (s != t && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                is_max = false;
                break;
            }
        if (is_max) maximal.insert(s);
    }
    return maximal;
}

void check_invariants(const Graph& g, const BlockDecomposition& bd) {
    // blocks partition the edge set
    std::set<int> covered;
    for (const auto& b : bd.blocks)
        for (int id : b.ids()) {
            REQUIRE_FALSE(covered.count(id));
            covered.insert(id);
        }
    REQUIRE(static_cast<int>(covered.size()) == g.edge_count());

    // two blocks share at most one vertex and shared vertices are cut vertices
    std::vector<std::set<int>> verts;
    for (const auto& b : bd.blocks) {
        std::set<int> vs;
        for (int id : b.ids()) {
            vs.insert(g.edge(id).u);
            vs.insert(g.edge(id).v);
        }
        verts.push_back(vs);
    }
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            std::vector<int> inter;
            std::set_intersection(verts[i].begin(), verts[i].end(), verts[j].begin(),
                                  verts[j].end(), std::back_inserter(inter));
            REQUIRE(inter.size() <= 1);
            for (int v : inter) REQUIRE(bd.is_cut_vertex(v));
        }

    // block-cutpoint graph is a forest: nodes = blocks + cuts, acyclic
    int nodes = static_cast<int>(bd.blocks.size() + bd.cut_vertices.size());
    std::vector<int> par(nodes);
    std::iota(par.begin(), par.end(), 0);
    auto find = [&](int x) {
        while (par[x] != x) x = par[x] = par[par[x]];
        return x;
    };
    auto cut_index = [&](int v) {
        return static_cast<int>(bd.blocks.size()) +
               static_cast<int>(std::lower_bound(bd.cut_vertices.begin(), bd.cut_vertices.end(),
                                                 v) -
                                bd.cut_vertices.begin());
    };
    for (auto [bi, v] : bd.tree_edges) {
        int a = find(bi), b = find(cut_index(v));
        REQUIRE(a != b);  // an equal pair would close a cycle
        par[a] = b;
    }
}

}  // namespace

TEST_CASE("block decomposition basics") {
    Graph c3 = cycle_graph(3);
    auto bd = block_decomposition(c3);
    REQUIRE(bd.blocks.size() == 1);
    REQUIRE(bd.blocks[0].count() == 3);
    REQUIRE(bd.cut_vertices.empty());

    Graph p3 = path_graph(3);
    bd = block_decomposition(p3);
    REQUIRE(bd.blocks.size() == 2);
    REQUIRE(bd.cut_vertices == std::vector<int>{1});
    for (const auto& b : bd.blocks) REQUIRE(b.count() == 1);

    Graph bow = bowtie_graph();
    bd = block_decomposition(bow);
    REQUIRE(bd.blocks.size() == 2);
    REQUIRE(bd.blocks[0].count() == 3);
    REQUIRE(bd.blocks[1].count() == 3);
    REQUIRE(bd.cut_vertices == std::vector<int>{2});

    // matches the maximal-2-connected-subgraph oracle
    std::set<std::vector<int>> got;
    for (const auto& b : bd.blocks) got.insert(b.ids());
    REQUIRE(got == blocks_oracle(bow));
}

TEST_CASE("blocks of multigraphs") {
    // loop + bridge + parallel pair
    Graph g(3, {{0, 0}, {0, 1}, {1, 2}, {1, 2}});
    auto bd = block_decomposition(g);
    REQUIRE(bd.blocks.size() == 3);
    REQUIRE(bd.blocks[0].count() == 1);  // loop
    REQUIRE(bd.blocks[1].count() == 1);  // bridge
    REQUIRE(bd.blocks[2].count() == 2);  // parallel pair
    REQUIRE(bd.cut_vertices == std::vector<int>{0, 1});
    check_invariants(g, bd);
}

TEST_CASE("block oracle agreement on small graphs") {
    std::vector<Graph> corpus = {cycle_graph(4),          path_graph(5),
                                 bowtie_graph(),          star_graph(4),
                                 theta_graph(1, 2, 2),    complete_graph(4),
                                 Graph(1, {}),            Graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})};
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) corpus.push_back(random_multigraph(2 + rng() % 5, 1 + rng() % 8, rng()));
    for (const auto& g : corpus) {
        auto bd = block_decomposition(g);
        check_invariants(g, bd);
        if (g.edge_count() > 0 && g.edge_count() <= 10) {
            std::set<std::vector<int>> got;
            for (const auto& b : bd.blocks) got.insert(b.ids());
            REQUIRE(got == blocks_oracle(g));
        }
    }
}

TEST_CASE("block invariants on random graphs") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 250; ++t) {
        Graph g = (t % 2) ? random_gnp_graph(2 + rng() % 10, 0.3, rng())
                          : random_multigraph(2 + rng() % 8, rng() % 14, rng());
        check_invariants(g, block_decomposition(g));
    }
    // connected graph: block-cutpoint tree has blocks+cuts nodes, and a
    // bridge forms its own K2 block
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 1}});
    auto bd = block_decomposition(g);
    REQUIRE(bd.blocks.size() == 2);
    REQUIRE(bd.blocks[0].count() == 1);
    REQUIRE(bd.tree_edges.size() == bd.blocks.size() + bd.cut_vertices.size() - 1);
}

TEST_CASE("subgraph analyzer agrees with the full decomposition") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        Graph g = random_multigraph(2 + rng() % 6, 1 + rng() % 10, rng());
        SubgraphBlocks sb(g);
        std::uint64_t full = g.full_edge_set().low_word();
        sb.analyze(full);
        auto bd = block_decomposition(g);
        std::set<std::vector<int>> a, b;
        for (const auto& blk : bd.blocks) a.insert(blk.ids());
        for (std::uint64_t m : sb.blocks()) b.insert(EdgeSet::from_u64(m, 64).ids());
        REQUIRE(a == b);
        std::uint64_t cuts = sb.cut_vertex_mask();
        std::vector<int> cut_list;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (cuts >> v & 1) cut_list.push_back(v);
        REQUIRE(cut_list == bd.cut_vertices);
    }
}
