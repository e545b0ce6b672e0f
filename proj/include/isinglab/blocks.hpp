#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "isinglab/graph.hpp"

namespace isinglab {

// Blocks (maximal 2-connected subgraphs, K2 counts), cut vertices, and the
// block-cutpoint incidences of a multigraph. Each loop is its own block.
// A cut vertex is a vertex lying in at least two blocks.
struct BlockDecomposition {
    std::vector<EdgeSet> blocks;                   // sorted by smallest edge id
    std::vector<int> cut_vertices;                 // sorted
    std::vector<std::pair<int, int>> tree_edges;   // (block index, cut vertex)

    bool is_cut_vertex(int v) const {
        return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
    }
};

inline BlockDecomposition block_decomposition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> raw_blocks;  // edge-id lists
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> edge_stack;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent_edge) {
        disc[u] = low[u] = timer++;
        for (auto [id, w] : g.incident(u)) {
            if (id == parent_edge) continue;
            if (w == u) {  // loop: singleton block
                raw_blocks.push_back({id});
                continue;
            }
            if (disc[w] < 0) {
                edge_stack.push_back(id);
                dfs(w, id);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    std::vector<int> blk;
                    while (true) {
                        int e = edge_stack.back();
                        edge_stack.pop_back();
                        blk.push_back(e);
                        if (e == id) break;
                    }
                    raw_blocks.push_back(std::move(blk));
                }
            } else if (disc[w] < disc[u]) {  // back edge, pushed once
                edge_stack.push_back(id);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] < 0) dfs(v, -1);

    for (auto& blk : raw_blocks) std::sort(blk.begin(), blk.end());
    std::sort(raw_blocks.begin(), raw_blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    BlockDecomposition out;
    std::vector<int> membership(n, 0);
    std::vector<std::vector<int>> block_vertices(raw_blocks.size());
    const int cap = std::max(g.edge_id_bound(), 1);
    for (std::size_t i = 0; i < raw_blocks.size(); ++i) {
        EdgeSet s(cap);
        std::vector<int>& verts = block_vertices[i];
        for (int id : raw_blocks[i]) {
            s.set(id);
            const auto& e = g.edge(id);
            verts.push_back(e.u);
            verts.push_back(e.v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        for (int v : verts) ++membership[v];
        out.blocks.push_back(std::move(s));
    }
    for (int v = 0; v < n; ++v)
        if (membership[v] >= 2) out.cut_vertices.push_back(v);
    for (std::size_t i = 0; i < raw_blocks.size(); ++i)
        for (int v : block_vertices[i])
            if (membership[v] >= 2) out.tree_edges.push_back({static_cast<int>(i), v});
    return out;
}

// Reusable block analysis of spanning subgraphs (V, mask), mask over edge
// ids < 64, vertices < 64. Buffers persist across calls; used inside
// 2^|E| enumerations.
class SubgraphBlocks {
public:
    explicit SubgraphBlocks(const Graph& g) : g_(&g), n_(g.vertex_count()) {
        if (n_ > 64 || g.edge_id_bound() > 64)
            throw SizeError("SubgraphBlocks needs <= 64 vertices and edge ids");
        disc_.assign(n_, -1);
        low_.assign(n_, 0);
        membership_.assign(n_, 0);
        touched_.reserve(n_);
        edge_stack_.reserve(64);
        blocks_.reserve(8);
        block_vertex_masks_.reserve(8);
    }

    // Populates blocks()/cut-vertex info for the subgraph with edge mask m.
    void analyze(std::uint64_t mask) {
        for (int v : touched_) { disc_[v] = -1; membership_[v] = 0; }
        touched_.clear();
        blocks_.clear();
        block_vertex_masks_.clear();
        edge_stack_.clear();
        timer_ = 0;
        components_ = 0;
        mask_ = mask;
        std::uint64_t mv = 0;
        for (const auto& e : g_->edges())
            if (mask >> e.id & 1) mv |= (1ull << e.u) | (1ull << e.v);
        vertex_mask_ = mv;
        while (mv) {
            int v = std::countr_zero(mv);
            mv &= mv - 1;
            if (disc_[v] < 0) {
                ++components_;
                touched_.push_back(v);
                dfs(v, -1);
            }
        }
        for (std::uint64_t em : blocks_) {
            std::uint64_t bm = 0;
            while (em) {
                int id = std::countr_zero(em);
                em &= em - 1;
                const auto& e = g_->edge(id);
                bm |= (1ull << e.u) | (1ull << e.v);
            }
            block_vertex_masks_.push_back(bm);
        }
        cut_mask_ = 0;
        for (std::uint64_t bm : block_vertex_masks_) {
            std::uint64_t t = bm;
            while (t) {
                int v = std::countr_zero(t);
                t &= t - 1;
                if (++membership_[v] == 2) cut_mask_ |= 1ull << v;
            }
        }
    }

    std::uint64_t vertex_mask() const { return vertex_mask_; }
    std::uint64_t cut_vertex_mask() const { return cut_mask_; }
    const std::vector<std::uint64_t>& blocks() const { return blocks_; }
    const std::vector<std::uint64_t>& block_vertex_masks() const { return block_vertex_masks_; }
    int block_membership(int v) const { return membership_[v]; }
    // Components among non-isolated vertices.
    int component_count() const { return components_; }
    bool connected_spanning() const { return components_ <= 1; }

private:
    void dfs(int u, int parent_edge) {
        disc_[u] = low_[u] = timer_++;
        for (auto [id, w] : g_->incident(u)) {
            if (!(mask_ >> id & 1) || id == parent_edge) continue;
            if (w == u) {
                blocks_.push_back(1ull << id);
                continue;
            }
            if (disc_[w] < 0) {
                touched_.push_back(w);
                edge_stack_.push_back(id);
                dfs(w, id);
                low_[u] = std::min(low_[u], low_[w]);
                if (low_[w] >= disc_[u]) {
                    std::uint64_t blk = 0;
                    while (true) {
                        int e = edge_stack_.back();
                        edge_stack_.pop_back();
                        blk |= 1ull << e;
                        if (e == id) break;
                    }
                    blocks_.push_back(blk);
                }
            } else if (disc_[w] < disc_[u]) {
                edge_stack_.push_back(id);
                low_[u] = std::min(low_[u], disc_[w]);
            }
        }
    }

    const Graph* g_;
    int n_;
    std::uint64_t mask_ = 0, vertex_mask_ = 0, cut_mask_ = 0;
    int timer_ = 0, components_ = 0;
    std::vector<int> disc_, low_, membership_, touched_, edge_stack_;
    std::vector<std::uint64_t> blocks_, block_vertex_masks_;
};

}  // namespace isinglab
