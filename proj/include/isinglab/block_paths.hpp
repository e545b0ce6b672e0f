#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "isinglab/blocks.hpp"
#include "isinglab/graph.hpp"
#include "isinglab/partition.hpp"

namespace isinglab {

// A subgraph whose block-cutpoint graph is the path B1 v1 B2 ... Bk, meeting
// U exactly in a vertex u of B1 and reaching v in Bk, u and v non-cut.
struct BlockPath {
    EdgeSet edge_set;
    std::vector<EdgeSet> block_sequence;  // B1 (contains u) .. Bk (contains v)
    std::vector<int> cut_sequence;        // v1 .. v_{k-1}
    int endpoint_v = -1;
    int endpoint_u = -1;

    int size() const { return edge_set.count(); }
    std::vector<int> sorted_edge_ids() const { return edge_set.ids(); }
};

namespace detail {

inline std::uint64_t vertex_bit(int v) { return std::uint64_t{1} << v; }

inline std::uint64_t vertex_mask_of(const std::vector<int>& vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= vertex_bit(v);
    return m;
}

// Enumerates every nonempty connected edge subset S with v in V(S), each
// exactly once: repeatedly take the smallest-id edge adjacent to the grown
// component and branch on including or permanently banning it. Branches whose
// vertex set already meets two vertices of umask are discarded wholesale.
template <class Fn>
void connected_subsets_from(const Graph& g, int v, std::uint64_t umask, Fn&& fn) {
    if (g.edge_id_bound() > 64 || g.vertex_count() > 64)
        throw SizeError("block-path enumeration needs <= 64 edge ids and vertices");
    const int bound = g.edge_id_bound();
    std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> rec =
        [&](std::uint64_t cur, std::uint64_t vmask, std::uint64_t banned) {
            int pick = -1;
            for (int id = 0; id < bound; ++id) {
                if ((cur >> id & 1) || (banned >> id & 1) || !g.has_edge_id(id)) continue;
                const auto& e = g.edge(id);
                if ((vmask >> e.u & 1) || (vmask >> e.v & 1)) { pick = id; break; }
            }
            if (pick < 0) {
                if (cur) fn(cur, vmask);
                return;
            }
            rec(cur, vmask, banned | (std::uint64_t{1} << pick));
            const auto& e = g.edge(pick);
            std::uint64_t nv = vmask | vertex_bit(e.u) | vertex_bit(e.v);
            if (std::popcount(nv & umask) >= 2) return;  // no superset can recover
            rec(cur | (std::uint64_t{1} << pick), nv, banned);
        };
    rec(0, vertex_bit(v), 0);
}

inline bool all_degrees_even(const Graph& g, std::uint64_t mask) {
    std::vector<int> deg(g.vertex_count(), 0);
    for (const auto& e : g.edges()) {
        if (!(mask >> e.id & 1)) continue;
        deg[e.u] += e.is_loop() ? 2 : 1;
        if (!e.is_loop()) deg[e.v] += 1;
    }
    for (int d : deg)
        if (d % 2) return false;
    return true;
}

}  // namespace detail

// Definition route: conditions (1)-(4) checked literally on the subgraph.
inline bool is_block_path_definition(const Graph& g, std::uint64_t mask, int v,
                                     const std::vector<int>& terminals,
                                     SubgraphBlocks* shared = nullptr) {
    if (!mask) return false;
    SubgraphBlocks local(g);
    SubgraphBlocks& sb = shared ? *shared : local;
    sb.analyze(mask);
    std::uint64_t vmask = sb.vertex_mask();
    if (!(vmask >> v & 1)) return false;
    std::uint64_t umask = detail::vertex_mask_of(terminals) & vmask;
    if (std::popcount(umask) != 1) return false;  // (1)
    int u = std::countr_zero(umask);
    if (!sb.connected_spanning()) return false;  // (2)
    std::uint64_t cuts = sb.cut_vertex_mask();
    if ((cuts >> u & 1) || (cuts >> v & 1)) return false;  // (3)
    const auto& bvm = sb.block_vertex_masks();
    if (bvm.size() == 1) return true;  // (4) first case: 2-connected
    int bu = -1, bv = -1, leaves = 0;
    std::vector<int> leaf_of(bvm.size(), 0);
    for (std::size_t i = 0; i < bvm.size(); ++i) {
        if (bvm[i] >> u & 1) bu = static_cast<int>(i);
        if (bvm[i] >> v & 1) bv = static_cast<int>(i);
        if (std::popcount(bvm[i] & cuts) == 1) { leaf_of[i] = 1; ++leaves; }
    }
    return leaves == 2 && bu != bv && leaf_of[bu] && leaf_of[bv];  // (4) second case
}

// Path-shape route: block-cutpoint graph is a path with the endpoint
// conditions (a)-(c). Kept independent of the definition route for
// cross-checking; both must agree on every edge subset.
inline bool is_block_path_path_shape(const Graph& g, std::uint64_t mask, int v,
                                     const std::vector<int>& terminals,
                                     SubgraphBlocks* shared = nullptr) {
    if (!mask) return false;
    SubgraphBlocks local(g);
    SubgraphBlocks& sb = shared ? *shared : local;
    sb.analyze(mask);
    std::uint64_t vmask = sb.vertex_mask();
    if (!(vmask >> v & 1) || !sb.connected_spanning()) return false;
    std::uint64_t umask = detail::vertex_mask_of(terminals) & vmask;
    std::uint64_t cuts = sb.cut_vertex_mask();
    const auto& bvm = sb.block_vertex_masks();
    const int k = static_cast<int>(bvm.size());

    // (a) every cut vertex in exactly two blocks, every block with <= 2 cut
    // vertices, at most two leaf blocks: a tree with those degrees is a path.
    std::uint64_t c = cuts;
    while (c) {
        int w = std::countr_zero(c);
        c &= c - 1;
        if (sb.block_membership(w) != 2) return false;
    }
    std::vector<int> ends;
    for (int i = 0; i < k; ++i) {
        int nc = std::popcount(bvm[i] & cuts);
        if (nc > 2) return false;
        if (nc <= 1) ends.push_back(i);
    }
    if (k == 1) {
        // single block: B1 = Bk
        return std::popcount(umask) == 1 &&
               !((umask | detail::vertex_bit(v)) & cuts) &&
               (bvm[0] >> v & 1);
    }
    if (ends.size() != 2) return false;

    // order blocks from one end by following shared cut vertices
    std::vector<int> order{ends[0]};
    std::uint64_t used_cuts = 0;
    while (static_cast<int>(order.size()) < k) {
        int cur = order.back();
        std::uint64_t link = bvm[cur] & cuts & ~used_cuts;
        if (!link) return false;
        int w = std::countr_zero(link);
        used_cuts |= detail::vertex_bit(w);
        int next = -1;
        for (int i = 0; i < k; ++i)
            if (i != cur && (bvm[i] >> w & 1)) { next = i; break; }
        if (next < 0) return false;
        order.push_back(next);
    }
    auto endpoint_ok = [&](const std::vector<int>& seq) {
        // (b) V(B1) meets U in exactly one vertex and v lies in Bk;
        // (c) no other block meets U, and only Bk contains v.
        if (std::popcount(bvm[seq.front()] & umask) != 1) return false;
        std::uint64_t uvert = bvm[seq.front()] & umask;
        if (uvert & cuts) return false;
        if (!(bvm[seq.back()] >> v & 1) || (cuts >> v & 1)) return false;
        for (std::size_t i = 1; i < seq.size(); ++i)
            if (bvm[seq[i]] & umask) return false;
        for (std::size_t i = 0; i + 1 < seq.size(); ++i)
            if (bvm[seq[i]] >> v & 1) return false;
        return true;
    };
    std::vector<int> rev(order.rbegin(), order.rend());
    return endpoint_ok(order) || endpoint_ok(rev);
}

namespace detail {

inline BlockPath assemble_block_path(const Graph& g, std::uint64_t mask, int v,
                                     const std::vector<int>& terminals, SubgraphBlocks& sb) {
    sb.analyze(mask);
    BlockPath bp;
    const int cap = std::max(g.edge_id_bound(), 1);
    bp.edge_set = EdgeSet::from_u64(mask, cap);
    bp.endpoint_v = v;
    std::uint64_t umask = vertex_mask_of(terminals) & sb.vertex_mask();
    bp.endpoint_u = std::countr_zero(umask);
    const auto& blocks = sb.blocks();
    const auto& bvm = sb.block_vertex_masks();
    std::uint64_t cuts = sb.cut_vertex_mask();
    const int k = static_cast<int>(blocks.size());
    int first = -1;
    for (int i = 0; i < k; ++i)
        if (bvm[i] >> bp.endpoint_u & 1) first = i;
    std::vector<int> order{first};
    std::uint64_t used_cuts = 0;
    while (static_cast<int>(order.size()) < k) {
        int cur = order.back();
        std::uint64_t link = bvm[cur] & cuts & ~used_cuts;
        int w = std::countr_zero(link);
        used_cuts |= vertex_bit(w);
        bp.cut_sequence.push_back(w);
        for (int i = 0; i < k; ++i)
            if (i != cur && (bvm[i] >> w & 1)) { order.push_back(i); break; }
    }
    for (int i : order) bp.block_sequence.push_back(EdgeSet::from_u64(blocks[i], cap));
    return bp;
}

}  // namespace detail

// All block paths from v to U, sorted by (edge count, edge-id list).
inline std::vector<BlockPath> enumerate_block_paths(const Graph& g, int v,
                                                    const std::vector<int>& terminals) {
    if (v < 0 || v >= g.vertex_count()) throw ArgumentError("block paths: v out of range");
    for (int u : terminals) {
        if (u < 0 || u >= g.vertex_count()) throw ArgumentError("block paths: terminal out of range");
        if (u == v) throw ArgumentError("block paths: v must not lie in U");
    }
    std::uint64_t umask = detail::vertex_mask_of(terminals);
    SubgraphBlocks sb(g);
    std::vector<std::uint64_t> masks;
    detail::connected_subsets_from(g, v, umask, [&](std::uint64_t mask, std::uint64_t) {
        if (is_block_path_definition(g, mask, v, terminals, &sb)) masks.push_back(mask);
    });
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        int ca = std::popcount(a), cb = std::popcount(b);
        if (ca != cb) return ca < cb;
        return a < b;  // ids below 64: numeric order == lexicographic id order
    });
    std::vector<BlockPath> out;
    out.reserve(masks.size());
    for (auto m : masks) out.push_back(detail::assemble_block_path(g, m, v, terminals, sb));
    return out;
}

inline std::vector<BlockPath> even_block_paths(const Graph& g, int v,
                                               const std::vector<int>& terminals) {
    std::vector<BlockPath> all = enumerate_block_paths(g, v, terminals);
    std::vector<BlockPath> out;
    for (auto& bp : all)
        if (detail::all_degrees_even(g, bp.edge_set.low_word())) out.push_back(std::move(bp));
    return out;
}

// --- decomposition identity ------------------------------------------------

struct DecompositionReport {
    IntegerPolynomial lhs;  // Z_even(G|U)
    IntegerPolynomial rhs;  // Z_even(G|U+v) + sum over even B of x^|B| Z_even(G|U+V(B))
    std::vector<BlockPath> even_paths;
    bool equal = false;
};

// Z_even(G|U;x) = Z_even(G|U+{v};x) + sum_{B in BP(v,U,G) even} x^|B| Z_even(G|U+V(B);x)
inline DecompositionReport verify_decomposition(const Graph& g, const std::vector<int>& terminals,
                                                int v) {
    DecompositionReport rep;
    rep.lhs = z_even_conditional(g, terminals);
    std::vector<int> with_v = terminals;
    with_v.push_back(v);
    rep.rhs = z_even_conditional(g, with_v);
    rep.even_paths = even_block_paths(g, v, terminals);
    for (const auto& bp : rep.even_paths) {
        std::vector<int> extended = terminals;
        std::uint64_t vm = 0;
        for (int id : bp.edge_set.ids()) {
            const auto& e = g.edge(id);
            vm |= detail::vertex_bit(e.u) | detail::vertex_bit(e.v);
        }
        while (vm) {
            extended.push_back(std::countr_zero(vm));
            vm &= vm - 1;
        }
        rep.rhs = rep.rhs + z_even_conditional(g, extended).shifted(bp.size());
    }
    rep.equal = (rep.lhs == rep.rhs);
    return rep;
}

// --- walk generating function ----------------------------------------------

// counts[k] = closed walks from v of length k that use each edge at most
// once; the two traversal directions of a walk count separately.
struct WalkGF {
    std::vector<std::uint64_t> counts;  // index = length, counts[0] == 0

    double eval(double t) const {
        double acc = 0, pw = 1;
        for (std::size_t k = 1; k < counts.size(); ++k) {
            pw *= t;
            acc += static_cast<double>(counts[k]) * pw;
        }
        return acc;
    }
};

inline WalkGF walk_gf(const Graph& g, int v, int max_len) {
    if (v < 0 || v >= g.vertex_count()) throw ArgumentError("walk_gf: vertex out of range");
    if (max_len > g.edge_count()) max_len = g.edge_count();
    if (g.edge_id_bound() > 64) throw SizeError("walk_gf needs edge ids < 64");
    WalkGF w;
    w.counts.assign(std::max(max_len + 1, 1), 0);
    std::function<void(int, std::uint64_t, int)> dfs = [&](int cur, std::uint64_t used, int len) {
        if (len == max_len) return;
        for (auto [id, nxt] : g.incident(cur)) {
            if (used >> id & 1) continue;
            if (nxt == v) ++w.counts[len + 1];
            dfs(nxt, used | (std::uint64_t{1} << id), len + 1);
        }
    };
    if (max_len >= 1) dfs(v, 0, 0);
    return w;
}

struct WalkBoundReport {
    double lhs, rhs, slack;
    bool holds;
};

// Exact W_{G,v}(c/(D-1)) against the closed-form bound D c^g / ((D-1)^2 (1-c)).
inline WalkBoundReport walk_bound_check(const Graph& g, int v, double c, int delta, int girth_lb) {
    if (!(c >= 0.0 && c < 1.0)) throw ArgumentError("walk bound: c must lie in [0,1)");
    if (delta < 2) throw ArgumentError("walk bound: need Delta >= 2");
    if (delta < max_degree(g)) throw ArgumentError("walk bound: Delta below max degree");
    int gg = girth(g);
    if (gg != kInfiniteGirth && girth_lb > gg)
        throw ArgumentError("walk bound: girth lower bound exceeds girth");
    double t = c / (delta - 1);
    double lhs = walk_gf(g, v, g.edge_count()).eval(t);
    double rhs = delta * std::pow(c, girth_lb) / (double(delta - 1) * (delta - 1) * (1.0 - c));
    return {lhs, rhs, rhs - lhs, lhs <= rhs * (1 + 1e-12) + 1e-300};
}

struct EulerianCountReport {
    std::vector<std::uint64_t> block_path_hist;  // even block paths by edge count
    std::vector<std::uint64_t> walk_hist;        // closed walks by length
    bool holds;                                  // 2*bp[k] <= walk[k] for all k
};

// Every even block path from v is traced by at least two closed Eulerian
// walks, so its histogram is dominated by half the walk histogram.
inline EulerianCountReport eulerian_double_count_check(const Graph& g, int v,
                                                       const std::vector<int>& terminals) {
    EulerianCountReport rep;
    rep.block_path_hist.assign(g.edge_count() + 1, 0);
    for (const auto& bp : even_block_paths(g, v, terminals)) ++rep.block_path_hist[bp.size()];
    rep.walk_hist = walk_gf(g, v, g.edge_count()).counts;
    rep.walk_hist.resize(g.edge_count() + 1, 0);
    rep.holds = true;
    for (std::size_t k = 0; k < rep.block_path_hist.size(); ++k)
        if (2 * rep.block_path_hist[k] > rep.walk_hist[k]) rep.holds = false;
    return rep;
}

}  // namespace isinglab
