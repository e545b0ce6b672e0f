#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "isinglab/block_paths.hpp"
#include "isinglab/blocks.hpp"
#include "isinglab/caps.hpp"
#include "isinglab/graph.hpp"
#include "isinglab/partition.hpp"

namespace isinglab {

// Graph (V(H), H) for an edge mask, vertices relabelled compactly.
inline Graph extract_subgraph(const Graph& g, std::uint64_t mask) {
    std::map<int, int> relabel;
    std::vector<std::pair<int, int>> edges;
    std::uint64_t m = mask;
    while (m) {
        int id = std::countr_zero(m);
        m &= m - 1;
        const auto& e = g.edge(id);
        for (int w : {e.u, e.v})
            if (!relabel.count(w)) {
                int nxt = static_cast<int>(relabel.size());
                relabel[w] = nxt;
            }
        edges.push_back({relabel[e.u], relabel[e.v]});
    }
    return Graph(static_cast<int>(relabel.size()), edges);
}

// --- Tutte polynomial -------------------------------------------------------

// Deletion-contraction: loops give y, bridges x, otherwise T(G\e) + T(G/e).
inline Complex tutte_eval(const Graph& g, Complex x, Complex y) {
    if (g.edge_count() > caps().tutte_edges) throw SizeError("tutte_eval: edge cap exceeded");
    if (g.edge_count() == 0) return 1.0;
    const auto& e = g.edges().back();
    if (e.is_loop()) return y * tutte_eval(g.deleted(e.id), x, y);
    Graph del = g.deleted(e.id);
    bool bridge = del.component_count() > g.component_count();
    if (bridge) return x * tutte_eval(g.contracted(e.id), x, y);
    return tutte_eval(del, x, y) + tutte_eval(g.contracted(e.id), x, y);
}

// Direct subset sum, the independent oracle for the recursion above:
// T(G;x,y) = sum_F (x-1)^(k(F)-k(E)) (y-1)^(|F|+k(F)-|V|).
inline Complex tutte_eval_subset_sum(const Graph& g, Complex x, Complex y) {
    const int m = g.edge_count();
    if (m > caps().tutte_edges) throw SizeError("tutte subset sum: edge cap exceeded");
    if (g.edge_id_bound() > 64) throw SizeError("tutte subset sum needs edge ids < 64");
    const int k_all = g.component_count();
    std::vector<int> comp;
    Complex total = 0;
    std::vector<int> ids;
    for (const auto& e : g.edges()) ids.push_back(e.id);
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << m); ++sub) {
        std::uint64_t mask = 0;
        int fsize = std::popcount(sub);
        for (int i = 0; i < m; ++i)
            if (sub >> i & 1) mask |= std::uint64_t{1} << ids[i];
        detail::subgraph_components(g, mask, comp);
        int k = 0;
        for (int v = 0; v < g.vertex_count(); ++v) k += (comp[v] == v);
        total += std::pow(x - 1.0, k - k_all) * std::pow(y - 1.0, fsize + k - g.vertex_count());
    }
    return total;
}

// --- homomorphism densities --------------------------------------------------

// t(H,G) = (number of homomorphisms H -> G) / k^|V(H)|, exact.
inline BigRational hom_density(const Graph& h, const Graph& target) {
    const int n = h.vertex_count(), k = target.vertex_count();
    if (n > caps().hom_vertices) throw SizeError("hom_density: vertex cap exceeded");
    if (!target.simple()) throw ArgumentError("hom_density: target must be simple");
    if (k == 0) throw ArgumentError("hom_density: empty target");
    std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
    for (const auto& e : target.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
    std::vector<int> phi(n, 0);
    BigInt hom = 0;
    while (true) {
        bool ok = true;
        for (const auto& e : h.edges())
            if (!adj[phi[e.u]][phi[e.v]]) { ok = false; break; }
        if (ok) hom += 1;
        int i = 0;
        while (i < n && ++phi[i] == k) phi[i++] = 0;
        if (i == n) break;
    }
    BigInt denom = 1;
    for (int i = 0; i < n; ++i) denom *= k;
    return BigRational(hom, denom);
}

// Brute-force vertex transitivity: some automorphism moves vertex 0 to every
// other vertex.
inline bool is_vertex_transitive(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 8) throw SizeError("vertex transitivity check limited to 8 vertices");
    if (n <= 1) return true;
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;
    std::vector<int> perm(n);
    std::vector<bool> orbit(n, false);
    orbit[0] = true;
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool aut = true;
        for (int i = 0; i < n && aut; ++i)
            for (int j = i + 1; j < n && aut; ++j)
                if (adj[i][j] != adj[perm[i]][perm[j]]) aut = false;
        if (aut) orbit[perm[0]] = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::all_of(orbit.begin(), orbit.end(), [](bool b) { return b; });
}

// --- 1-multiplicative invariants ---------------------------------------------

class Invariant {
public:
    enum class Kind { EvenIndicator, TutteEval, HomDensity };

    static Invariant even_indicator(Complex x) {
        Invariant w;
        w.kind_ = Kind::EvenIndicator;
        w.x_ = x;
        return w;
    }
    static Invariant tutte(Complex x, Complex y) {
        Invariant w;
        w.kind_ = Kind::TutteEval;
        w.x_ = x;
        w.y_ = y;
        return w;
    }
    static Invariant hom_density_into(Graph target) {
        if (!is_vertex_transitive(target))
            throw ArgumentError("hom-density invariant requires a vertex-transitive target");
        Invariant w;
        w.kind_ = Kind::HomDensity;
        w.target_ = std::move(target);
        return w;
    }

    Kind kind() const { return kind_; }
    Complex x() const { return x_; }
    Complex y() const { return y_; }

    Complex evaluate(const Graph& h) const {
        switch (kind_) {
            case Kind::EvenIndicator: {
                for (int v = 0; v < h.vertex_count(); ++v)
                    if (h.degree(v) % 2) return 0.0;
                return std::pow(x_, h.edge_count());
            }
            case Kind::TutteEval:
                return tutte_eval(h, x_, y_);
            case Kind::HomDensity:
                return Complex(static_cast<double>(hom_density(h, target_)), 0.0);
        }
        return 0.0;
    }

    std::string describe() const {
        switch (kind_) {
            case Kind::EvenIndicator: return "even-indicator";
            case Kind::TutteEval: return "tutte-eval";
            case Kind::HomDensity: return "hom-density";
        }
        return "";
    }

private:
    Kind kind_ = Kind::EvenIndicator;
    Complex x_{0, 0}, y_{0, 0};
    Graph target_;
};

// Randomized 1-multiplicativity gate: w(K1) = 1, multiplicative over disjoint
// unions and over one-vertex gluings of random small graphs.
template <class W>
bool one_multiplicative_gate(W&& w, int trials, std::uint64_t seed, double tol = 1e-9) {
    Complex wk1 = w(Graph(1, {}));
    if (std::abs(wk1 - Complex(1.0, 0.0)) > tol) return false;
    // an invariant that vanishes off K1 already fails here: w(K1+K1) must be 1
    if (std::abs(w(Graph(2, {})) - Complex(1.0, 0.0)) > tol) return false;
    std::mt19937_64 rng(seed);
    auto random_small = [&](int max_n) {
        std::uniform_int_distribution<int> nn(1, max_n);
        int n = nn(rng);
        std::uniform_real_distribution<double> coin(0, 1);
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (coin(rng) < 0.55) e.push_back({i, j});
        return Graph(n, e);
    };
    auto close = [&](Complex a, Complex b) {
        return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
    };
    for (int t = 0; t < trials; ++t) {
        Graph h1 = random_small(4), h2 = random_small(4);
        int n1 = h1.vertex_count(), n2 = h2.vertex_count();
        std::vector<std::pair<int, int>> de;
        for (const auto& e : h1.edges()) de.push_back({e.u, e.v});
        for (const auto& e : h2.edges()) de.push_back({e.u + n1, e.v + n1});
        Graph disj(n1 + n2, de);
        Complex prod = w(h1) * w(h2);
        if (!close(w(disj), prod)) return false;
        // glue vertex 0 of h2 onto vertex 0 of h1
        std::vector<std::pair<int, int>> ge;
        for (const auto& e : h1.edges()) ge.push_back({e.u, e.v});
        auto shift = [&](int v) { return v == 0 ? 0 : v + n1 - 1; };
        for (const auto& e : h2.edges()) ge.push_back({shift(e.u), shift(e.v)});
        Graph glued(n1 + n2 - 1, ge);
        if (!close(w(glued), prod)) return false;
    }
    return true;
}

// --- block polynomial ---------------------------------------------------------

// Z_block(G;w) = sum over H subset E of prod over blocks B of H of w(B).
inline Complex z_block(const Graph& g, const Invariant& w) {
    const int m = g.edge_count();
    if (m > caps().zblock_edges) throw SizeError("z_block: edge cap exceeded");
    if (g.edge_id_bound() > 64) throw SizeError("z_block needs edge ids < 64");
    SubgraphBlocks sb(g);
    std::vector<int> ids;
    for (const auto& e : g.edges()) ids.push_back(e.id);
    Complex total = 0;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << m); ++sub) {
        std::uint64_t mask = 0;
        for (int i = 0; i < m; ++i)
            if (sub >> i & 1) mask |= std::uint64_t{1} << ids[i];
        sb.analyze(mask);
        Complex term = 1;
        for (std::uint64_t b : sb.blocks()) term *= w.evaluate(extract_subgraph(g, b));
        total += term;
    }
    return total;
}

// Conditional version: H avoids edges inside U and every nontrivial component
// of H meets U in at most one vertex.
inline Complex z_block_conditional(const Graph& g, const std::vector<int>& terminals_in,
                                   const Invariant& w) {
    std::vector<int> terminals = terminals_in;
    std::sort(terminals.begin(), terminals.end());
    terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
    const int m = g.edge_count();
    if (m > caps().zblock_edges) throw SizeError("z_block_conditional: edge cap exceeded");
    if (g.edge_id_bound() > 64 || g.vertex_count() > 64)
        throw SizeError("z_block_conditional needs <= 64 edge ids and vertices");
    std::uint64_t umask = detail::vertex_mask_of(terminals);
    SubgraphBlocks sb(g);
    std::vector<int> ids;
    for (const auto& e : g.edges()) {
        if ((umask >> e.u & 1) && (umask >> e.v & 1)) continue;  // edge inside U
        ids.push_back(e.id);
    }
    const int mm = static_cast<int>(ids.size());
    std::vector<int> comp;
    Complex total = 0;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << mm); ++sub) {
        std::uint64_t mask = 0;
        for (int i = 0; i < mm; ++i)
            if (sub >> i & 1) mask |= std::uint64_t{1} << ids[i];
        detail::subgraph_components(g, mask, comp);
        bool ok = true;
        std::vector<int> roots;
        for (int u : terminals) {
            int r = comp[u];
            // only components with an edge matter; isolated u has root u itself
            bool nontrivial = false;
            for (const auto& e : g.edges())
                if ((mask >> e.id & 1) && comp[e.u] == r) { nontrivial = true; break; }
            if (!nontrivial) continue;
            for (int s : roots)
                if (s == r) { ok = false; break; }
            if (!ok) break;
            roots.push_back(r);
        }
        if (!ok) continue;
        sb.analyze(mask);
        Complex term = 1;
        for (std::uint64_t b : sb.blocks()) term *= w.evaluate(extract_subgraph(g, b));
        total += term;
    }
    return total;
}

// Exact even-indicator specialization of Z_block as a polynomial: every
// subset whose blocks are all even contributes x^|H|. Cross-checks the
// block route against the cycle-space route for Z_even.
inline IntegerPolynomial z_block_even_census(const Graph& g) {
    const int m = g.edge_count();
    if (m > caps().zblock_edges) throw SizeError("z_block_even_census: edge cap exceeded");
    SubgraphBlocks sb(g);
    std::vector<int> ids;
    for (const auto& e : g.edges()) ids.push_back(e.id);
    std::vector<std::uint64_t> hist(m + 1, 0);
    std::vector<int> deg(g.vertex_count());
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << m); ++sub) {
        std::uint64_t mask = 0;
        for (int i = 0; i < m; ++i)
            if (sub >> i & 1) mask |= std::uint64_t{1} << ids[i];
        sb.analyze(mask);
        bool all_even = true;
        for (std::uint64_t b : sb.blocks()) {
            std::fill(deg.begin(), deg.end(), 0);
            std::uint64_t t = b;
            while (t) {
                int id = std::countr_zero(t);
                t &= t - 1;
                const auto& e = g.edge(id);
                deg[e.u] += e.is_loop() ? 2 : 1;
                if (!e.is_loop()) deg[e.v] += 1;
            }
            for (int v = 0; v < g.vertex_count(); ++v)
                if (deg[v] % 2) { all_even = false; break; }
            if (!all_even) break;
        }
        if (all_even) ++hist[std::popcount(sub)];
    }
    std::vector<BigInt> c(hist.begin(), hist.end());
    return IntegerPolynomial(std::move(c));
}

struct BlockIdentityReport {
    Complex lhs, rhs;
    bool holds;
};

// Z_block(G|U;w) = Z_block(G|U+v;w) + sum over BP(v,U,G) of w(B) Z_block(G|U+V(B);w)
inline BlockIdentityReport verify_block_decomposition_1mult(const Graph& g,
                                                            const std::vector<int>& terminals,
                                                            int v, const Invariant& w,
                                                            double tol = 1e-9) {
    Complex lhs = z_block_conditional(g, terminals, w);
    std::vector<int> with_v = terminals;
    with_v.push_back(v);
    Complex rhs = z_block_conditional(g, with_v, w);
    for (const auto& bp : enumerate_block_paths(g, v, terminals)) {
        std::vector<int> ext = terminals;
        std::uint64_t vm = 0;
        for (int id : bp.edge_set.ids()) {
            const auto& e = g.edge(id);
            vm |= (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
        }
        while (vm) {
            ext.push_back(std::countr_zero(vm));
            vm &= vm - 1;
        }
        rhs += w.evaluate(extract_subgraph(g, bp.edge_set.low_word())) *
               z_block_conditional(g, ext, w);
    }
    double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    return {lhs, rhs, std::abs(lhs - rhs) <= tol * scale};
}

// --- zero-freeness certificates -----------------------------------------------

struct BlockCertificate {
    double a = 0;
    std::vector<double> sums;  // one per (U, v) pair, enumeration order
    double max_sum = 0;
    bool valid = false;
    Complex z_value{0, 0};  // filled when valid
};

// Theorem-style certificate: for every U subset V and v outside U,
//   sum over BP(v,U,G) of |w(B)| (1/(1-a))^(|V(B)|-2) <= a.
// Candidates are enumerated once per v and matched to each U by masks.
inline BlockCertificate certify_zero_free(const Graph& g, const Invariant& w, double a) {
    if (!(a > 0.0 && a < 1.0)) throw ArgumentError("certify_zero_free: a must lie in (0,1)");
    const int n = g.vertex_count();
    if (n > caps().certify_vertices) throw SizeError("certify_zero_free: vertex cap exceeded");
    BlockCertificate cert;
    cert.a = a;
    double inv = 1.0 / (1.0 - a);
    for (int v = 0; v < n; ++v) {
        // path-shaped connected subgraphs from v, with the vertices allowed
        // to serve as the U-endpoint
        struct Candidate {
            std::uint64_t vertex_mask;
            std::uint64_t allowed_u;
            double weight;
        };
        std::vector<Candidate> cands;
        SubgraphBlocks sb(g);
        detail::connected_subsets_from(g, v, 0, [&](std::uint64_t mask, std::uint64_t) {
            sb.analyze(mask);
            std::uint64_t cuts = sb.cut_vertex_mask();
            if (cuts >> v & 1) return;
            const auto& bvm = sb.block_vertex_masks();
            const int k = static_cast<int>(bvm.size());
            std::uint64_t allowed = 0;
            if (k == 1) {
                allowed = bvm[0] & ~(std::uint64_t{1} << v);
            } else {
                int ends = 0, bv = -1, far_end = -1;
                for (int i = 0; i < k; ++i) {
                    int nc = std::popcount(bvm[i] & cuts);
                    if (nc > 2) return;
                    if (nc == 1) {
                        ++ends;
                        if (bvm[i] >> v & 1) bv = i; else far_end = i;
                    }
                }
                std::uint64_t c = cuts;
                while (c) {
                    int u = std::countr_zero(c);
                    c &= c - 1;
                    if (sb.block_membership(u) != 2) return;
                }
                if (ends != 2 || bv < 0 || far_end < 0) return;
                // v must appear only in its leaf block
                for (int i = 0; i < k; ++i)
                    if (i != bv && (bvm[i] >> v & 1)) return;
                allowed = bvm[far_end] & ~cuts;
            }
            if (!allowed) return;
            double weight = std::abs(w.evaluate(extract_subgraph(g, mask))) *
                            std::pow(inv, std::popcount(sb.vertex_mask()) - 2);
            if (weight == 0.0) return;
            cands.push_back({sb.vertex_mask(), allowed, weight});
        });
        // every U avoiding v (U = V is excluded automatically since v is free)
        std::uint64_t others = 0;
        for (int u = 0; u < n; ++u)
            if (u != v) others |= std::uint64_t{1} << u;
        for (std::uint64_t U = 0;; U = (U - others) & others) {
            double sum = 0;
            for (const auto& c : cands) {
                std::uint64_t touch = c.vertex_mask & U;
                if (std::popcount(touch) == 1 && (c.allowed_u & touch)) sum += c.weight;
            }
            cert.sums.push_back(sum);
            cert.max_sum = std::max(cert.max_sum, sum);
            if (U == others) break;
        }
    }
    cert.valid = cert.max_sum <= a;
    if (cert.valid) cert.z_value = z_block(g, w);
    return cert;
}

struct GruberKunzReport {
    double gk_max_sum = 0;
    double block_max_sum = 0;
    bool gk_valid = false;
    bool block_valid = false;
    double a = 0;
};

// Gruber-Kunz condition: for every v, sum over connected B containing v of
// |w(B)| (1/(1-a))^(|V(B)|-1) <= a. Sums over induced subgraphs are
// dominated by the whole-graph sum, so the maximum is taken at H = G.
inline GruberKunzReport gruber_kunz_check(const Graph& g, const Invariant& w, double a) {
    if (!(a > 0.0 && a < 1.0)) throw ArgumentError("gruber_kunz_check: a must lie in (0,1)");
    if (g.edge_count() > caps().gk_edges) throw SizeError("gruber_kunz_check: edge cap exceeded");
    GruberKunzReport rep;
    rep.a = a;
    double inv = 1.0 / (1.0 - a);
    for (int v = 0; v < g.vertex_count(); ++v) {
        double sum = 0;
        detail::connected_subsets_from(g, v, 0, [&](std::uint64_t mask, std::uint64_t vmask) {
            double val = std::abs(w.evaluate(extract_subgraph(g, mask)));
            if (val == 0.0) return;
            sum += val * std::pow(inv, std::popcount(vmask) - 1);
        });
        rep.gk_max_sum = std::max(rep.gk_max_sum, sum);
    }
    rep.gk_valid = rep.gk_max_sum <= a;
    BlockCertificate cert = certify_zero_free(g, w, a);
    rep.block_max_sum = cert.max_sum;
    rep.block_valid = cert.valid;
    return rep;
}

}  // namespace isinglab
