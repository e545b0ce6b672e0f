#pragma once

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "isinglab/caps.hpp"
#include "isinglab/errors.hpp"
#include "isinglab/graph.hpp"
#include "isinglab/polynomial.hpp"

namespace isinglab {

using EdgeWeightMap = std::map<int, Complex>;

// Number of monochromatic edges of the spin assignment given as a bitmask.
inline int monochromatic_count(const Graph& g, std::uint64_t spins) {
    int m = 0;
    for (const auto& e : g.edges())
        if (((spins >> e.u) & 1) == ((spins >> e.v) & 1)) ++m;
    return m;
}

// Z_Ising(G;b) as an exact polynomial in b: coefficient of b^k counts the
// assignments with k monochromatic edges. Enumerates all 2^|V| assignments
// along a Gray code, updating the count by the flipped vertex's edges.
inline IntegerPolynomial z_ising_poly(const Graph& g) {
    const int n = g.vertex_count();
    if (n > caps().ising_vertices)
        throw SizeError("z_ising_poly: " + std::to_string(n) + " vertices exceeds cap " +
                        std::to_string(caps().ising_vertices) + "; use the even-set route");
    const int m_edges = g.edge_count();
    std::vector<std::uint64_t> hist(m_edges + 1, 0);
    std::uint64_t spins = 0;
    int m = m_edges;  // all-equal assignment: every edge monochromatic
    hist[m] += 1;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t i = 1; i < total; ++i) {
        int v = std::countr_zero(i);
        for (auto [id, w] : g.incident(v)) {
            (void)id;
            if (w == v) continue;  // loops stay monochromatic
            bool mono = ((spins >> v) & 1) == ((spins >> w) & 1);
            m += mono ? -1 : 1;
        }
        spins ^= std::uint64_t{1} << v;
        hist[m] += 1;
    }
    std::vector<BigInt> c(hist.begin(), hist.end());
    return IntegerPolynomial(std::move(c));
}

namespace detail {

// Fundamental-cycle masks of a spanning forest; loops and parallel edges
// produce 1- and 2-edge members. Requires edge ids < 64.
inline std::vector<std::uint64_t> cycle_space_basis(const Graph& g) {
    if (g.edge_id_bound() > 64) throw SizeError("cycle space basis needs edge ids < 64");
    const int n = g.vertex_count();
    std::vector<std::uint64_t> root_path(n, 0);
    std::vector<int> state(n, 0);  // 0 unseen, 1 visited
    std::vector<std::uint64_t> basis;
    std::vector<int> stack;
    std::vector<bool> tree_edge(g.edge_id_bound(), false);
    for (int r = 0; r < n; ++r) {
        if (state[r]) continue;
        state[r] = 1;
        stack.push_back(r);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [id, w] : g.incident(u)) {
                if (tree_edge[id]) continue;
                if (w != u && !state[w]) {
                    tree_edge[id] = true;
                    state[w] = 1;
                    root_path[w] = root_path[u] ^ (std::uint64_t{1} << id);
                    stack.push_back(w);
                }
            }
        }
    }
    for (const auto& e : g.edges())
        if (!tree_edge[e.id])
            basis.push_back(root_path[e.u] ^ root_path[e.v] ^ (std::uint64_t{1} << e.id));
    return basis;
}

// Calls fn(mask, size) for every even edge set, the empty set first,
// stepping through XOR combinations of the basis in Gray-code order.
template <class Fn>
void enumerate_even_sets(const Graph& g, Fn&& fn) {
    auto basis = cycle_space_basis(g);
    const int d = static_cast<int>(basis.size());
    if (d > caps().even_cycle_dim)
        throw SizeError("even-set enumeration: cycle-space dimension " + std::to_string(d) +
                        " exceeds cap " + std::to_string(caps().even_cycle_dim));
    std::uint64_t mask = 0;
    int size = 0;
    fn(std::uint64_t{0}, 0);
    const std::uint64_t total = std::uint64_t{1} << d;
    for (std::uint64_t i = 1; i < total; ++i) {
        std::uint64_t b = basis[std::countr_zero(i)];
        size += std::popcount(b) - 2 * std::popcount(mask & b);
        mask ^= b;
        fn(mask, size);
    }
}

// Union-find component labels of the spanning subgraph (V, mask); writes
// component roots into comp (size n). Returns nothing fancy; test-scale tool.
inline void subgraph_components(const Graph& g, std::uint64_t mask, std::vector<int>& comp) {
    const int n = g.vertex_count();
    comp.resize(n);
    std::iota(comp.begin(), comp.end(), 0);
    auto find = [&](int x) {
        while (comp[x] != x) x = comp[x] = comp[comp[x]];
        return x;
    };
    for (const auto& e : g.edges()) {
        if (!(mask >> e.id & 1)) continue;
        int a = find(e.u), b = find(e.v);
        if (a != b) comp[a] = b;
    }
    for (int v = 0; v < n; ++v) comp[v] = find(v);
}

}  // namespace detail

// Z_even(G;x): coefficient of x^j counts even sets with j edges.
inline IntegerPolynomial z_even_poly(const Graph& g) {
    std::vector<std::uint64_t> hist(g.edge_count() + 1, 0);
    detail::enumerate_even_sets(g, [&](std::uint64_t, int size) { hist[size] += 1; });
    std::vector<BigInt> c(hist.begin(), hist.end());
    return IntegerPolynomial(std::move(c));
}

// Conditional even-set generating function Z_even(G|U;x): even sets whose
// components each contain at most one vertex of U.
inline IntegerPolynomial z_even_conditional(const Graph& g, const std::vector<int>& terminals_in) {
    std::vector<int> terminals = terminals_in;
    std::sort(terminals.begin(), terminals.end());
    terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
    for (int u : terminals)
        if (u < 0 || u >= g.vertex_count()) throw ArgumentError("terminal vertex out of range");
    std::vector<std::uint64_t> hist(g.edge_count() + 1, 0);
    std::vector<int> comp;
    std::vector<int> seen_roots;
    detail::enumerate_even_sets(g, [&](std::uint64_t mask, int size) {
        detail::subgraph_components(g, mask, comp);
        seen_roots.clear();
        for (int u : terminals) {
            int r = comp[u];
            for (int s : seen_roots)
                if (s == r) return;  // two terminals share a component
            seen_roots.push_back(r);
        }
        hist[size] += 1;
    });
    std::vector<BigInt> c(hist.begin(), hist.end());
    return IntegerPolynomial(std::move(c));
}

struct ConditionalContext {
    const Graph& host;
    std::vector<int> terminals;
};

inline IntegerPolynomial z_even_conditional(const ConditionalContext& ctx) {
    return z_even_conditional(ctx.host, ctx.terminals);
}

// --- Van der Waerden transform ------------------------------------------

// Both sides of Z_even(G;x) = (1-x)^|E| 2^{-|V|} Z_Ising(G;(1+x)/(1-x)),
// evaluated from the exact polynomials at one point.
struct VdwCheck {
    Complex lhs, rhs;
    double relative_error;
};

inline VdwCheck vdw_transform_check(const Graph& g, Complex x) {
    require_finite(x, "vdw_transform_check");
    if (x == Complex(1.0, 0.0))
        throw ArgumentError("vdw transform undefined at x = 1");
    Complex lhs = z_even_poly(g).eval(x);
    Complex b = (1.0 + x) / (1.0 - x);
    Complex pref = std::pow(1.0 - x, g.edge_count()) * std::pow(2.0, -g.vertex_count());
    Complex rhs = pref * z_ising_poly(g).eval(b);
    double scale = std::max(std::abs(lhs), std::abs(rhs));
    double rel = scale == 0 ? 0.0 : std::abs(lhs - rhs) / scale;
    return {lhs, rhs, rel};
}

// Exact polynomial form of the same identity:
//   2^|V| Z_even(x) = sum_k a_k (1+x)^k (1-x)^(|E|-k),  a_k from Z_Ising.
inline bool vdw_polynomial_identity(const Graph& g) {
    IntegerPolynomial zi = z_ising_poly(g);
    IntegerPolynomial one_plus(std::vector<BigInt>{1, 1});
    IntegerPolynomial one_minus(std::vector<BigInt>{1, -1});
    const int m = g.edge_count();
    IntegerPolynomial rhs;
    for (int k = 0; k <= zi.degree(); ++k) {
        BigInt a = zi.coefficient(k);
        if (a == 0) continue;
        rhs = rhs + a * (one_plus.pow(k) * one_minus.pow(m - k));
    }
    BigInt two_n = BigInt(1) << g.vertex_count();
    return rhs == two_n * z_even_poly(g);
}

// --- deletion/contraction -----------------------------------------------

struct DeletionContractionReport {
    IntegerPolynomial z, z_contracted, z_deleted;
    bool holds;
};

// Z_even(G;x) = x Z_even(G/e;x) + (1-x) Z_even(G\e;x), exact.
inline DeletionContractionReport deletion_contraction_even(const Graph& g, int edge_id) {
    const auto& e = g.edge(edge_id);
    if (e.is_loop()) throw InvalidMoveError("deletion/contraction recursion needs a non-loop edge");
    DeletionContractionReport r{z_even_poly(g), z_even_poly(g.contracted(edge_id)),
                                z_even_poly(g.deleted(edge_id)), false};
    IntegerPolynomial rhs = r.z_contracted.shifted(1) + (r.z_deleted - r.z_deleted.shifted(1));
    r.holds = (rhs == r.z);
    return r;
}

// --- multivariate versions ----------------------------------------------

inline Complex z_ising_multivariate(const Graph& g, const EdgeWeightMap& weights) {
    const int n = g.vertex_count();
    if (n > caps().ising_vertices) throw SizeError("z_ising_multivariate: vertex cap exceeded");
    std::vector<Complex> w(g.edge_count());
    std::vector<std::pair<int, int>> ends(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        auto it = weights.find(e.id);
        if (it == weights.end())
            throw ArgumentError("missing weight for edge id " + std::to_string(e.id));
        w[i] = it->second;
        ends[i] = {e.u, e.v};
    }
    Complex total = 0;
    for (std::uint64_t spins = 0; spins < (std::uint64_t{1} << n); ++spins) {
        Complex term = 1;
        for (int i = 0; i < g.edge_count(); ++i)
            if (((spins >> ends[i].first) & 1) == ((spins >> ends[i].second) & 1)) term *= w[i];
        total += term;
    }
    return total;
}

inline Complex z_even_multivariate(const Graph& g, const EdgeWeightMap& weights) {
    std::vector<Complex> w(g.edge_id_bound(), Complex(0, 0));
    for (const auto& e : g.edges()) {
        auto it = weights.find(e.id);
        if (it == weights.end())
            throw ArgumentError("missing weight for edge id " + std::to_string(e.id));
        w[e.id] = it->second;
    }
    Complex total = 0;
    detail::enumerate_even_sets(g, [&](std::uint64_t mask, int) {
        Complex term = 1;
        std::uint64_t m = mask;
        while (m) {
            int id = std::countr_zero(m);
            m &= m - 1;
            term *= w[id];
        }
        total += term;
    });
    return total;
}

}  // namespace isinglab
