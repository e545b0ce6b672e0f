#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "isinglab/caps.hpp"
#include "isinglab/errors.hpp"
#include "isinglab/graph.hpp"
#include "isinglab/partition.hpp"
#include "isinglab/polynomial.hpp"
#include "isinglab/regions.hpp"

namespace isinglab {

// Connected even edge subsets with at most max_size edges. Every even set is
// the vertex-disjoint union of such members, so low-order coefficients of
// Z_even follow from disjoint packings.
struct ClusterCatalog {
    int max_size = 0;
    std::vector<std::uint64_t> edge_masks;
    std::vector<std::uint64_t> vertex_masks;
    std::vector<int> sizes;

    std::size_t size() const { return edge_masks.size(); }
};

inline ClusterCatalog build_catalog(const Graph& g, int max_size) {
    if (max_size > caps().catalog_edges)
        throw SizeError("catalog size " + std::to_string(max_size) + " exceeds cap " +
                        std::to_string(caps().catalog_edges));
    if (g.edge_id_bound() > 64 || g.vertex_count() > 64)
        throw SizeError("catalog needs <= 64 edge ids and vertices");
    ClusterCatalog cat;
    cat.max_size = std::max(max_size, 0);
    if (max_size <= 0) return cat;
    std::vector<int> deg(g.vertex_count());
    const int bound = g.edge_id_bound();
    // enumerate connected subsets keyed by their minimum vertex: grow from
    // root r using only vertices >= r, branching include/ban on the
    // smallest-id adjacent edge, capped at max_size edges
    for (int r = 0; r < g.vertex_count(); ++r) {
        std::function<void(std::uint64_t, std::uint64_t, std::uint64_t, int)> rec =
            [&](std::uint64_t cur, std::uint64_t vmask, std::uint64_t banned, int size) {
                int pick = -1;
                if (size < max_size) {
                    for (int id = 0; id < bound; ++id) {
                        if ((cur >> id & 1) || (banned >> id & 1) || !g.has_edge_id(id)) continue;
                        const auto& e = g.edge(id);
                        if (e.u < r || e.v < r) continue;
                        if ((vmask >> e.u & 1) || (vmask >> e.v & 1)) { pick = id; break; }
                    }
                }
                if (pick < 0) {
                    if (!cur) return;
                    std::fill(deg.begin(), deg.end(), 0);
                    std::uint64_t m = cur;
                    while (m) {
                        int id = std::countr_zero(m);
                        m &= m - 1;
                        const auto& e = g.edge(id);
                        deg[e.u] += e.is_loop() ? 2 : 1;
                        if (!e.is_loop()) deg[e.v] += 1;
                    }
                    std::uint64_t vm = vmask;
                    while (vm) {
                        int v = std::countr_zero(vm);
                        vm &= vm - 1;
                        if (deg[v] % 2) return;
                    }
                    cat.edge_masks.push_back(cur);
                    cat.vertex_masks.push_back(vmask);
                    cat.sizes.push_back(size);
                    return;
                }
                rec(cur, vmask, banned | (std::uint64_t{1} << pick), size);
                const auto& e = g.edge(pick);
                std::uint64_t nv = vmask | (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
                rec(cur | (std::uint64_t{1} << pick), nv, banned, size + 1);
            };
        rec(0, std::uint64_t{1} << r, 0, 0);
    }
    return cat;
}

// e_0..e_m: number of even sets with exactly k edges, from vertex-disjoint
// packings of catalog members (members ordered by index; each packing is an
// increasing index sequence, so it is counted once).
inline std::vector<BigInt> even_coeffs_upto(const Graph& g, int m) {
    ClusterCatalog cat = build_catalog(g, std::min(m, g.edge_count()));
    std::vector<std::uint64_t> counts(m + 1, 0);
    const int n_members = static_cast<int>(cat.size());
    std::function<void(int, std::uint64_t, int)> rec = [&](int from, std::uint64_t used, int size) {
        ++counts[size];
        for (int j = from; j < n_members; ++j) {
            if (size + cat.sizes[j] > m) continue;
            if (cat.vertex_masks[j] & used) continue;
            rec(j + 1, used | cat.vertex_masks[j], size + cat.sizes[j]);
        }
    };
    rec(0, 0, 0);
    return std::vector<BigInt>(counts.begin(), counts.end());
}

// Power-series coefficients of log Z from the coefficients of Z (Newton's
// identities), exact: k e_k = sum_{j<=k} j c_j e_{k-j}.
inline std::vector<BigRational> log_z_taylor(const std::vector<BigInt>& e, int m) {
    if (e.empty() || e[0] != 1) throw ArgumentError("log_z_taylor needs e_0 = 1");
    auto coeff = [&](int k) { return k < static_cast<int>(e.size()) ? e[k] : BigInt(0); };
    std::vector<BigRational> c(m + 1, BigRational(0));
    for (int k = 1; k <= m; ++k) {
        BigRational acc(coeff(k));
        for (int j = std::max(1, k - static_cast<int>(e.size()) + 1); j < k; ++j)
            acc -= BigRational(j) * c[j] * BigRational(coeff(k - j)) / k;
        c[k] = acc;
    }
    return c;
}

// Formal exp of sum c_k x^k through degree m; test-side inverse of the above.
inline std::vector<BigRational> exp_series(const std::vector<BigRational>& c, int m) {
    std::vector<BigRational> e(m + 1, BigRational(0));
    e[0] = 1;
    auto cc = [&](int j) { return j < static_cast<int>(c.size()) ? c[j] : BigRational(0); };
    for (int k = 1; k <= m; ++k) {
        BigRational acc(0);
        for (int j = 1; j <= k; ++j) acc += BigRational(j) * cc(j) * e[k - j];
        e[k] = acc / k;
    }
    return e;
}

struct TruncationCertificate {
    int order;           // m
    double radius;       // zero-free radius used
    Complex x;           // evaluation point
    double theta;        // |x| / radius
    double error_bound;  // |E| theta^(m+1) / ((m+1)(1-theta))
};

struct FptasResult {
    Complex estimate;
    TruncationCertificate certificate;
};

// Zero-free x-disk radius certified for this graph: the girth-aware radius
// for simple graphs, 1 for forests (Z_even == 1 there).
inline double default_even_radius(const Graph& g) {
    int gg = girth(g);
    if (gg == kInfiniteGirth) return 1.0;
    if (gg < 3)
        throw ArgumentError("no certified radius for loops/parallel edges; pass one explicitly");
    int delta = std::max(3, max_degree(g));
    return max_radius_for_girth(delta, gg);
}

inline double truncation_bound(int edges, double theta, int m) {
    return edges * std::pow(theta, m + 1) / ((m + 1) * (1.0 - theta));
}

// Taylor-truncation approximation of Z_even(G;x), certified inside |x| < R.
inline FptasResult approx_z_even(const Graph& g, Complex x, double eps_rel, double radius = 0.0) {
    require_finite(x, "approx_z_even");
    if (eps_rel <= 0) throw ArgumentError("approx_z_even: eps_rel must be positive");
    double R = radius > 0.0 ? radius : default_even_radius(g);
    double theta = std::abs(x) / R;
    if (theta >= 1.0)
        throw ArgumentError("approx_z_even: |x| >= certified radius, no certificate possible");
    const int edges = g.edge_count();
    constexpr int kOrderCap = 4096;
    int m = 1;
    if (edges > 0) {
        while (m <= kOrderCap && truncation_bound(edges, theta, m) > eps_rel) ++m;
        if (m > kOrderCap)
            throw SizeError("approx_z_even: order cap reached, best bound " +
                            std::to_string(truncation_bound(edges, theta, kOrderCap)));
    }
    std::vector<BigInt> e = even_coeffs_upto(g, std::min(m, edges));
    std::vector<BigRational> c = log_z_taylor(e, m);
    HpComplex xs(x.real(), x.imag());
    HpComplex acc = 0, pw = 1;
    for (int k = 1; k <= m; ++k) {
        pw *= xs;
        if (c[k] != 0) acc += HpComplex(HpReal(c[k])) * pw;
    }
    HpComplex est = exp(acc);
    FptasResult r;
    r.estimate = Complex(static_cast<double>(est.real()), static_cast<double>(est.imag()));
    r.certificate = {m, R, x, theta, edges == 0 ? 0.0 : truncation_bound(edges, theta, m)};
    return r;
}

// b-plane wrapper: Z_Ising = 2^|V| (1-x)^{-|E|} Z_even at x = (b-1)/(b+1).
inline FptasResult approx_z_ising(const Graph& g, Complex b, double eps_rel, double radius = 0.0) {
    Complex x = b_to_x(b);
    FptasResult r = approx_z_even(g, x, eps_rel, radius);
    Complex pref = std::pow(2.0, g.vertex_count()) * std::pow(1.0 - x, -g.edge_count());
    r.estimate *= pref;
    return r;
}

}  // namespace isinglab
