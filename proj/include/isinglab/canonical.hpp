#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "isinglab/errors.hpp"
#include "isinglab/graph.hpp"

namespace isinglab {

// Isomorphism certificate for simple graphs (n <= 16): the lexicographically
// maximal placed-adjacency string over all vertex orderings, found by
// branch-and-bound. certificate[0] = n, certificate[i] = adjacency bits of
// the i-th placed vertex against the earlier ones.
class Canonizer {
public:
    explicit Canonizer(const Graph& g) : n_(g.vertex_count()) {
        if (!g.simple()) throw ArgumentError("canonical certificate requires a simple graph");
        if (n_ > 16) throw SizeError("canonical certificate limited to 16 vertices");
        adj_.assign(n_, 0);
        for (const auto& e : g.edges()) {
            adj_[e.u] |= 1u << e.v;
            adj_[e.v] |= 1u << e.u;
        }
    }

    std::vector<std::uint32_t> run() {
        best_.assign(n_, 0);
        has_best_ = false;
        perm_.assign(n_, -1);
        used_ = 0;
        if (n_ > 0) place(0);
        std::vector<std::uint32_t> cert;
        cert.push_back(static_cast<std::uint32_t>(n_));
        cert.insert(cert.end(), best_.begin(), best_.end());
        return cert;
    }

private:
    void place(int i) {
        if (i == n_) {
            has_best_ = true;
            return;
        }
        // candidates ordered by row, interchangeable vertices collapsed:
        // u and w with adj[u] \ {w} == adj[w] \ {u} are swapped by an
        // automorphism fixing the placed prefix, so one branch suffices
        struct Cand { std::uint32_t row; int v; };
        std::vector<Cand> cands;
        for (int v = 0; v < n_; ++v) {
            if (used_ >> v & 1) continue;
            bool twin = false;
            for (const Cand& c : cands)
                if ((adj_[v] & ~(1u << c.v)) == (adj_[c.v] & ~(1u << v))) {
                    twin = true;
                    break;
                }
            if (twin) continue;
            std::uint32_t row = 0;
            for (int j = 0; j < i; ++j)
                if (adj_[v] >> perm_[j] & 1) row |= 1u << (i - 1 - j);
            cands.push_back({row, v});
        }
        std::stable_sort(cands.begin(), cands.end(),
                         [](const Cand& a, const Cand& b) { return a.row > b.row; });
        for (const Cand& c : cands) {
            if (has_best_) {
                if (c.row < best_[i]) break;  // sorted: the rest are smaller too
                if (c.row > best_[i]) {
                    best_[i] = c.row;
                    for (int k = i + 1; k < n_; ++k) best_[k] = 0;
                    has_best_ = false;
                }
            } else if (c.row > best_[i]) {
                best_[i] = c.row;
                for (int k = i + 1; k < n_; ++k) best_[k] = 0;
            } else if (c.row < best_[i]) {
                continue;
            }
            used_ |= 1u << c.v;
            perm_[i] = c.v;
            place(i + 1);
            used_ &= ~(1u << c.v);
        }
    }

    int n_;
    std::vector<std::uint32_t> adj_;
    std::vector<std::uint32_t> best_;
    std::vector<int> perm_;
    std::uint32_t used_ = 0;
    bool has_best_ = false;
};

inline std::vector<std::uint32_t> canonical_certificate(const Graph& g) {
    return Canonizer(g).run();
}

}  // namespace isinglab
