#pragma once

#include <cstdlib>
#include <string>

namespace isinglab {

// Enumeration caps. Exceeding a cap raises SizeError -- never silent truncation.
// ISING_LAB_CAP_OVERRIDE=<int> replaces every cap below at process start.
struct Caps {
    int ising_vertices = 24;    // 2^|V| spin enumeration
    int even_cycle_dim = 30;    // 2^dim cycle-space enumeration
    int tutte_edges = 24;       // 2^|E| subset sum
    int zblock_edges = 20;      // 2^|E| block-polynomial sum
    int gk_edges = 14;          // connected-subgraph sums per induced subgraph
    int catalog_edges = 16;     // connected even subsets up to this many edges
    int certify_vertices = 10;  // all (U,v) pairs enumerated
    int hom_vertices = 12;      // k^|V| homomorphism maps
};

inline const Caps& caps() {
    static const Caps c = [] {
        Caps v;
        if (const char* s = std::getenv("ISING_LAB_CAP_OVERRIDE")) {
            int n = std::atoi(s);
            if (n > 0) {
                v.ising_vertices = v.even_cycle_dim = v.tutte_edges = n;
                v.zblock_edges = v.gk_edges = v.catalog_edges = n;
                v.certify_vertices = v.hom_vertices = n;
            }
        }
        return v;
    }();
    return c;
}

}  // namespace isinglab
