#pragma once

#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "isinglab/generators.hpp"
#include "isinglab/graph.hpp"
#include "isinglab/io.hpp"
#include "isinglab/partition.hpp"
#include "isinglab/regions.hpp"
#include "isinglab/roots.hpp"

namespace isinglab {

// Roots of Z_Ising(G;.) in the b-plane together with their x-plane images.
// Roots at b = -1 map to infinity and are excluded from min_abs_x.
struct ZeroRecord {
    std::string format = "edge-list";
    std::string canonical;  // edge-list text
    std::string label;
    int delta = 0;
    std::vector<Complex> roots;
    std::vector<Complex> x_images;  // aligned with roots; poles carry (inf,0)
    std::vector<bool> pole;
    double min_abs_x = std::numeric_limits<double>::infinity();
    std::uint64_t seed = 0;
};

inline ZeroRecord fisher_zeros(const Graph& g, double tol = 1e-12,
                               double pole_threshold = 1e-6) {
    ZeroRecord rec;
    rec.canonical = format_edge_list(g);
    rec.delta = max_degree(g);
    IntegerPolynomial z = z_ising_poly(g);
    if (z.degree() >= 1) rec.roots = roots(z, tol);
    for (Complex b : rec.roots) {
        bool is_pole = std::abs(b + 1.0) <= pole_threshold;
        rec.pole.push_back(is_pole);
        if (is_pole) {
            rec.x_images.push_back(Complex(std::numeric_limits<double>::infinity(), 0.0));
        } else {
            Complex x = (b - 1.0) / (b + 1.0);
            rec.x_images.push_back(x);
            rec.min_abs_x = std::min(rec.min_abs_x, std::abs(x));
        }
    }
    return rec;
}

// --- family scans ------------------------------------------------------------

struct FamilySpec {
    std::string kind;  // cycles | complete | all-connected | random-regular | theta
    int n_max = 8;
    int delta = 3;
    int degree = 3;   // random-regular
    int count = 10;   // random-regular
    std::uint64_t seed = 1;
    int theta_lo = 1, theta_hi = 3;  // path-length range a <= b <= c
};

struct FamilyMember {
    std::string label;
    Graph graph;
    std::uint64_t seed;
};

inline std::vector<FamilyMember> make_family(const FamilySpec& spec) {
    std::vector<FamilyMember> out;
    if (spec.kind == "cycles") {
        for (int n = 3; n <= spec.n_max; ++n)
            out.push_back({"C" + std::to_string(n), cycle_graph(n), spec.seed});
    } else if (spec.kind == "complete") {
        for (int n = 1; n <= std::min(spec.n_max, spec.delta + 1); ++n)
            out.push_back({"K" + std::to_string(n), complete_graph(n), spec.seed});
    } else if (spec.kind == "all-connected") {
        auto all = all_connected_graphs(spec.n_max, spec.delta);
        for (std::size_t i = 0; i < all.size(); ++i)
            out.push_back({"G" + std::to_string(i) + "_n" + std::to_string(all[i].vertex_count()),
                           all[i], spec.seed});
    } else if (spec.kind == "random-regular") {
        std::vector<int> sizes;
        for (int n = spec.degree + 1; n <= spec.n_max; ++n)
            if ((static_cast<long long>(n) * spec.degree) % 2 == 0) sizes.push_back(n);
        if (sizes.empty())
            throw ArgumentError("random-regular: no feasible n with d*n even up to n_max");
        for (int i = 0; i < spec.count; ++i) {
            int n = sizes[i % sizes.size()];
            std::uint64_t s = spec.seed + i;
            out.push_back({"R" + std::to_string(spec.degree) + "_n" + std::to_string(n) + "_s" +
                               std::to_string(s),
                           random_regular_graph(spec.degree, n, s), s});
        }
    } else if (spec.kind == "theta") {
        for (int a = spec.theta_lo; a <= spec.theta_hi; ++a)
            for (int b = a; b <= spec.theta_hi; ++b)
                for (int c = b; c <= spec.theta_hi; ++c) {
                    if (a == 1 && b == 1) continue;  // two length-1 paths would be parallel edges
                    out.push_back({"theta_" + std::to_string(a) + "_" + std::to_string(b) + "_" +
                                       std::to_string(c),
                                   theta_graph(a, b, c), spec.seed});
                }
    } else {
        throw ArgumentError("unknown family kind: " + spec.kind);
    }
    return out;
}

struct ScanViolation {
    std::string label;
    double min_abs_x;
};

struct ScanResult {
    std::vector<ZeroRecord> records;
    std::vector<ScanViolation> violations;  // min_abs_x <= radius + tol
    double global_min_abs_x = std::numeric_limits<double>::infinity();
    std::string witness;
};

inline ScanResult scan_family(const FamilySpec& spec, double radius, double tol = 1e-9,
                              int jobs = 1) {
    auto family = make_family(spec);
    ScanResult res;
    res.records.resize(family.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= family.size()) break;
            ZeroRecord rec = fisher_zeros(family[i].graph, tol);
            rec.label = family[i].label;
            rec.seed = family[i].seed;
            res.records[i] = std::move(rec);
        }
    };
    int workers = std::max(1, jobs);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& rec : res.records) {
        if (rec.min_abs_x <= radius + tol) res.violations.push_back({rec.label, rec.min_abs_x});
        if (rec.min_abs_x < res.global_min_abs_x) {
            res.global_min_abs_x = rec.min_abs_x;
            res.witness = rec.label;
        }
    }
    return res;
}

// --- SVG zero map -------------------------------------------------------------

// Scatter of x-plane zero images with reference circles at n_Delta,
// eps_Delta, 1/(Delta-1), 1/sqrt(Delta-1) and the unit circle.
// Deterministic byte output for fixed inputs.
inline std::string render_zero_map(const std::vector<ZeroRecord>& records, int delta,
                                   double span = 1.6) {
    const int w = 640, h = 640;
    auto px = [&](double v) { return (v + span) / (2 * span) * w; };
    char buf[256];
    std::string svg;
    auto emit = [&](const char* fmt, auto... args) {
        std::snprintf(buf, sizeof buf, fmt, args...);
        svg += buf;
    };
    emit("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
         "viewBox=\"0 0 %d %d\">\n", w, h, w, h);
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    emit("<line x1=\"0\" y1=\"%.6f\" x2=\"%d\" y2=\"%.6f\" stroke=\"#cccccc\"/>\n", px(0.0), w,
         px(0.0));
    emit("<line x1=\"%.6f\" y1=\"0\" x2=\"%.6f\" y2=\"%d\" stroke=\"#cccccc\"/>\n", px(0.0),
         px(0.0), h);
    struct Ring { double r; const char* color; const char* name; };
    const Ring rings[] = {
        {n_delta(delta), "#d62728", "n_delta"},
        {eps_delta(delta), "#2ca02c", "eps_delta"},
        {1.0 / (delta - 1), "#1f77b4", "1/(delta-1)"},
        {1.0 / std::sqrt(delta - 1.0), "#9467bd", "1/sqrt(delta-1)"},
        {1.0, "#7f7f7f", "unit"},
    };
    for (const auto& ring : rings) {
        emit("<circle cx=\"%.6f\" cy=\"%.6f\" r=\"%.6f\" fill=\"none\" stroke=\"%s\" "
             "stroke-dasharray=\"4 3\"><title>%s</title></circle>\n",
             px(0.0), px(0.0), ring.r / (2 * span) * w, ring.color, ring.name);
    }
    for (const auto& rec : records)
        for (std::size_t i = 0; i < rec.x_images.size(); ++i) {
            if (rec.pole[i]) continue;
            Complex x = rec.x_images[i];
            if (std::abs(x.real()) > span || std::abs(x.imag()) > span) continue;
            emit("<circle cx=\"%.6f\" cy=\"%.6f\" r=\"2\" fill=\"black\"/>\n", px(x.real()),
                 px(-x.imag()));
        }
    svg += "</svg>\n";
    return svg;
}

inline void emit_zero_map(const std::vector<ZeroRecord>& records, int delta,
                          const std::filesystem::path& out) {
    atomic_write(out, render_zero_map(records, delta));
}

}  // namespace isinglab
