#include <catch_amalgamated.hpp>

#include <cmath>

#include "isinglab/generators.hpp"
#include "isinglab/zeros.hpp"

using namespace isinglab;
using Catch::Approx;

TEST_CASE("fisher zeros of K2 hit the pole") {
    ZeroRecord rec = fisher_zeros(Graph(2, {{0, 1}}));
    REQUIRE(rec.roots.size() == 1);
    REQUIRE(std::abs(rec.roots[0] + 1.0) < 1e-12);
    REQUIRE(rec.pole[0]);
    REQUIRE(std::isinf(rec.min_abs_x));
}

TEST_CASE("fisher zeros of C3") {
    ZeroRecord rec = fisher_zeros(cycle_graph(3));
    REQUIRE(rec.roots.size() == 3);  // degree = |E|
    // roots 0 and +-i sqrt(3)
    REQUIRE(std::abs(rec.roots[1]) < 1e-12);
    REQUIRE(std::abs(rec.roots[0] - Complex(0, -std::sqrt(3.0))) < 1e-9);
    REQUIRE(std::abs(rec.roots[2] - Complex(0, std::sqrt(3.0))) < 1e-9);
    for (std::size_t i = 0; i < rec.x_images.size(); ++i)
        REQUIRE(std::abs(rec.x_images[i]) == Approx(1.0).margin(1e-9));
    REQUIRE(rec.min_abs_x == Approx(1.0).margin(1e-9));
    REQUIRE(rec.delta == 2);
}

TEST_CASE("cycle zeros sit on the unit x-circle") {
    for (int n = 3; n <= 12; ++n) {
        ZeroRecord rec = fisher_zeros(cycle_graph(n), 1e-12);
        REQUIRE(static_cast<int>(rec.roots.size()) == n);
        for (std::size_t i = 0; i < rec.x_images.size(); ++i)
            if (!rec.pole[i])
                REQUIRE(std::abs(std::abs(rec.x_images[i]) - 1.0) <= 1e-9);
    }
}

TEST_CASE("root multiset is closed under conjugation") {
    // multiple roots come back as small clusters, so pair coarsely
    for (const Graph& g : {complete_graph(4), bowtie_graph(), petersen_graph()}) {
        ZeroRecord rec = fisher_zeros(g, 1e-10);
        for (Complex r : rec.roots) {
            bool found = false;
            for (Complex s : rec.roots)
                if (std::abs(s - std::conj(r)) < 2e-3) found = true;
            REQUIRE(found);
        }
    }
}

TEST_CASE("K4 has no zero inside the cubic disk") {
    ZeroRecord rec = fisher_zeros(complete_graph(4), 1e-10);
    REQUIRE(rec.min_abs_x > 0.125);
}

TEST_CASE("family scans") {
    FamilySpec cycles;
    cycles.kind = "cycles";
    cycles.n_max = 12;
    ScanResult res = scan_family(cycles, 0.125, 1e-9);
    REQUIRE(res.records.size() == 10);
    REQUIRE(res.violations.empty());
    REQUIRE(res.global_min_abs_x == Approx(1.0).margin(1e-9));

    FamilySpec complete;
    complete.kind = "complete";
    complete.n_max = 10;
    complete.delta = 3;
    res = scan_family(complete, 0.125, 1e-9);
    REQUIRE(res.records.size() == 4);  // K1..K4
    REQUIRE(res.violations.empty());

    FamilySpec rr;
    rr.kind = "random-regular";
    rr.degree = 3;
    rr.n_max = 10;
    rr.count = 12;
    rr.seed = 5;
    res = scan_family(rr, 0.125, 1e-9, 1);
    REQUIRE(res.records.size() == 12);
    REQUIRE(res.violations.empty());

    // identical records regardless of worker count
    ScanResult par = scan_family(rr, 0.125, 1e-9, 4);
    REQUIRE(par.records.size() == res.records.size());
    for (std::size_t i = 0; i < res.records.size(); ++i) {
        REQUIRE(par.records[i].label == res.records[i].label);
        REQUIRE(par.records[i].min_abs_x == res.records[i].min_abs_x);
    }

    FamilySpec bad;
    bad.kind = "no-such-family";
    REQUIRE_THROWS_AS(make_family(bad), ArgumentError);
}

TEST_CASE("theta family") {
    FamilySpec spec;
    spec.kind = "theta";
    spec.theta_lo = 1;
    spec.theta_hi = 3;
    auto fam = make_family(spec);
    for (const auto& member : fam) {
        REQUIRE(max_degree(member.graph) == 3);
        REQUIRE(member.graph.connected());
    }
    ScanResult res = scan_family(spec, n_delta(3), 1e-9);
    REQUIRE(res.violations.empty());
}

TEST_CASE("svg zero map") {
    std::string empty_map = render_zero_map({}, 3);
    REQUIRE(empty_map.find("<svg") == 0);
    REQUIRE(empty_map.find("n_delta") != std::string::npos);
    REQUIRE(empty_map.find("fill=\"black\"") == std::string::npos);  // no points

    ZeroRecord rec = fisher_zeros(cycle_graph(4));
    std::string map = render_zero_map({rec}, 3);
    int points = 0;
    for (std::size_t p = map.find("fill=\"black\""); p != std::string::npos;
         p = map.find("fill=\"black\"", p + 1))
        ++points;
    REQUIRE(points == 4);
    REQUIRE(map == render_zero_map({rec}, 3));  // byte determinism
}
