// isinglab command-line driver: exact partition functions, identity checks,
// zero-free regions, Fisher-zero scans, block polynomials, and the certified
// truncation approximation, with JSON/JSONL/SVG artifacts.

#include <CLI11.hpp>

#include <complex>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "isinglab/block_paths.hpp"
#include "isinglab/block_poly.hpp"
#include "isinglab/blocks.hpp"
#include "isinglab/caps.hpp"
#include "isinglab/fptas.hpp"
#include "isinglab/generators.hpp"
#include "isinglab/graph.hpp"
#include "isinglab/io.hpp"
#include "isinglab/partition.hpp"
#include "isinglab/regions.hpp"
#include "isinglab/zeros.hpp"

using namespace isinglab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

Graph load_graph_file(const std::string& path) { return load_graph(read_file(path)); }

void emit(const Json& j, const std::string& out_path) {
    std::string text = j.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        atomic_write(out_path, text);
}

std::vector<int> parse_vertex_list(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s + ",") {
        if (c == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return out;
}

Invariant parse_invariant(const std::string& spec) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::map<std::string, std::string> kv;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        std::string cur;
        for (char c : rest + ",") {
            if (c == ',') {
                auto eq = cur.find('=');
                if (eq != std::string::npos) kv[cur.substr(0, eq)] = cur.substr(eq + 1);
                cur.clear();
            } else {
                cur += c;
            }
        }
    }
    if (kind == "even") return Invariant::even_indicator(parse_complex(kv.at("x")));
    if (kind == "tutte")
        return Invariant::tutte(parse_complex(kv.at("x")), parse_complex(kv.at("y")));
    if (kind == "hom") return Invariant::hom_density_into(load_graph_file(kv.at("target")));
    throw ArgumentError("unknown invariant kind: " + kind);
}

struct ZerosOptions {
    FamilySpec family;
    double radius = 0.125;
    double tol = 1e-9;
    int jobs = 1;
    std::string out, svg;
};

int run_zeros(const ZerosOptions& opt) {
    ScanResult res = scan_family(opt.family, opt.radius, opt.tol, opt.jobs);
    std::string jsonl;
    for (const auto& rec : res.records) {
        Json j;
        j["label"] = rec.label;
        j["format"] = rec.format;
        j["graph"] = rec.canonical;
        j["delta"] = rec.delta;
        j["seed"] = rec.seed;
        Json roots = Json::array(), ximg = Json::array();
        for (std::size_t i = 0; i < rec.roots.size(); ++i) {
            roots.push_back(complex_to_json(rec.roots[i]));
            ximg.push_back(rec.pole[i] ? Json{{"pole", true}} : complex_to_json(rec.x_images[i]));
        }
        j["roots_b"] = roots;
        j["x_images"] = ximg;
        j["min_abs_x"] = rec.min_abs_x;
        jsonl += j.dump() + "\n";
    }
    if (!opt.out.empty())
        atomic_write(opt.out, jsonl);
    else
        std::cout << jsonl;
    if (!opt.svg.empty())
        atomic_write(opt.svg, render_zero_map(res.records, opt.family.delta));
    Json summary;
    summary["graphs"] = res.records.size();
    summary["radius"] = opt.radius;
    summary["violations"] = res.violations.size();
    summary["global_min_abs_x"] = res.global_min_abs_x;
    summary["witness"] = res.witness;
    std::cerr << summary.dump(2) << "\n";
    return res.violations.empty() ? kExitOk : kExitVerificationFailure;
}

int run_corpus(const FamilySpec& family, const std::string& out_dir) {
    std::filesystem::create_directories(out_dir);
    auto graphs = make_family(family);
    Json manifest = Json::array();
    for (const auto& member : graphs) {
        const Graph& g = member.graph;
        std::string fname = member.label + ".txt";
        atomic_write(std::filesystem::path(out_dir) / fname, format_edge_list(g));
        Json meta;
        meta["file"] = fname;
        meta["label"] = member.label;
        meta["n"] = g.vertex_count();
        meta["edges"] = g.edge_count();
        meta["max_degree"] = max_degree(g);
        int gg = girth(g);
        if (gg == kInfiniteGirth)
            meta["girth"] = "inf";
        else
            meta["girth"] = gg;
        meta["seed"] = member.seed;
        manifest.push_back(meta);
    }
    atomic_write(std::filesystem::path(out_dir) / "manifest.json", manifest.dump(2) + "\n");
    std::cerr << "wrote " << graphs.size() << " graphs to " << out_dir << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ising/even-set partition function toolkit"};
    app.require_subcommand(1);

    std::string graph_path, out_path, vertex_list, x_text, b_text;
    int v_vertex = 0, delta = 3, girth_opt = 3, max_len = -1, n_max = 8, jobs = 1;
    double tol = 1e-10, eps = 1e-4, a_param = 0.5, c_param = 0.5;
    std::string radius_text = "auto", invariant_spec, svg_path, family_kind = "cycles", out_dir;
    std::uint64_t seed = 1;
    int count = 10, degree = 3;
    bool even_only = false, gk = false, table = false;

    auto* cmd_exact = app.add_subcommand("exact", "Z_Ising(G;b) as exact coefficients");
    cmd_exact->add_option("--graph", graph_path)->required();
    cmd_exact->add_option("--out", out_path);

    auto* cmd_even = app.add_subcommand("even", "Z_even(G;x) as exact coefficients");
    cmd_even->add_option("--graph", graph_path)->required();
    cmd_even->add_option("--out", out_path);

    auto* cmd_vdw = app.add_subcommand("verify-vdw", "check the even-set transform at a point");
    cmd_vdw->add_option("--graph", graph_path)->required();
    cmd_vdw->add_option("--x", x_text)->required();
    cmd_vdw->add_option("--tol", tol);

    auto* cmd_blocks = app.add_subcommand("blocks", "block decomposition");
    cmd_blocks->add_option("--graph", graph_path)->required();
    cmd_blocks->add_option("--out", out_path);

    auto* cmd_bp = app.add_subcommand("block-paths", "enumerate block paths from v to U");
    cmd_bp->add_option("--graph", graph_path)->required();
    cmd_bp->add_option("--v", v_vertex)->required();
    cmd_bp->add_option("--u", vertex_list)->required();
    cmd_bp->add_flag("--even", even_only);
    cmd_bp->add_option("--out", out_path);

    auto* cmd_dec = app.add_subcommand("verify-decomposition", "check the block-path recursion");
    cmd_dec->add_option("--graph", graph_path)->required();
    cmd_dec->add_option("--v", v_vertex)->required();
    cmd_dec->add_option("--u", vertex_list)->required();

    auto* cmd_walks = app.add_subcommand("walks", "closed-walk counts and the walk bound");
    cmd_walks->add_option("--graph", graph_path)->required();
    cmd_walks->add_option("--v", v_vertex)->required();
    cmd_walks->add_option("--max-len", max_len);
    cmd_walks->add_option("--c", c_param);
    cmd_walks->add_option("--delta", delta);
    cmd_walks->add_option("--girth", girth_opt);

    auto* cmd_region = app.add_subcommand("region", "zero-free radii for Delta (and girth)");
    cmd_region->add_option("--delta", delta)->required();
    cmd_region->add_option("--girth", girth_opt);
    cmd_region->add_flag("--table", table);

    auto* cmd_zeros = app.add_subcommand("zeros", "scan a family for Fisher zeros");
    cmd_zeros->add_option("--family", family_kind);
    cmd_zeros->add_option("--n-max", n_max);
    cmd_zeros->add_option("--delta", delta);
    cmd_zeros->add_option("--degree", degree);
    cmd_zeros->add_option("--count", count);
    cmd_zeros->add_option("--seed", seed);
    cmd_zeros->add_option("--radius", radius_text);
    cmd_zeros->add_option("--tol", tol);
    cmd_zeros->add_option("--out", out_path);
    cmd_zeros->add_option("--svg", svg_path);
    cmd_zeros->add_option("--jobs", jobs);

    auto* cmd_fptas = app.add_subcommand("fptas", "certified truncation approximation");
    cmd_fptas->add_option("--graph", graph_path)->required();
    cmd_fptas->add_option("--x", x_text);
    cmd_fptas->add_option("--b", b_text);
    cmd_fptas->add_option("--eps", eps);
    cmd_fptas->add_option("--radius", radius_text);

    auto* cmd_bpoly = app.add_subcommand("block-poly", "block polynomials and certificates");
    cmd_bpoly->add_option("--graph", graph_path)->required();
    cmd_bpoly->add_option("--invariant", invariant_spec)->required();
    cmd_bpoly->add_option("--certify", a_param);
    cmd_bpoly->add_flag("--gk", gk);
    cmd_bpoly->add_option("--out", out_path);

    auto* cmd_corpus = app.add_subcommand("corpus", "write a graph family to disk");
    cmd_corpus->add_option("--family", family_kind);
    cmd_corpus->add_option("--n-max", n_max);
    cmd_corpus->add_option("--delta", delta);
    cmd_corpus->add_option("--degree", degree);
    cmd_corpus->add_option("--count", count);
    cmd_corpus->add_option("--seed", seed);
    cmd_corpus->add_option("--out", out_dir)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_exact->parsed()) {
            Graph g = load_graph_file(graph_path);
            Json j;
            j["graph"] = graph_to_json(g);
            j["z_ising"] = poly_to_json(z_ising_poly(g));
            if (g.cycle_space_dimension() <= caps().even_cycle_dim)
                j["z_even"] = poly_to_json(z_even_poly(g));
            emit(j, out_path);
            return kExitOk;
        }
        if (cmd_even->parsed()) {
            Graph g = load_graph_file(graph_path);
            Json j;
            j["graph"] = graph_to_json(g);
            j["z_even"] = poly_to_json(z_even_poly(g));
            emit(j, out_path);
            return kExitOk;
        }
        if (cmd_vdw->parsed()) {
            Graph g = load_graph_file(graph_path);
            VdwCheck chk = vdw_transform_check(g, parse_complex(x_text));
            Json j;
            j["lhs"] = complex_to_json(chk.lhs);
            j["rhs"] = complex_to_json(chk.rhs);
            j["relative_error"] = chk.relative_error;
            j["pass"] = chk.relative_error <= tol;
            emit(j, "");
            return chk.relative_error <= tol ? kExitOk : kExitVerificationFailure;
        }
        if (cmd_blocks->parsed()) {
            Graph g = load_graph_file(graph_path);
            BlockDecomposition bd = block_decomposition(g);
            Json j;
            Json blocks = Json::array();
            for (const auto& b : bd.blocks) blocks.push_back(b.ids());
            j["blocks"] = blocks;
            j["cut_vertices"] = bd.cut_vertices;
            Json te = Json::array();
            for (auto [bi, cv] : bd.tree_edges) te.push_back({bi, cv});
            j["tree_edges"] = te;
            emit(j, out_path);
            return kExitOk;
        }
        if (cmd_bp->parsed()) {
            Graph g = load_graph_file(graph_path);
            std::vector<int> terminals = parse_vertex_list(vertex_list);
            auto paths = even_only ? even_block_paths(g, v_vertex, terminals)
                                   : enumerate_block_paths(g, v_vertex, terminals);
            Json arr = Json::array();
            for (const auto& bp : paths) arr.push_back(bp.sorted_edge_ids());
            Json j;
            j["count"] = paths.size();
            j["block_paths"] = arr;
            emit(j, out_path);
            return kExitOk;
        }
        if (cmd_dec->parsed()) {
            Graph g = load_graph_file(graph_path);
            auto rep = verify_decomposition(g, parse_vertex_list(vertex_list), v_vertex);
            Json j;
            j["lhs"] = poly_to_json(rep.lhs);
            j["rhs"] = poly_to_json(rep.rhs);
            j["equal"] = rep.equal;
            emit(j, "");
            return rep.equal ? kExitOk : kExitVerificationFailure;
        }
        if (cmd_walks->parsed()) {
            Graph g = load_graph_file(graph_path);
            int len = max_len < 0 ? g.edge_count() : max_len;
            WalkGF w = walk_gf(g, v_vertex, len);
            Json j;
            j["counts"] = w.counts;
            if (cmd_walks->count("--c")) {
                auto rep = walk_bound_check(g, v_vertex, c_param, delta, girth_opt);
                j["lhs"] = rep.lhs;
                j["rhs"] = rep.rhs;
                j["slack"] = rep.slack;
                j["pass"] = rep.holds;
                emit(j, "");
                return rep.holds ? kExitOk : kExitVerificationFailure;
            }
            emit(j, "");
            return kExitOk;
        }
        if (cmd_region->parsed()) {
            double n_d = n_delta(delta), e_d = eps_delta(delta);
            double maxr = max_radius_for_girth(delta, girth_opt);
            DiskRegion disk(n_d);
            if (table) {
                std::printf("delta        %d\n", delta);
                std::printf("girth        %d\n", girth_opt);
                std::printf("n_delta      %.15g\n", n_d);
                std::printf("eps_delta    %.15g\n", e_d);
                std::printf("max_radius   %.15g\n", maxr);
                std::printf("b_interval   [%.15g, %.15g]\n", disk.diameter_lo(), disk.diameter_hi());
            } else {
                Json j;
                j["delta"] = delta;
                j["girth"] = girth_opt;
                j["n_delta"] = n_d;
                j["eps_delta"] = e_d;
                j["max_radius"] = maxr;
                j["b_interval"] = {disk.diameter_lo(), disk.diameter_hi()};
                emit(j, out_path);
            }
            return kExitOk;
        }
        if (cmd_zeros->parsed()) {
            ZerosOptions opt;
            opt.family.kind = family_kind;
            opt.family.n_max = n_max;
            opt.family.delta = delta;
            opt.family.degree = degree;
            opt.family.count = count;
            opt.family.seed = seed;
            opt.radius = radius_text == "auto" ? n_delta(delta) : std::stod(radius_text);
            if (!(opt.radius >= 0.0 && opt.radius < 1.0))
                throw ArgumentError("radius must lie in [0,1)");
            opt.tol = tol;
            opt.jobs = jobs;
            opt.out = out_path;
            opt.svg = svg_path;
            return run_zeros(opt);
        }
        if (cmd_fptas->parsed()) {
            Graph g = load_graph_file(graph_path);
            double radius = radius_text == "auto" ? 0.0 : std::stod(radius_text);
            if (radius_text != "auto" && !(radius > 0.0 && radius < 1.0))
                throw ArgumentError("radius must lie in (0,1)");
            FptasResult res;
            std::optional<Complex> exact;
            if (!b_text.empty()) {
                Complex b = parse_complex(b_text);
                res = approx_z_ising(g, b, eps, radius);
                if (g.vertex_count() <= caps().ising_vertices)
                    exact = z_ising_poly(g).eval(b);
            } else if (!x_text.empty()) {
                Complex x = parse_complex(x_text);
                res = approx_z_even(g, x, eps, radius);
                if (g.cycle_space_dimension() <= caps().even_cycle_dim)
                    exact = z_even_poly(g).eval(x);
            } else {
                throw ArgumentError("fptas needs --x or --b");
            }
            Json j;
            j["estimate_re"] = res.estimate.real();
            j["estimate_im"] = res.estimate.imag();
            j["m"] = res.certificate.order;
            j["radius"] = res.certificate.radius;
            j["theta"] = res.certificate.theta;
            j["error_bound"] = res.certificate.error_bound;
            if (exact) {
                j["exact"] = format_complex(*exact);
                double obs = std::abs(res.estimate / *exact - 1.0);
                j["observed_error"] = obs;
            }
            emit(j, out_path);
            return kExitOk;
        }
        if (cmd_bpoly->parsed()) {
            Graph g = load_graph_file(graph_path);
            Invariant w = parse_invariant(invariant_spec);
            Json j;
            j["invariant"] = w.describe();
            Complex z = z_block(g, w);
            j["z_block"] = complex_to_json(z);
            bool ok = true;
            if (cmd_bpoly->count("--certify")) {
                BlockCertificate cert = certify_zero_free(g, w, a_param);
                j["certificate"] = {{"a", cert.a},
                                    {"max_sum", cert.max_sum},
                                    {"valid", cert.valid},
                                    {"z_value", complex_to_json(cert.z_value)}};
                if (cert.valid && std::abs(cert.z_value) <= 1e-9) ok = false;
            }
            if (gk) {
                GruberKunzReport rep = gruber_kunz_check(g, w, a_param);
                j["gruber_kunz"] = {{"gk_max_sum", rep.gk_max_sum},
                                    {"block_max_sum", rep.block_max_sum},
                                    {"gk_valid", rep.gk_valid},
                                    {"block_valid", rep.block_valid}};
                if (rep.block_max_sum > rep.gk_max_sum + 1e-12 && w.kind() == Invariant::Kind::EvenIndicator)
                    ok = false;
            }
            emit(j, out_path);
            return ok ? kExitOk : kExitVerificationFailure;
        }
        if (cmd_corpus->parsed()) {
            FamilySpec family;
            family.kind = family_kind;
            family.n_max = n_max;
            family.delta = delta;
            family.degree = degree;
            family.count = count;
            family.seed = seed;
            return run_corpus(family, out_dir);
        }
    } catch (const ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
