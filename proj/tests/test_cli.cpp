#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "isinglab/generators.hpp"
#include "isinglab/io.hpp"

using namespace isinglab;
namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

fs::path scratch_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "isinglab_cli_test";
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

RunResult run_cli(const std::string& args) {
    fs::path out = scratch_dir() / "stdout.txt";
    std::string cmd = std::string(ISINGLAB_CLI_PATH) + " " + args + " > " + out.string() + " 2> " +
                      (scratch_dir() / "stderr.txt").string();
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(rc);
    r.out = read_file(out);
    return r;
}

fs::path write_graph(const std::string& name, const Graph& g) {
    fs::path p = scratch_dir() / name;
    std::ofstream f(p);
    f << format_edge_list(g);
    return p;
}

}  // namespace

TEST_CASE("cli region") {
    RunResult r = run_cli("region --delta 3");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j["n_delta"].get<double>() == 0.125);
    REQUIRE(j["eps_delta"].get<double>() == Catch::Approx(0.41421356237309503));
    REQUIRE(j["b_interval"][0].get<double>() == Catch::Approx(7.0 / 9.0));
    REQUIRE(j["b_interval"][1].get<double>() == Catch::Approx(9.0 / 7.0));
}

TEST_CASE("cli exact and even") {
    fs::path c3 = write_graph("c3.txt", cycle_graph(3));
    RunResult r = run_cli("exact --graph " + c3.string());
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j["z_ising"] == Json::array({"0", "6", "0", "2"}));

    r = run_cli("even --graph " + c3.string());
    REQUIRE(r.exit_code == 0);
    j = Json::parse(r.out);
    REQUIRE(j["z_even"] == Json::array({"1", "0", "0", "1"}));
}

TEST_CASE("cli verify-vdw") {
    fs::path c3 = write_graph("c3b.txt", cycle_graph(3));
    RunResult r = run_cli("verify-vdw --graph " + c3.string() + " --x 0.3+0.1i");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j["pass"].get<bool>());
    REQUIRE(j["relative_error"].get<double>() <= 1e-10);
}

TEST_CASE("cli blocks and block paths") {
    fs::path bow = write_graph("bowtie.txt", bowtie_graph());
    RunResult r = run_cli("blocks --graph " + bow.string());
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j["blocks"].size() == 2);
    REQUIRE(j["cut_vertices"] == Json::array({2}));

    r = run_cli("block-paths --graph " + bow.string() + " --v 0 --u 3 --even");
    REQUIRE(r.exit_code == 0);
    j = Json::parse(r.out);
    REQUIRE(j["count"].get<int>() == 1);
    REQUIRE(j["block_paths"][0].size() == 6);

    r = run_cli("verify-decomposition --graph " + bow.string() + " --v 3 --u 0");
    REQUIRE(r.exit_code == 0);
    j = Json::parse(r.out);
    REQUIRE(j["equal"].get<bool>());
}

TEST_CASE("cli walks") {
    fs::path c3 = write_graph("c3w.txt", cycle_graph(3));
    RunResult r = run_cli("walks --graph " + c3.string() + " --v 0 --c 0.5 --delta 3 --girth 3");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j["lhs"].get<double>() == Catch::Approx(0.03125));
    REQUIRE(j["pass"].get<bool>());
}

TEST_CASE("cli zeros scan with artifacts") {
    fs::path out = scratch_dir() / "cycles.jsonl";
    fs::path svg = scratch_dir() / "cycles.svg";
    RunResult r = run_cli("zeros --family cycles --n-max 10 --radius 0.125 --out " + out.string() +
                          " --svg " + svg.string());
    REQUIRE(r.exit_code == 0);
    std::string lines = read_file(out);
    int count = 0;
    for (char c : lines)
        if (c == '\n') ++count;
    REQUIRE(count == 8);  // C3..C10
    Json first = Json::parse(lines.substr(0, lines.find('\n')));
    REQUIRE(first["min_abs_x"].get<double>() >= 0.99);
    std::string svg_text = read_file(svg);
    REQUIRE(svg_text.rfind("<svg", 0) == 0);

    // determinism: a second run produces identical bytes
    fs::path out2 = scratch_dir() / "cycles2.jsonl";
    run_cli("zeros --family cycles --n-max 10 --radius 0.125 --out " + out2.string());
    REQUIRE(read_file(out) == read_file(out2));
}

TEST_CASE("cli fptas") {
    fs::path c3 = write_graph("c3f.txt", cycle_graph(3));
    RunResult r = run_cli("fptas --graph " + c3.string() + " --x 0.05 --eps 1e-4 --radius 0.125");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j["error_bound"].get<double>() <= 1e-4);
    REQUIRE(j["observed_error"].get<double>() <= 1e-4);

    r = run_cli("fptas --graph " + c3.string() + " --b 1.2 --eps 1e-5");
    REQUIRE(r.exit_code == 0);
    j = Json::parse(r.out);
    REQUIRE(j.contains("exact"));
}

TEST_CASE("cli block-poly") {
    fs::path c3 = write_graph("c3p.txt", cycle_graph(3));
    RunResult r = run_cli("block-poly --graph " + c3.string() +
                          " --invariant even:x=0.05 --certify 0.5 --gk");
    REQUIRE(r.exit_code == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j["certificate"]["valid"].get<bool>());
    REQUIRE(j["gruber_kunz"]["block_max_sum"].get<double>() <=
            j["gruber_kunz"]["gk_max_sum"].get<double>());
}

TEST_CASE("cli corpus") {
    fs::path dir = scratch_dir() / "corpus";
    RunResult r = run_cli("corpus --family cycles --n-max 6 --out " + dir.string());
    REQUIRE(r.exit_code == 0);
    Json manifest = Json::parse(read_file(dir / "manifest.json"));
    REQUIRE(manifest.size() == 4);
    REQUIRE(manifest[0]["girth"].get<int>() == 3);
    Graph back = load_graph(read_file(dir / manifest[0]["file"].get<std::string>()));
    REQUIRE(back.edge_count() == 3);
}

TEST_CASE("cli usage errors exit with 2") {
    REQUIRE(run_cli("region").exit_code == 2);          // missing --delta
    REQUIRE(run_cli("no-such-command").exit_code == 2);
    fs::path c3 = write_graph("c3e.txt", cycle_graph(3));
    REQUIRE(run_cli("fptas --graph " + c3.string() + " --x 0.2 --radius 0.125").exit_code == 2);
    REQUIRE(run_cli("zeros --family cycles --n-max 5 --radius 1.5").exit_code == 2);
}

TEST_CASE("cap override environment variable") {
    fs::path c5 = write_graph("c5cap.txt", cycle_graph(5));
    fs::path out = scratch_dir() / "cap_stdout.txt";
    std::string cmd = std::string("ISING_LAB_CAP_OVERRIDE=3 ") + ISINGLAB_CLI_PATH +
                      " exact --graph " + c5.string() + " > " + out.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    REQUIRE(WEXITSTATUS(rc) == 2);  // 5 vertices exceeds the overridden cap
    REQUIRE(read_file(out).find("cap") != std::string::npos);
}
