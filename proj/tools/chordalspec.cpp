#include "chordal/bench.hpp"
#include "chordal/errors.hpp"
#include "chordal/generators.hpp"
#include "chordal/graph_io.hpp"
#include "chordal/report.hpp"
#include "chordal/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

int exit_usage(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return 1;
}

int cmd_analyze(const std::string& path, bool no_oracle, bool force_oracle, double tol,
                const std::string& json_path, bool classify_only) {
    chordal::Graph g = chordal::read_edge_list_file(path);
    chordal::AnalyzeOptions opt;
    opt.run_oracle = !no_oracle && !classify_only;
    opt.force_oracle = force_oracle;
    opt.tol = tol;
    auto report = chordal::analyze(g, opt);
    chordal::print_summary(std::cout, report);
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) return exit_usage("cannot write " + json_path);
        out << chordal::report_to_json(report).dump(2) << "\n";
    }
    return report.all_ok() ? 0 : 2;
}

int cmd_generate(const std::string& family, const std::vector<std::string>& params,
                 std::uint64_t seed, const std::string& out_path) {
    using namespace chordal;
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw FormatError(family + " expects " + std::to_string(k) + " parameter(s)");
    };
    auto num = [&](std::size_t i) { return std::stoi(params.at(i)); };
    Graph g;
    if (family == "windmill") {
        need(2);
        g = windmill(num(0), num(1));
    } else if (family == "split-complete") {
        need(2);
        g = split_complete(num(0), num(1));
    } else if (family == "core-satellite") {
        need(3);
        g = core_satellite(num(0), num(1), num(2));
    } else if (family == "threshold") {
        need(1);
        g = threshold_from_sequence(params[0]);
    } else if (family == "kt-split") {
        need(3);
        g = kt_split_graph(num(0), num(1), num(2));
    } else if (family == "random-chordal") {
        need(2);
        g = random_chordal(num(0), std::stod(params[1]), seed);
    } else if (family == "random-qt") {
        need(1);
        g = random_quasi_threshold(num(0), seed);
    } else {
        throw FormatError("unknown family '" + family +
                          "' (windmill, split-complete, core-satellite, threshold, kt-split, "
                          "random-chordal, random-qt)");
    }
    if (out_path.empty())
        chordal::write_edge_list(std::cout, g);
    else
        chordal::write_edge_list_file(out_path, g);
    return 0;
}

int cmd_verify(const std::vector<std::string>& families, int count, int max_n,
               std::uint64_t seed) {
    chordal::VerifyOptions opt;
    opt.families = families;
    opt.count = count;
    opt.max_n = max_n;
    opt.seed = seed;
    auto results = chordal::run_verify(opt);
    bool all_ok = true;
    for (const auto& r : results) {
        bool ok = r.fail == 0;
        all_ok = all_ok && ok;
        std::cout << (ok ? "[ok]   " : "[FAIL] ") << r.name << ": " << r.pass << " passed";
        if (r.fail > 0) std::cout << ", " << r.fail << " failed (" << r.note << ")";
        std::cout << "\n";
        if (!ok && r.failing) {
            std::string path = "verify-failure.el";
            chordal::write_edge_list_file(path, *r.failing);
            std::cout << "       failing instance written to " << path << "\n";
        }
    }
    return all_ok ? 0 : 2;
}

int cmd_bench(int max_n, int points, int oracle_max_n, std::uint64_t seed,
              const std::string& csv_path) {
    auto rows = chordal::run_bench(max_n, points, oracle_max_n, seed);
    chordal::write_bench_csv(std::cout, rows);
    if (!csv_path.empty()) {
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) return exit_usage("cannot write " + csv_path);
        chordal::write_bench_csv(out, rows);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"chordal graph structure and integer Laplacian eigenvalue toolkit"};
    app.require_subcommand(1);

    std::string path, json_path, out_path, csv_path, family;
    std::vector<std::string> params, families;
    bool no_oracle = false, force_oracle = false;
    double tol = 1e-6;
    std::uint64_t seed = 1;
    int count = 100, max_n = 120, bench_max_n = 20000, points = 10, oracle_max_n = 512;

    auto* analyze = app.add_subcommand("analyze", "full structural + spectral analysis of a graph file");
    analyze->add_option("file", path, "edge-list file")->required();
    analyze->add_flag("--no-oracle", no_oracle, "skip the dense eigensolver");
    analyze->add_flag("--force-oracle", force_oracle, "run the eigensolver even for n > 2000");
    analyze->add_option("--tol", tol, "integer-detection tolerance (default 1e-6)");
    analyze->add_option("--json", json_path, "write the JSON report to this path");

    auto* classify = app.add_subcommand("classify", "class membership report only (no eigensolve)");
    classify->add_option("file", path, "edge-list file")->required();
    classify->add_option("--json", json_path, "write the JSON report to this path");

    auto* generate = app.add_subcommand("generate", "write a generated family instance");
    generate->add_option("family", family, "windmill | split-complete | core-satellite | threshold | kt-split | random-chordal | random-qt")->required();
    generate->add_option("params", params, "family parameters");
    generate->add_option("--seed", seed, "seed for random families");
    generate->add_option("--out", out_path, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "randomized property suites over the generators");
    verify->add_option("--families", families, "subset of: qt chordal kt-split threshold")
        ->delimiter(',');
    verify->add_option("--count", count, "instances per family (default 100)");
    verify->add_option("--max-n", max_n, "maximum instance size (default 120)");
    verify->add_option("--seed", seed, "base seed (default 1)");

    auto* bench = app.add_subcommand("bench", "scaling of the structural pipeline vs the dense solver");
    bench->add_option("--max-n", bench_max_n, "largest instance (default 20000)");
    bench->add_option("--points", points, "number of sizes (default 10)");
    bench->add_option("--oracle-max-n", oracle_max_n, "largest instance for the dense solver (default 512)");
    bench->add_option("--seed", seed, "instance seed (default 1)");
    bench->add_option("--csv", csv_path, "also write the table to this path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed())
            return cmd_analyze(path, no_oracle, force_oracle, tol, json_path, false);
        if (classify->parsed()) return cmd_analyze(path, true, false, tol, json_path, true);
        if (generate->parsed()) return cmd_generate(family, params, seed, out_path);
        if (verify->parsed()) return cmd_verify(families, count, max_n, seed);
        if (bench->parsed()) return cmd_bench(bench_max_n, points, oracle_max_n, seed, csv_path);
    } catch (const chordal::Error& e) {
        return exit_usage(e.what());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
