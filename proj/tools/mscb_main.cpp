#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mscb/bench.hpp"
#include "mscb/dispatch.hpp"
#include "mscb/errors.hpp"
#include "mscb/generate.hpp"
#include "mscb/io.hpp"
#include "mscb/reductions.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw mscb::Error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw mscb::Error("cannot write " + path);
    out << content;
}

std::vector<int> parse_color_list(const std::string& text) {
    std::vector<int> colors;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) colors.push_back(std::stoi(item));
    return colors;
}

int run_solve(const std::string& file, const std::string& algo, bool json) {
    auto doc = mscb::parse(read_file(file));
    auto violations = mscb::validate_instance(doc.instance);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << "invalid: " << v << "\n";
        return 1;
    }
    mscb::SolveResult result = mscb::solve_with(doc.instance, algo);
    std::cout << (json ? mscb::result_json(result) : mscb::result_line(result)) << "\n";
    if (doc.instance.budget) {
        std::cout << "decision: " << (mscb::decide(doc.instance, result) ? "yes" : "no")
                  << " (budget " << *doc.instance.budget << ")\n";
    }
    return 0;
}

int run_verify(const std::string& file, const std::string& colors_text) {
    auto doc = mscb::parse(read_file(file));
    auto violations = mscb::validate_instance(doc.instance);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << "invalid: " << v << "\n";
        return 1;
    }
    mscb::Coloring colors = parse_color_list(colors_text);
    std::int64_t value = mscb::cost(doc.instance, colors);  // throws if improper
    std::cout << "cost=" << value << " colors=" << colors_text << "\n";
    return 0;
}

int run_reduce(const std::string& kind, const std::string& in, const std::string& out) {
    auto doc = mscb::parse(read_file(in));
    mscb::Instance target;
    if (kind == "is2match") {
        if (!doc.instance.budget) {
            throw mscb::Error("is2match reads the threshold k from the 'c' line");
        }
        target = mscb::reduce_is_to_matching(doc.instance.graph,
                                             static_cast<int>(*doc.instance.budget))
                     .first;
    } else if (kind == "match2path") {
        target = mscb::reduce_matching_to_path(doc.instance).first;
    } else if (kind == "lc2bip4") {
        target = mscb::reduce_listcol_to_bipartite4(mscb::to_list_coloring(doc)).first;
    } else if (kind == "lc2bip3w") {
        target = mscb::reduce_listcol_to_bipartite3_weighted(mscb::to_list_coloring(doc)).first;
    } else {
        throw mscb::Error("unknown reduction '" + kind + "'");
    }
    write_file(out, mscb::emit(target));
    std::cout << "wrote " << out << " n=" << target.graph.vertex_count
              << " bundles=" << target.bundles.size() << " budget=" << *target.budget << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solvers for minimum sum coloring with bundles"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "solve an instance file");
    std::string solve_file, algo = "auto";
    bool json = false;
    solve->add_option("file", solve_file, "instance in mscb format")->required();
    solve->add_option("--algo", algo, "auto|oracle|capvector|xp-tree|connected-tree|connected-path|bip2|bip3u")
        ->check(CLI::IsMember({"auto", "oracle", "capvector", "xp-tree", "connected-tree",
                               "connected-path", "bip2", "bip3u"}));
    solve->add_flag("--json", json, "structured output");

    auto* verify = app.add_subcommand("verify", "check a coloring against an instance");
    std::string verify_file, colors_text;
    verify->add_option("file", verify_file)->required();
    verify->add_option("--colors", colors_text, "comma-separated colors by vertex id")->required();

    auto* reduce = app.add_subcommand("reduce", "run a hardness construction");
    std::string reduce_kind, reduce_in, reduce_out;
    reduce->add_option("kind", reduce_kind, "is2match|match2path|lc2bip4|lc2bip3w")->required();
    reduce->add_option("in", reduce_in)->required();
    reduce->add_option("out", reduce_out)->required();

    auto* gen = app.add_subcommand("gen", "generate a random instance");
    mscb::GeneratorSpec spec;
    std::string gen_shape = "tree", gen_family = "partition", gen_out;
    std::int64_t gen_seed = 0;
    gen->add_option("--shape", gen_shape, "tree|path|bipartite|matching|general");
    gen->add_option("--family", gen_family,
                    "partition|connected-partition|independent-partition|overlapping");
    gen->add_option("--n", spec.n, "vertex count");
    gen->add_option("--ell", spec.bundle_count, "bundle count");
    gen->add_option("--min-width", spec.min_width, "min segment width (paths)");
    gen->add_option("--max-width", spec.max_width, "max segment width (paths)");
    gen->add_option("--wmin", spec.weight_min, "minimum weight");
    gen->add_option("--wmax", spec.weight_max, "maximum weight");
    gen->add_option("--edge-permille", spec.edge_permille, "edge probability in permille");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("out", gen_out)->required();

    auto* bench = app.add_subcommand("bench", "timing table over generated instances");
    std::vector<std::string> bench_specs;
    std::string bench_algo = "auto", bench_out;
    int bench_reps = 1;
    bench->add_option("--spec", bench_specs, "e.g. shape=path,family=overlapping,n=64,ell=8,seed=1")
        ->required();
    bench->add_option("--reps", bench_reps, "repetitions per spec");
    bench->add_option("--algo", bench_algo, "solver for all rows");
    bench->add_option("--out", bench_out, "CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*solve) return run_solve(solve_file, algo, json);
        if (*verify) return run_verify(verify_file, colors_text);
        if (*reduce) return run_reduce(reduce_kind, reduce_in, reduce_out);
        if (*gen) {
            spec.shape = mscb::shape_from_string(gen_shape);
            spec.family = mscb::family_from_string(gen_family);
            spec.seed = static_cast<std::uint64_t>(gen_seed);
            mscb::Instance instance = mscb::generate(spec);
            std::string body = "# " + mscb::to_string(spec) + "\n" + mscb::emit(instance);
            write_file(gen_out, body);
            std::cout << "wrote " << gen_out << " n=" << instance.graph.vertex_count
                      << " bundles=" << instance.bundles.size() << "\n";
            return 0;
        }
        if (*bench) {
            std::vector<mscb::BenchTask> tasks;
            for (const auto& text : bench_specs) {
                tasks.push_back({mscb::parse_generator_spec(text), bench_algo});
            }
            if (bench_out.empty()) {
                mscb::run_bench(tasks, bench_reps, std::cout);
            } else {
                std::ofstream out(bench_out);
                if (!out) throw mscb::Error("cannot write " + bench_out);
                mscb::run_bench(tasks, bench_reps, out);
            }
            return 0;
        }
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return 2;
}
