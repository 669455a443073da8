#include "mscb/bench.hpp"

#include <chrono>
#include <exception>
#include <ostream>

#include "mscb/dispatch.hpp"

namespace mscb {

void run_bench(const std::vector<BenchTask>& tasks, int repetitions, std::ostream& out) {
    out << "spec,algo,seed,rep,solver,n,ell,cost,elapsed_ms,error\n";
    for (const BenchTask& task : tasks) {
        for (int rep = 0; rep < repetitions; ++rep) {
            GeneratorSpec spec = task.spec;
            spec.seed = task.spec.seed + static_cast<std::uint64_t>(rep);
            out << to_string(task.spec) << "," << task.algo << "," << spec.seed << "," << rep
                << ",";
            try {
                Instance instance = generate(spec);
                auto started = std::chrono::steady_clock::now();
                SolveResult result = solve_with(instance, task.algo);
                double elapsed = std::chrono::duration<double, std::milli>(
                                     std::chrono::steady_clock::now() - started)
                                     .count();
                out << result.solver << "," << instance.graph.vertex_count << ","
                    << instance.bundles.size() << "," << result.cost << "," << elapsed << ",\n";
            } catch (const std::exception& error) {
                out << ",,,,," << "\"" << error.what() << "\"\n";
            }
        }
    }
}

}  // namespace mscb
