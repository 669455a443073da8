#ifndef MSCB_BENCH_HPP
#define MSCB_BENCH_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "mscb/generate.hpp"

namespace mscb {

struct BenchTask {
    GeneratorSpec spec;
    std::string algo = "auto";
};

/// Solves `repetitions` instances per task (seed, seed+1, ...) and
/// writes one CSV row each. Solver failures land in the error column
/// and the run continues. Row order is task order.
void run_bench(const std::vector<BenchTask>& tasks, int repetitions, std::ostream& out);

}  // namespace mscb

#endif
