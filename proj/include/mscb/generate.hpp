#ifndef MSCB_GENERATE_HPP
#define MSCB_GENERATE_HPP

#include <cstdint>
#include <string>

#include "mscb/core.hpp"

namespace mscb {

enum class Shape { tree, path, bipartite, matching, general };
enum class FamilyClass { partition, connected_partition, independent_partition, overlapping };

/// Seed-deterministic instance recipe. Interval widths apply to
/// overlapping families on paths; edge_permille to bipartite/general
/// shapes; weights are uniform in [weight_min, weight_max].
struct GeneratorSpec {
    Shape shape = Shape::tree;
    FamilyClass family = FamilyClass::partition;
    int n = 8;
    int bundle_count = 3;
    int min_width = 1;
    int max_width = 0;  // 0 = n/2
    std::int64_t weight_min = 1;
    std::int64_t weight_max = 1;
    int edge_permille = 400;
    std::uint64_t seed = 0;
};

/// Deterministic generation; the same spec always yields the same
/// instance. Throws Error on incoherent specs (e.g. a connected
/// partition on a disconnected shape).
Instance generate(const GeneratorSpec& spec);

std::string to_string(Shape shape);
std::string to_string(FamilyClass family);
Shape shape_from_string(const std::string& name);
FamilyClass family_from_string(const std::string& name);

/// Compact "key=value,key=value" form used by the bench runner.
GeneratorSpec parse_generator_spec(const std::string& text);
std::string to_string(const GeneratorSpec& spec);

}  // namespace mscb

#endif
