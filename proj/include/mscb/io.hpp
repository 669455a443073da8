#ifndef MSCB_IO_HPP
#define MSCB_IO_HPP

#include <string>

#include "mscb/core.hpp"
#include "mscb/reductions.hpp"

namespace mscb {

/// Parsed `mscb` document: the instance plus optional per-vertex color
/// lists (`l` lines) used by the list-coloring reductions.
struct InstanceDocument {
    Instance instance;
    std::optional<std::vector<std::vector<int>>> lists;
};

/// Parses the line-oriented `mscb` format:
///   mscb 1          magic + version
///   n <count>
///   e <u> <v>       one per edge
///   b <w> <v...>    one per bundle, in family order
///   c <budget>      optional
///   l <v> <colors>  optional list-coloring extension
/// '#' starts a comment. Content is preserved as written; emit() is the
/// canonicalizing direction.
InstanceDocument parse(const std::string& text);

/// Canonical text: edges sorted, bundle members sorted, bundles in
/// family order. parse(emit(x)) == x holds for canonical instances.
std::string emit(const Instance& instance);
std::string emit(const ListColoringInstance& lc);

/// Extracts a list-coloring source from a parsed document; vertices
/// without an `l` line default to the full list {1,2,3}.
ListColoringInstance to_list_coloring(const InstanceDocument& doc);

/// One-line summary and JSON forms of a result.
std::string result_line(const SolveResult& result);
std::string result_json(const SolveResult& result);

}  // namespace mscb

#endif
