#include "mscb/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "mscb/errors.hpp"

namespace mscb {

namespace {

constexpr std::int64_t kMaxWeight = 1000000000;

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;
    int column = 1;
};

// Splits a line into whitespace-separated tokens, dropping '#' comments.
std::vector<std::pair<std::string, int>> tokenize_line(const std::string& line, int line_no) {
    (void)line_no;
    std::vector<std::pair<std::string, int>> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
               line[i] != '#') {
            ++i;
        }
        tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return tokens;
}

std::int64_t parse_int(const std::pair<std::string, int>& token, int line_no,
                       const std::string& what) {
    std::int64_t value = 0;
    const auto& s = token.first;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError("expected integer for " + what + ", got '" + s + "'", line_no,
                         token.second);
    }
    return value;
}

}  // namespace

InstanceDocument parse(const std::string& text) {
    InstanceDocument doc;
    Instance& instance = doc.instance;
    bool saw_magic = false;
    bool saw_n = false;
    std::vector<std::vector<int>> lists;

    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        auto tokens = tokenize_line(line, line_no);
        if (tokens.empty()) continue;
        const auto& [directive, column] = tokens[0];

        if (!saw_magic) {
            if (directive != "mscb" || tokens.size() != 2 || tokens[1].first != "1") {
                throw ParseError("expected header 'mscb 1'", line_no, column);
            }
            saw_magic = true;
            continue;
        }

        if (directive == "n") {
            if (tokens.size() != 2) throw ParseError("'n' takes one argument", line_no, column);
            std::int64_t n = parse_int(tokens[1], line_no, "vertex count");
            if (n < 0 || n > 1000000) throw ParseError("vertex count out of range", line_no, column);
            instance.graph.vertex_count = static_cast<int>(n);
            saw_n = true;
        } else if (directive == "e") {
            if (!saw_n) throw ParseError("'e' before 'n'", line_no, column);
            if (tokens.size() != 3) throw ParseError("'e' takes two arguments", line_no, column);
            std::int64_t u = parse_int(tokens[1], line_no, "edge endpoint");
            std::int64_t v = parse_int(tokens[2], line_no, "edge endpoint");
            if (u < 0 || u >= instance.graph.vertex_count || v < 0 ||
                v >= instance.graph.vertex_count) {
                throw ParseError("vertex out of range", line_no, column);
            }
            instance.graph.edges.push_back({static_cast<int>(u), static_cast<int>(v)});
        } else if (directive == "b") {
            if (!saw_n) throw ParseError("'b' before 'n'", line_no, column);
            if (tokens.size() < 2) throw ParseError("'b' needs a weight", line_no, column);
            Bundle bundle;
            bundle.weight = parse_int(tokens[1], line_no, "bundle weight");
            if (bundle.weight < 1) throw ParseError("non-positive weight", line_no, tokens[1].second);
            if (bundle.weight > kMaxWeight) throw ParseError("weight too large", line_no, tokens[1].second);
            if (tokens.size() == 2) throw ParseError("empty bundle", line_no, column);
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                std::int64_t v = parse_int(tokens[i], line_no, "bundle member");
                if (v < 0 || v >= instance.graph.vertex_count) {
                    throw ParseError("vertex out of range", line_no, tokens[i].second);
                }
                bundle.members.push_back(static_cast<int>(v));
            }
            instance.bundles.push_back(std::move(bundle));
        } else if (directive == "c") {
            if (tokens.size() != 2) throw ParseError("'c' takes one argument", line_no, column);
            std::int64_t budget = parse_int(tokens[1], line_no, "budget");
            if (budget < 1) throw ParseError("non-positive budget", line_no, tokens[1].second);
            instance.budget = budget;
        } else if (directive == "l") {
            if (!saw_n) throw ParseError("'l' before 'n'", line_no, column);
            if (tokens.size() < 3) throw ParseError("'l' needs a vertex and colors", line_no, column);
            std::int64_t v = parse_int(tokens[1], line_no, "vertex");
            if (v < 0 || v >= instance.graph.vertex_count) {
                throw ParseError("vertex out of range", line_no, tokens[1].second);
            }
            if (lists.empty()) lists.assign(instance.graph.vertex_count, {});
            for (std::size_t i = 2; i < tokens.size(); ++i) {
                std::int64_t c = parse_int(tokens[i], line_no, "color");
                if (c < 1 || c > 3) throw ParseError("list color out of {1,2,3}", line_no, tokens[i].second);
                lists[v].push_back(static_cast<int>(c));
            }
        } else {
            throw ParseError("unknown directive '" + directive + "'", line_no, column);
        }
    }
    if (!saw_magic) throw ParseError("missing header 'mscb 1'", std::max(line_no, 1), 1);
    if (!saw_n) throw ParseError("missing 'n' line", std::max(line_no, 1), 1);
    if (!lists.empty()) doc.lists = std::move(lists);
    return doc;
}

std::string emit(const Instance& instance) {
    std::ostringstream out;
    out << "mscb 1\n";
    out << "n " << instance.graph.vertex_count << "\n";
    auto edges = instance.graph.edges;
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [u, v] : edges) out << "e " << u << " " << v << "\n";
    for (const Bundle& b : instance.bundles) {
        out << "b " << b.weight;
        auto members = b.members;
        std::sort(members.begin(), members.end());
        for (int v : members) out << " " << v;
        out << "\n";
    }
    if (instance.budget) out << "c " << *instance.budget << "\n";
    return out.str();
}

std::string emit(const ListColoringInstance& lc) {
    std::ostringstream out;
    out << "mscb 1\n";
    out << "n " << lc.graph.vertex_count << "\n";
    auto edges = lc.graph.edges;
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [u, v] : edges) out << "e " << u << " " << v << "\n";
    for (int v = 0; v < lc.graph.vertex_count; ++v) {
        auto list = lc.lists[v];
        std::sort(list.begin(), list.end());
        out << "l " << v;
        for (int c : list) out << " " << c;
        out << "\n";
    }
    return out.str();
}

ListColoringInstance to_list_coloring(const InstanceDocument& doc) {
    ListColoringInstance lc;
    lc.graph = doc.instance.graph;
    if (doc.lists) {
        lc.lists = *doc.lists;
        for (auto& list : lc.lists) {
            if (list.empty()) list = {1, 2, 3};
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
    } else {
        lc.lists.assign(lc.graph.vertex_count, {1, 2, 3});
    }
    return lc;
}

std::string result_line(const SolveResult& result) {
    std::ostringstream out;
    out << "cost=" << result.cost << " solver=" << result.solver << " colors=";
    for (std::size_t i = 0; i < result.coloring.size(); ++i) {
        if (i) out << ",";
        out << result.coloring[i];
    }
    return out.str();
}

std::string result_json(const SolveResult& result) {
    nlohmann::json doc;
    doc["cost"] = result.cost;
    doc["coloring"] = result.coloring;
    doc["bundle_maxes"] = result.bundle_maxes;
    doc["solver"] = result.solver;
    doc["optimal"] = result.optimal;
    doc["stats"] = {{"search_nodes", result.stats.search_nodes},
                    {"dp_cells", result.stats.dp_cells},
                    {"elapsed_ms", result.stats.elapsed_ms}};
    return doc.dump(2);
}

}  // namespace mscb
