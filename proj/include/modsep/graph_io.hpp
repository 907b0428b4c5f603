#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "modsep/graph.hpp"

namespace modsep {

enum class GraphFormat { edge_list, metis };

GraphFormat format_from_string(const std::string& name);

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Parses a graph.  Edge-list: one "u v" pair per line, 0-based ids,
/// '#' starts a comment, n = max id + 1.  METIS-like: header "n m",
/// then line i holds the 1-based neighbors of vertex i ('%' comments).
/// Self-loops and duplicate edges are rejected with the offending line,
/// never silently repaired.
Graph load_graph(std::istream& in, GraphFormat format);

/// Canonical serialization; load_graph(save_graph(g)) is structurally
/// identical to g (edge-list output cannot represent isolated vertices).
void save_graph(const Graph& g, std::ostream& out, GraphFormat format);

Graph load_graph_file(const std::string& path, GraphFormat format);
void save_graph_file(const Graph& g, const std::string& path, GraphFormat format);
std::string save_graph_string(const Graph& g, GraphFormat format);

}  // namespace modsep
