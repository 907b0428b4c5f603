#pragma once

#include <string>
#include <vector>

#include "modsep/graph.hpp"

namespace modsep {

struct CorpusEntry {
    std::string name;
    Graph graph;
};

// Every connected labeled graph on 2..max_n vertices, by edge-mask
// enumeration. 27475 graphs at the default size.
std::vector<CorpusEntry> tiny_connected(int max_n = 6);

// Named fixture graphs, mixed sizes, some disconnected.
std::vector<CorpusEntry> fixtures();

// Two triangles joined by a single bridge edge; vertices 0..5, bridge 0-3.
Graph dumbbell();

// Two disjoint triangles.
Graph two_triangles();

// Three disjoint edges.
Graph three_disjoint_edges();

}  // namespace modsep
