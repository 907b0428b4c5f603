#include "modsep/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

namespace modsep {

GraphFormat format_from_string(const std::string& name) {
    if (name == "edge-list") return GraphFormat::edge_list;
    if (name == "metis") return GraphFormat::metis;
    throw std::invalid_argument("unknown graph format: " + name);
}

namespace {

std::string strip_comment(const std::string& line, char marker) {
    auto pos = line.find(marker);
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

long long parse_id(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer, got '" + tok + "'");
    }
}

Graph load_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::vector<Edge> edges;
    std::vector<int> edge_line;
    long long max_id = -1;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(strip_comment(line, '#'));
        std::string a, b, extra;
        if (!(ls >> a)) continue;  // blank or comment-only
        if (!(ls >> b)) throw ParseError(lineno, "expected 'u v' pair");
        if (ls >> extra) throw ParseError(lineno, "trailing token '" + extra + "'");
        long long u = parse_id(a, lineno), v = parse_id(b, lineno);
        if (u < 0 || v < 0) throw ParseError(lineno, "negative vertex id");
        if (u > (1 << 30) || v > (1 << 30))
            throw ParseError(lineno, "vertex id too large");
        if (u == v)
            throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        edge_line.push_back(lineno);
        max_id = std::max({max_id, u, v});
    }
    // duplicate detection with line attribution
    std::map<Edge, int> first_seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        Edge key{std::min(edges[i].first, edges[i].second),
                 std::max(edges[i].first, edges[i].second)};
        auto [it, inserted] = first_seen.emplace(key, edge_line[i]);
        if (!inserted)
            throw ParseError(edge_line[i],
                             "duplicate edge (" + std::to_string(key.first) +
                                 ", " + std::to_string(key.second) +
                                 "), first seen at line " +
                                 std::to_string(it->second));
    }
    return Graph::from_edges(static_cast<int>(max_id + 1), edges);
}

Graph load_metis(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(strip_comment(line, '%'));
        std::string a, b, extra;
        if (!(ls >> a)) continue;
        if (!(ls >> b)) throw ParseError(lineno, "header must be 'n m'");
        if (ls >> extra) throw ParseError(lineno, "trailing token in header");
        n = parse_id(a, lineno);
        m = parse_id(b, lineno);
        if (n < 0 || m < 0) throw ParseError(lineno, "negative header value");
        break;
    }
    if (n < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing header");

    auto is_comment = [](const std::string& s) {
        auto pos = s.find_first_not_of(" \t\r\n");
        return pos != std::string::npos && s[pos] == '%';
    };

    std::vector<std::vector<int>> nbrs(n);
    long long vertex = 0;
    while (vertex < n && std::getline(in, line)) {
        ++lineno;
        if (is_comment(line)) continue;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            long long w = parse_id(tok, lineno);
            if (w < 1 || w > n)
                throw ParseError(lineno, "neighbor id " + std::to_string(w) +
                                             " outside [1, " +
                                             std::to_string(n) + "]");
            if (w - 1 == vertex)
                throw ParseError(lineno,
                                 "self-loop at vertex " + std::to_string(vertex));
            nbrs[vertex].push_back(static_cast<int>(w - 1));
        }
        ++vertex;
    }
    // missing trailing lines mean isolated vertices
    std::string rest;
    while (std::getline(in, rest)) {
        ++lineno;
        if (!is_comment(rest) && !blank(rest))
            throw ParseError(lineno, "data after last vertex line");
    }

    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        std::vector<int> sorted = nbrs[u];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw ParseError(0, "duplicate neighbor in adjacency of vertex " +
                                    std::to_string(u));
        for (int v : sorted) {
            if (u < v) edges.emplace_back(u, v);
        }
    }
    // symmetry: every recorded arc must have its reverse
    for (int u = 0; u < n; ++u)
        for (int v : nbrs[u])
            if (std::find(nbrs[v].begin(), nbrs[v].end(), u) == nbrs[v].end())
                throw ParseError(0, "asymmetric adjacency: " + std::to_string(u) +
                                        " lists " + std::to_string(v) +
                                        " but not vice versa");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(0, "header declares m=" + std::to_string(m) +
                                " but adjacency encodes " +
                                std::to_string(edges.size()) + " edges");
    return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace

Graph load_graph(std::istream& in, GraphFormat format) {
    return format == GraphFormat::edge_list ? load_edge_list(in)
                                            : load_metis(in);
}

void save_graph(const Graph& g, std::ostream& out, GraphFormat format) {
    if (format == GraphFormat::edge_list) {
        g.for_each_edge([&](int u, int v) { out << u << ' ' << v << '\n'; });
        return;
    }
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool first = true;
        for (int u : g.neighbors(v)) {
            if (!first) out << ' ';
            out << u + 1;
            first = false;
        }
        out << '\n';
    }
}

Graph load_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_graph(in, format);
}

void save_graph_file(const Graph& g, const std::string& path,
                     GraphFormat format) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    save_graph(g, out, format);
}

std::string save_graph_string(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    save_graph(g, out, format);
    return out.str();
}

}  // namespace modsep
