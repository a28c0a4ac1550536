#ifndef SPECBOUND_EDGE_IO_HPP
#define SPECBOUND_EDGE_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "specbound/graph.hpp"

namespace specbound {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge-list text format: first line "n m", then m lines "u v" with
// 0 <= u < v < n. Duplicate edges are rejected.
inline void write_edge_list(std::ostream& os, const Graph& g) {
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline Graph read_edge_list(std::istream& is, const std::string& where = "<stream>") {
    auto fail = [&](int line, const std::string& msg) -> void {
        throw ParseError(where + ":" + std::to_string(line) + ": " + msg);
    };
    std::string line;
    int lineno = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(is, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };

    if (!next_line()) fail(1, "missing header line \"n m\"");
    long long n = 0, m = 0;
    {
        std::istringstream ss(line);
        std::string extra;
        if (!(ss >> n >> m) || (ss >> extra))
            fail(lineno, "header must be exactly \"n m\"");
        if (n < 0 || m < 0) fail(lineno, "negative counts in header");
    }
    Graph g(static_cast<int>(n));
    for (long long e = 0; e < m; ++e) {
        if (!next_line()) fail(lineno + 1, "expected " + std::to_string(m) +
                                               " edges, got " + std::to_string(e));
        std::istringstream ss(line);
        long long u = 0, v = 0;
        std::string extra;
        if (!(ss >> u >> v) || (ss >> extra)) fail(lineno, "edge line must be \"u v\"");
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(lineno, "endpoint out of range [0," + std::to_string(n) + ")");
        if (u >= v) fail(lineno, "edges must satisfy u < v");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            fail(lineno, "duplicate edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (next_line()) fail(lineno, "trailing content after last edge");
    return g;
}

inline void save_edge_list(const std::string& path, const Graph& g) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    write_edge_list(f, g);
    if (!f) throw std::runtime_error("write failed: " + path);
}

inline Graph load_edge_list(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    return read_edge_list(f, path);
}

}  // namespace specbound

#endif
