#ifndef SPECBOUND_GRAPH_HPP
#define SPECBOUND_GRAPH_HPP

#include <algorithm>
#include <array>
#include <climits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace specbound {

// Undirected simple graph on vertices 0..n-1. Neighbor lists are kept
// sorted, so iteration order is deterministic everywhere.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), nbr_(static_cast<std::size_t>(std::max(n, 0))) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        const auto& a = nbr_[static_cast<std::size_t>(u)];
        return std::binary_search(a.begin(), a.end(), v);
    }

    // Idempotent; rejects loops and out-of-range endpoints.
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph::add_edge: self-loop");
        if (has_edge(u, v)) return;
        insert_sorted(nbr_[static_cast<std::size_t>(u)], v);
        insert_sorted(nbr_[static_cast<std::size_t>(v)], u);
        ++m_;
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return nbr_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : nbr_[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    // Subgraph induced on `keep` (duplicates removed); vertex i of the result
    // corresponds to the i-th smallest retained label.
    Graph induced_subgraph(std::vector<int> keep) const {
        std::sort(keep.begin(), keep.end());
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
        std::vector<int> local(static_cast<std::size_t>(n_), -1);
        for (std::size_t i = 0; i < keep.size(); ++i) {
            check_vertex(keep[i]);
            local[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
        }
        Graph sub(static_cast<int>(keep.size()));
        for (int u : keep)
            for (int v : neighbors(u))
                if (u < v && local[static_cast<std::size_t>(v)] >= 0)
                    sub.add_edge(local[static_cast<std::size_t>(u)],
                                 local[static_cast<std::size_t>(v)]);
        return sub;
    }

    std::vector<std::vector<int>> connected_components() const {
        std::vector<std::vector<int>> comps;
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        for (int s = 0; s < n_; ++s) {
            if (seen[static_cast<std::size_t>(s)]) continue;
            std::vector<int> comp;
            std::queue<int> q;
            q.push(s);
            seen[static_cast<std::size_t>(s)] = 1;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                comp.push_back(u);
                for (int v : neighbors(u))
                    if (!seen[static_cast<std::size_t>(v)]) {
                        seen[static_cast<std::size_t>(v)] = 1;
                        q.push(v);
                    }
            }
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
        return comps;
    }

    bool is_regular() const {
        for (int v = 1; v < n_; ++v)
            if (degree(v) != degree(0)) return false;
        return true;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> nbr_;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("Graph: vertex " + std::to_string(v) +
                                        " out of range [0," + std::to_string(n_) + ")");
    }

    static void insert_sorted(std::vector<int>& a, int v) {
        a.insert(std::lower_bound(a.begin(), a.end(), v), v);
    }
};

// Length of the shortest cycle; std::nullopt for forests.
// BFS from every vertex; the minimum over all roots is exact.
inline std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = INT_MAX;
    std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[static_cast<std::size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    q.push(w);
                } else if (w != parent[static_cast<std::size_t>(u)]) {
                    best = std::min(best, dist[static_cast<std::size_t>(u)] +
                                              dist[static_cast<std::size_t>(w)] + 1);
                }
            }
        }
    }
    if (best == INT_MAX) return std::nullopt;
    return best;
}

// First 4-cycle found, in cycle order (a, v, b, w), or nullopt.
// Two distinct common neighbors of a pair {a,b} close a C4.
inline std::optional<std::array<int, 4>> find_c4(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> mid(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int a = nb[i], b = nb[j];
                std::size_t key = static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                                  static_cast<std::size_t>(b);
                if (mid[key] >= 0 && mid[key] != v)
                    return std::array<int, 4>{a, mid[key], b, v};
                mid[key] = v;
            }
    }
    return std::nullopt;
}

inline bool is_c4_free(const Graph& g) { return !find_c4(g).has_value(); }

// Lexicographically least triangle (i < j < k), or nullopt.
inline std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j : g.neighbors(i)) {
            if (j <= i) continue;
            for (int k : g.neighbors(i)) {
                if (k <= j) continue;
                if (g.has_edge(j, k)) return std::array<int, 3>{i, j, k};
            }
        }
    return std::nullopt;
}

inline Graph disjoint_union(const std::vector<Graph>& parts) {
    int n = 0;
    for (const auto& p : parts) n += p.vertex_count();
    Graph g(n);
    int off = 0;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges()) g.add_edge(off + u, off + v);
        off += p.vertex_count();
    }
    return g;
}

}  // namespace specbound

#endif
