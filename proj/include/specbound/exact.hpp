#ifndef SPECBOUND_EXACT_HPP
#define SPECBOUND_EXACT_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "specbound/graph.hpp"

namespace specbound {

inline constexpr int kDefaultExactLimit = 64;

namespace detail {

class MisSolver {
public:
    explicit MisSolver(const Graph& g) : n_(g.vertex_count()), adj_(static_cast<std::size_t>(n_), 0) {
        for (int u = 0; u < n_; ++u)
            for (int v : g.neighbors(u)) adj_[static_cast<std::size_t>(u)] |= bit(v);
    }

    int solve() {
        best_ = 0;
        std::uint64_t all = n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
        expand(all, 0);
        return best_;
    }

private:
    int n_;
    std::vector<std::uint64_t> adj_;
    int best_ = 0;

    static std::uint64_t bit(int v) { return 1ULL << v; }

    // Greedy clique cover of the candidates; its size bounds alpha from above.
    int cover_bound(std::uint64_t p) const {
        std::vector<std::uint64_t> blocks;
        for (std::uint64_t rest = p; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            bool placed = false;
            for (auto& blk : blocks)
                if ((blk & ~adj_[static_cast<std::size_t>(v)]) == 0) {
                    blk |= bit(v);
                    placed = true;
                    break;
                }
            if (!placed) blocks.push_back(bit(v));
        }
        return static_cast<int>(blocks.size());
    }

    void expand(std::uint64_t p, int cur) {
        // Degree <= 1 vertices are always in some maximum independent set.
        for (bool changed = true; changed && p;) {
            changed = false;
            for (std::uint64_t rest = p; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                std::uint64_t nb = adj_[static_cast<std::size_t>(v)] & p;
                if (std::popcount(nb) <= 1) {
                    p &= ~(nb | bit(v));
                    ++cur;
                    changed = true;
                    break;
                }
            }
        }
        if (p == 0) {
            best_ = std::max(best_, cur);
            return;
        }
        if (cur + cover_bound(p) <= best_) return;

        int pick = -1, pick_deg = -1;
        for (std::uint64_t rest = p; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            int d = std::popcount(adj_[static_cast<std::size_t>(v)] & p);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        expand(p & ~(adj_[static_cast<std::size_t>(pick)] | bit(pick)), cur + 1);
        expand(p & ~bit(pick), cur);
    }
};

}  // namespace detail

// Exact independence number by branch and bound (branch on the highest-degree
// candidate, prune with a greedy clique cover). Capped to keep runtimes sane.
inline int independence_number(const Graph& g, int exact_limit = kDefaultExactLimit) {
    if (g.vertex_count() > exact_limit || g.vertex_count() > 64)
        throw std::invalid_argument(
            "independence_number: n = " + std::to_string(g.vertex_count()) +
            " exceeds exact solver limit " + std::to_string(std::min(exact_limit, 64)));
    if (g.vertex_count() == 0) return 0;
    return detail::MisSolver(g).solve();
}

// Partition of the vertex set into cliques.
struct CliqueCover {
    std::vector<std::vector<int>> blocks;

    int size() const { return static_cast<int>(blocks.size()); }

    bool valid_for(const Graph& g) const {
        std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
        int covered = 0;
        for (const auto& blk : blocks) {
            if (blk.empty()) return false;
            for (std::size_t i = 0; i < blk.size(); ++i) {
                int u = blk[i];
                if (u < 0 || u >= g.vertex_count() || seen[static_cast<std::size_t>(u)]) return false;
                seen[static_cast<std::size_t>(u)] = 1;
                ++covered;
                for (std::size_t j = i + 1; j < blk.size(); ++j)
                    if (!g.has_edge(u, blk[j])) return false;
            }
        }
        return covered == g.vertex_count();
    }
};

// Grows maximal cliques among the uncovered vertices, highest uncovered-degree
// seed first (ties to the lowest label).
inline CliqueCover greedy_clique_cover(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    CliqueCover cover;
    int remaining = n;
    while (remaining > 0) {
        std::vector<int> deg(static_cast<std::size_t>(n), -1);
        for (int v = 0; v < n; ++v) {
            if (covered[static_cast<std::size_t>(v)]) continue;
            int d = 0;
            for (int w : g.neighbors(v))
                if (!covered[static_cast<std::size_t>(w)]) ++d;
            deg[static_cast<std::size_t>(v)] = d;
        }
        std::vector<int> order;
        for (int v = 0; v < n; ++v)
            if (!covered[static_cast<std::size_t>(v)]) order.push_back(v);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (deg[static_cast<std::size_t>(a)] != deg[static_cast<std::size_t>(b)])
                return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
            return a < b;
        });

        std::vector<int> block{order[0]};
        for (std::size_t i = 1; i < order.size(); ++i) {
            int v = order[i];
            bool ok = true;
            for (int u : block)
                if (!g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) block.push_back(v);
        }
        std::sort(block.begin(), block.end());
        for (int v : block) covered[static_cast<std::size_t>(v)] = 1;
        remaining -= static_cast<int>(block.size());
        cover.blocks.push_back(std::move(block));
    }
    return cover;
}

struct ExtractResult {
    Graph subgraph;
    std::vector<int> kept_vertices;  // original labels, ascending
    double retained_fraction = 0.0;
};

// Induced girth >= 5 subgraph of a C4-free graph: repeatedly locate the
// lexicographically least triangle and delete its max-degree vertex (ties to
// the lowest label). Retention is measured, not guaranteed.
inline ExtractResult extract_girth5(const Graph& g) {
    if (!is_c4_free(g))
        throw std::invalid_argument("extract_girth5: input contains a 4-cycle");
    const int n = g.vertex_count();
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);

    auto find_alive_triangle = [&]() -> std::optional<std::array<int, 3>> {
        for (int i = 0; i < n; ++i) {
            if (!alive[static_cast<std::size_t>(i)]) continue;
            for (int j : g.neighbors(i)) {
                if (j <= i || !alive[static_cast<std::size_t>(j)]) continue;
                for (int k : g.neighbors(i)) {
                    if (k <= j || !alive[static_cast<std::size_t>(k)]) continue;
                    if (g.has_edge(j, k)) return std::array<int, 3>{i, j, k};
                }
            }
        }
        return std::nullopt;
    };

    while (auto tri = find_alive_triangle()) {
        int victim = -1, vdeg = -1;
        for (int v : *tri)
            if (deg[static_cast<std::size_t>(v)] > vdeg) {
                vdeg = deg[static_cast<std::size_t>(v)];
                victim = v;
            }
        alive[static_cast<std::size_t>(victim)] = 0;
        for (int w : g.neighbors(victim))
            if (alive[static_cast<std::size_t>(w)]) --deg[static_cast<std::size_t>(w)];
    }

    ExtractResult res;
    for (int v = 0; v < n; ++v)
        if (alive[static_cast<std::size_t>(v)]) res.kept_vertices.push_back(v);
    res.subgraph = g.induced_subgraph(res.kept_vertices);
    res.retained_fraction = n == 0 ? 1.0 : static_cast<double>(res.kept_vertices.size()) / n;
    return res;
}

}  // namespace specbound

#endif
