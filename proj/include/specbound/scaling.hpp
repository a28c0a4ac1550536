#ifndef SPECBOUND_SCALING_HPP
#define SPECBOUND_SCALING_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "specbound/weighting.hpp"

namespace specbound {

// Symmetric entrywise-nonnegative matrix with zero diagonal; the input
// side of the scaling pipeline.
class SupportMatrix {
public:
    explicit SupportMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) throw std::invalid_argument("SupportMatrix: not square");
        for (int i = 0; i < m_.rows(); ++i) {
            if (m_(i, i) != 0.0)
                throw std::invalid_argument("SupportMatrix: nonzero diagonal at " +
                                            std::to_string(i));
            for (int j = 0; j < m_.cols(); ++j) {
                if (!(m_(i, j) >= 0.0))
                    throw std::invalid_argument("SupportMatrix: negative or NaN entry at (" +
                                                std::to_string(i) + "," + std::to_string(j) + ")");
                if (m_(i, j) != m_(j, i))
                    throw std::invalid_argument("SupportMatrix: not symmetric at (" +
                                                std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }

    static SupportMatrix from_weighting(const HermitianWeighting& w) {
        const int n = w.n();
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                double q = std::norm(w.entry(i, j));
                m(i, j) = q;
                m(j, i) = q;
            }
        return SupportMatrix(std::move(m));
    }

    int n() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXd& matrix() const { return m_; }
    double operator()(int i, int j) const { return m_(i, j); }

private:
    Eigen::MatrixXd m_;
};

// Row set S and column set T with M[S,T] all zero and |S| + |T| >= n.
// Witnesses that M cannot be scaled to unit row sums.
struct Violator {
    std::vector<int> s;
    std::vector<int> t;
};

namespace detail {

// Kuhn's augmenting-path matching on the support bipartite graph
// (rows vs columns). skip_row/skip_col of -1 mean "use everything".
struct MatchingState {
    std::vector<int> mate_row;  // row -> column or -1
    std::vector<int> mate_col;  // column -> row or -1
};

inline bool kuhn_augment(int r, const std::vector<std::vector<int>>& adj, int skip_col,
                         std::vector<char>& used, MatchingState& ms) {
    for (int c : adj[static_cast<std::size_t>(r)]) {
        if (c == skip_col || used[static_cast<std::size_t>(c)]) continue;
        used[static_cast<std::size_t>(c)] = 1;
        int r2 = ms.mate_col[static_cast<std::size_t>(c)];
        if (r2 == -1 || kuhn_augment(r2, adj, skip_col, used, ms)) {
            ms.mate_row[static_cast<std::size_t>(r)] = c;
            ms.mate_col[static_cast<std::size_t>(c)] = r;
            return true;
        }
    }
    return false;
}

inline MatchingState max_matching(int n, const std::vector<std::vector<int>>& adj, int skip_row,
                                  int skip_col) {
    MatchingState ms;
    ms.mate_row.assign(static_cast<std::size_t>(n), -1);
    ms.mate_col.assign(static_cast<std::size_t>(n), -1);
    for (int r = 0; r < n; ++r) {
        if (r == skip_row) continue;
        std::vector<char> used(static_cast<std::size_t>(n), 0);
        kuhn_augment(r, adj, skip_col, used, ms);
    }
    return ms;
}

// Alternating reachability from unmatched rows. Returns (visited rows,
// visited columns); visited rows with all their neighbors visited form
// the deficient side of Hall's condition.
inline std::pair<std::vector<char>, std::vector<char>> alternating_reach(
    int n, const std::vector<std::vector<int>>& adj, const MatchingState& ms, int skip_row,
    int skip_col) {
    std::vector<char> vis_row(static_cast<std::size_t>(n), 0);
    std::vector<char> vis_col(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    for (int r = 0; r < n; ++r)
        if (r != skip_row && ms.mate_row[static_cast<std::size_t>(r)] == -1) {
            vis_row[static_cast<std::size_t>(r)] = 1;
            stack.push_back(r);
        }
    while (!stack.empty()) {
        int r = stack.back();
        stack.pop_back();
        for (int c : adj[static_cast<std::size_t>(r)]) {
            if (c == skip_col || vis_col[static_cast<std::size_t>(c)]) continue;
            vis_col[static_cast<std::size_t>(c)] = 1;
            int r2 = ms.mate_col[static_cast<std::size_t>(c)];
            if (r2 == -1)
                throw std::logic_error("alternating_reach: augmenting path past maximum matching");
            if (!vis_row[static_cast<std::size_t>(r2)]) {
                vis_row[static_cast<std::size_t>(r2)] = 1;
                stack.push_back(r2);
            }
        }
    }
    return {std::move(vis_row), std::move(vis_col)};
}

// Iterative Tarjan SCC over a digraph given as adjacency lists.
inline std::vector<int> strongly_connected_components(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0), num(static_cast<std::size_t>(n), -1);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<int> scc_stack;
    int counter = 0, ncomp = 0;

    struct Frame {
        int v;
        std::size_t next_edge;
    };
    std::vector<Frame> frames;

    for (int root = 0; root < n; ++root) {
        if (num[static_cast<std::size_t>(root)] != -1) continue;
        frames.push_back({root, 0});
        while (!frames.empty()) {
            auto& f = frames.back();
            int v = f.v;
            if (f.next_edge == 0) {
                num[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = counter++;
                scc_stack.push_back(v);
                on_stack[static_cast<std::size_t>(v)] = 1;
            }
            bool descended = false;
            while (f.next_edge < adj[static_cast<std::size_t>(v)].size()) {
                int w = adj[static_cast<std::size_t>(v)][f.next_edge++];
                if (num[static_cast<std::size_t>(w)] == -1) {
                    frames.push_back({w, 0});
                    descended = true;
                    break;
                }
                if (on_stack[static_cast<std::size_t>(w)])
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)], num[static_cast<std::size_t>(w)]);
            }
            if (descended) continue;
            if (low[static_cast<std::size_t>(v)] == num[static_cast<std::size_t>(v)]) {
                while (true) {
                    int w = scc_stack.back();
                    scc_stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    comp[static_cast<std::size_t>(w)] = ncomp;
                    if (w == v) break;
                }
                ++ncomp;
            }
            frames.pop_back();
            if (!frames.empty()) {
                int parent = frames.back().v;
                low[static_cast<std::size_t>(parent)] = std::min(
                    low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
            }
        }
    }
    return comp;
}

inline Violator koenig_violator(int n, const std::vector<std::vector<int>>& adj,
                                const MatchingState& ms, int skip_row, int skip_col) {
    auto [vis_row, vis_col] = alternating_reach(n, adj, ms, skip_row, skip_col);
    Violator v;
    for (int r = 0; r < n; ++r)
        if (r != skip_row && vis_row[static_cast<std::size_t>(r)]) v.s.push_back(r);
    for (int c = 0; c < n; ++c)
        if (c != skip_col && !vis_col[static_cast<std::size_t>(c)]) v.t.push_back(c);
    return v;
}

}  // namespace detail

// Dichotomy: either returns a Violator (some zero block blocks scaling)
// or nullopt, meaning every support entry lies on a support permutation
// and at least one such permutation exists ("total support").
inline std::optional<Violator> support_check(const SupportMatrix& m) {
    const int n = m.n();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (m(r, c) != 0.0) adj[static_cast<std::size_t>(r)].push_back(c);

    auto verify = [&](Violator v) -> Violator {
        std::size_t need = static_cast<std::size_t>(n);
        if (v.s.size() + v.t.size() < need)
            throw std::logic_error("support_check: violator too small, internal error");
        for (int r : v.s)
            for (int c : v.t)
                if (m(r, c) != 0.0)
                    throw std::logic_error("support_check: violator block not zero, internal error");
        return v;
    };

    // No support permutation at all: Hall failure gives the block directly.
    auto ms = detail::max_matching(n, adj, -1, -1);
    int matched = 0;
    for (int r = 0; r < n; ++r)
        if (ms.mate_row[static_cast<std::size_t>(r)] != -1) ++matched;
    if (matched < n) return verify(detail::koenig_violator(n, adj, ms, -1, -1));

    // Perfect matching exists; a support entry (r,c) lies on some support
    // permutation iff it is matched or its column shares a strongly
    // connected component with mate(r) in the exchange digraph.
    std::vector<std::vector<int>> dig(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        int mc = ms.mate_row[static_cast<std::size_t>(r)];
        for (int c : adj[static_cast<std::size_t>(r)])
            if (c != mc) dig[static_cast<std::size_t>(mc)].push_back(c);
    }
    auto comp = detail::strongly_connected_components(dig);

    for (int r = 0; r < n; ++r) {
        int mc = ms.mate_row[static_cast<std::size_t>(r)];
        for (int c : adj[static_cast<std::size_t>(r)]) {
            if (c == mc || comp[static_cast<std::size_t>(c)] == comp[static_cast<std::size_t>(mc)])
                continue;
            // Entry (r,c) is on no support permutation. Delete row r and
            // column c; the remainder has no perfect matching, and Hall
            // failure there yields the zero block. With deficiency u >= 1
            // the counts give |S| + |T| = (n-1) + u >= n.
            auto sub = detail::max_matching(n, adj, r, c);
            int sub_matched = 0;
            for (int r2 = 0; r2 < n; ++r2)
                if (sub.mate_row[static_cast<std::size_t>(r2)] != -1) ++sub_matched;
            if (sub_matched >= n - 1)
                throw std::logic_error(
                    "support_check: excluded entry but reduced matrix has a perfect matching");
            return verify(detail::koenig_violator(n, adj, sub, r, c));
        }
    }
    return std::nullopt;
}

inline std::optional<Violator> support_check(const HermitianWeighting& w) {
    return support_check(SupportMatrix::from_weighting(w));
}

struct SinkhornOptions {
    double tol = 1e-12;
    int max_iter = 100000;
};

struct SinkhornError : std::runtime_error {
    double worst_deviation;
    explicit SinkhornError(double dev)
        : std::runtime_error("sinkhorn: not converged after iteration cap, worst row-sum deviation " +
                             std::to_string(dev)),
          worst_deviation(dev) {}
};

// Symmetric scaling: find d > 0 with diag(d) M diag(d) doubly stochastic,
// i.e. d_i * sum_j M_ij d_j = 1 for all i. Caller is expected to have
// passed support_check; without total support this will hit the cap.
inline Eigen::VectorXd sinkhorn(const SupportMatrix& m, const SinkhornOptions& opts = {}) {
    const int n = m.n();
    if (n == 0) return Eigen::VectorXd();
    for (int i = 0; i < n; ++i)
        if (m.matrix().row(i).sum() == 0.0)
            throw std::invalid_argument("sinkhorn: zero row " + std::to_string(i));
    if (opts.max_iter < 1) throw std::invalid_argument("sinkhorn: max_iter must be positive");
    if (!(opts.tol > 0.0)) throw std::invalid_argument("sinkhorn: tol must be positive");

    Eigen::VectorXd d = Eigen::VectorXd::Ones(n);
    double worst = 0.0;
    for (int it = 0; it < opts.max_iter; ++it) {
        Eigen::VectorXd row = d.array() * (m.matrix() * d).array();
        worst = (row.array() - 1.0).abs().maxCoeff();
        if (worst <= opts.tol) return d;
        d = d.array() / row.array().sqrt();
    }
    throw SinkhornError(worst);
}

// diag(sqrt(d)) A diag(sqrt(d)): a congruence by a positive diagonal, so
// inertia is preserved while row L2 norms become the scaled row sums.
inline HermitianWeighting normalize_weighting(const HermitianWeighting& a,
                                              const Eigen::VectorXd& d) {
    const int n = a.n();
    if (d.size() != n) throw std::invalid_argument("normalize_weighting: d has wrong length");
    for (int i = 0; i < n; ++i)
        if (!(d(i) > 0.0))
            throw std::invalid_argument("normalize_weighting: d must be strictly positive");
    Eigen::MatrixXcd b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = std::sqrt(d(i)) * std::sqrt(d(j)) * a.entry(i, j);
    return HermitianWeighting(a.host_ptr(), std::move(b));
}

}  // namespace specbound

#endif
