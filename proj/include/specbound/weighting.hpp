#ifndef SPECBOUND_WEIGHTING_HPP
#define SPECBOUND_WEIGHTING_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "specbound/edge_io.hpp"
#include "specbound/graph.hpp"
#include "specbound/rng.hpp"

namespace specbound {

// Hermitian matrix supported on the edges of a host graph: zero diagonal,
// zero on non-edges, entries(j,i) = conj(entries(i,j)). Immutable after
// construction; the host is shared, so copies are cheap to pass around.
class HermitianWeighting {
public:
    HermitianWeighting(std::shared_ptr<const Graph> host, Eigen::MatrixXcd entries)
        : host_(std::move(host)), mat_(std::move(entries)) {
        if (!host_) throw std::invalid_argument("HermitianWeighting: null host");
        validate();
    }

    static HermitianWeighting zero(std::shared_ptr<const Graph> host) {
        if (!host) throw std::invalid_argument("HermitianWeighting: null host");
        int n = host->vertex_count();
        return HermitianWeighting(std::move(host), Eigen::MatrixXcd::Zero(n, n));
    }

    // Plain 0/1 adjacency weights.
    static HermitianWeighting unweighted(std::shared_ptr<const Graph> host) {
        if (!host) throw std::invalid_argument("HermitianWeighting: null host");
        int n = host->vertex_count();
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
        for (auto [u, v] : host->edges()) {
            m(u, v) = 1.0;
            m(v, u) = 1.0;
        }
        return HermitianWeighting(std::move(host), std::move(m));
    }

    int n() const { return static_cast<int>(mat_.rows()); }
    const Graph& host() const { return *host_; }
    const std::shared_ptr<const Graph>& host_ptr() const { return host_; }
    const Eigen::MatrixXcd& matrix() const { return mat_; }
    std::complex<double> entry(int i, int j) const { return mat_(i, j); }

    // Restriction to `keep` (sorted ascending after dedup), host included.
    HermitianWeighting induced(std::vector<int> keep) const {
        std::sort(keep.begin(), keep.end());
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
        auto sub_host = std::make_shared<Graph>(host_->induced_subgraph(keep));
        const int k = static_cast<int>(keep.size());
        Eigen::MatrixXcd sub(k, k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                sub(a, b) = mat_(keep[static_cast<std::size_t>(a)], keep[static_cast<std::size_t>(b)]);
        return HermitianWeighting(std::move(sub_host), std::move(sub));
    }

private:
    std::shared_ptr<const Graph> host_;
    Eigen::MatrixXcd mat_;

    void validate() const {
        const int n = host_->vertex_count();
        if (mat_.rows() != n || mat_.cols() != n)
            throw std::invalid_argument("HermitianWeighting: matrix size does not match host");
        double scale = std::max(1.0, mat_.size() > 0 ? mat_.cwiseAbs().maxCoeff() : 0.0);
        for (int i = 0; i < n; ++i) {
            if (mat_(i, i) != 0.0)
                throw std::invalid_argument("HermitianWeighting: nonzero diagonal at " +
                                            std::to_string(i));
            for (int j = i + 1; j < n; ++j) {
                if (std::abs(mat_(i, j) - std::conj(mat_(j, i))) > 1e-12 * scale)
                    throw std::invalid_argument("HermitianWeighting: not Hermitian at (" +
                                                std::to_string(i) + "," + std::to_string(j) + ")");
                if (mat_(i, j) != 0.0 && !host_->has_edge(i, j))
                    throw std::invalid_argument("HermitianWeighting: entry on non-edge (" +
                                                std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
};

enum class WeightLaw { UnitComplex, GaussianReal, GaussianComplex };

inline WeightLaw parse_weight_law(const std::string& s) {
    if (s == "unit-complex") return WeightLaw::UnitComplex;
    if (s == "gaussian-real") return WeightLaw::GaussianReal;
    if (s == "gaussian-complex") return WeightLaw::GaussianComplex;
    throw std::invalid_argument("unknown weight law: " + s);
}

// One independent draw per edge (edges in sorted order), Hermitian by
// construction, reproducible from the seed.
inline HermitianWeighting random_weighting(std::shared_ptr<const Graph> host,
                                           std::uint64_t seed, WeightLaw law) {
    if (!host) throw std::invalid_argument("random_weighting: null host");
    const int n = host->vertex_count();
    std::mt19937_64 g(seed);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (auto [u, v] : host->edges()) {
        std::complex<double> z;
        switch (law) {
            case WeightLaw::UnitComplex: {
                double theta = 2.0 * std::numbers::pi * rng::uniform01(g);
                z = {std::cos(theta), std::sin(theta)};
                break;
            }
            case WeightLaw::GaussianReal:
                z = {rng::normal(g), 0.0};
                break;
            case WeightLaw::GaussianComplex:
                z = {rng::normal(g) / std::numbers::sqrt2, rng::normal(g) / std::numbers::sqrt2};
                break;
        }
        m(u, v) = z;
        m(v, u) = std::conj(z);
    }
    return HermitianWeighting(std::move(host), std::move(m));
}

// ---- weighting file format -------------------------------------------------
// First line "n", then one line per nonzero upper-triangle entry: "i j re im".

struct WeightingData {
    int n = 0;
    std::vector<std::tuple<int, int, std::complex<double>>> entries;
};

inline void write_weighting(std::ostream& os, const HermitianWeighting& w) {
    os << w.n() << '\n';
    char buf[128];
    for (int i = 0; i < w.n(); ++i)
        for (int j = i + 1; j < w.n(); ++j) {
            std::complex<double> z = w.entry(i, j);
            if (z == 0.0) continue;
            std::snprintf(buf, sizeof buf, "%d %d %.17g %.17g\n", i, j, z.real(), z.imag());
            os << buf;
        }
}

inline WeightingData read_weighting(std::istream& is, const std::string& where = "<stream>") {
    auto fail = [&](int line, const std::string& msg) -> void {
        throw ParseError(where + ":" + std::to_string(line) + ": " + msg);
    };
    WeightingData data;
    std::string line;
    int lineno = 0;
    bool have_header = false;
    std::vector<char> seen;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ss(line);
        if (!have_header) {
            std::string extra;
            long long n = 0;
            if (!(ss >> n) || (ss >> extra)) fail(lineno, "header must be exactly \"n\"");
            if (n < 0) fail(lineno, "negative dimension");
            data.n = static_cast<int>(n);
            seen.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
            have_header = true;
            continue;
        }
        long long i = 0, j = 0;
        double re = 0, im = 0;
        std::string extra;
        if (!(ss >> i >> j >> re >> im) || (ss >> extra))
            fail(lineno, "entry line must be \"i j re im\"");
        if (i < 0 || j < 0 || i >= data.n || j >= data.n)
            fail(lineno, "index out of range [0," + std::to_string(data.n) + ")");
        if (i >= j) fail(lineno, "entries must satisfy i < j");
        std::size_t key = static_cast<std::size_t>(i) * static_cast<std::size_t>(data.n) +
                          static_cast<std::size_t>(j);
        if (seen[key]) fail(lineno, "duplicate entry");
        seen[key] = 1;
        data.entries.emplace_back(static_cast<int>(i), static_cast<int>(j),
                                  std::complex<double>(re, im));
    }
    if (!have_header) fail(1, "missing header line \"n\"");
    return data;
}

// Interpret the data over a given host; entries must sit on host edges.
inline HermitianWeighting weighting_from_data(const WeightingData& data,
                                              std::shared_ptr<const Graph> host) {
    if (!host) throw std::invalid_argument("weighting_from_data: null host");
    if (host->vertex_count() != data.n)
        throw std::invalid_argument("weighting_from_data: dimension mismatch (file " +
                                    std::to_string(data.n) + ", graph " +
                                    std::to_string(host->vertex_count()) + ")");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(data.n, data.n);
    for (auto& [i, j, z] : data.entries) {
        m(i, j) = z;
        m(j, i) = std::conj(z);
    }
    return HermitianWeighting(std::move(host), std::move(m));
}

// Standalone: the support of the entries is the host.
inline HermitianWeighting weighting_from_data(const WeightingData& data) {
    auto host = std::make_shared<Graph>(data.n);
    for (auto& [i, j, z] : data.entries)
        if (z != 0.0) host->add_edge(i, j);
    return weighting_from_data(data, std::move(host));
}

inline HermitianWeighting load_weighting(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    return weighting_from_data(read_weighting(f, path));
}

inline HermitianWeighting load_weighting(const std::string& path,
                                         std::shared_ptr<const Graph> host) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    return weighting_from_data(read_weighting(f, path), std::move(host));
}

inline void save_weighting(const std::string& path, const HermitianWeighting& w) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    write_weighting(f, w);
    if (!f) throw std::runtime_error("write failed: " + path);
}

}  // namespace specbound

#endif
