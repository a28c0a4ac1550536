#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "specbound/generators.hpp"
#include "specbound/rng.hpp"
#include "specbound/scaling.hpp"
#include "specbound/spectrum.hpp"
#include "test_util.hpp"

using namespace specbound;
using Catch::Matchers::ContainsSubstring;
using testutil::shared;

namespace {

// Ground truth by permutation enumeration: does the support contain a
// permutation, and does every support entry lie on one?
struct SupportTruth {
    bool has_permutation = false;
    bool total_support = false;
};

SupportTruth support_truth(const Eigen::MatrixXd& m) {
    const int n = static_cast<int>(m.rows());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<char>> covered(static_cast<std::size_t>(n),
                                           std::vector<char>(static_cast<std::size_t>(n), 0));
    SupportTruth truth;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = m(i, perm[static_cast<std::size_t>(i)]) != 0.0;
        if (!ok) continue;
        truth.has_permutation = true;
        for (int i = 0; i < n; ++i)
            covered[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    truth.total_support = truth.has_permutation;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m(i, j) != 0.0 && !covered[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                truth.total_support = false;
    return truth;
}

// A violator must name a genuine all-zero block with |S| + |T| >= n and
// clean index lists.
void require_valid_violator(const Eigen::MatrixXd& m, const Violator& v) {
    const int n = static_cast<int>(m.rows());
    REQUIRE(v.s.size() + v.t.size() >= static_cast<std::size_t>(n));
    auto check_indices = [&](const std::vector<int>& xs) {
        for (std::size_t k = 0; k < xs.size(); ++k) {
            REQUIRE(xs[k] >= 0);
            REQUIRE(xs[k] < n);
            if (k > 0) REQUIRE(xs[k] > xs[k - 1]);
        }
    };
    check_indices(v.s);
    check_indices(v.t);
    for (int r : v.s)
        for (int c : v.t) REQUIRE(m(r, c) == 0.0);
}

Eigen::MatrixXd random_pattern(int n, double p, std::mt19937_64& g) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng::uniform01(g) < p) m(i, j) = m(j, i) = 1.0;
    return m;
}

}  // namespace

TEST_CASE("support matrix validates its invariants", "[scaling]") {
    REQUIRE_THROWS_WITH(SupportMatrix(Eigen::MatrixXd::Zero(2, 3)), ContainsSubstring("not square"));

    Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(2, 2);
    diag(0, 0) = 1.0;
    REQUIRE_THROWS_WITH(SupportMatrix(diag), ContainsSubstring("diagonal"));

    Eigen::MatrixXd neg = Eigen::MatrixXd::Zero(2, 2);
    neg(0, 1) = neg(1, 0) = -1.0;
    REQUIRE_THROWS_WITH(SupportMatrix(neg), ContainsSubstring("negative or NaN"));

    Eigen::MatrixXd nan = Eigen::MatrixXd::Zero(2, 2);
    nan(0, 1) = nan(1, 0) = std::nan("");
    REQUIRE_THROWS_AS(SupportMatrix(nan), std::invalid_argument);

    Eigen::MatrixXd asym = Eigen::MatrixXd::Zero(2, 2);
    asym(0, 1) = 1.0;
    REQUIRE_THROWS_WITH(SupportMatrix(asym), ContainsSubstring("not symmetric"));

    SECTION("built from a weighting it squares the magnitudes") {
        Graph k2(2);
        k2.add_edge(0, 1);
        auto w = testutil::weighting_of(k2, {{0, 1, {1.0, 2.0}}});
        auto m = SupportMatrix::from_weighting(w);
        REQUIRE(m(0, 1) == 5.0);
        REQUIRE(m(1, 0) == 5.0);
        REQUIRE(m(0, 0) == 0.0);
    }
}

TEST_CASE("support dichotomy on frozen cases", "[scaling]") {
    SECTION("all-zero matrix blocks everything") {
        auto v = support_check(SupportMatrix(Eigen::MatrixXd::Zero(3, 3)));
        REQUIRE(v.has_value());
        REQUIRE(v->s == std::vector<int>{0, 1, 2});
        REQUIRE(v->t == std::vector<int>{0, 1, 2});
    }
    SECTION("single vertex can never scale") {
        auto v = support_check(SupportMatrix(Eigen::MatrixXd::Zero(1, 1)));
        REQUIRE(v.has_value());
        REQUIRE(v->s == std::vector<int>{0});
        REQUIRE(v->t == std::vector<int>{0});
    }
    SECTION("empty matrix has vacuous total support") {
        REQUIRE_FALSE(support_check(SupportMatrix(Eigen::MatrixXd::Zero(0, 0))).has_value());
    }
    SECTION("star: leaves form the blocking set") {
        auto w = HermitianWeighting::unweighted(shared(gen_complete_bipartite(1, 4)));
        auto v = support_check(w);
        REQUIRE(v.has_value());
        REQUIRE(v->s == std::vector<int>{1, 2, 3, 4});
        REQUIRE(v->t == std::vector<int>{1, 2, 3, 4});
        require_valid_violator(SupportMatrix::from_weighting(w).matrix(), *v);
    }
    SECTION("path on four vertices: perfect matching but an excluded entry") {
        Graph p4(4);
        p4.add_edge(0, 1);
        p4.add_edge(1, 2);
        p4.add_edge(2, 3);
        auto w = HermitianWeighting::unweighted(shared(p4));
        auto v = support_check(w);
        REQUIRE(v.has_value());
        REQUIRE(v->s == std::vector<int>{3});
        REQUIRE(v->t == std::vector<int>{0, 1, 3});
        require_valid_violator(SupportMatrix::from_weighting(w).matrix(), *v);
    }
    SECTION("odd cycle and vertex-transitive hosts have total support") {
        REQUIRE_FALSE(support_check(HermitianWeighting::unweighted(shared(gen_cycle(5)))).has_value());
        REQUIRE_FALSE(support_check(HermitianWeighting::unweighted(shared(gen_paley(13)))).has_value());
        REQUIRE_FALSE(
            support_check(HermitianWeighting::unweighted(shared(gen_petersen()))).has_value());
    }
}

TEST_CASE("support dichotomy is exhaustively correct on small matrices", "[scaling]") {
    for (int n = 1; n <= 4; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
            Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
            int bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit)
                    if (mask & (1u << bit)) m(i, j) = m(j, i) = 1.0;

            auto truth = support_truth(m);
            auto verdict = support_check(SupportMatrix(m));
            INFO("n=" << n << " mask=" << mask);
            REQUIRE(verdict.has_value() == !truth.total_support);
            if (verdict) require_valid_violator(m, *verdict);
        }
    }
}

TEST_CASE("support dichotomy agrees with the oracle on random patterns", "[scaling]") {
    std::mt19937_64 g(404);
    int violators = 0, scalable = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng::below(g, 11));  // 2..12
        double p = (trial % 3 == 0) ? 0.15 : (trial % 3 == 1 ? 0.3 : 0.5);
        Eigen::MatrixXd m = random_pattern(n, p, g);
        auto verdict = support_check(SupportMatrix(m));
        if (n <= 8) {
            auto truth = support_truth(m);
            REQUIRE(verdict.has_value() == !truth.total_support);
        }
        if (verdict) {
            require_valid_violator(m, *verdict);
            ++violators;
        } else {
            // Scaling must then actually succeed.
            auto d = sinkhorn(SupportMatrix(m));
            REQUIRE(d.size() == n);
            Eigen::VectorXd row = d.array() * (m * d).array();
            REQUIRE((row.array() - 1.0).abs().maxCoeff() <= 1e-12);
            for (int i = 0; i < n; ++i) REQUIRE(d(i) > 0.0);
            ++scalable;
        }
    }
    REQUIRE(violators > 5);
    REQUIRE(scalable > 5);
}

TEST_CASE("symmetric scaling hits known fixed points", "[scaling]") {
    SECTION("single weighted edge") {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
        m(0, 1) = m(1, 0) = 2.0;
        auto d = sinkhorn(SupportMatrix(m));
        REQUIRE_THAT(d(0), Catch::Matchers::WithinAbs(1.0 / std::numbers::sqrt2, 1e-9));
        REQUIRE_THAT(d(1), Catch::Matchers::WithinAbs(1.0 / std::numbers::sqrt2, 1e-9));

        Eigen::MatrixXd m3 = Eigen::MatrixXd::Zero(2, 2);
        m3(0, 1) = m3(1, 0) = 3.0;
        auto d3 = sinkhorn(SupportMatrix(m3));
        REQUIRE_THAT(d3(0), Catch::Matchers::WithinAbs(1.0 / std::numbers::sqrt3, 1e-9));
    }
    SECTION("regular hosts scale uniformly") {
        auto c5 = SupportMatrix::from_weighting(HermitianWeighting::unweighted(shared(gen_cycle(5))));
        auto d = sinkhorn(c5);
        for (int i = 0; i < 5; ++i)
            REQUIRE_THAT(d(i), Catch::Matchers::WithinAbs(1.0 / std::numbers::sqrt2, 1e-9));

        auto pet = SupportMatrix::from_weighting(HermitianWeighting::unweighted(shared(gen_petersen())));
        auto dp = sinkhorn(pet);
        for (int i = 0; i < 10; ++i)
            REQUIRE_THAT(dp(i), Catch::Matchers::WithinAbs(1.0 / std::numbers::sqrt3, 1e-9));
    }
    SECTION("empty input") {
        REQUIRE(sinkhorn(SupportMatrix(Eigen::MatrixXd::Zero(0, 0))).size() == 0);
    }
}

TEST_CASE("scaling failure modes are reported", "[scaling]") {
    SECTION("zero rows rejected up front") {
        REQUIRE_THROWS_WITH(sinkhorn(SupportMatrix(Eigen::MatrixXd::Zero(2, 2))),
                            ContainsSubstring("zero row"));
    }
    SECTION("no total support means the iteration cannot settle") {
        auto star =
            SupportMatrix::from_weighting(HermitianWeighting::unweighted(shared(gen_complete_bipartite(1, 4))));
        SinkhornOptions opts;
        opts.max_iter = 500;
        try {
            sinkhorn(star, opts);
            FAIL("sinkhorn converged on a star support");
        } catch (const SinkhornError& e) {
            REQUIRE(e.worst_deviation > 1e-6);
            REQUIRE_THAT(e.what(), ContainsSubstring("not converged"));
        }
    }
    SECTION("bad options rejected") {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
        m(0, 1) = m(1, 0) = 1.0;
        SinkhornOptions bad_iter;
        bad_iter.max_iter = 0;
        REQUIRE_THROWS_WITH(sinkhorn(SupportMatrix(m), bad_iter), ContainsSubstring("max_iter"));
        SinkhornOptions bad_tol;
        bad_tol.tol = 0.0;
        REQUIRE_THROWS_WITH(sinkhorn(SupportMatrix(m), bad_tol), ContainsSubstring("tol"));
    }
}

TEST_CASE("normalization scales rows to unit mass and keeps inertia", "[scaling]") {
    auto host = shared(gen_cycle(5));
    auto w = random_weighting(host, 23, WeightLaw::GaussianComplex);
    auto m = SupportMatrix::from_weighting(w);
    auto d = sinkhorn(m);
    auto b = normalize_weighting(w, d);

    SECTION("rows have unit squared norm") {
        for (int i = 0; i < 5; ++i) {
            double row = 0.0;
            for (int j = 0; j < 5; ++j) row += std::norm(b.entry(i, j));
            REQUIRE_THAT(row, Catch::Matchers::WithinAbs(1.0, 1e-10));
        }
    }
    SECTION("diagonal congruence preserves inertia") {
        auto before = inertia(compute_spectrum(w));
        auto after = inertia(compute_spectrum(b));
        REQUIRE(before.pos == after.pos);
        REQUIRE(before.neg == after.neg);
        REQUIRE(before.zero == after.zero);
    }
    SECTION("scaled entries are the square-root weighted originals") {
        for (auto [u, v] : host->edges()) {
            std::complex<double> expect = std::sqrt(d(u)) * std::sqrt(d(v)) * w.entry(u, v);
            REQUIRE(std::abs(b.entry(u, v) - expect) < 1e-15);
        }
    }
    SECTION("bad scaling vectors rejected") {
        REQUIRE_THROWS_WITH(normalize_weighting(w, Eigen::VectorXd::Ones(4)),
                            ContainsSubstring("wrong length"));
        Eigen::VectorXd z = Eigen::VectorXd::Ones(5);
        z(2) = 0.0;
        REQUIRE_THROWS_WITH(normalize_weighting(w, z), ContainsSubstring("strictly positive"));
        z(2) = -1.0;
        REQUIRE_THROWS_AS(normalize_weighting(w, z), std::invalid_argument);
    }
}
