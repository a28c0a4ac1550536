#ifndef SPECBOUND_SPECTRUM_HPP
#define SPECBOUND_SPECTRUM_HPP

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "specbound/weighting.hpp"

namespace specbound {

// Eigenvalues sorted descending, plus the worst eigenpair residual
// max_k ||A v_k - lambda_k v_k||_2 as a solver health certificate.
struct Spectrum {
    std::vector<double> values;
    double residual = 0.0;

    int n() const { return static_cast<int>(values.size()); }
    double lambda_max() const { return values.front(); }
    double lambda_min() const { return values.back(); }
    double frobenius() const {
        double s = 0.0;
        for (double v : values) s += v * v;
        return std::sqrt(s);
    }
};

inline Spectrum compute_spectrum(const Eigen::MatrixXcd& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("compute_spectrum: matrix not square");
    const int n = static_cast<int>(a.rows());
    if (n == 0) return {};
    double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    if ((a - a.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw std::invalid_argument("compute_spectrum: matrix not Hermitian");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("compute_spectrum: eigensolver failed to converge");

    Spectrum s;
    s.values.resize(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)  // Eigen returns ascending order
        s.values[static_cast<std::size_t>(k)] = es.eigenvalues()(n - 1 - k);

    double fro = a.norm();
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        double r = (a * es.eigenvectors().col(k) -
                    es.eigenvalues()(k) * es.eigenvectors().col(k))
                       .norm();
        worst = std::max(worst, r);
    }
    s.residual = worst;
    if (worst > 1e-9 * std::max(1.0, fro))
        throw std::runtime_error("compute_spectrum: eigenpair residual " + std::to_string(worst) +
                                 " exceeds tolerance");
    return s;
}

inline Spectrum compute_spectrum(const HermitianWeighting& w) {
    return compute_spectrum(w.matrix());
}

// Signed eigenvalue counts at threshold tau: neg < -tau <= zero <= tau < pos.
struct InertiaTriple {
    int neg = 0;
    int zero = 0;
    int pos = 0;
    double tau = 0.0;

    int nonneg() const { return zero + pos; }
    int total() const { return neg + zero + pos; }
};

// Scale-aware default threshold; ||A||_F is recoverable from the spectrum.
inline double default_tau(const Spectrum& s) {
    double per_entry = s.n() > 0 ? s.frobenius() / std::sqrt(static_cast<double>(s.n())) : 0.0;
    return 1e-8 * std::max(1.0, per_entry);
}

inline InertiaTriple inertia(const Spectrum& s, double tau = -1.0) {
    if (tau < 0.0) tau = default_tau(s);
    InertiaTriple t;
    t.tau = tau;
    for (double v : s.values) {
        if (v < -tau)
            ++t.neg;
        else if (v > tau)
            ++t.pos;
        else
            ++t.zero;
    }
    return t;
}

// First four moments of the empirical spectral distribution.
struct MomentVector {
    double m1 = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0;
};

inline MomentVector esd_moments(const Spectrum& s) {
    MomentVector m;
    if (s.n() == 0) return m;
    for (double v : s.values) {
        double v2 = v * v;
        m.m1 += v;
        m.m2 += v2;
        m.m3 += v2 * v;
        m.m4 += v2 * v2;
    }
    double n = static_cast<double>(s.n());
    m.m1 /= n;
    m.m2 /= n;
    m.m3 /= n;
    m.m4 /= n;
    return m;
}

// Z A Z^*. Congruence preserves inertia (Sylvester) only when Z is
// invertible, so a numerically singular Z is rejected.
inline Eigen::MatrixXcd congruence(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& z) {
    if (a.rows() != a.cols()) throw std::invalid_argument("congruence: A not square");
    if (z.rows() != z.cols() || z.rows() != a.rows())
        throw std::invalid_argument("congruence: Z dimensions do not match A");
    if (a.rows() == 0) return a;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(z);
    double smax = svd.singularValues()(0);
    double smin = svd.singularValues()(svd.singularValues().size() - 1);
    if (!(smin > 0.0) || smax / smin >= 1e12)
        throw std::invalid_argument("congruence: Z numerically singular (cond >= 1e12)");
    return z * a * z.adjoint();
}

}  // namespace specbound

#endif
