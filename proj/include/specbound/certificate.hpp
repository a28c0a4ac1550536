#ifndef SPECBOUND_CERTIFICATE_HPP
#define SPECBOUND_CERTIFICATE_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "specbound/bounds.hpp"
#include "specbound/graph.hpp"
#include "specbound/scaling.hpp"
#include "specbound/walks.hpp"
#include "specbound/weighting.hpp"

namespace specbound {

inline constexpr const char* kCertificateSchema = "specbound.certificate/1";

// Proof tree for a lower bound on the number of nonnegative eigenvalues.
//   Base        trivial subproblem (n <= 1), bound = n
//   Decompose   a zero block splits the matrix: bound(S\T) + bound(T\S) + |S cap T|
//   MomentLeaf  scaled matrix with unit row norms; positive spectral mass
//               p_lower certified from the third/fourth ESD moments
struct CertificateNode {
    enum class Kind { Base, Decompose, MomentLeaf };

    Kind kind = Kind::Base;
    int n = 0;      // subproblem size
    int bound = 0;  // certified lower bound for this subtree

    // Decompose only; vertex labels refer to the original host.
    std::vector<int> s, t;
    int middle = 0;
    std::unique_ptr<CertificateNode> left, right;

    // MomentLeaf only.
    double m3 = 0.0, m4 = 0.0, p_lower = 0.0;
};

namespace detail {

inline nlohmann::ordered_json node_to_json(const CertificateNode& node) {
    nlohmann::ordered_json j;
    switch (node.kind) {
        case CertificateNode::Kind::Base:
            j["kind"] = "base";
            j["n"] = node.n;
            j["bound"] = node.bound;
            break;
        case CertificateNode::Kind::Decompose:
            j["kind"] = "decompose";
            j["n"] = node.n;
            j["s"] = node.s;
            j["t"] = node.t;
            j["middle"] = node.middle;
            j["bound"] = node.bound;
            j["left"] = node_to_json(*node.left);
            j["right"] = node_to_json(*node.right);
            break;
        case CertificateNode::Kind::MomentLeaf:
            j["kind"] = "moment_leaf";
            j["n"] = node.n;
            j["m3"] = node.m3;
            j["m4"] = node.m4;
            j["p_lower"] = node.p_lower;
            j["bound"] = node.bound;
            break;
    }
    return j;
}

inline std::unique_ptr<CertificateNode> node_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("certificate: node is not an object with a kind");
    auto node = std::make_unique<CertificateNode>();
    std::string kind = j.at("kind").get<std::string>();
    node->n = j.at("n").get<int>();
    node->bound = j.at("bound").get<int>();
    if (kind == "base") {
        node->kind = CertificateNode::Kind::Base;
    } else if (kind == "decompose") {
        node->kind = CertificateNode::Kind::Decompose;
        node->s = j.at("s").get<std::vector<int>>();
        node->t = j.at("t").get<std::vector<int>>();
        node->middle = j.at("middle").get<int>();
        node->left = node_from_json(j.at("left"));
        node->right = node_from_json(j.at("right"));
    } else if (kind == "moment_leaf") {
        node->kind = CertificateNode::Kind::MomentLeaf;
        node->m3 = j.at("m3").get<double>();
        node->m4 = j.at("m4").get<double>();
        node->p_lower = j.at("p_lower").get<double>();
    } else {
        throw std::invalid_argument("certificate: unknown node kind \"" + kind + "\"");
    }
    return node;
}

inline void validate_node(const CertificateNode& node) {
    switch (node.kind) {
        case CertificateNode::Kind::Base:
            if (node.n < 0 || node.n > 1)
                throw std::invalid_argument("certificate: base node with n = " +
                                            std::to_string(node.n));
            if (node.bound != node.n)
                throw std::invalid_argument("certificate: base node bound mismatch");
            return;
        case CertificateNode::Kind::Decompose: {
            if (!node.left || !node.right)
                throw std::invalid_argument("certificate: decompose node missing children");
            auto s = node.s, t = node.t;
            std::sort(s.begin(), s.end());
            std::sort(t.begin(), t.end());
            std::vector<int> inter, uni;
            std::set_intersection(s.begin(), s.end(), t.begin(), t.end(),
                                  std::back_inserter(inter));
            std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(uni));
            if (static_cast<int>(inter.size()) != node.middle)
                throw std::invalid_argument("certificate: middle != |s cap t|");
            if (static_cast<int>(s.size() + t.size()) < node.n)
                throw std::invalid_argument("certificate: |s| + |t| < n at decompose node");
            if (static_cast<int>(uni.size()) > node.n)
                throw std::invalid_argument("certificate: |s cup t| exceeds subproblem size");
            if (node.left->n != static_cast<int>(s.size() - inter.size()) ||
                node.right->n != static_cast<int>(t.size() - inter.size()))
                throw std::invalid_argument("certificate: child sizes disagree with s, t");
            if (node.bound != node.left->bound + node.right->bound + node.middle)
                throw std::invalid_argument("certificate: decompose bound mismatch");
            validate_node(*node.left);
            validate_node(*node.right);
            return;
        }
        case CertificateNode::Kind::MomentLeaf: {
            if (node.n < 2) throw std::invalid_argument("certificate: moment leaf with n < 2");
            if (node.m4 < 1.0 - 1e-9 || node.m4 > 2.0 + 1e-6)
                throw std::invalid_argument("certificate: leaf m4 = " + std::to_string(node.m4) +
                                            " outside [1, 2]");
            if (node.p_lower < 0.0 || node.p_lower > 1.0)
                throw std::invalid_argument("certificate: leaf p_lower outside [0, 1]");
            double provable = moment_positivity_lower(node.m3, std::max(node.m4, 1.0));
            if (node.p_lower > provable + 1e-12)
                throw std::invalid_argument("certificate: leaf claims p_lower = " +
                                            std::to_string(node.p_lower) +
                                            " above the provable " + std::to_string(provable));
            int expect = static_cast<int>(
                std::ceil(static_cast<double>(node.n) * node.p_lower - 1e-9));
            if (node.bound != expect)
                throw std::invalid_argument("certificate: leaf bound != ceil(n * p_lower)");
            return;
        }
    }
    throw std::invalid_argument("certificate: corrupt node kind");
}

}  // namespace detail

struct CertificateResult {
    int bound = 0;
    int host_n = 0;
    bool girth_ge5 = false;
    std::unique_ptr<CertificateNode> root;

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["schema"] = kCertificateSchema;
        j["host_n"] = host_n;
        j["girth_ge_5"] = girth_ge5;
        j["bound"] = bound;
        j["root"] = root ? detail::node_to_json(*root) : nlohmann::ordered_json(nullptr);
        return j;
    }

    static CertificateResult from_json(const nlohmann::ordered_json& j) {
        if (!j.is_object() || !j.contains("schema") ||
            j.at("schema").get<std::string>() != kCertificateSchema)
            throw std::invalid_argument("certificate: missing or unknown schema");
        CertificateResult r;
        r.host_n = j.at("host_n").get<int>();
        r.girth_ge5 = j.at("girth_ge_5").get<bool>();
        r.bound = j.at("bound").get<int>();
        if (!j.at("root").is_null()) r.root = detail::node_from_json(j.at("root"));
        return r;
    }

    // Structural audit: every arithmetic step of the proof tree is
    // rechecked, and leaf claims must not exceed what the recorded
    // moments can prove. The moments themselves are trusted inputs.
    void validate() const {
        if (!root) {
            if (host_n != 0 || bound != 0)
                throw std::invalid_argument("certificate: empty tree for nonempty host");
            return;
        }
        if (root->n != host_n)
            throw std::invalid_argument("certificate: root size != host_n");
        if (root->bound != bound)
            throw std::invalid_argument("certificate: top-level bound != root bound");
        detail::validate_node(*root);
    }
};

struct CertifyOptions {
    SinkhornOptions scaling{};
    // Maps (m3, m4) at a scaled leaf to a certified lower bound on the
    // positive spectral mass. Defaults to moment_positivity_lower.
    std::function<double(double, double)> leaf_bound{};
};

namespace detail {

inline std::unique_ptr<CertificateNode> certify_recurse(const HermitianWeighting& w,
                                                        const std::vector<int>& labels,
                                                        const CertifyOptions& opts) {
    const int n = w.n();
    auto node = std::make_unique<CertificateNode>();
    node->n = n;
    if (n <= 1) {
        node->kind = CertificateNode::Kind::Base;
        node->bound = n;  // zero diagonal, so a 1x1 block is the eigenvalue 0
        return node;
    }

    SupportMatrix m = SupportMatrix::from_weighting(w);
    if (auto violator = support_check(m)) {
        std::vector<int> s_only, t_only;
        std::set_difference(violator->s.begin(), violator->s.end(), violator->t.begin(),
                            violator->t.end(), std::back_inserter(s_only));
        std::set_difference(violator->t.begin(), violator->t.end(), violator->s.begin(),
                            violator->s.end(), std::back_inserter(t_only));
        auto sub_labels = [&](const std::vector<int>& keep) {
            std::vector<int> out;
            out.reserve(keep.size());
            for (int v : keep) out.push_back(labels[static_cast<std::size_t>(v)]);
            return out;
        };
        node->kind = CertificateNode::Kind::Decompose;
        node->s = sub_labels(violator->s);
        node->t = sub_labels(violator->t);
        node->middle = static_cast<int>(violator->s.size() + violator->t.size() - s_only.size() -
                                        t_only.size()) /
                       2;
        node->left = certify_recurse(w.induced(s_only), sub_labels(s_only), opts);
        node->right = certify_recurse(w.induced(t_only), sub_labels(t_only), opts);
        node->bound = node->left->bound + node->right->bound + node->middle;
        return node;
    }

    // Total support: scale to unit row norms, then bound the positive
    // spectral mass from the moments of the scaled matrix.
    Eigen::VectorXd d = sinkhorn(m, opts.scaling);
    HermitianWeighting b = normalize_weighting(w, d);
    double m3 = trace_power_walks(b, 3) / static_cast<double>(n);
    double m4 = trace_power_walks(b, 4) / static_cast<double>(n);
    if (m4 > 2.0 + 1e-6)
        throw std::logic_error("certify: scaled fourth moment " + std::to_string(m4) +
                               " exceeds 2, which cannot happen without a 4-cycle");
    if (m4 < 1.0 - 1e-9)
        throw std::logic_error("certify: scaled fourth moment " + std::to_string(m4) +
                               " below 1, inconsistent with unit row norms");
    double m4_eff = std::max(m4, 1.0);
    double p = opts.leaf_bound ? opts.leaf_bound(m3, m4_eff)
                               : moment_positivity_lower(m3, m4_eff);
    p = std::clamp(p, 0.0, 1.0);

    node->kind = CertificateNode::Kind::MomentLeaf;
    node->m3 = m3;
    node->m4 = m4_eff;
    node->p_lower = p;
    node->bound = static_cast<int>(std::ceil(static_cast<double>(n) * p - 1e-9));
    return node;
}

}  // namespace detail

// Certified lower bound on the number of nonnegative eigenvalues of any
// Hermitian weighting over a host with no 4-cycle. The tree it returns
// replays as pure arithmetic via CertificateResult::validate().
inline CertificateResult certify_inertia(const HermitianWeighting& w,
                                         const CertifyOptions& opts = {}) {
    if (auto c4 = find_c4(w.host())) {
        auto& c = *c4;
        throw std::invalid_argument("certify_inertia: host contains the 4-cycle (" +
                                    std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
                                    std::to_string(c[2]) + "," + std::to_string(c[3]) +
                                    "); the walk-counting identities need a host without one");
    }
    CertificateResult r;
    r.host_n = w.n();
    auto g = girth(w.host());
    r.girth_ge5 = !g || *g >= 5;
    std::vector<int> labels(static_cast<std::size_t>(w.n()));
    for (int i = 0; i < w.n(); ++i) labels[static_cast<std::size_t>(i)] = i;
    r.root = detail::certify_recurse(w, labels, opts);
    r.bound = r.root->bound;
    return r;
}

}  // namespace specbound

#endif
