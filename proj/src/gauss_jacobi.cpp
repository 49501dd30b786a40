#include "fracstat/gauss_jacobi.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace fracstat {

namespace {

// Recurrence coefficients of the monic Jacobi polynomials for the weight
// (1-x)^a (1+x)^b on [-1,1] (Gautschi's r_jacobi). Here a = 0, b = -alpha.
struct Recurrence {
    std::vector<double> diag;
    std::vector<double> offdiag;  // sqrt(beta_k), k = 1..n-1
    double mass;                  // beta_0 = integral of the weight
};

Recurrence jacobi_recurrence(int n, double a, double b) {
    Recurrence rec;
    rec.diag.resize(n);
    rec.offdiag.resize(n > 1 ? n - 1 : 0);

    const double apb = a + b;
    rec.diag[0] = (b - a) / (apb + 2.0);
    rec.mass = std::pow(2.0, apb + 1.0) * std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(apb + 2.0));

    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + apb;
        rec.diag[k] = (b * b - a * a) / (s * (s + 2.0));
        double beta;
        if (k == 1)
            beta = 4.0 * (a + 1.0) * (b + 1.0) / ((apb + 2.0) * (apb + 2.0) * (apb + 3.0));
        else
            beta = 4.0 * k * (k + a) * (k + b) * (k + apb) / (s * s * (s + 1.0) * (s - 1.0));
        rec.offdiag[k - 1] = std::sqrt(beta);
    }
    return rec;
}

}  // namespace

SingularQuadRule singular_quad_rule(int n, double alpha, double L) {
    if (n < 1) throw std::invalid_argument("singular_quad_rule: n must be >= 1");
    if (!(alpha >= 0.0) || !(alpha < 1.0))
        throw std::invalid_argument("singular_quad_rule: alpha must lie in [0, 1)");
    if (!(L > 0.0)) throw std::invalid_argument("singular_quad_rule: L must be positive");

    const Recurrence rec = jacobi_recurrence(n, 0.0, -alpha);

    // Golub-Welsch: nodes are eigenvalues of the symmetric tridiagonal
    // recurrence matrix, weights are mass * (first eigenvector component)^2.
    Eigen::Map<const Eigen::VectorXd> diag(rec.diag.data(), n);
    Eigen::Map<const Eigen::VectorXd> offdiag(rec.offdiag.data(), n > 1 ? n - 1 : 0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, offdiag, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("singular_quad_rule: tridiagonal eigensolve failed");

    SingularQuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Map x in [-1,1] to u = L(x+1)/2; the transformed weight contributes
    // (L/2)^(1-alpha).
    const double scale = std::pow(0.5 * L, 1.0 - alpha);
    for (int i = 0; i < n; ++i) {
        const double x = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.nodes[i] = 0.5 * L * (x + 1.0);
        rule.weights[i] = scale * rec.mass * v0 * v0;
    }
    return rule;
}

const SingularQuadRule& cached_singular_rule(int n, double alpha, double L) {
    using Key = std::tuple<int, std::uint64_t, std::uint64_t>;
    static std::map<Key, SingularQuadRule> cache;
    static std::mutex mutex;

    std::uint64_t abits, lbits;
    std::memcpy(&abits, &alpha, sizeof abits);
    std::memcpy(&lbits, &L, sizeof lbits);
    const Key key{n, abits, lbits};

    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, singular_quad_rule(n, alpha, L)).first;
    return it->second;
}

}  // namespace fracstat
