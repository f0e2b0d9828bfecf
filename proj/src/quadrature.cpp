#include "glmep/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace glmep {

namespace {

// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights are
// mu0 * (first eigenvector component)^2.
GaussRule golub_welsch(const std::vector<double>& offdiag, double mu0) {
    const int n = static_cast<int>(offdiag.size()) + 1;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        J(i, i + 1) = offdiag[i];
        J(i + 1, i) = offdiag[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("golub_welsch: eigen decomposition failed");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v0 * v0;
    }
    return rule;
}

std::mutex cache_mutex;

} // namespace

const GaussRule& gauss_hermite(int order) {
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    std::vector<double> off(order - 1);
    for (int k = 1; k < order; ++k) off[k - 1] = std::sqrt(k / 2.0);
    auto [pos, ok] = cache.emplace(order, golub_welsch(off, std::sqrt(M_PI)));
    return pos->second;
}

const GaussRule& gauss_legendre(int order) {
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    std::vector<double> off(order - 1);
    for (int k = 1; k < order; ++k) off[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
    auto [pos, ok] = cache.emplace(order, golub_welsch(off, 2.0));
    return pos->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int order) {
    const GaussRule& rule = gauss_legendre(order);
    const double xm = 0.5 * (a + b);
    const double xr = 0.5 * (b - a);
    double s = 0.0;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
        s += rule.weights[i] * f(xm + xr * rule.nodes[i]);
    return xr * s;
}

namespace {

double adapt_rec(const std::function<double(double)>& f, double a, double b, double whole,
                 double rel_tol, int order, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = integrate_gl(f, a, mid, order);
    const double right = integrate_gl(f, mid, b, order);
    const double sum = left + right;
    if (depth <= 0) return sum;
    const double scale = std::max({std::abs(whole), std::abs(sum), 1e-300});
    if (std::abs(sum - whole) <= rel_tol * scale) return sum;
    return adapt_rec(f, a, mid, left, rel_tol, order, depth - 1) +
           adapt_rec(f, mid, b, right, rel_tol, order, depth - 1);
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int order, int max_depth) {
    const double whole = integrate_gl(f, a, b, order);
    return adapt_rec(f, a, b, whole, rel_tol, order, max_depth);
}

} // namespace glmep
