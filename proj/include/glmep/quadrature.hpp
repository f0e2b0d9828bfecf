#pragma once

#include <functional>
#include <vector>

namespace glmep {

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// weight exp(-x^2) on (-inf, inf); weights sum to sqrt(pi)
const GaussRule& gauss_hermite(int order);

// weight 1 on [-1, 1]; weights sum to 2
const GaussRule& gauss_legendre(int order);

// fixed-order Gauss-Legendre on [a, b]
double integrate_gl(const std::function<double(double)>& f, double a, double b, int order);

// adaptive bisection with an embedded order/2 error estimate
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int order = 31, int max_depth = 24);

} // namespace glmep
