#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace glmep {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline double normal_pdf(double x) {
    static const double inv_sqrt_2pi = 0.3989422804014326779;
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

inline double log_normal_pdf(double x) {
    static const double log_inv_sqrt_2pi = -0.9189385332046727418;
    return log_inv_sqrt_2pi - 0.5 * x * x;
}

inline double normal_cdf(double x) {
    return 0.5 * std::erfc(-x * 0.70710678118654752440);
}

inline double normal_sf(double x) {
    return 0.5 * std::erfc(x * 0.70710678118654752440);
}

// hazard(x) = pdf(x) / sf(x), stable over the whole real line
double normal_hazard(double x);

// log of the upper tail probability, stable for large x
double log_normal_sf(double x);

// Wichura's AS241 inverse normal CDF (double precision)
double normal_icdf(double p);

struct TruncMoments {
    double log_mass;  // log P(a < X < b) for X ~ N(mu, sigma^2)
    double mean;      // E[X | a < X < b]
    double var;       // Var[X | a < X < b]
};

// Moments of N(mu, sigma^2) truncated to (a, b). Endpoints may be +-inf.
// Uses survival-function/hazard formulas so that truncations many standard
// deviations into a tail keep full relative accuracy.
TruncMoments truncated_normal(double a, double b, double mu, double sigma);

double log_sum_exp(std::span<const double> v);

} // namespace glmep
