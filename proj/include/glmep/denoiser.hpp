#pragma once

#include "glmep/nonlinearity.hpp"

#include <span>

namespace glmep {

struct PosteriorStats {
    double mean = 0.0;
    double var = 0.0;
    double log_evidence = 0.0;
};

struct DenoiserOptions {
    // weight discrete roots by 1/|f'(u_i)|; for every shipped nonlinearity the
    // slopes have unit magnitude so this is a no-op there
    bool jacobian_weights = true;
};

// Posterior mean/variance of U ~ N(z_r, v) conditioned on f(U) = y.
// Discrete preimages mix the roots; flat levels mix truncated Gaussians.
PosteriorStats posterior_stats(const PiecewiseFunction& f, double z_r, double y, double v,
                               const DenoiserOptions& opts = {});

// scratch-reusing overload for hot loops
PosteriorStats posterior_stats(const PiecewiseFunction& f, double z_r, double y, double v,
                               PreimageSet& scratch, const DenoiserOptions& opts = {});

// d eta / d z_r == posterior variance / v (Gaussian-prior identity)
double eta_prime(const PiecewiseFunction& f, double z_r, double y, double v,
                 const DenoiserOptions& opts = {});

// Posterior mean of Z given Z_r = z_r and y = f(Z + W), W ~ N(0, sigma_w2):
// with c = v/(v+sigma_w2), mean = z_r + c*(E[U|...] - z_r) where U = Z + W has
// prior N(z_r, v+sigma_w2); var = c^2 var_U + v sigma_w2/(v+sigma_w2).
PosteriorStats posterior_stats_noisy(const PiecewiseFunction& f, double z_r, double y, double v,
                                     double sigma_w2, const DenoiserOptions& opts = {});
PosteriorStats posterior_stats_noisy(const PiecewiseFunction& f, double z_r, double y, double v,
                                     double sigma_w2, PreimageSet& scratch,
                                     const DenoiserOptions& opts = {});

double eta_prime_noisy(const PiecewiseFunction& f, double z_r, double y, double v,
                       double sigma_w2, const DenoiserOptions& opts = {});

// empirical mean of eta' over paired vectors; the Onsager coefficient
double divergence_mean(const PiecewiseFunction& f, std::span<const double> z_r,
                       std::span<const double> y, double v, double sigma_w2 = 0.0,
                       const DenoiserOptions& opts = {});

} // namespace glmep
