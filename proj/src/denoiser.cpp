#include "glmep/denoiser.hpp"

#include "glmep/errors.hpp"
#include "glmep/math_util.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace glmep {

namespace {

constexpr size_t kInlineCap = 16;

PosteriorStats stats_from_points(const PreimageSet& pre, double z_r, double v,
                                 bool jacobian_weights) {
    const size_t k = pre.points.size();
    std::array<double, kInlineCap> lw_buf;
    std::vector<double> lw_dyn;
    double* lw = lw_buf.data();
    if (k > kInlineCap) {
        lw_dyn.resize(k);
        lw = lw_dyn.data();
    }
    const double log_norm = -0.5 * std::log(2.0 * M_PI * v);
    double mx = -kInf;
    for (size_t i = 0; i < k; ++i) {
        const double d = pre.points[i].root - z_r;
        double l = log_norm - 0.5 * d * d / v;
        if (jacobian_weights) l -= std::log(pre.points[i].jacobian);
        lw[i] = l;
        mx = std::max(mx, l);
    }
    if (!std::isfinite(mx))
        throw NumericalUnderflow("posterior_stats: all point weights underflowed");
    double sw = 0.0, sm = 0.0, s2 = 0.0;
    for (size_t i = 0; i < k; ++i) {
        const double w = std::exp(lw[i] - mx);
        const double u = pre.points[i].root;
        sw += w;
        sm += w * u;
        s2 += w * u * u;
    }
    PosteriorStats out;
    out.mean = sm / sw;
    out.var = std::max(s2 / sw - out.mean * out.mean, 0.0);
    out.log_evidence = mx + std::log(sw);
    return out;
}

PosteriorStats stats_from_intervals(const PreimageSet& pre, double z_r, double v) {
    const size_t k = pre.intervals.size();
    const double sigma = std::sqrt(v);
    std::array<TruncMoments, kInlineCap> tm_buf;
    std::vector<TruncMoments> tm_dyn;
    TruncMoments* tm = tm_buf.data();
    if (k > kInlineCap) {
        tm_dyn.resize(k);
        tm = tm_dyn.data();
    }
    double mx = -kInf;
    for (size_t i = 0; i < k; ++i) {
        tm[i] = truncated_normal(pre.intervals[i].first, pre.intervals[i].second, z_r, sigma);
        mx = std::max(mx, tm[i].log_mass);
    }
    if (!std::isfinite(mx))
        throw NumericalUnderflow("posterior_stats: all interval masses underflowed");
    double sw = 0.0, sm = 0.0, s2 = 0.0;
    for (size_t i = 0; i < k; ++i) {
        const double w = std::exp(tm[i].log_mass - mx);
        sw += w;
        sm += w * tm[i].mean;
        s2 += w * (tm[i].var + tm[i].mean * tm[i].mean);
    }
    PosteriorStats out;
    out.mean = sm / sw;
    out.var = std::max(s2 / sw - out.mean * out.mean, 0.0);
    out.log_evidence = mx + std::log(sw);
    return out;
}

} // namespace

PosteriorStats posterior_stats(const PiecewiseFunction& f, double z_r, double y, double v,
                               PreimageSet& scratch, const DenoiserOptions& opts) {
    if (!(v > 0.0)) throw std::invalid_argument("posterior_stats: v must be positive");
    f.preimage(y, PiecewiseFunction::kRootTol, scratch);
    if (scratch.empty())
        throw EmptyPreimage("posterior_stats: y = " + std::to_string(y) +
                            " is not attained by " + f.name());
    // an atom of f(Z) carries all conditional mass; isolated roots are a null set
    if (!scratch.intervals.empty()) return stats_from_intervals(scratch, z_r, v);
    return stats_from_points(scratch, z_r, v, opts.jacobian_weights);
}

PosteriorStats posterior_stats(const PiecewiseFunction& f, double z_r, double y, double v,
                               const DenoiserOptions& opts) {
    thread_local PreimageSet scratch;
    return posterior_stats(f, z_r, y, v, scratch, opts);
}

double eta_prime(const PiecewiseFunction& f, double z_r, double y, double v,
                 const DenoiserOptions& opts) {
    return posterior_stats(f, z_r, y, v, opts).var / v;
}

PosteriorStats posterior_stats_noisy(const PiecewiseFunction& f, double z_r, double y, double v,
                                     double sigma_w2, PreimageSet& scratch,
                                     const DenoiserOptions& opts) {
    if (sigma_w2 < 0.0) throw std::invalid_argument("posterior_stats_noisy: sigma_w2 < 0");
    if (sigma_w2 == 0.0) return posterior_stats(f, z_r, y, v, scratch, opts);
    const double vt = v + sigma_w2;
    const PosteriorStats inner = posterior_stats(f, z_r, y, vt, scratch, opts);
    const double c = v / vt;
    PosteriorStats out;
    out.mean = z_r + c * (inner.mean - z_r);
    out.var = c * c * inner.var + v * sigma_w2 / vt;
    out.log_evidence = inner.log_evidence;
    return out;
}

PosteriorStats posterior_stats_noisy(const PiecewiseFunction& f, double z_r, double y, double v,
                                     double sigma_w2, const DenoiserOptions& opts) {
    thread_local PreimageSet scratch;
    return posterior_stats_noisy(f, z_r, y, v, sigma_w2, scratch, opts);
}

double eta_prime_noisy(const PiecewiseFunction& f, double z_r, double y, double v,
                       double sigma_w2, const DenoiserOptions& opts) {
    return posterior_stats_noisy(f, z_r, y, v, sigma_w2, opts).var / v;
}

double divergence_mean(const PiecewiseFunction& f, std::span<const double> z_r,
                       std::span<const double> y, double v, double sigma_w2,
                       const DenoiserOptions& opts) {
    if (z_r.size() != y.size() || z_r.empty())
        throw std::invalid_argument("divergence_mean: z_r and y must have equal nonzero length");
    PreimageSet scratch;
    double sum = 0.0;
    for (size_t i = 0; i < z_r.size(); ++i) {
        try {
            sum += posterior_stats_noisy(f, z_r[i], y[i], v, sigma_w2, scratch, opts).var / v;
        } catch (const std::exception& e) {
            throw std::runtime_error("divergence_mean: element " + std::to_string(i) + ": " +
                                     e.what());
        }
    }
    return sum / static_cast<double>(z_r.size());
}

} // namespace glmep
