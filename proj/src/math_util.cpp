#include "glmep/math_util.hpp"

#include <algorithm>
#include <cassert>

namespace glmep {

double normal_hazard(double x) {
    if (x < 8.0) {
        double sf = normal_sf(x);
        return normal_pdf(x) / sf;
    }
    // Laplace continued fraction for Mills' ratio: sf(x)/pdf(x) = 1/(x + 1/(x + 2/(x + ...)))
    double cf = 0.0;
    for (int k = 32; k >= 1; --k)
        cf = static_cast<double>(k) / (x + cf);
    return x + cf;
}

double log_normal_sf(double x) {
    if (x < 8.0) {
        return std::log(normal_sf(x));
    }
    return log_normal_pdf(x) - std::log(normal_hazard(x));
}

double normal_icdf(double p) {
    // AS241 algorithm PPND16 (Wichura, 1988)
    assert(p > 0.0 && p < 1.0);
    const double q = p - 0.5;
    double r;
    if (std::abs(q) <= 0.425) {
        r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                     6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                   1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
                 1.3314166789178437745e+2) * r + 3.3871328727963666080e0) /
               (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                     3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                   5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
                 4.2313330701600911252e+1) * r + 1.0);
    }
    r = (q < 0.0) ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double val;
    if (r <= 5.0) {
        r -= 1.6;
        val = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                    2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
                  3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
                4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
              (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                    1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                  6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
                2.05319162663775882187e0) * r + 1.0);
    } else {
        r -= 5.0;
        val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                    1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                  2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
                5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
              (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                    1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                  1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
                5.99832206555887937690e-1) * r + 1.0);
    }
    return (q < 0.0) ? -val : val;
}

namespace {

// standardized moments on (al, be) with 0 <= al < be (be may be +inf)
TruncMoments trunc_std_upper(double al, double be) {
    const double lsa = log_normal_sf(al);
    const bool be_fin = std::isfinite(be);
    const double lsb = be_fin ? log_normal_sf(be) : -kInf;
    const double r = be_fin ? std::exp(lsb - lsa) : 0.0;
    const double ha = normal_hazard(al);
    const double hb = be_fin ? normal_hazard(be) : 0.0;

    TruncMoments out{};
    if (r >= 1.0 || (be_fin && be - al < 1e-9)) {
        // vanishing interval: midpoint approximation
        double mid = be_fin ? 0.5 * (al + be) : al;
        double w = be_fin ? (be - al) : 0.0;
        out.log_mass = (w > 0.0) ? log_normal_pdf(mid) + std::log(w) : -kInf;
        out.mean = mid;
        out.var = w * w / 12.0;
        return out;
    }
    out.log_mass = lsa + std::log1p(-r);
    const double denom = 1.0 - r;
    const double m = (ha - r * hb) / denom;
    const double x2 = 1.0 + (al * ha - (be_fin ? r * be * hb : 0.0)) / denom;
    out.mean = m;
    out.var = std::max(x2 - m * m, 0.0);
    return out;
}

} // namespace

TruncMoments truncated_normal(double a, double b, double mu, double sigma) {
    assert(sigma > 0.0 && a < b);
    const double al = std::isfinite(a) ? (a - mu) / sigma : -kInf;
    const double be = std::isfinite(b) ? (b - mu) / sigma : kInf;

    if (al >= 0.0) {
        TruncMoments t = trunc_std_upper(al, be);
        return {t.log_mass, mu + sigma * t.mean, sigma * sigma * t.var};
    }
    if (be <= 0.0) {
        TruncMoments t = trunc_std_upper(-be, -al);
        return {t.log_mass, mu - sigma * t.mean, sigma * sigma * t.var};
    }

    // interval straddles the mean: direct formulas are well conditioned
    const double Fa = std::isfinite(al) ? normal_cdf(al) : 0.0;
    const double Fb = std::isfinite(be) ? normal_cdf(be) : 1.0;
    const double P = Fb - Fa;
    const double pa = std::isfinite(al) ? normal_pdf(al) : 0.0;
    const double pb = std::isfinite(be) ? normal_pdf(be) : 0.0;
    const double h = (pa - pb) / P;
    const double ta = std::isfinite(al) ? al * pa : 0.0;
    const double tb = std::isfinite(be) ? be * pb : 0.0;
    const double x2 = 1.0 + (ta - tb) / P;
    TruncMoments out{};
    out.log_mass = std::log(P);
    out.mean = mu + sigma * h;
    out.var = sigma * sigma * std::max(x2 - h * h, 0.0);
    return out;
}

double log_sum_exp(std::span<const double> v) {
    double mx = -kInf;
    for (double x : v) mx = std::max(mx, x);
    if (!std::isfinite(mx)) return mx;
    double s = 0.0;
    for (double x : v) s += std::exp(x - mx);
    return mx + std::log(s);
}

} // namespace glmep
