#include "glmep/spectrum.hpp"

#include "glmep/errors.hpp"
#include "glmep/math_util.hpp"
#include "glmep/quadrature.hpp"
#include "glmep/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace glmep {

SpectrumModel SpectrumModel::flat(double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("flat spectrum: delta must be positive");
    SpectrumModel m;
    m.kind_ = SpectrumKind::Flat;
    m.mean_ = delta;
    m.support_lo_ = m.support_hi_ = delta;
    m.alpha_ = delta;
    return m;
}

SpectrumModel SpectrumModel::geometric(double alpha, double beta) {
    if (!(alpha > 0.0)) throw std::invalid_argument("geometric spectrum: alpha must be positive");
    if (beta < 0.0) throw std::invalid_argument("geometric spectrum: beta must be nonnegative");
    if (beta == 0.0) return flat(alpha);  // degenerate density: flat spectrum
    SpectrumModel m;
    m.kind_ = SpectrumKind::Geometric;
    m.alpha_ = alpha;
    m.beta_ = beta;
    const double A = beta / (1.0 - std::exp(-beta));
    m.support_hi_ = alpha * A;
    m.support_lo_ = alpha * A * std::exp(-beta);
    m.mean_ = alpha;
    return m;
}

SpectrumModel SpectrumModel::two_point(double a, double P, double delta) {
    if (!(a > 0.0)) throw std::invalid_argument("two-point spectrum: a must be positive");
    if (!(P > 0.0 && P < 1.0)) throw std::invalid_argument("two-point spectrum: P in (0,1)");
    if (!(a < delta)) throw std::invalid_argument("two-point spectrum: a must be < delta");
    SpectrumModel m;
    m.kind_ = SpectrumKind::TwoPoint;
    m.a_ = a;
    m.P_ = P;
    m.b_ = (delta - a * P) / (1.0 - P);
    m.mean_ = delta;
    m.support_lo_ = std::min(a, m.b_);
    m.support_hi_ = std::max(a, m.b_);
    return m;
}

SpectrumModel SpectrumModel::empirical(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("empirical spectrum: no values");
    for (double v : values)
        if (!(v > 0.0)) throw std::invalid_argument("empirical spectrum: values must be positive");
    SpectrumModel m;
    m.kind_ = SpectrumKind::Empirical;
    std::sort(values.begin(), values.end());
    m.mean_ = std::accumulate(values.begin(), values.end(), 0.0) / values.size();
    m.support_lo_ = values.front();
    m.support_hi_ = values.back();
    m.values_ = std::move(values);
    return m;
}

double SpectrumModel::expect(const std::function<double(double)>& h) const {
    switch (kind_) {
        case SpectrumKind::Flat: return h(alpha_);
        case SpectrumKind::TwoPoint: return P_ * h(a_) + (1.0 - P_) * h(b_);
        case SpectrumKind::Geometric: {
            // lambda = support_hi * exp(-beta u), u ~ Uniform(0,1)
            const double lmax = support_hi_;
            const double beta = beta_;
            return integrate_adaptive([&](double u) { return h(lmax * std::exp(-beta * u)); },
                                      0.0, 1.0, 1e-10);
        }
        case SpectrumKind::Empirical: {
            double s = 0.0;
            for (double v : values_) s += h(v);
            return s / values_.size();
        }
    }
    return 0.0;
}

double SpectrumModel::mse_functional(double v_l) const {
    if (v_l < 0.0) throw std::invalid_argument("mse_functional: v_l must be nonnegative");
    if (v_l == 0.0) return 0.0;
    if (std::isinf(v_l)) return 1.0;
    return expect([v_l](double lam) { return v_l / (v_l + lam); });
}

double SpectrumModel::quantile(double u) const {
    u = std::clamp(u, 0.0, 1.0);
    switch (kind_) {
        case SpectrumKind::Flat: return alpha_;
        case SpectrumKind::TwoPoint: return (u < P_) ? a_ : b_;
        case SpectrumKind::Geometric: return support_hi_ * std::exp(-beta_ * (1.0 - u));
        case SpectrumKind::Empirical: {
            size_t i = std::min(values_.size() - 1,
                                static_cast<size_t>(u * static_cast<double>(values_.size())));
            return values_[i];
        }
    }
    return 0.0;
}

std::vector<double> SpectrumModel::sample_eigenvalues(int n, std::uint64_t seed) const {
    if (n < 1) throw std::invalid_argument("sample_eigenvalues: n must be >= 1");
    Rng rng(seed);
    std::vector<double> out(n);
    switch (kind_) {
        case SpectrumKind::Flat:
            std::fill(out.begin(), out.end(), alpha_);
            break;
        case SpectrumKind::Geometric:
            for (double& v : out) v = support_hi_ * std::exp(-beta_ * rng.uniform01());
            break;
        case SpectrumKind::TwoPoint:
            for (double& v : out) v = (rng.uniform01() < P_) ? a_ : b_;
            break;
        case SpectrumKind::Empirical:
            for (double& v : out) {
                size_t i = std::min(values_.size() - 1,
                                    static_cast<size_t>(rng.uniform01() * values_.size()));
                v = values_[i];
            }
            break;
    }
    return out;
}

std::vector<double> SpectrumModel::stratified_eigenvalues(int n) const {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = quantile((i + 0.5) / n);
    return out;
}

double SpectrumModel::lorenz_integral(double u) const {
    u = std::clamp(u, 0.0, 1.0);
    switch (kind_) {
        case SpectrumKind::Flat: return alpha_ * u;
        case SpectrumKind::Geometric:
            // int_0^u lmin e^{beta y} dy
            return support_lo_ * (std::exp(beta_ * u) - 1.0) / beta_;
        case SpectrumKind::TwoPoint:
            return a_ * std::min(u, P_) + b_ * std::max(0.0, u - P_);
        case SpectrumKind::Empirical: {
            const double pos = u * values_.size();
            const size_t whole = std::min(values_.size(), static_cast<size_t>(pos));
            double s = 0.0;
            for (size_t i = 0; i < whole; ++i) s += values_[i];
            if (whole < values_.size()) s += (pos - whole) * values_[whole];
            return s / values_.size();
        }
    }
    return 0.0;
}

LorenzCurve SpectrumModel::lorenz_curve(int grid_size) const {
    if (grid_size < 2) throw std::invalid_argument("lorenz_curve: grid_size must be >= 2");
    LorenzCurve c;
    c.u_grid.resize(grid_size);
    c.L_values.resize(grid_size);
    const double total = lorenz_integral(1.0);
    for (int i = 0; i < grid_size; ++i) {
        const double u = static_cast<double>(i) / (grid_size - 1);
        c.u_grid[i] = u;
        c.L_values[i] = lorenz_integral(u) / total;
    }
    c.L_values.front() = 0.0;
    c.L_values.back() = 1.0;
    return c;
}

LorenzOrder lorenz_compare(const SpectrumModel& m1, const SpectrumModel& m2, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("lorenz_compare: eps must be positive");
    if (std::abs(m1.mean() - m2.mean()) > eps)
        throw MeanMismatch("lorenz_compare: means differ by " +
                           std::to_string(std::abs(m1.mean() - m2.mean())));
    const int kGrid = 1001;
    bool ge_all = true, le_all = true;
    const double total1 = m1.lorenz_integral(1.0);
    const double total2 = m2.lorenz_integral(1.0);
    for (int i = 0; i < kGrid; ++i) {
        const double u = static_cast<double>(i) / (kGrid - 1);
        const double L1 = m1.lorenz_integral(u) / total1;
        const double L2 = m2.lorenz_integral(u) / total2;
        if (L1 < L2 - eps) ge_all = false;
        if (L1 > L2 + eps) le_all = false;
    }
    if (ge_all && le_all) return LorenzOrder::Equivalent;
    if (ge_all) return LorenzOrder::LessSpiky;
    if (le_all) return LorenzOrder::MoreSpiky;
    return LorenzOrder::Incomparable;
}

std::string SpectrumModel::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case SpectrumKind::Flat: os << "flat(delta=" << alpha_ << ")"; break;
        case SpectrumKind::Geometric:
            os << "geometric(alpha=" << alpha_ << ",beta=" << beta_ << ")";
            break;
        case SpectrumKind::TwoPoint:
            os << "two_point(a=" << a_ << ",P=" << P_ << ",delta=" << mean_ << ")";
            break;
        case SpectrumKind::Empirical: os << "empirical(n=" << values_.size() << ")"; break;
    }
    return os.str();
}

SpectrumModel make_spectrum_by_name(const std::string& kind, double delta, double beta, double a,
                                    double P) {
    if (kind == "flat") return SpectrumModel::flat(delta);
    if (kind == "geometric") return SpectrumModel::geometric(delta, beta);
    if (kind == "two_point" || kind == "twopoint") return SpectrumModel::two_point(a, P, delta);
    throw ConfigError("unknown spectrum kind: " + kind);
}

} // namespace glmep
