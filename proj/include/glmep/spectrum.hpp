#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace glmep {

enum class SpectrumKind { Flat, Geometric, TwoPoint, Empirical };

struct LorenzCurve {
    std::vector<double> u_grid;
    std::vector<double> L_values;
};

enum class LorenzOrder { LessSpiky, MoreSpiky, Equivalent, Incomparable };

// Limiting eigenvalue distribution of A^T A. Compact support with positive
// lower edge; mean plays the role of delta = m/n for sensing spectra.
class SpectrumModel {
public:
    // point mass at delta
    static SpectrumModel flat(double delta);
    // density 1/(beta*lambda) on (alpha A(beta) e^-beta, alpha A(beta)];
    // beta == 0 degenerates to the flat point mass at alpha
    static SpectrumModel geometric(double alpha, double beta);
    // lambda = a w.p. P, (delta - a P)/(1 - P) w.p. 1-P
    static SpectrumModel two_point(double a, double P, double delta);
    static SpectrumModel empirical(std::vector<double> values);

    SpectrumKind kind() const { return kind_; }
    double mean() const { return mean_; }
    std::pair<double, double> support() const { return {support_lo_, support_hi_}; }

    double expect(const std::function<double(double)>& h) const;
    // E[ v_l / (v_l + lambda) ]
    double mse_functional(double v_l) const;
    double quantile(double u) const;

    std::vector<double> sample_eigenvalues(int n, std::uint64_t seed) const;
    // deterministic quantile placement lambda_i = F^-1((i+1/2)/n)
    std::vector<double> stratified_eigenvalues(int n) const;

    LorenzCurve lorenz_curve(int grid_size) const;
    // int_0^u F^-1(y) dy, exact per variant
    double lorenz_integral(double u) const;

    std::string describe() const;

    // parameters (meaning depends on kind)
    double param_alpha() const { return alpha_; }
    double param_beta() const { return beta_; }
    double param_a() const { return a_; }
    double param_P() const { return P_; }
    const std::vector<double>& values() const { return values_; }

private:
    SpectrumModel() = default;
    SpectrumKind kind_ = SpectrumKind::Flat;
    double mean_ = 0.0;
    double support_lo_ = 0.0, support_hi_ = 0.0;
    double alpha_ = 0.0, beta_ = 0.0;    // geometric
    double a_ = 0.0, P_ = 0.0, b_ = 0.0; // two-point
    std::vector<double> values_;         // empirical, sorted
};

// Pointwise comparison of Lorenz curves on a shared grid with slack eps.
// LessSpiky means m1 has the (weakly) higher curve everywhere.
LorenzOrder lorenz_compare(const SpectrumModel& m1, const SpectrumModel& m2, double eps = 1e-9);

SpectrumModel make_spectrum_by_name(const std::string& kind, double delta, double beta = 0.0,
                                    double a = 0.0, double P = 0.0);

} // namespace glmep
