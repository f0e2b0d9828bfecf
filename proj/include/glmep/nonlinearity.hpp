#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace glmep {

enum class SegmentKind { Constant, MonotoneAffine, MonotoneSmooth };

struct Segment {
    double lo = 0.0;
    double hi = 0.0;
    SegmentKind kind = SegmentKind::Constant;
    // Constant
    double level = 0.0;
    // MonotoneAffine
    double slope = 0.0;
    double intercept = 0.0;
    // MonotoneSmooth
    std::function<double(double)> forward;
    std::function<double(double)> derivative;
    int direction = +1;

    static Segment constant(double lo, double hi, double level);
    static Segment affine(double lo, double hi, double slope, double intercept);
    static Segment smooth(double lo, double hi, std::function<double(double)> fwd,
                          std::function<double(double)> deriv, int direction);
};

struct PreimagePoint {
    double root;
    double jacobian;  // |f'(root)|
};

struct PreimageSet {
    std::vector<PreimagePoint> points;
    std::vector<std::pair<double, double>> intervals;
    void clear() {
        points.clear();
        intervals.clear();
    }
    bool empty() const { return points.empty() && intervals.empty(); }
};

// A piecewise-smooth scalar function: ordered segments partitioning the real
// line, each strictly monotone or constant.
class PiecewiseFunction {
public:
    static constexpr double kRootTol = 1e-12;
    static constexpr double kFlatTol = 1e-9;
    static constexpr int kBisectionCap = 200;

    PiecewiseFunction(std::string name, std::vector<Segment> segments);

    double operator()(double z) const { return evaluate(z); }
    double evaluate(double z) const;

    // roots on monotone segments and constant segments matching the level
    void preimage(double y, double tol, PreimageSet& out) const;
    PreimageSet preimage(double y, double tol = kRootTol) const;

    // Q_f: levels attained on constant segments, deduplicated
    std::vector<double> flat_levels() const;

    // d(f(Z)) = Gaussian mass of the monotone segments
    double info_dimension() const;
    // conditional MMSE dimension, 1 - d(f(Z))
    double mmse_dimension() const;
    // 1/d(f(Z)); +inf when d = 0
    double delta_opt() const;

    bool is_even() const { return is_even_; }
    const std::string& name() const { return name_; }
    const std::vector<Segment>& segments() const { return segments_; }
    // finite segment endpoints, ascending
    const std::vector<double>& boundaries() const { return boundaries_; }

private:
    std::string name_;
    std::vector<Segment> segments_;
    std::vector<double> boundaries_;
    bool is_even_ = false;

    const Segment& segment_at(double z) const;
};

// shipped catalog
PiecewiseFunction make_abs();
PiecewiseFunction make_sign();
PiecewiseFunction make_identity();
// f(z) = |z| for |z|<1, |z|-1 for |z|>=1
PiecewiseFunction make_example3();
// f(z) = |z| for |z|<s, s otherwise
PiecewiseFunction make_saturating_abs(double s);

struct AffineRecord {
    double lo, hi, slope, intercept;  // slope == 0 encodes a constant segment
};
PiecewiseFunction make_custom_affine(const std::string& name,
                                     const std::vector<AffineRecord>& records);

// CLI selector: abs | sign | identity | example3 | saturating (with parameter s)
PiecewiseFunction make_by_name(const std::string& kind, double s = 1.0);

} // namespace glmep
