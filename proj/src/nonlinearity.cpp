#include "glmep/nonlinearity.hpp"

#include "glmep/errors.hpp"
#include "glmep/math_util.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace glmep {

Segment Segment::constant(double lo, double hi, double level) {
    Segment s;
    s.lo = lo;
    s.hi = hi;
    s.kind = SegmentKind::Constant;
    s.level = level;
    return s;
}

Segment Segment::affine(double lo, double hi, double slope, double intercept) {
    if (slope == 0.0) throw std::invalid_argument("affine segment requires nonzero slope");
    Segment s;
    s.lo = lo;
    s.hi = hi;
    s.kind = SegmentKind::MonotoneAffine;
    s.slope = slope;
    s.intercept = intercept;
    return s;
}

Segment Segment::smooth(double lo, double hi, std::function<double(double)> fwd,
                        std::function<double(double)> deriv, int direction) {
    if (!fwd || !deriv) throw std::invalid_argument("smooth segment requires forward and derivative");
    if (direction != 1 && direction != -1)
        throw std::invalid_argument("smooth segment direction must be +-1");
    Segment s;
    s.lo = lo;
    s.hi = hi;
    s.kind = SegmentKind::MonotoneSmooth;
    s.forward = std::move(fwd);
    s.derivative = std::move(deriv);
    s.direction = direction;
    return s;
}

PiecewiseFunction::PiecewiseFunction(std::string name, std::vector<Segment> segments)
    : name_(std::move(name)), segments_(std::move(segments)) {
    if (segments_.empty()) throw std::invalid_argument(name_ + ": no segments");
    if (std::isfinite(segments_.front().lo))
        throw std::invalid_argument(name_ + ": first segment must start at -inf");
    if (std::isfinite(segments_.back().hi))
        throw std::invalid_argument(name_ + ": last segment must end at +inf");
    for (size_t i = 0; i < segments_.size(); ++i) {
        if (!(segments_[i].lo < segments_[i].hi))
            throw std::invalid_argument(name_ + ": segment endpoints out of order");
        if (i + 1 < segments_.size() && segments_[i].hi != segments_[i + 1].lo)
            throw std::invalid_argument(name_ + ": segments must tile the real line");
    }
    for (const Segment& s : segments_) {
        if (std::isfinite(s.lo)) boundaries_.push_back(s.lo);
    }
    std::sort(boundaries_.begin(), boundaries_.end());
    boundaries_.erase(std::unique(boundaries_.begin(), boundaries_.end()), boundaries_.end());

    // symmetry flag from a dense grid probe
    is_even_ = true;
    for (int k = 1; k <= 257; ++k) {
        double z = 8.0 * k / 257.0;
        if (std::abs(evaluate(z) - evaluate(-z)) > 1e-12) {
            is_even_ = false;
            break;
        }
    }
}

const Segment& PiecewiseFunction::segment_at(double z) const {
    // segment i covers [lo, hi); the last one is closed above
    for (size_t i = 0; i + 1 < segments_.size(); ++i)
        if (z < segments_[i].hi) return segments_[i];
    return segments_.back();
}

double PiecewiseFunction::evaluate(double z) const {
    const Segment& s = segment_at(z);
    switch (s.kind) {
        case SegmentKind::Constant: return s.level;
        case SegmentKind::MonotoneAffine: return s.slope * z + s.intercept;
        case SegmentKind::MonotoneSmooth: return s.forward(z);
    }
    return 0.0;
}

namespace {

// bracket [a,b] with (f(a)-y)(f(b)-y) <= 0 on a monotone smooth segment; the
// unbounded side is expanded geometrically from the finite endpoint
bool bracket_root(const Segment& s, double y, double& a, double& b) {
    auto g = [&](double u) { return s.forward(u) - y; };
    const bool lo_fin = std::isfinite(s.lo);
    const bool hi_fin = std::isfinite(s.hi);
    if (lo_fin && hi_fin) {
        a = s.lo;
        b = s.hi;
        return g(a) * g(b) <= 0.0;
    }
    double anchor = lo_fin ? s.lo : (hi_fin ? s.hi : 0.0);
    double ga = g(anchor);
    if (ga == 0.0) {
        a = b = anchor;
        return true;
    }
    double step = std::max(1.0, std::abs(anchor));
    for (int it = 0; it < 400; ++it) {
        double probe_up = hi_fin ? std::min(anchor + step, s.hi) : anchor + step;
        double probe_dn = lo_fin ? std::max(anchor - step, s.lo) : anchor - step;
        if (!lo_fin && g(probe_dn) * ga <= 0.0) {
            a = probe_dn;
            b = anchor;
            return true;
        }
        if (!hi_fin && g(probe_up) * ga <= 0.0) {
            a = anchor;
            b = probe_up;
            return true;
        }
        step *= 2.0;
        if (!std::isfinite(step)) break;
    }
    return false;
}

double bisect_root(const Segment& s, double y, double a, double b, double tol) {
    auto g = [&](double u) { return s.forward(u) - y; };
    double ga = g(a);
    if (ga == 0.0) return a;
    for (int it = 0; it < PiecewiseFunction::kBisectionCap; ++it) {
        double mid = 0.5 * (a + b);
        double gm = g(mid);
        if (gm == 0.0 || 0.5 * (b - a) < tol) return mid;
        if (ga * gm < 0.0) {
            b = mid;
        } else {
            a = mid;
            ga = gm;
        }
    }
    if (0.5 * (b - a) < tol) return 0.5 * (a + b);
    throw BisectionFailure("preimage: bisection did not converge on segment of " +
                           std::to_string(a));
}

} // namespace

void PiecewiseFunction::preimage(double y, double tol, PreimageSet& out) const {
    if (!(tol > 0.0)) throw std::invalid_argument("preimage: tol must be positive");
    out.clear();
    const double edge = 1e-12;
    for (const Segment& s : segments_) {
        switch (s.kind) {
            case SegmentKind::Constant:
                if (std::abs(s.level - y) <= kFlatTol) out.intervals.emplace_back(s.lo, s.hi);
                break;
            case SegmentKind::MonotoneAffine: {
                double u = (y - s.intercept) / s.slope;
                double pad = edge * std::max(1.0, std::abs(u));
                if (u >= s.lo - pad && u <= s.hi + pad)
                    out.points.push_back({std::clamp(u, s.lo, s.hi), std::abs(s.slope)});
                break;
            }
            case SegmentKind::MonotoneSmooth: {
                // range check at finite endpoints first
                double a, b;
                if (!bracket_root(s, y, a, b)) break;
                double u = (a == b) ? a : bisect_root(s, y, a, b, tol);
                out.points.push_back({u, std::abs(s.derivative(u))});
                break;
            }
        }
    }
    // merge duplicated roots from shared segment boundaries
    std::sort(out.points.begin(), out.points.end(),
              [](const PreimagePoint& p, const PreimagePoint& q) { return p.root < q.root; });
    auto last = std::unique(out.points.begin(), out.points.end(),
                            [&](const PreimagePoint& p, const PreimagePoint& q) {
                                return std::abs(p.root - q.root) <= 1e-9;
                            });
    out.points.erase(last, out.points.end());
}

PreimageSet PiecewiseFunction::preimage(double y, double tol) const {
    PreimageSet out;
    preimage(y, tol, out);
    return out;
}

std::vector<double> PiecewiseFunction::flat_levels() const {
    std::vector<double> levels;
    for (const Segment& s : segments_)
        if (s.kind == SegmentKind::Constant) levels.push_back(s.level);
    std::sort(levels.begin(), levels.end());
    auto last = std::unique(levels.begin(), levels.end(), [](double a, double b) {
        return std::abs(a - b) <= PiecewiseFunction::kFlatTol;
    });
    levels.erase(last, levels.end());
    return levels;
}

double PiecewiseFunction::info_dimension() const {
    double d = 0.0;
    for (const Segment& s : segments_) {
        if (s.kind == SegmentKind::Constant) continue;
        double lo = std::isfinite(s.lo) ? normal_cdf(s.lo) : 0.0;
        double hi = std::isfinite(s.hi) ? normal_cdf(s.hi) : 1.0;
        d += hi - lo;
    }
    return std::clamp(d, 0.0, 1.0);
}

double PiecewiseFunction::mmse_dimension() const { return 1.0 - info_dimension(); }

double PiecewiseFunction::delta_opt() const {
    double d = info_dimension();
    if (d <= 0.0) return kInf;
    return 1.0 / d;
}

PiecewiseFunction make_abs() {
    return PiecewiseFunction("abs", {Segment::affine(-kInf, 0.0, -1.0, 0.0),
                                     Segment::affine(0.0, kInf, 1.0, 0.0)});
}

PiecewiseFunction make_sign() {
    return PiecewiseFunction("sign", {Segment::constant(-kInf, 0.0, -1.0),
                                      Segment::constant(0.0, kInf, 1.0)});
}

PiecewiseFunction make_identity() {
    return PiecewiseFunction("identity", {Segment::affine(-kInf, kInf, 1.0, 0.0)});
}

PiecewiseFunction make_example3() {
    return PiecewiseFunction("example3", {Segment::affine(-kInf, -1.0, -1.0, -1.0),
                                          Segment::affine(-1.0, 0.0, -1.0, 0.0),
                                          Segment::affine(0.0, 1.0, 1.0, 0.0),
                                          Segment::affine(1.0, kInf, 1.0, -1.0)});
}

PiecewiseFunction make_saturating_abs(double s) {
    if (!(s > 0.0)) throw std::invalid_argument("saturating_abs: s must be positive");
    return PiecewiseFunction("saturating", {Segment::constant(-kInf, -s, s),
                                            Segment::affine(-s, 0.0, -1.0, 0.0),
                                            Segment::affine(0.0, s, 1.0, 0.0),
                                            Segment::constant(s, kInf, s)});
}

PiecewiseFunction make_custom_affine(const std::string& name,
                                     const std::vector<AffineRecord>& records) {
    std::vector<Segment> segs;
    segs.reserve(records.size());
    for (const AffineRecord& r : records) {
        if (r.slope == 0.0)
            segs.push_back(Segment::constant(r.lo, r.hi, r.intercept));
        else
            segs.push_back(Segment::affine(r.lo, r.hi, r.slope, r.intercept));
    }
    return PiecewiseFunction(name, std::move(segs));
}

PiecewiseFunction make_by_name(const std::string& kind, double s) {
    if (kind == "abs") return make_abs();
    if (kind == "sign") return make_sign();
    if (kind == "identity") return make_identity();
    if (kind == "example3") return make_example3();
    if (kind == "saturating") return make_saturating_abs(s);
    throw ConfigError("unknown nonlinearity: " + kind);
}

} // namespace glmep
