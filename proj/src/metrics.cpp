#include "moograd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "moograd/rng.hpp"

namespace moograd {

bool dominates_weak(const ObjectiveVector& a, const ObjectiveVector& b) {
    return (a.array() <= b.array()).all();
}

bool dominates_strict(const ObjectiveVector& a, const ObjectiveVector& b) {
    return (a.array() <= b.array()).all() && (a.array() < b.array()).any();
}

std::vector<ObjectiveVector> pareto_filter(const std::vector<ObjectiveVector>& points) {
    if (points.empty()) throw std::invalid_argument("pareto_filter: empty input");
    std::vector<ObjectiveVector> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < points.size() && !dominated; ++j)
            dominated = j != i && dominates_strict(points[j], points[i]);
        if (!dominated) out.push_back(points[i]);
    }
    return out;
}

namespace {

/// 2-D rectangle sweep over the filtered, strictly-ref-dominating points.
double hv2(const std::vector<ObjectiveVector>& points, const ObjectiveVector& ref) {
    std::vector<ObjectiveVector> pts;
    for (const auto& p : points)
        if ((p.array() < ref.array()).all()) pts.push_back(p);
    if (pts.empty()) return 0.0;
    std::sort(pts.begin(), pts.end(), [](const ObjectiveVector& a, const ObjectiveVector& b) {
        return a[0] != b[0] ? a[0] < b[0] : a[1] < b[1];
    });
    std::vector<ObjectiveVector> stair;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : pts)
        if (p[1] < best) {
            stair.push_back(p);
            best = p[1];
        }
    double vol = 0.0;
    for (std::size_t k = 0; k < stair.size(); ++k) {
        const double next_x = k + 1 < stair.size() ? stair[k + 1][0] : ref[0];
        vol += (next_x - stair[k][0]) * (ref[1] - stair[k][1]);
    }
    return vol;
}

/// 3-D hypervolume by sweeping the third objective and accumulating 2-D slabs.
double hv3(const std::vector<ObjectiveVector>& points, const ObjectiveVector& ref) {
    std::vector<ObjectiveVector> pts;
    for (const auto& p : points)
        if ((p.array() < ref.array()).all()) pts.push_back(p);
    if (pts.empty()) return 0.0;
    std::sort(pts.begin(), pts.end(),
              [](const ObjectiveVector& a, const ObjectiveVector& b) { return a[2] < b[2]; });
    const ObjectiveVector ref2 = ref.head(2);
    double vol = 0.0;
    std::vector<ObjectiveVector> seen;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        seen.push_back(pts[k].head(2));
        const double z_hi = k + 1 < pts.size() ? pts[k + 1][2] : ref[2];
        if (z_hi > pts[k][2]) vol += hv2(seen, ref2) * (z_hi - pts[k][2]);
    }
    return vol;
}

double hv_monte_carlo(const std::vector<ObjectiveVector>& points, const ObjectiveVector& ref) {
    std::vector<ObjectiveVector> pts;
    for (const auto& p : points)
        if ((p.array() < ref.array()).all()) pts.push_back(p);
    if (pts.empty()) return 0.0;
    const Eigen::Index m = ref.size();
    Vec lo = pts[0];
    for (const auto& p : pts) lo = lo.cwiseMin(p);
    double box = 1.0;
    for (Eigen::Index i = 0; i < m; ++i) box *= ref[i] - lo[i];
    Rng rng(0x9d2c5680);  // fixed stream: hv stays a pure function of its inputs
    const int samples = 100000;
    int hits = 0;
    Vec x(m);
    for (int s = 0; s < samples; ++s) {
        for (Eigen::Index i = 0; i < m; ++i) x[i] = rng.uniform(lo[i], ref[i]);
        for (const auto& p : pts)
            if (dominates_weak(p, x)) {
                ++hits;
                break;
            }
    }
    return box * hits / samples;
}

double dist(const ObjectiveVector& a, const ObjectiveVector& b) { return (a - b).norm(); }

}  // namespace

double hv(const std::vector<ObjectiveVector>& points, const ObjectiveVector& ref) {
    if (points.empty()) return 0.0;
    if (points[0].size() != ref.size())
        throw std::invalid_argument("hv: reference point dimension mismatch");
    switch (ref.size()) {
        case 2: return hv2(points, ref);
        case 3: return hv3(points, ref);
        default: return hv_monte_carlo(points, ref);
    }
}

double igd(const std::vector<ObjectiveVector>& points, const std::vector<ObjectiveVector>& Z) {
    if (points.empty() || Z.empty()) throw std::invalid_argument("igd: empty input");
    double sum_sq = 0.0;
    for (const auto& z : Z) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& y : points) best = std::min(best, (z - y).squaredNorm());
        sum_sq += best;
    }
    return std::sqrt(sum_sq) / Z.size();
}

double fill_distance(const std::vector<ObjectiveVector>& points,
                     const std::vector<ObjectiveVector>& Z) {
    if (points.empty() || Z.empty()) throw std::invalid_argument("fill_distance: empty input");
    double worst = 0.0;
    for (const auto& z : Z) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& y : points) best = std::min(best, dist(z, y));
        worst = std::max(worst, best);
    }
    return worst;
}

double min_dist(const std::vector<ObjectiveVector>& points) {
    if (points.size() < 2) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            best = std::min(best, dist(points[i], points[j]));
    return best;
}

double smooth_min_dist(const std::vector<ObjectiveVector>& points, double h) {
    if (h <= 0.0) throw std::invalid_argument("smooth_min_dist: h must be positive");
    const std::size_t k = points.size();
    if (k < 2) return std::numeric_limits<double>::quiet_NaN();
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            sum += std::exp(-h * dist(points[i], points[j]));
    return -std::log(sum) / (h * static_cast<double>(k) * static_cast<double>(k - 1));
}

namespace {

std::vector<double> nearest_neighbour_dists(const std::vector<ObjectiveVector>& points) {
    std::vector<double> d(points.size(), std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j)
            if (i != j) d[i] = std::min(d[i], dist(points[i], points[j]));
    return d;
}

}  // namespace

double spacing(const std::vector<ObjectiveVector>& points) {
    const std::size_t n = points.size();
    if (n < 2) return 0.0;
    const auto d = nearest_neighbour_dists(points);
    double mean = 0.0;
    for (double v : d) mean += v;
    mean /= n;
    double var = 0.0;
    for (double v : d) var += (v - mean) * (v - mean);
    return var / n;
}

double span(const std::vector<ObjectiveVector>& points) {
    if (points.size() < 2) return 0.0;
    const Eigen::Index m = points[0].size();
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < m; ++i) {
        double lo = points[0][i], hi = points[0][i];
        for (const auto& p : points) {
            lo = std::min(lo, p[i]);
            hi = std::max(hi, p[i]);
        }
        best = std::min(best, hi - lo);
    }
    return best;
}

double pbi_metric(const ObjectiveVector& y, const Preference& lam, const Vec& z, double mu) {
    const double d1 = (y - z).dot(lam) / lam.norm();
    const double d2 = (y - (d1 * lam + z)).norm();
    return d1 + mu * d2;
}

double inner_product(const ObjectiveVector& y, const Preference& lam) { return y.dot(lam); }

double cross_angle(const ObjectiveVector& y, const Preference& lam) {
    if (y.size() != 2 || lam.size() != 2)
        throw std::invalid_argument("cross_angle: requires two objectives");
    if (y[0] <= 0.0 || lam[0] <= 0.0)
        throw std::invalid_argument("cross_angle: requires y1 > 0 and lambda1 > 0");
    const double a = std::atan(y[1] / y[0]) - std::atan(lam[1] / lam[0]);
    return std::abs(a) * 180.0 / M_PI;
}

}  // namespace moograd
