#ifndef MOOGRAD_METRICS_HPP
#define MOOGRAD_METRICS_HPP

#include <vector>

#include "moograd/types.hpp"

namespace moograd {

/// a weakly dominates b (componentwise <=).
bool dominates_weak(const ObjectiveVector& a, const ObjectiveVector& b);
/// a strictly dominates b (componentwise <=, at least one <).
bool dominates_strict(const ObjectiveVector& a, const ObjectiveVector& b);

/// Points not strictly dominated by any other point; input order preserved.
std::vector<ObjectiveVector> pareto_filter(const std::vector<ObjectiveVector>& points);

/// Hypervolume dominated by `points` and bounded by `ref`. Exact sweep for
/// m = 2, slicing for m = 3, seeded Monte-Carlo fallback otherwise. Points
/// that do not dominate the reference contribute zero.
double hv(const std::vector<ObjectiveVector>& points, const ObjectiveVector& ref);

/// Inverted generational distance to reference set Z, with the 1/|Z| factor
/// outside the square root (this differs from the more common definition that
/// averages plain distances; kept as such deliberately).
double igd(const std::vector<ObjectiveVector>& points, const std::vector<ObjectiveVector>& Z);

/// Covering radius: max over Z of the distance to the nearest point.
double fill_distance(const std::vector<ObjectiveVector>& points,
                     const std::vector<ObjectiveVector>& Z);

/// Smallest pairwise distance; 0 for fewer than two points.
double min_dist(const std::vector<ObjectiveVector>& points);

/// Soft-min of pairwise distances: -log(sum exp(-h*d_ij)) / (h*k*(k-1)),
/// summed over i < j. NaN for fewer than two points (undefined).
double smooth_min_dist(const std::vector<ObjectiveVector>& points, double h);

/// Population variance of nearest-neighbour distances; 0 for fewer than two
/// points. (The usual "spacing" is the standard deviation; the variance form
/// is kept deliberately.)
double spacing(const std::vector<ObjectiveVector>& points);

/// Min over objectives of the largest pairwise coordinate gap.
double span(const std::vector<ObjectiveVector>& points);

/// Penalty-based intersection value of a single objective vector.
double pbi_metric(const ObjectiveVector& y, const Preference& lam, const Vec& z, double mu);

double inner_product(const ObjectiveVector& y, const Preference& lam);

/// |atan(y2/y1) - atan(lam2/lam1)| in degrees; requires m = 2, y1 > 0, lam1 > 0.
double cross_angle(const ObjectiveVector& y, const Preference& lam);

}  // namespace moograd

#endif
