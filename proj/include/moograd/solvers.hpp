#ifndef MOOGRAD_SOLVERS_HPP
#define MOOGRAD_SOLVERS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "moograd/aggregation.hpp"
#include "moograd/problems.hpp"
#include "moograd/rng.hpp"
#include "moograd/types.hpp"

namespace moograd {

/// Per-iterate gradient information handed to the weight rules.
struct GradientBundle {
    Mat jac;             ///< m-by-n Jacobian dL/dtheta
    ObjectiveVector L;   ///< objectives at theta
    std::optional<Preference> lam;
};

struct WeightResult {
    Vec alpha;
    bool pareto_stationary = false;
};

/// Coefficients of the minimum-norm convex combination of the Jacobian rows.
/// Closed form for m = 2, Frank-Wolfe on the simplex for m >= 3. A vanishing
/// Jacobian yields uniform weights with the stationarity flag set.
WeightResult min_norm_weights(const Mat& jac);

/// Minimum-norm point of the convex hull of vectors with Gram matrix M,
/// as simplex coefficients (Frank-Wolfe, 200 iterations or gap < 1e-8).
Vec min_norm_simplex(const Mat& M);

/// Dynamic weights steering the iterate onto the preference ray (objective
/// vector proportional to lambda), then descending once balanced.
WeightResult epo_weights(const GradientBundle& bundle);

/// Same target treated as an explicit constraint h(theta) = 0 kept within
/// `constraint_tolerance`.
WeightResult pmgda_weights(const GradientBundle& bundle, double constraint_tolerance);

enum class PmtlPhase { Restrict, Descend };

/// Sector-constrained weights, one per subproblem. In the restrict phase the
/// returned coefficients reduce violated sector constraints; in the descend
/// phase they are min-norm weights over objective gradients plus active
/// constraint gradients. A subproblem with no violated constraint falls back
/// to descend behaviour.
std::vector<WeightResult> pmtl_weights(const std::vector<GradientBundle>& bundles,
                                       const std::vector<Preference>& preference_set,
                                       PmtlPhase phase);

struct SvgdOptions {
    double bandwidth = 0.0;  ///< 0 selects the median-pairwise-distance rule
};

/// Update directions (one n-vector per particle) combining kernel-weighted
/// per-particle min-norm directions with kernel-gradient repulsion. With one
/// particle this reduces exactly to the min-norm direction.
std::vector<Vec> svgd_step(const std::vector<Vec>& particles,
                           const std::vector<GradientBundle>& bundles,
                           const SvgdOptions& options = {});

/// Exact gradient of the 2-D hypervolume with respect to each objective
/// vector; points outside the sweep front get a zero row. Only m = 2.
std::vector<Vec> hv_gradient(const std::vector<ObjectiveVector>& front,
                             const ObjectiveVector& ref);

/// Uniform sample on the m-simplex.
Vec random_weights(int m, Rng& rng);

/// Antithetic evolution-strategy gradient estimate of a scalar function.
/// pop must be even; pop/2 antithetic pairs are drawn.
Vec es_gradient(const std::function<double(const Vec&)>& f, const Vec& theta, double sigma,
                int pop, Rng& rng);

enum class Optimizer { GradientDescent, Momentum, Adam };

struct RunConfig {
    int K = 10;
    int iters = 1000;
    double lr = 1e-2;
    std::uint64_t seed = 0;
    std::vector<Preference> preference_set;  ///< empty selects the uniform grid

    Optimizer optimizer = Optimizer::GradientDescent;
    double momentum = 0.9;
    bool lr_decay = false;  ///< linear decay of the step size to zero

    ObjectiveVector hv_ref;           ///< hvgrad reference, (1.2, 1.2) by default
    double pmgda_tolerance = 1e-6;
    double svgd_bandwidth = 0.0;
};

/// Called once per (iteration, subproblem) with the weights and the composed
/// update direction before the optimizer step.
using DescentObserver =
    std::function<void(int iter, int k, const Vec& theta, const Vec& alpha, const Vec& direction)>;

/// Run the shared descent loop for one solver over cfg.K subproblems.
/// Solver ids: "epo", "pmgda", "mgda", "pmtl", "moosvgd", "hvgrad", "random",
/// "agg" (requires an AggregationSpec). Deterministic given cfg.seed.
SolutionSet descend(const Problem& problem, const std::string& solver_id,
                    const std::optional<AggregationSpec>& agg, const RunConfig& cfg,
                    const DescentObserver& observer = nullptr);

/// K preferences spread uniformly over the interior of the m-simplex
/// (midpoint rule for m = 2).
std::vector<Preference> uniform_preference_grid(int m, int K);

const std::vector<std::string>& solver_ids();

}  // namespace moograd

#endif
