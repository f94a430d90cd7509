#include "moograd/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "moograd/metrics.hpp"

namespace moograd {

namespace {

constexpr double kStationaryNorm = 1e-9;

Vec simplex_vertex(int m, int i) {
    Vec e = Vec::Zero(m);
    e[i] = 1.0;
    return e;
}

}  // namespace

Vec min_norm_simplex(const Mat& M) {
    const int m = static_cast<int>(M.rows());
    Vec alpha = Vec::Constant(m, 1.0 / m);
    for (int it = 0; it < 200; ++it) {
        const Vec g = M * alpha;
        int s = 0;
        for (int i = 1; i < m; ++i)
            if (g[i] < g[s]) s = i;
        const double gap = alpha.dot(g) - g[s];
        if (gap < 1e-8) break;
        const Vec d = alpha - simplex_vertex(m, s);
        const double denom = d.dot(M * d);
        if (denom <= 0.0) break;
        const double gamma = std::clamp(d.dot(g) / denom, 0.0, 1.0);
        alpha = (1.0 - gamma) * alpha + gamma * simplex_vertex(m, s);
    }
    return alpha;
}

WeightResult min_norm_weights(const Mat& jac) {
    const int m = static_cast<int>(jac.rows());
    if (m < 2) throw std::invalid_argument("min_norm_weights: needs m >= 2");
    WeightResult res;
    if (jac.norm() < kStationaryNorm) {
        res.alpha = Vec::Constant(m, 1.0 / m);
        res.pareto_stationary = true;
        return res;
    }
    if (m == 2) {
        const Vec g1 = jac.row(0), g2 = jac.row(1);
        const double denom = (g1 - g2).squaredNorm();
        double a = denom < 1e-18 ? 0.5 : std::clamp((g2 - g1).dot(g2) / denom, 0.0, 1.0);
        res.alpha = Vec(2);
        res.alpha << a, 1.0 - a;
    } else {
        res.alpha = min_norm_simplex(jac * jac.transpose());
    }
    res.pareto_stationary = (jac.transpose() * res.alpha).norm() < kStationaryNorm;
    return res;
}

namespace {

/// max beta'*c over the simplex subject to (M*beta)[jstar] >= 0. Exact for
/// m = 2; penalised projected gradient otherwise.
Vec constrained_simplex_lp(const Vec& c, const Mat& M, int jstar) {
    const int m = static_cast<int>(c.size());
    if (m == 2) {
        // beta = (t, 1-t); both objective and constraint are linear in t.
        const double c0 = M(jstar, 1);               // constraint value at t = 0
        const double c1 = M(jstar, 0);               // constraint value at t = 1
        double t_lo = 0.0, t_hi = 1.0;
        if (c1 != c0) {
            const double t_root = -c0 / (c1 - c0);
            if (c1 - c0 > 0.0)
                t_lo = std::max(0.0, t_root);
            else
                t_hi = std::min(1.0, t_root);
        } else if (c0 < 0.0) {
            // Constraint infeasible on the whole segment except the jstar vertex.
            return simplex_vertex(2, jstar);
        }
        if (t_lo > t_hi) return simplex_vertex(2, jstar);
        const double v_lo = t_lo * c[0] + (1.0 - t_lo) * c[1];
        const double v_hi = t_hi * c[0] + (1.0 - t_hi) * c[1];
        const double t = v_hi >= v_lo ? t_hi : t_lo;
        Vec beta(2);
        beta << t, 1.0 - t;
        return beta;
    }
    // Projected gradient with quadratic penalty on the violated constraint.
    const double penalty = 1e3 * std::max(1.0, M.norm());
    Vec beta = Vec::Constant(m, 1.0 / m);
    double step = 0.1;
    auto value = [&](const Vec& b) {
        const double viol = std::min(0.0, (M * b)[jstar]);
        return b.dot(c) - penalty * viol * viol;
    };
    auto project = [](Vec v) {
        // Euclidean projection onto the simplex.
        std::vector<double> u(v.data(), v.data() + v.size());
        std::sort(u.begin(), u.end(), std::greater<double>());
        double css = 0.0, tau = 0.0;
        int rho = 0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            css += u[i];
            const double t = (css - 1.0) / static_cast<double>(i + 1);
            if (u[i] - t > 0.0) {
                rho = static_cast<int>(i + 1);
                tau = t;
            }
        }
        (void)rho;
        for (int i = 0; i < v.size(); ++i) v[i] = std::max(0.0, v[i] - tau);
        return v;
    };
    for (int it = 0; it < 200; ++it) {
        const double viol = std::min(0.0, (M * beta)[jstar]);
        const Vec grad = c - 2.0 * penalty * viol * M.row(jstar).transpose();
        const Vec cand = project(beta + step * grad);
        if (value(cand) > value(beta)) {
            beta = cand;
            step *= 1.2;
        } else {
            step *= 0.5;
            if (step < 1e-10) break;
        }
    }
    return beta;
}

/// Weighted objectives w_i = (L_i - z_i)/lam_i whose balance defines the
/// preference-ray target L proportional to lambda.
Vec ray_weighted(const ObjectiveVector& L, const Preference& lam) {
    Vec w(L.size());
    for (int i = 0; i < L.size(); ++i) w[i] = std::max(L[i], 0.0) / lam[i];
    return w;
}

}  // namespace

WeightResult epo_weights(const GradientBundle& bundle) {
    if (!bundle.lam || bundle.lam->minCoeff() <= 0.0)
        throw std::invalid_argument("epo_weights: requires a strictly positive preference");
    const int m = static_cast<int>(bundle.L.size());
    if (bundle.jac.norm() < kStationaryNorm)
        return {Vec::Constant(m, 1.0 / m), true};

    const Preference& lam = *bundle.lam;
    const Vec w = ray_weighted(bundle.L, lam);
    const double S = std::max(w.sum(), 1e-300);
    const Vec what = w / S;
    double mu = 0.0;
    for (int i = 0; i < m; ++i) mu += what[i] * std::log(std::max(m * what[i], 1e-300));

    if (mu <= 1e-6) return min_norm_weights(bundle.jac);  // balanced: common descent

    // Balance mode: steepest descent of the non-uniformity among convex
    // gradient combinations, never increasing the most violating objective.
    Vec a(m);
    for (int i = 0; i < m; ++i)
        a[i] = (std::log(std::max(m * what[i], 1e-300)) - mu) / (lam[i] * S);
    const Mat C = bundle.jac * bundle.jac.transpose();
    int jstar = 0;
    for (int i = 1; i < m; ++i)
        if (what[i] > what[jstar]) jstar = i;
    WeightResult res;
    res.alpha = constrained_simplex_lp(C * a, C, jstar);
    res.pareto_stationary = (bundle.jac.transpose() * res.alpha).norm() < kStationaryNorm;
    return res;
}

WeightResult pmgda_weights(const GradientBundle& bundle, double constraint_tolerance) {
    if (!bundle.lam || bundle.lam->minCoeff() <= 0.0)
        throw std::invalid_argument("pmgda_weights: requires a strictly positive preference");
    const int m = static_cast<int>(bundle.L.size());
    if (bundle.jac.norm() < kStationaryNorm)
        return {Vec::Constant(m, 1.0 / m), true};

    const Preference& lam = *bundle.lam;
    const Vec w = ray_weighted(bundle.L, lam);
    const double S = std::max(w.sum(), 1e-300);
    const Vec what = w / S;
    const Vec r = what.array() - 1.0 / m;
    const double h = 0.5 * r.squaredNorm();

    if (h <= constraint_tolerance) return min_norm_weights(bundle.jac);

    // Violated: pick convex weights maximising first-order decrease of h,
    // without increasing the largest weighted objective.
    Vec dh(m);
    const double rw = r.dot(what);
    for (int i = 0; i < m; ++i) dh[i] = (r[i] - rw) / (S * lam[i]);
    const Mat C = bundle.jac * bundle.jac.transpose();
    int jstar = 0;
    for (int i = 1; i < m; ++i)
        if (what[i] > what[jstar]) jstar = i;
    WeightResult res;
    res.alpha = constrained_simplex_lp(C * dh, C, jstar);
    res.pareto_stationary = (bundle.jac.transpose() * res.alpha).norm() < kStationaryNorm;
    return res;
}

namespace {

/// Gradient of <u_j - u_k, L/|L|> with respect to L.
Vec sector_constraint_grad(const Vec& diff, const ObjectiveVector& L) {
    const double norm = std::max(L.norm(), 1e-12);
    const Vec lhat = L / norm;
    return (diff - lhat.dot(diff) * lhat) / norm;
}

}  // namespace

std::vector<WeightResult> pmtl_weights(const std::vector<GradientBundle>& bundles,
                                       const std::vector<Preference>& preference_set,
                                       PmtlPhase phase) {
    const std::size_t K = bundles.size();
    if (preference_set.size() != K)
        throw std::invalid_argument("pmtl_weights: one preference per bundle required");
    std::vector<Vec> sectors;
    sectors.reserve(K);
    for (const auto& p : preference_set) sectors.push_back(p / p.norm());

    std::vector<WeightResult> out(K);
    for (std::size_t k = 0; k < K; ++k) {
        const auto& bundle = bundles[k];
        const int m = static_cast<int>(bundle.L.size());
        const Vec lhat = bundle.L / std::max(bundle.L.norm(), 1e-12);
        const double own = sectors[k].dot(lhat);

        std::vector<int> violated;
        for (std::size_t j = 0; j < K; ++j)
            if (j != k && sectors[j].dot(lhat) > own) violated.push_back(static_cast<int>(j));

        if (phase == PmtlPhase::Restrict && !violated.empty()) {
            // Reduce violated sector constraints: min-norm combination of the
            // constraint gradients, folded back to objective coefficients.
            Mat Q(static_cast<int>(violated.size()), m);
            for (std::size_t v = 0; v < violated.size(); ++v)
                Q.row(static_cast<int>(v)) =
                    sector_constraint_grad(sectors[violated[v]] - sectors[k], bundle.L);
            const Mat V = Q * bundle.jac;  // constraint gradients in theta space
            const Vec beta = violated.size() == 1 ? Vec::Ones(1)
                                                  : min_norm_simplex(V * V.transpose());
            out[k].alpha = Q.transpose() * beta;
            out[k].pareto_stationary = false;
            continue;
        }

        // Descend phase (or empty active set): min-norm over objective
        // gradients plus active constraint gradients.
        std::vector<int> active;
        for (std::size_t j = 0; j < K; ++j)
            if (j != k && sectors[j].dot(lhat) >= own) active.push_back(static_cast<int>(j));
        if (active.empty()) {
            out[k] = min_norm_weights(bundle.jac);
            continue;
        }
        const int p = m + static_cast<int>(active.size());
        Mat rows(p, m);  // objective-space coefficients of each candidate vector
        for (int i = 0; i < m; ++i) rows.row(i) = simplex_vertex(m, i).transpose();
        for (std::size_t v = 0; v < active.size(); ++v)
            rows.row(m + static_cast<int>(v)) =
                sector_constraint_grad(sectors[active[v]] - sectors[k], bundle.L).transpose();
        const Mat V = rows * bundle.jac;
        const Vec beta = min_norm_simplex(V * V.transpose());
        out[k].alpha = rows.transpose() * beta;
        out[k].pareto_stationary = (bundle.jac.transpose() * out[k].alpha).norm() < kStationaryNorm;
    }
    return out;
}

std::vector<Vec> svgd_step(const std::vector<Vec>& particles,
                           const std::vector<GradientBundle>& bundles,
                           const SvgdOptions& options) {
    const std::size_t K = particles.size();
    if (bundles.size() != K) throw std::invalid_argument("svgd_step: bundle count mismatch");
    const Eigen::Index n = particles[0].size();

    double bw = options.bandwidth;
    if (bw <= 0.0) {
        std::vector<double> d2;
        for (std::size_t i = 0; i < K; ++i)
            for (std::size_t j = i + 1; j < K; ++j)
                d2.push_back((particles[i] - particles[j]).squaredNorm());
        if (d2.empty()) {
            bw = 1.0;
        } else {
            std::nth_element(d2.begin(), d2.begin() + d2.size() / 2, d2.end());
            bw = d2[d2.size() / 2] / std::log(static_cast<double>(K) + 1.0) + 1e-12;
        }
    }

    std::vector<Vec> mgda_dirs(K);
    for (std::size_t j = 0; j < K; ++j) {
        const WeightResult w = min_norm_weights(bundles[j].jac);
        mgda_dirs[j] = bundles[j].jac.transpose() * w.alpha;
    }

    std::vector<Vec> out(K);
    for (std::size_t i = 0; i < K; ++i) {
        Vec acc = Vec::Zero(n);
        double mass = 0.0;
        for (std::size_t j = 0; j < K; ++j) {
            const Vec diff = particles[j] - particles[i];
            const double kij = std::exp(-diff.squaredNorm() / bw);
            // Kernel-weighted attraction to descent plus repulsion from the
            // kernel gradient with respect to particle j.
            acc += kij * mgda_dirs[j] + (2.0 / bw) * kij * diff;
            mass += kij;
        }
        out[i] = acc / mass;
    }
    return out;
}

std::vector<Vec> hv_gradient(const std::vector<ObjectiveVector>& front,
                             const ObjectiveVector& ref) {
    if (ref.size() != 2) throw std::invalid_argument("hv_gradient: only m = 2 is supported");
    const std::size_t K = front.size();
    std::vector<Vec> grads(K, Vec::Zero(2));

    std::vector<std::size_t> order(K);
    for (std::size_t i = 0; i < K; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return front[a][0] != front[b][0] ? front[a][0] < front[b][0] : front[a][1] < front[b][1];
    });

    // Sweep staircase: points that actually bound the dominated region.
    std::vector<std::size_t> stair;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t idx : order) {
        const auto& p = front[idx];
        if ((p.array() < ref.array()).all() && p[1] < best) {
            stair.push_back(idx);
            best = p[1];
        }
    }
    for (std::size_t s = 0; s < stair.size(); ++s) {
        const auto& p = front[stair[s]];
        const double upper_y = s > 0 ? front[stair[s - 1]][1] : ref[1];
        const double next_x = s + 1 < stair.size() ? front[stair[s + 1]][0] : ref[0];
        grads[stair[s]][0] = p[1] - upper_y;
        grads[stair[s]][1] = -(next_x - p[0]);
    }
    return grads;
}

Vec random_weights(int m, Rng& rng) {
    if (m < 2) throw std::invalid_argument("random_weights: needs m >= 2");
    Vec g(m);
    for (int i = 0; i < m; ++i) g[i] = rng.gamma(1.0);
    return g / g.sum();
}

Vec es_gradient(const std::function<double(const Vec&)>& f, const Vec& theta, double sigma,
                int pop, Rng& rng) {
    if (sigma <= 0.0) throw std::invalid_argument("es_gradient: sigma must be positive");
    if (pop < 2 || pop % 2 != 0) throw std::invalid_argument("es_gradient: pop must be even");
    const Eigen::Index n = theta.size();
    Vec grad = Vec::Zero(n);
    for (int p = 0; p < pop / 2; ++p) {
        const Vec eps = rng.normal_vec(static_cast<int>(n));
        const double delta = f(theta + sigma * eps) - f(theta - sigma * eps);
        grad += delta * eps;
    }
    return grad / (pop * sigma);
}

std::vector<Preference> uniform_preference_grid(int m, int K) {
    std::vector<Preference> out;
    out.reserve(K);
    if (m == 2) {
        for (int k = 0; k < K; ++k) {
            Preference p(2);
            p << (k + 0.5) / K, 1.0 - (k + 0.5) / K;
            out.push_back(p);
        }
        return out;
    }
    // Simplex lattice, pulled towards the centroid to stay strictly interior.
    int H = 1;
    auto count = [m](int h) {
        double c = 1.0;
        for (int i = 1; i < m; ++i) c = c * (h + i) / i;
        return c;
    };
    while (count(H) < K) ++H;
    std::vector<Preference> lattice;
    std::vector<int> comp(m, 0);
    std::function<void(int, int)> rec = [&](int idx, int rest) {
        if (idx == m - 1) {
            comp[idx] = rest;
            Preference p(m);
            for (int i = 0; i < m; ++i) p[i] = static_cast<double>(comp[i]) / H;
            lattice.push_back(p);
            return;
        }
        for (int v = 0; v <= rest; ++v) {
            comp[idx] = v;
            rec(idx + 1, rest - v);
        }
    };
    rec(0, H);
    const Preference centroid = Preference::Constant(m, 1.0 / m);
    for (int k = 0; k < K; ++k) out.push_back(0.9 * lattice[k % lattice.size()] + 0.1 * centroid);
    return out;
}

const std::vector<std::string>& solver_ids() {
    static const std::vector<std::string> ids = {"epo",  "pmgda",   "mgda",   "pmtl",
                                                 "moosvgd", "hvgrad", "random", "agg"};
    return ids;
}

namespace {

class StepRule {
public:
    StepRule(Optimizer kind, double lr, double momentum, bool decay, int total_iters, Eigen::Index n)
        : kind_(kind), lr_(lr), beta1_(momentum), decay_(decay), total_(total_iters) {
        if (kind_ != Optimizer::GradientDescent) {
            m_ = Vec::Zero(n);
            v_ = Vec::Zero(n);
        }
    }

    Vec step(const Vec& g) {
        ++t_;
        const double lr = decay_ ? lr_ * (1.0 - static_cast<double>(t_ - 1) / total_) : lr_;
        switch (kind_) {
            case Optimizer::GradientDescent:
                return lr * g;
            case Optimizer::Momentum:
                m_ = beta1_ * m_ + g;
                return lr * m_;
            case Optimizer::Adam: {
                m_ = beta1_ * m_ + (1.0 - beta1_) * g;
                v_ = 0.999 * v_ + 0.001 * g.cwiseProduct(g);
                const Vec mh = m_ / (1.0 - std::pow(beta1_, t_));
                const Vec vh = v_ / (1.0 - std::pow(0.999, t_));
                // Tiny epsilon keeps plateau-scale gradients usable.
                return lr * mh.cwiseQuotient(vh.cwiseSqrt() + Vec::Constant(vh.size(), 1e-16));
            }
        }
        return lr * g;
    }

private:
    Optimizer kind_;
    double lr_;
    double beta1_;
    bool decay_;
    int total_;
    int t_ = 0;
    Vec m_, v_;
};

/// Projection of a dominated point onto the attainment boundary of the front;
/// used to pull non-contributing particles back towards the sweep staircase.
ObjectiveVector staircase_projection(const ObjectiveVector& y,
                                     const std::vector<ObjectiveVector>& stair) {
    constexpr double kBig = 1e9;
    ObjectiveVector best = stair.front();
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < stair.size(); ++i) {
        const double upper_y = i > 0 ? stair[i - 1][1] : kBig;
        const double next_x = i + 1 < stair.size() ? stair[i + 1][0] : kBig;
        ObjectiveVector cand(2);
        cand << stair[i][0], std::clamp(y[1], stair[i][1], upper_y);
        if ((y - cand).norm() < best_d) {
            best_d = (y - cand).norm();
            best = cand;
        }
        cand << std::clamp(y[0], stair[i][0], next_x), stair[i][1];
        if ((y - cand).norm() < best_d) {
            best_d = (y - cand).norm();
            best = cand;
        }
    }
    return best;
}

}  // namespace

SolutionSet descend(const Problem& problem, const std::string& solver_id,
                    const std::optional<AggregationSpec>& agg, const RunConfig& cfg,
                    const DescentObserver& observer) {
    const int m = problem.meta().m;
    const int n = problem.meta().n;
    const int K = cfg.K;
    if (K < 1 || cfg.lr < 0.0) throw std::invalid_argument("descend: bad run config");
    if (solver_id == "agg" && !agg)
        throw std::invalid_argument("descend: solver 'agg' needs an aggregation spec");

    std::vector<Preference> prefs =
        cfg.preference_set.empty() ? uniform_preference_grid(m, K) : cfg.preference_set;
    if (static_cast<int>(prefs.size()) != K)
        throw std::invalid_argument("descend: preference set size must equal K");

    const bool needs_positive = solver_id == "epo" || solver_id == "pmgda";
    if (needs_positive)
        for (const auto& p : prefs)
            if (p.minCoeff() <= 0.0)
                throw std::invalid_argument("descend: " + solver_id +
                                            " requires strictly positive preferences");

    ObjectiveVector hv_ref = cfg.hv_ref;
    if (hv_ref.size() == 0) {
        hv_ref = ObjectiveVector(2);
        hv_ref << 1.2, 1.2;
    }

    Rng rng(cfg.seed);
    std::vector<Vec> thetas(K);
    for (int k = 0; k < K; ++k) {
        Vec t(n);
        for (int j = 0; j < n; ++j)
            t[j] = rng.uniform(problem.meta().lower[j], problem.meta().upper[j]);
        thetas[k] = t;
    }

    std::vector<StepRule> rules;
    rules.reserve(K);
    for (int k = 0; k < K; ++k)
        rules.emplace_back(cfg.optimizer, cfg.lr, cfg.momentum, cfg.lr_decay, cfg.iters, n);

    const int restrict_until = static_cast<int>(0.4 * cfg.iters);

    for (int iter = 0; iter < cfg.iters; ++iter) {
        std::vector<GradientBundle> bundles(K);
        for (int k = 0; k < K; ++k) {
            bundles[k].L = problem.evaluate(thetas[k]);
            if (!bundles[k].L.allFinite())
                throw std::runtime_error("descend: non-finite objective in solver '" + solver_id +
                                         "' at iteration " + std::to_string(iter) +
                                         ", subproblem " + std::to_string(k));
            bundles[k].jac = problem.jacobian(thetas[k]);
            bundles[k].lam = prefs[k];
        }

        std::vector<Vec> directions(K);
        std::vector<Vec> alphas(K);
        if (solver_id == "moosvgd") {
            directions = svgd_step(thetas, bundles, SvgdOptions{cfg.svgd_bandwidth});
        } else if (solver_id == "hvgrad") {
            std::vector<ObjectiveVector> ys(K);
            for (int k = 0; k < K; ++k) ys[k] = bundles[k].L;
            const auto grads = hv_gradient(ys, hv_ref);
            std::vector<ObjectiveVector> stair;
            for (int k = 0; k < K; ++k)
                if (grads[k].norm() > 0.0) stair.push_back(ys[k]);
            std::sort(stair.begin(), stair.end(),
                      [](const ObjectiveVector& a, const ObjectiveVector& b) { return a[0] < b[0]; });
            for (int k = 0; k < K; ++k) {
                if (grads[k].norm() > 0.0) {
                    alphas[k] = -grads[k];
                } else if (!stair.empty()) {
                    // Non-contributing particle: pull towards the attainment
                    // boundary so it can rejoin the front.
                    alphas[k] = 2.0 * (ys[k] - staircase_projection(ys[k], stair));
                } else {
                    alphas[k] = min_norm_weights(bundles[k].jac).alpha;
                }
            }
        } else if (solver_id == "pmtl") {
            const PmtlPhase phase =
                iter < restrict_until ? PmtlPhase::Restrict : PmtlPhase::Descend;
            const auto ws = pmtl_weights(bundles, prefs, phase);
            for (int k = 0; k < K; ++k) alphas[k] = ws[k].alpha;
        } else {
            for (int k = 0; k < K; ++k) {
                if (solver_id == "agg")
                    alphas[k] = aggregate_grad(*agg, bundles[k].L, prefs[k]);
                else if (solver_id == "mgda")
                    alphas[k] = min_norm_weights(bundles[k].jac).alpha;
                else if (solver_id == "epo")
                    alphas[k] = epo_weights(bundles[k]).alpha;
                else if (solver_id == "pmgda")
                    alphas[k] = pmgda_weights(bundles[k], cfg.pmgda_tolerance).alpha;
                else if (solver_id == "random")
                    alphas[k] = random_weights(m, rng);
                else
                    throw std::invalid_argument("descend: unknown solver id '" + solver_id + "'");
            }
        }

        for (int k = 0; k < K; ++k) {
            if (solver_id != "moosvgd") directions[k] = bundles[k].jac.transpose() * alphas[k];
            if (observer)
                observer(iter, k, thetas[k],
                         solver_id == "moosvgd" ? Vec() : alphas[k], directions[k]);
            thetas[k] = problem.clip(thetas[k] - rules[k].step(directions[k]));
        }
    }

    SolutionSet out;
    out.thetas = thetas;
    for (int k = 0; k < K; ++k) {
        out.objectives.push_back(problem.evaluate(thetas[k]));
        out.provenance.push_back({solver_id, cfg.seed, prefs[k]});
    }
    return out;
}

}  // namespace moograd
