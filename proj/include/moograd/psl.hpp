#ifndef MOOGRAD_PSL_HPP
#define MOOGRAD_PSL_HPP

#include <string>
#include <vector>

#include "moograd/problems.hpp"
#include "moograd/rng.hpp"
#include "moograd/solvers.hpp"
#include "moograd/types.hpp"

namespace moograd {

/// Preference-conditioned network theta_phi(lambda): a fully-connected net
/// whose output is squashed onto the problem box through a sigmoid, stored as
/// one flat parameter vector.
struct PsModelParams {
    Vec phi;
    std::vector<int> layer_sizes;  ///< {m, hidden..., n}
    std::string activation = "tanh";
    Vec lower, upper;              ///< output box

    int param_count() const;
};

/// Fresh model: hidden layers get scaled-normal weights from rng, the final
/// layer starts at zero so every preference initially maps to the box centre.
PsModelParams make_ps_model(const ProblemMeta& meta, const std::vector<int>& hidden, Rng& rng);

Vec psl_forward(const PsModelParams& model, const Preference& lam);

/// u' * dtheta/dphi by reverse accumulation through the network and squash.
Vec psl_vjp(const PsModelParams& model, const Preference& lam, const Vec& u);

/// Dirichlet(p) sample via normalized Gamma variates.
Preference sample_dirichlet(const Vec& p, Rng& rng);

struct PslConfig {
    Vec dirichlet_p;                ///< empty selects all-ones
    int batch_K = 32;
    int steps = 3000;
    double lr = 1e-3;
    std::string weight_source = "tche";  ///< aggregation id, or "epo"/"pmgda"
    enum class JacobianMode { Analytic, Es } jacobian_mode = JacobianMode::Analytic;
    int es_pop = 512;
    double es_sigma = 1e-2;
    std::vector<int> hidden = {64, 64};
};

/// Train theta_phi(lambda) by the chain rule: weights from the configured
/// source, problem Jacobian analytic or ES-estimated, then a vjp through the
/// network, averaged over a Dirichlet preference batch per step.
PsModelParams psl_train(const Problem& problem, const PslConfig& cfg, std::uint64_t seed,
                        std::vector<double>* loss_history = nullptr);

/// Forward the model on each grid preference and evaluate the objectives.
SolutionSet psl_evaluate(const Problem& problem, const PsModelParams& model,
                         const std::vector<Preference>& grid);

/// Versioned little-endian checkpoint of a model.
void save_ps_model(const PsModelParams& model, const std::string& path);
PsModelParams load_ps_model(const std::string& path);

}  // namespace moograd

#endif
