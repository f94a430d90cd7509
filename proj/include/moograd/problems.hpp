#ifndef MOOGRAD_PROBLEMS_HPP
#define MOOGRAD_PROBLEMS_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "moograd/types.hpp"

namespace moograd {

struct ProblemMeta {
    std::string name;
    int m = 2;   ///< objective count
    int n = 1;   ///< decision dimension
    Vec lower;   ///< per-dimension lower bounds
    Vec upper;   ///< per-dimension upper bounds
};

/// Synthetic multiobjective test problem with analytic objectives, analytic
/// Jacobian and a ground-truth Pareto front sampler.
class Problem {
public:
    virtual ~Problem() = default;

    const ProblemMeta& meta() const { return meta_; }

    /// Evaluate all objectives at theta. Deterministic, finite output.
    virtual ObjectiveVector evaluate(const Vec& theta) const = 0;

    /// Analytic m-by-n Jacobian of the objectives at theta.
    virtual Mat jacobian(const Vec& theta) const = 0;

    /// `count` points on the true Pareto front, roughly uniform in objective
    /// space and including both endpoints. Requires count >= 2.
    std::vector<ObjectiveVector> pareto_front(int count) const {
        if (count < 2) throw std::invalid_argument("pareto_front requires count >= 2");
        return sample_front(count);
    }

    /// Project theta onto the bound box.
    Vec clip(Vec theta) const;

protected:
    virtual std::vector<ObjectiveVector> sample_front(int count) const = 0;

    void check_theta(const Vec& theta) const {
        if (theta.size() != meta_.n)
            throw std::invalid_argument("theta dimension mismatch for " + meta_.name);
    }
    ProblemMeta meta_;
};

/// Construct a problem by identifier ("vlmop1", "vlmop2", "zdt1").
/// n == 0 selects the per-problem default dimension.
std::unique_ptr<Problem> make_problem(const std::string& id, int n = 0);

const std::vector<std::string>& problem_ids();

}  // namespace moograd

#endif
