#ifndef MOOGRAD_TYPES_HPP
#define MOOGRAD_TYPES_HPP

#include <Eigen/Core>
#include <string>
#include <vector>

namespace moograd {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Point in m-dimensional objective (loss) space.
using ObjectiveVector = Vec;

/// Point on the m-simplex steering which Pareto solution a solver targets.
using Preference = Vec;

struct Provenance {
    std::string solver;
    std::uint64_t seed = 0;
    Preference preference;
};

/// K decision vectors with their objective vectors and per-entry provenance.
struct SolutionSet {
    std::vector<Vec> thetas;
    std::vector<ObjectiveVector> objectives;
    std::vector<Provenance> provenance;

    std::size_t size() const { return thetas.size(); }
};

}  // namespace moograd

#endif
