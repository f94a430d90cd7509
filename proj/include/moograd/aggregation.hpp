#ifndef MOOGRAD_AGGREGATION_HPP
#define MOOGRAD_AGGREGATION_HPP

#include <string>

#include "moograd/types.hpp"

namespace moograd {

enum class AggKind {
    Cosmos,
    LinearScalarization,
    Tchebycheff,
    ModifiedTchebycheff,
    SmoothTchebycheff,
    SmoothModifiedTchebycheff,
    Pbi,
    PNorm,
    Aasf,
};

/// Scalarization parameters. Defaults follow common practice: mu is 5 for PBI
/// and 1 for COSMOS, h = 100, p = 2, rho = 0.1; all overridable via config.
struct AggregationSpec {
    AggKind kind = AggKind::LinearScalarization;
    Vec z;             ///< reference point, zeros by default
    double mu = 5.0;   ///< weight factor (COSMOS, PBI)
    double h = 100.0;  ///< smoothing strength (smooth Tchebycheff variants)
    double p = 2.0;    ///< norm order (p >= 1)
    double rho = 0.1;  ///< augmentation coefficient (AASF)
};

/// Build a spec from an identifier ("ls", "tche", "mtche", "stche", "smtche",
/// "pbi", "cosmos", "pnorm", "aasf") with per-kind defaults for m objectives.
AggregationSpec make_aggregation_spec(const std::string& id, int m);

std::string aggregation_id(AggKind kind);

/// Scalarize the objective vector under preference lam.
double aggregate(const AggregationSpec& spec, const ObjectiveVector& L, const Preference& lam);

/// Gradient of aggregate() with respect to L. At max-operator kinks the
/// subgradient goes entirely to the smallest active index.
Vec aggregate_grad(const AggregationSpec& spec, const ObjectiveVector& L, const Preference& lam);

}  // namespace moograd

#endif
