#include "moograd/aggregation.hpp"

#include <cmath>
#include <stdexcept>

namespace moograd {

namespace {

constexpr double kNormFloor = 1e-12;  // keeps the COSMOS denominator defined at L = 0

void check_inputs(const AggregationSpec& spec, const ObjectiveVector& L, const Preference& lam) {
    if (L.size() != lam.size())
        throw std::invalid_argument("aggregate: L and lambda dimension mismatch");
    if (spec.z.size() != 0 && spec.z.size() != L.size())
        throw std::invalid_argument("aggregate: reference point dimension mismatch");
    const bool needs_positive_lam = spec.kind == AggKind::ModifiedTchebycheff ||
                                    spec.kind == AggKind::SmoothModifiedTchebycheff ||
                                    spec.kind == AggKind::Aasf;
    if (needs_positive_lam && lam.minCoeff() <= 0.0)
        throw std::invalid_argument("aggregate: lambda must be strictly positive for this kind");
}

Vec ref_point(const AggregationSpec& spec, Eigen::Index m) {
    return spec.z.size() == 0 ? Vec::Zero(m) : spec.z;
}

/// Index of the largest entry; ties resolved to the smallest index.
int argmax_smallest(const Vec& v) {
    int best = 0;
    for (int i = 1; i < v.size(); ++i)
        if (v[i] > v[best]) best = i;
    return best;
}

/// Stable softmax weights of h * v.
Vec softmax(const Vec& v, double h) {
    const Eigen::ArrayXd e = (h * (v.array() - v.maxCoeff())).exp();
    return (e / e.sum()).matrix();
}

double log_sum_exp(const Vec& v, double h) {
    const double vmax = v.maxCoeff();
    return vmax + std::log((h * (v.array() - vmax)).exp().sum()) / h;
}

}  // namespace

AggregationSpec make_aggregation_spec(const std::string& id, int m) {
    AggregationSpec spec;
    spec.z = Vec::Zero(m);
    if (id == "ls") spec.kind = AggKind::LinearScalarization;
    else if (id == "tche") spec.kind = AggKind::Tchebycheff;
    else if (id == "mtche") spec.kind = AggKind::ModifiedTchebycheff;
    else if (id == "stche") spec.kind = AggKind::SmoothTchebycheff;
    else if (id == "smtche") spec.kind = AggKind::SmoothModifiedTchebycheff;
    else if (id == "pbi") { spec.kind = AggKind::Pbi; spec.mu = 5.0; }
    else if (id == "cosmos") { spec.kind = AggKind::Cosmos; spec.mu = 1.0; }
    else if (id == "pnorm") spec.kind = AggKind::PNorm;
    else if (id == "aasf") spec.kind = AggKind::Aasf;
    else throw std::invalid_argument("unknown aggregation id: " + id);
    return spec;
}

std::string aggregation_id(AggKind kind) {
    switch (kind) {
        case AggKind::Cosmos: return "cosmos";
        case AggKind::LinearScalarization: return "ls";
        case AggKind::Tchebycheff: return "tche";
        case AggKind::ModifiedTchebycheff: return "mtche";
        case AggKind::SmoothTchebycheff: return "stche";
        case AggKind::SmoothModifiedTchebycheff: return "smtche";
        case AggKind::Pbi: return "pbi";
        case AggKind::PNorm: return "pnorm";
        case AggKind::Aasf: return "aasf";
    }
    return "?";
}

double aggregate(const AggregationSpec& spec, const ObjectiveVector& L, const Preference& lam) {
    check_inputs(spec, L, lam);
    const Vec z = ref_point(spec, L.size());
    switch (spec.kind) {
        case AggKind::LinearScalarization:
            return lam.dot(L);
        case AggKind::Tchebycheff:
            return (lam.array() * (L - z).array()).maxCoeff();
        case AggKind::ModifiedTchebycheff:
            return ((L - z).array() / lam.array()).maxCoeff();
        case AggKind::SmoothTchebycheff:
            return log_sum_exp((lam.array() * (L - z).array()).matrix(), spec.h);
        case AggKind::SmoothModifiedTchebycheff:
            return log_sum_exp(((L - z).array() / lam.array()).matrix(), spec.h);
        case AggKind::Pbi: {
            const double lam_norm = lam.norm();
            const double d1 = lam.dot(L) / lam_norm;
            const double d2 = (L - d1 / lam_norm * lam).norm();
            return d1 + spec.mu * d2;
        }
        case AggKind::Cosmos: {
            const double denom = lam.norm() * (L.norm() + kNormFloor);
            return lam.dot(L) - spec.mu * lam.dot(L) / denom;
        }
        case AggKind::PNorm: {
            const Vec v = (lam.array() * L.array()).matrix() - z;
            return std::pow(v.array().abs().pow(spec.p).sum(), 1.0 / spec.p);
        }
        case AggKind::Aasf: {
            const double mtche = ((L - z).array() / lam.array()).maxCoeff();
            return mtche + spec.rho * lam.dot(L);
        }
    }
    throw std::logic_error("unreachable");
}

Vec aggregate_grad(const AggregationSpec& spec, const ObjectiveVector& L, const Preference& lam) {
    check_inputs(spec, L, lam);
    const Eigen::Index m = L.size();
    const Vec z = ref_point(spec, m);
    switch (spec.kind) {
        case AggKind::LinearScalarization:
            return lam;
        case AggKind::Tchebycheff: {
            const Vec v = (lam.array() * (L - z).array()).matrix();
            Vec g = Vec::Zero(m);
            const int a = argmax_smallest(v);
            g[a] = lam[a];
            return g;
        }
        case AggKind::ModifiedTchebycheff: {
            const Vec v = ((L - z).array() / lam.array()).matrix();
            Vec g = Vec::Zero(m);
            const int a = argmax_smallest(v);
            g[a] = 1.0 / lam[a];
            return g;
        }
        case AggKind::SmoothTchebycheff: {
            const Vec s = softmax((lam.array() * (L - z).array()).matrix(), spec.h);
            return (s.array() * lam.array()).matrix();
        }
        case AggKind::SmoothModifiedTchebycheff: {
            const Vec s = softmax(((L - z).array() / lam.array()).matrix(), spec.h);
            return (s.array() / lam.array()).matrix();
        }
        case AggKind::Pbi: {
            const double lam_norm = lam.norm();
            const double d1 = lam.dot(L) / lam_norm;
            const Vec w = L - d1 / lam_norm * lam;
            const double wn = w.norm();
            // w is orthogonal to lam, so the projector drops out of grad(d2).
            Vec g = lam / lam_norm;
            if (wn > kNormFloor) g += spec.mu / wn * w;
            return g;
        }
        case AggKind::Cosmos: {
            const double ln = lam.norm();
            const double q = L.norm() + kNormFloor;
            const double ip = lam.dot(L);
            Vec g = lam - spec.mu * (lam / (ln * q));
            if (L.norm() > kNormFloor)
                g += spec.mu * ip / (ln * q * q) * (L / L.norm());
            return g;
        }
        case AggKind::PNorm: {
            const Vec v = (lam.array() * L.array()).matrix() - z;
            const double g = std::pow(v.array().abs().pow(spec.p).sum(), 1.0 / spec.p);
            if (g <= kNormFloor) return Vec::Zero(m);
            return ((v.array().sign() * v.array().abs().pow(spec.p - 1.0) * lam.array()) /
                    std::pow(g, spec.p - 1.0)).matrix();
        }
        case AggKind::Aasf: {
            const Vec v = ((L - z).array() / lam.array()).matrix();
            Vec g = spec.rho * lam;
            const int a = argmax_smallest(v);
            g[a] += 1.0 / lam[a];
            return g;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace moograd
