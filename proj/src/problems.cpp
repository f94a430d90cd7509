#include "moograd/problems.hpp"

#include <cmath>

namespace moograd {

Vec Problem::clip(Vec theta) const {
    check_theta(theta);
    return theta.cwiseMax(meta_.lower).cwiseMin(meta_.upper);
}

namespace {

class Vlmop2 final : public Problem {
public:
    explicit Vlmop2(int n) {
        meta_.name = "vlmop2";
        meta_.m = 2;
        meta_.n = n;
        meta_.lower = Vec::Constant(n, -2.0);
        meta_.upper = Vec::Constant(n, 2.0);
        c_ = 1.0 / std::sqrt(static_cast<double>(n));
    }

    ObjectiveVector evaluate(const Vec& theta) const override {
        check_theta(theta);
        const double s1 = (theta.array() - c_).square().sum();
        const double s2 = (theta.array() + c_).square().sum();
        ObjectiveVector f(2);
        f << 1.0 - std::exp(-s1), 1.0 - std::exp(-s2);
        return f;
    }

    Mat jacobian(const Vec& theta) const override {
        check_theta(theta);
        const double s1 = (theta.array() - c_).square().sum();
        const double s2 = (theta.array() + c_).square().sum();
        Mat jac(2, meta_.n);
        jac.row(0) = 2.0 * std::exp(-s1) * (theta.array() - c_).transpose();
        jac.row(1) = 2.0 * std::exp(-s2) * (theta.array() + c_).transpose();
        return jac;
    }

    // Pareto set is theta_i = t/sqrt(n), t in [-1, 1]; sampled uniformly in t.
    std::vector<ObjectiveVector> sample_front(int count) const override {
        std::vector<ObjectiveVector> front;
        front.reserve(count);
        for (int k = 0; k < count; ++k) {
            const double t = -1.0 + 2.0 * k / (count - 1);
            ObjectiveVector f(2);
            f << 1.0 - std::exp(-(t - 1.0) * (t - 1.0)),
                 1.0 - std::exp(-(t + 1.0) * (t + 1.0));
            front.push_back(f);
        }
        return front;
    }

private:
    double c_;
};

class Vlmop1 final : public Problem {
public:
    explicit Vlmop1(int n) {
        meta_.name = "vlmop1";
        meta_.m = 2;
        meta_.n = n;
        meta_.lower = Vec::Constant(n, -2.0);
        meta_.upper = Vec::Constant(n, 4.0);
    }

    ObjectiveVector evaluate(const Vec& theta) const override {
        check_theta(theta);
        ObjectiveVector f(2);
        f << theta.squaredNorm() / meta_.n,
             (theta.array() - 2.0).square().sum() / meta_.n;
        return f;
    }

    Mat jacobian(const Vec& theta) const override {
        check_theta(theta);
        Mat jac(2, meta_.n);
        jac.row(0) = 2.0 / meta_.n * theta.transpose();
        jac.row(1) = 2.0 / meta_.n * (theta.array() - 2.0).transpose();
        return jac;
    }

    // Pareto set is theta_i = c, c in [0, 2].
    std::vector<ObjectiveVector> sample_front(int count) const override {
        std::vector<ObjectiveVector> front;
        front.reserve(count);
        for (int k = 0; k < count; ++k) {
            const double c = 2.0 * k / (count - 1);
            ObjectiveVector f(2);
            f << c * c, (c - 2.0) * (c - 2.0);
            front.push_back(f);
        }
        return front;
    }
};

class Zdt1 final : public Problem {
public:
    explicit Zdt1(int n) {
        meta_.name = "zdt1";
        meta_.m = 2;
        meta_.n = n;
        meta_.lower = Vec::Zero(n);
        meta_.upper = Vec::Ones(n);
    }

    ObjectiveVector evaluate(const Vec& theta) const override {
        check_theta(theta);
        const double g = g_value(theta);
        ObjectiveVector f(2);
        f << theta[0], g * (1.0 - std::sqrt(theta[0] / g));
        return f;
    }

    Mat jacobian(const Vec& theta) const override {
        check_theta(theta);
        const double g = g_value(theta);
        const double f1 = theta[0];
        Mat jac = Mat::Zero(2, meta_.n);
        jac(0, 0) = 1.0;
        // f2 = g - sqrt(f1*g); gradient splits into the f1 and g parts.
        jac(1, 0) = -0.5 * std::sqrt(g / std::max(f1, 1e-300));
        const double dg = 9.0 / (meta_.n - 1);
        for (int j = 1; j < meta_.n; ++j)
            jac(1, j) = dg * (1.0 - 0.5 * std::sqrt(f1 / g));
        return jac;
    }

    // True front: g = 1, f2 = 1 - sqrt(f1). Sampling f1 = t^2 with t uniform
    // gives points (t^2, 1 - t), evenly spaced in the second objective.
    std::vector<ObjectiveVector> sample_front(int count) const override {
        std::vector<ObjectiveVector> front;
        front.reserve(count);
        for (int k = 0; k < count; ++k) {
            const double t = static_cast<double>(k) / (count - 1);
            ObjectiveVector f(2);
            f << t * t, 1.0 - t;
            front.push_back(f);
        }
        return front;
    }

private:
    double g_value(const Vec& theta) const {
        return 1.0 + 9.0 * theta.tail(meta_.n - 1).sum() / (meta_.n - 1);
    }
};

}  // namespace

std::unique_ptr<Problem> make_problem(const std::string& id, int n) {
    if (id == "vlmop2") return std::make_unique<Vlmop2>(n > 0 ? n : 10);
    if (id == "vlmop1") return std::make_unique<Vlmop1>(n > 0 ? n : 1);
    if (id == "zdt1") {
        const int dim = n > 0 ? n : 8;
        if (dim < 2) throw std::invalid_argument("zdt1 requires n >= 2");
        return std::make_unique<Zdt1>(dim);
    }
    throw std::invalid_argument("unknown problem id: " + id);
}

const std::vector<std::string>& problem_ids() {
    static const std::vector<std::string> ids = {"vlmop1", "vlmop2", "zdt1"};
    return ids;
}

}  // namespace moograd
