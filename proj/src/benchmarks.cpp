#include "metaopt/benchmarks.hpp"

#include <cmath>
#include <stdexcept>

namespace metaopt {

namespace {

double sphere(const Eigen::VectorXd& x) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        s += x[i] * x[i];
    }
    return s;
}

double rastrigin(const Eigen::VectorXd& x) {
    double s = 10.0 * static_cast<double>(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        s += x[i] * x[i] - 10.0 * std::cos(2.0 * M_PI * x[i]);
    }
    return s;
}

double rosenbrock(const Eigen::VectorXd& x) {
    double s = 0.0;
    for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = 1.0 - x[i];
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double ackley(const Eigen::VectorXd& x) {
    const double n = static_cast<double>(x.size());
    double sum_sq = 0.0;
    double sum_cos = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        sum_sq += x[i] * x[i];
        sum_cos += std::cos(2.0 * M_PI * x[i]);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sum_sq / n)) - std::exp(sum_cos / n) + 20.0 +
           M_E;
}

double griewank(const Eigen::VectorXd& x) {
    double s = 0.0;
    double p = 1.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        s += x[i] * x[i] / 4000.0;
        p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return 1.0 + s - p;
}

// Offset chosen so the value at the global minimizer (x_i ~ 420.9687462275)
// is zero to near machine precision.
constexpr double kSchwefelOffset = 418.9828872724337;

double schwefel(const Eigen::VectorXd& x) {
    double s = kSchwefelOffset * static_cast<double>(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        s -= x[i] * std::sin(std::sqrt(std::abs(x[i])));
    }
    return s;
}

}  // namespace

const std::vector<BenchmarkInfo>& benchmark_catalog() {
    static const std::vector<BenchmarkInfo> catalog = {
        {BenchmarkId::kSphere, "sphere", "sum of squares; unimodal, separable", -5.12, 5.12},
        {BenchmarkId::kRastrigin, "rastrigin", "cosine-modulated sphere; highly multimodal",
         -5.12, 5.12},
        {BenchmarkId::kRosenbrock, "rosenbrock", "curved narrow valley; unimodal for n <= 3",
         -2.048, 2.048},
        {BenchmarkId::kAckley, "ackley", "exponential well with many shallow basins", -32.768,
         32.768},
        {BenchmarkId::kGriewank, "griewank", "quadratic bowl with oscillatory product term",
         -600.0, 600.0},
        {BenchmarkId::kSchwefel, "schwefel", "deceptive multimodal; minimum far from origin",
         -500.0, 500.0},
    };
    return catalog;
}

BenchmarkId benchmark_from_name(const std::string& name) {
    for (const BenchmarkInfo& info : benchmark_catalog()) {
        if (name == info.name) {
            return info.id;
        }
    }
    throw std::invalid_argument("unknown benchmark '" + name + "'");
}

const char* benchmark_name(BenchmarkId id) {
    for (const BenchmarkInfo& info : benchmark_catalog()) {
        if (info.id == id) {
            return info.name;
        }
    }
    throw std::invalid_argument("unknown benchmark id");
}

double benchmark_eval(BenchmarkId id, const Eigen::VectorXd& x) {
    if (x.size() == 0) {
        throw std::invalid_argument("benchmark input must be non-empty");
    }
    switch (id) {
        case BenchmarkId::kSphere: return sphere(x);
        case BenchmarkId::kRastrigin: return rastrigin(x);
        case BenchmarkId::kRosenbrock: return rosenbrock(x);
        case BenchmarkId::kAckley: return ackley(x);
        case BenchmarkId::kGriewank: return griewank(x);
        case BenchmarkId::kSchwefel: return schwefel(x);
    }
    throw std::invalid_argument("unknown benchmark id");
}

}  // namespace metaopt
