#pragma once

#include <Eigen/Core>
#include <functional>
#include <string>
#include <vector>

#include "metaopt/benchmarks.hpp"
#include "metaopt/expression.hpp"

namespace metaopt {

// Wraps a scalar objective f: R^arity -> R. Evaluation enforces the arity and
// rejects non-finite results so NaN/inf never leaks into a fitness.
class ObjectiveFunction {
public:
    using Evaluator = std::function<double(const Eigen::VectorXd&)>;

    ObjectiveFunction(int arity, std::string label, Evaluator evaluator);

    int arity() const { return arity_; }
    const std::string& label() const { return label_; }

    double evaluate(const Eigen::VectorXd& x) const;

    static ObjectiveFunction from_benchmark(BenchmarkId id, int arity);
    // Requires every variable index in the expression to be < arity.
    static ObjectiveFunction from_expression(Expression expression, int arity);

    // f'(x) = -f(x), for maximization via minimization.
    ObjectiveFunction negated() const;

private:
    int arity_;
    std::string label_;
    Evaluator evaluator_;
};

// Weighted sum of objectives sharing one arity: sum_k weights[k] * f_k(x),
// accumulated in declaration order. Weights are unconstrained.
class WeightedFunction {
public:
    WeightedFunction(std::vector<ObjectiveFunction> functions, Eigen::VectorXd weights);

    int size() const { return static_cast<int>(functions_.size()); }
    int arity() const { return functions_.front().arity(); }
    const Eigen::VectorXd& weights() const { return weights_; }
    const std::vector<ObjectiveFunction>& functions() const { return functions_; }

    double evaluate(const Eigen::VectorXd& x) const;

    ObjectiveFunction as_objective() const;

private:
    std::vector<ObjectiveFunction> functions_;
    Eigen::VectorXd weights_;
};

}  // namespace metaopt
