#include "metaopt/objective.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "metaopt/errors.hpp"

namespace metaopt {

namespace {

std::string describe_input(const Eigen::VectorXd& x) {
    std::ostringstream os;
    os << "[";
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (i > 0) os << ", ";
        os << x[i];
    }
    os << "]";
    return os.str();
}

}  // namespace

ObjectiveFunction::ObjectiveFunction(int arity, std::string label, Evaluator evaluator)
    : arity_(arity), label_(std::move(label)), evaluator_(std::move(evaluator)) {
    if (arity_ < 1) {
        throw std::invalid_argument("objective arity must be at least 1");
    }
    if (!evaluator_) {
        throw std::invalid_argument("objective evaluator must be callable");
    }
}

double ObjectiveFunction::evaluate(const Eigen::VectorXd& x) const {
    if (x.size() != arity_) {
        throw std::invalid_argument("objective '" + label_ + "' expects " +
                                    std::to_string(arity_) + " variables, got " +
                                    std::to_string(x.size()));
    }
    const double value = evaluator_(x);
    if (!std::isfinite(value)) {
        throw EvaluationError("objective '" + label_ + "' returned a non-finite value at " +
                              describe_input(x));
    }
    return value;
}

ObjectiveFunction ObjectiveFunction::from_benchmark(BenchmarkId id, int arity) {
    return ObjectiveFunction(arity, benchmark_name(id),
                             [id](const Eigen::VectorXd& x) { return benchmark_eval(id, x); });
}

ObjectiveFunction ObjectiveFunction::from_expression(Expression expression, int arity) {
    if (expression.max_variable_index() >= arity) {
        throw std::invalid_argument("expression references x[" +
                                    std::to_string(expression.max_variable_index()) +
                                    "] but the space has " + std::to_string(arity) +
                                    " variables");
    }
    std::string label = expression.source();
    return ObjectiveFunction(
        arity, std::move(label),
        [expr = std::move(expression)](const Eigen::VectorXd& x) { return expr.evaluate(x); });
}

ObjectiveFunction ObjectiveFunction::negated() const {
    Evaluator inner = evaluator_;
    return ObjectiveFunction(arity_, "-(" + label_ + ")",
                             [inner](const Eigen::VectorXd& x) { return -inner(x); });
}

WeightedFunction::WeightedFunction(std::vector<ObjectiveFunction> functions,
                                   Eigen::VectorXd weights)
    : functions_(std::move(functions)), weights_(std::move(weights)) {
    if (functions_.empty()) {
        throw std::invalid_argument("weighted objective needs at least one function");
    }
    if (weights_.size() != static_cast<Eigen::Index>(functions_.size())) {
        throw std::invalid_argument("weighted objective has " +
                                    std::to_string(functions_.size()) + " functions but " +
                                    std::to_string(weights_.size()) + " weights");
    }
    for (const ObjectiveFunction& f : functions_) {
        if (f.arity() != functions_.front().arity()) {
            throw std::invalid_argument("weighted objective requires equal arities");
        }
    }
}

double WeightedFunction::evaluate(const Eigen::VectorXd& x) const {
    double total = 0.0;
    for (std::size_t k = 0; k < functions_.size(); ++k) {
        total += weights_[static_cast<Eigen::Index>(k)] * functions_[k].evaluate(x);
    }
    return total;
}

ObjectiveFunction WeightedFunction::as_objective() const {
    std::string label = "weighted(";
    for (std::size_t k = 0; k < functions_.size(); ++k) {
        if (k > 0) label += ", ";
        label += functions_[k].label();
    }
    label += ")";
    WeightedFunction copy = *this;
    return ObjectiveFunction(arity(), std::move(label),
                             [copy](const Eigen::VectorXd& x) { return copy.evaluate(x); });
}

}  // namespace metaopt
