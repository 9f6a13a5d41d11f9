#pragma once

#include <Eigen/Core>
#include <memory>
#include <string>
#include <string_view>

namespace metaopt {

namespace detail {
struct ExprNode;
}

// Arithmetic expression over variables x[0], x[1], ... with operators
// + - * / ^ (power is right-associative), unary minus, and the calls
// sin, cos, tan, exp, log, sqrt, abs.
//
// Unlike program trees, expressions fail loudly: division by a value of
// magnitude < 1e-12, log of a non-positive value, or sqrt of a negative
// value raise EvaluationError.
class Expression {
public:
    // Parses `text`; throws ExpressionParseError carrying the byte offset of
    // the first offending character.
    static Expression parse(std::string_view text);

    double evaluate(const Eigen::VectorXd& x) const;

    // Largest variable index referenced, or -1 for a constant expression.
    int max_variable_index() const;

    // Fully parenthesized rendering; parsing it back yields a structurally
    // identical expression.
    std::string to_string() const;

    bool structurally_equal(const Expression& other) const;

    const std::string& source() const { return source_; }

private:
    explicit Expression(std::shared_ptr<const detail::ExprNode> root, std::string source);

    std::shared_ptr<const detail::ExprNode> root_;
    std::string source_;
};

}  // namespace metaopt
