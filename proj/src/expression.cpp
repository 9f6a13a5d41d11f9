#include "metaopt/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

#include "metaopt/errors.hpp"

namespace metaopt {

namespace detail {

enum class ExprCall { kSin, kCos, kTan, kExp, kLog, kSqrt, kAbs };

struct ExprNode {
    enum class Kind { kNumber, kVariable, kNegate, kBinary, kCall };

    Kind kind;
    double number = 0.0;
    int variable = 0;
    char op = 0;  // one of + - * / ^
    ExprCall call = ExprCall::kSin;
    std::shared_ptr<const ExprNode> lhs;
    std::shared_ptr<const ExprNode> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

constexpr double kDivisionEps = 1e-12;

const char* call_name(ExprCall c) {
    switch (c) {
        case ExprCall::kSin: return "sin";
        case ExprCall::kCos: return "cos";
        case ExprCall::kTan: return "tan";
        case ExprCall::kExp: return "exp";
        case ExprCall::kLog: return "log";
        case ExprCall::kSqrt: return "sqrt";
        case ExprCall::kAbs: return "abs";
    }
    return "?";
}

bool call_from_name(std::string_view name, ExprCall& out) {
    if (name == "sin") { out = ExprCall::kSin; return true; }
    if (name == "cos") { out = ExprCall::kCos; return true; }
    if (name == "tan") { out = ExprCall::kTan; return true; }
    if (name == "exp") { out = ExprCall::kExp; return true; }
    if (name == "log") { out = ExprCall::kLog; return true; }
    if (name == "sqrt") { out = ExprCall::kSqrt; return true; }
    if (name == "abs") { out = ExprCall::kAbs; return true; }
    return false;
}

// Recursive-descent parser for:
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := unary ("^" factor)?          -- right-associative power
//   unary  := "-" unary | atom
//   atom   := number | "x" "[" integer "]" | ident "(" expr ")" | "(" expr ")"
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    NodePtr parse() {
        NodePtr root = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail("unexpected trailing input", pos_);
        }
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& message, std::size_t offset) const {
        throw ExpressionParseError(message, offset);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    bool consume(char c) {
        skip_ws();
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (at_end() || peek() != c) {
            fail(std::string("expected ") + what, pos_);
        }
        ++pos_;
    }

    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            skip_ws();
            if (!at_end() && (peek() == '+' || peek() == '-')) {
                const char op = text_[pos_++];
                lhs = make_binary(op, lhs, parse_term());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        for (;;) {
            skip_ws();
            if (!at_end() && (peek() == '*' || peek() == '/')) {
                const char op = text_[pos_++];
                lhs = make_binary(op, lhs, parse_factor());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_factor() {
        NodePtr base = parse_unary();
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            return make_binary('^', base, parse_factor());
        }
        return base;
    }

    NodePtr parse_unary() {
        skip_ws();
        if (!at_end() && peek() == '-') {
            ++pos_;
            auto node = std::make_shared<ExprNode>();
            node->kind = ExprNode::Kind::kNegate;
            node->lhs = parse_unary();
            return node;
        }
        return parse_atom();
    }

    NodePtr parse_atom() {
        skip_ws();
        if (at_end()) {
            fail("unexpected end of expression", pos_);
        }
        const char c = peek();
        if (c == '(') {
            ++pos_;
            NodePtr inner = parse_expr();
            expect(')', "')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            return parse_number();
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            return parse_ident();
        }
        fail(std::string("unexpected character '") + c + "'", pos_);
    }

    NodePtr parse_number() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (!at_end() && peek() == '.') {
            ++pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        if (pos_ == start || (pos_ == start + 1 && text_[start] == '.')) {
            fail("malformed number", start);
        }
        if (!at_end() && (peek() == 'e' || peek() == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (!at_end() && (peek() == '+' || peek() == '-')) ++pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
                pos_ = mark;  // the 'e' belongs to something else (e.g. "2exp" is an error later)
            } else {
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            }
        }
        auto node = std::make_shared<ExprNode>();
        node->kind = ExprNode::Kind::kNumber;
        node->number = std::stod(std::string(text_.substr(start, pos_ - start)));
        return node;
    }

    NodePtr parse_ident() {
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
            ++pos_;
        }
        const std::string_view ident = text_.substr(start, pos_ - start);

        if (ident == "x") {
            skip_ws();
            if (at_end() || peek() != '[') {
                fail("malformed variable reference: expected '[' after 'x'", pos_);
            }
            ++pos_;
            skip_ws();
            const std::size_t digits_start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (pos_ == digits_start) {
                fail("malformed variable reference: expected index digits", digits_start);
            }
            const std::string digits(text_.substr(digits_start, pos_ - digits_start));
            expect(']', "']'");
            auto node = std::make_shared<ExprNode>();
            node->kind = ExprNode::Kind::kVariable;
            try {
                node->variable = std::stoi(digits);
            } catch (const std::exception&) {
                fail("variable index out of range", digits_start);
            }
            return node;
        }

        ExprCall call;
        if (!call_from_name(ident, call)) {
            fail("unknown function '" + std::string(ident) + "'", start);
        }
        expect('(', "'(' after function name");
        NodePtr arg = parse_expr();
        expect(')', "')'");
        auto node = std::make_shared<ExprNode>();
        node->kind = ExprNode::Kind::kCall;
        node->call = call;
        node->lhs = arg;
        return node;
    }

    std::string_view text_;
    std::size_t pos_ = 0;

    static NodePtr make_binary(char op, NodePtr lhs, NodePtr rhs) {
        auto node = std::make_shared<ExprNode>();
        node->kind = ExprNode::Kind::kBinary;
        node->op = op;
        node->lhs = std::move(lhs);
        node->rhs = std::move(rhs);
        return node;
    }
};

double eval_node(const ExprNode& node, const Eigen::VectorXd& x) {
    switch (node.kind) {
        case ExprNode::Kind::kNumber:
            return node.number;
        case ExprNode::Kind::kVariable:
            if (node.variable >= x.size()) {
                throw EvaluationError("expression references x[" +
                                      std::to_string(node.variable) + "] but input has " +
                                      std::to_string(x.size()) + " variables");
            }
            return x[node.variable];
        case ExprNode::Kind::kNegate:
            return -eval_node(*node.lhs, x);
        case ExprNode::Kind::kBinary: {
            const double a = eval_node(*node.lhs, x);
            const double b = eval_node(*node.rhs, x);
            switch (node.op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/':
                    if (std::abs(b) < kDivisionEps) {
                        throw EvaluationError("division by " + std::to_string(b));
                    }
                    return a / b;
                case '^': {
                    const double r = std::pow(a, b);
                    if (!std::isfinite(r)) {
                        throw EvaluationError("power " + std::to_string(a) + "^" +
                                              std::to_string(b) + " is not finite");
                    }
                    return r;
                }
            }
            throw EvaluationError("unknown binary operator");
        }
        case ExprNode::Kind::kCall: {
            const double a = eval_node(*node.lhs, x);
            switch (node.call) {
                case ExprCall::kSin: return std::sin(a);
                case ExprCall::kCos: return std::cos(a);
                case ExprCall::kTan: return std::tan(a);
                case ExprCall::kExp: {
                    const double r = std::exp(a);
                    if (!std::isfinite(r)) {
                        throw EvaluationError("exp(" + std::to_string(a) + ") overflows");
                    }
                    return r;
                }
                case ExprCall::kLog:
                    if (a <= 0.0) {
                        throw EvaluationError("log of non-positive value " + std::to_string(a));
                    }
                    return std::log(a);
                case ExprCall::kSqrt:
                    if (a < 0.0) {
                        throw EvaluationError("sqrt of negative value " + std::to_string(a));
                    }
                    return std::sqrt(a);
                case ExprCall::kAbs: return std::abs(a);
            }
            throw EvaluationError("unknown function call");
        }
    }
    throw EvaluationError("corrupt expression node");
}

int max_var_index(const ExprNode& node) {
    int best = -1;
    if (node.kind == ExprNode::Kind::kVariable) {
        best = node.variable;
    }
    if (node.lhs) best = std::max(best, max_var_index(*node.lhs));
    if (node.rhs) best = std::max(best, max_var_index(*node.rhs));
    return best;
}

std::string render(const ExprNode& node) {
    char buf[40];
    switch (node.kind) {
        case ExprNode::Kind::kNumber:
            std::snprintf(buf, sizeof(buf), "%.17g", node.number);
            return buf;
        case ExprNode::Kind::kVariable:
            return "x[" + std::to_string(node.variable) + "]";
        case ExprNode::Kind::kNegate:
            return "(-" + render(*node.lhs) + ")";
        case ExprNode::Kind::kBinary:
            return "(" + render(*node.lhs) + " " + node.op + " " + render(*node.rhs) + ")";
        case ExprNode::Kind::kCall:
            return std::string(call_name(node.call)) + "(" + render(*node.lhs) + ")";
    }
    return "?";
}

bool nodes_equal(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ExprNode::Kind::kNumber: return a.number == b.number;
        case ExprNode::Kind::kVariable: return a.variable == b.variable;
        case ExprNode::Kind::kNegate: return nodes_equal(*a.lhs, *b.lhs);
        case ExprNode::Kind::kBinary:
            return a.op == b.op && nodes_equal(*a.lhs, *b.lhs) && nodes_equal(*a.rhs, *b.rhs);
        case ExprNode::Kind::kCall:
            return a.call == b.call && nodes_equal(*a.lhs, *b.lhs);
    }
    return false;
}

}  // namespace
}  // namespace detail

Expression::Expression(std::shared_ptr<const detail::ExprNode> root, std::string source)
    : root_(std::move(root)), source_(std::move(source)) {}

Expression Expression::parse(std::string_view text) {
    if (text.empty()) {
        throw ExpressionParseError("empty expression", 0);
    }
    detail::Parser parser(text);
    return Expression(parser.parse(), std::string(text));
}

double Expression::evaluate(const Eigen::VectorXd& x) const {
    return detail::eval_node(*root_, x);
}

int Expression::max_variable_index() const { return detail::max_var_index(*root_); }

std::string Expression::to_string() const { return detail::render(*root_); }

bool Expression::structurally_equal(const Expression& other) const {
    return detail::nodes_equal(*root_, *other.root_);
}

}  // namespace metaopt
