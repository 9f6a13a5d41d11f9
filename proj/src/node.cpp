#include "metaopt/node.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace metaopt {

namespace {

constexpr double kProtectionEps = 1e-12;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

int node_op_arity(NodeOp op) {
    switch (op) {
        case NodeOp::kAdd:
        case NodeOp::kSub:
        case NodeOp::kMul:
        case NodeOp::kDiv:
            return 2;
        case NodeOp::kExp:
        case NodeOp::kSqrt:
        case NodeOp::kLog:
        case NodeOp::kAbs:
            return 1;
    }
    throw std::invalid_argument("unknown node operator");
}

const char* node_op_symbol(NodeOp op) {
    switch (op) {
        case NodeOp::kAdd: return "+";
        case NodeOp::kSub: return "-";
        case NodeOp::kMul: return "*";
        case NodeOp::kDiv: return "/";
        case NodeOp::kExp: return "exp";
        case NodeOp::kSqrt: return "sqrt";
        case NodeOp::kLog: return "log";
        case NodeOp::kAbs: return "abs";
    }
    throw std::invalid_argument("unknown node operator");
}

NodeOp node_op_from_symbol(const std::string& symbol) {
    if (symbol == "+") return NodeOp::kAdd;
    if (symbol == "-") return NodeOp::kSub;
    if (symbol == "*") return NodeOp::kMul;
    if (symbol == "/") return NodeOp::kDiv;
    if (symbol == "exp") return NodeOp::kExp;
    if (symbol == "sqrt") return NodeOp::kSqrt;
    if (symbol == "log") return NodeOp::kLog;
    if (symbol == "abs") return NodeOp::kAbs;
    throw std::invalid_argument("unknown tree operator '" + symbol + "'");
}

Node Node::variable(int index) {
    if (index < 0) {
        throw std::invalid_argument("variable index must be non-negative");
    }
    Node n;
    n.kind = NodeKind::kTerminal;
    n.variable_index = index;
    return n;
}

Node Node::constant(double value) {
    Node n;
    n.kind = NodeKind::kTerminal;
    n.constant_value = value;
    return n;
}

Node Node::function(NodeOp op, std::vector<Node> children) {
    if (static_cast<int>(children.size()) != node_op_arity(op)) {
        throw std::invalid_argument(std::string("operator '") + node_op_symbol(op) +
                                    "' expects " + std::to_string(node_op_arity(op)) +
                                    " children, got " + std::to_string(children.size()));
    }
    Node n;
    n.kind = NodeKind::kFunction;
    n.op = op;
    n.children = std::move(children);
    return n;
}

std::string Node::label() const {
    if (kind == NodeKind::kFunction) {
        return node_op_symbol(op);
    }
    if (variable_index) {
        return "x[" + std::to_string(*variable_index) + "]";
    }
    return format_double(constant_value.value_or(0.0));
}

double node_evaluate(const Node& root, const Eigen::VectorXd& x) {
    if (root.kind == NodeKind::kTerminal) {
        if (root.variable_index) {
            const int idx = *root.variable_index;
            if (idx >= x.size()) {
                throw std::invalid_argument("tree references x[" + std::to_string(idx) +
                                            "] but input has " + std::to_string(x.size()) +
                                            " variables");
            }
            return x[idx];
        }
        return root.constant_value.value_or(0.0);
    }

    const double a = node_evaluate(root.children[0], x);
    switch (root.op) {
        case NodeOp::kAdd: return a + node_evaluate(root.children[1], x);
        case NodeOp::kSub: return a - node_evaluate(root.children[1], x);
        case NodeOp::kMul: return a * node_evaluate(root.children[1], x);
        case NodeOp::kDiv: {
            const double b = node_evaluate(root.children[1], x);
            if (std::abs(b) < kProtectionEps) {
                return 1.0;
            }
            return a / b;
        }
        case NodeOp::kExp: return std::exp(a);
        case NodeOp::kSqrt: return std::sqrt(std::max(std::abs(a), kProtectionEps));
        case NodeOp::kLog: return std::log(std::max(std::abs(a), kProtectionEps));
        case NodeOp::kAbs: return std::abs(a);
    }
    throw std::invalid_argument("unknown node operator");
}

NodeMetrics node_metrics(const Node& root) {
    NodeMetrics m;
    m.node_count = 1;
    for (const Node& child : root.children) {
        const NodeMetrics cm = node_metrics(child);
        m.depth = std::max(m.depth, cm.depth + 1);
        m.node_count += cm.node_count;
    }
    return m;
}

std::string node_to_string(const Node& root) {
    if (root.kind == NodeKind::kTerminal) {
        return root.label();
    }
    if (node_op_arity(root.op) == 1) {
        return std::string(node_op_symbol(root.op)) + "(" +
               node_to_string(root.children[0]) + ")";
    }
    return "(" + node_to_string(root.children[0]) + " " + node_op_symbol(root.op) + " " +
           node_to_string(root.children[1]) + ")";
}

bool node_equal(const Node& a, const Node& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == NodeKind::kTerminal) {
        return a.variable_index == b.variable_index && a.constant_value == b.constant_value;
    }
    if (a.op != b.op || a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!node_equal(a.children[i], b.children[i])) return false;
    }
    return true;
}

namespace {

template <typename NodeT, typename OutT>
void preorder_walk(NodeT& node, int depth, std::vector<std::pair<OutT, int>>& out) {
    out.emplace_back(&node, depth);
    for (auto& child : node.children) {
        preorder_walk(child, depth + 1, out);
    }
}

}  // namespace

std::vector<std::pair<Node*, int>> node_preorder(Node& root) {
    std::vector<std::pair<Node*, int>> out;
    preorder_walk<Node, Node*>(root, 0, out);
    return out;
}

std::vector<std::pair<const Node*, int>> node_preorder(const Node& root) {
    std::vector<std::pair<const Node*, int>> out;
    preorder_walk<const Node, const Node*>(root, 0, out);
    return out;
}

}  // namespace metaopt
