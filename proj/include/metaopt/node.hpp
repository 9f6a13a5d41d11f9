#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace metaopt {

enum class NodeKind { kTerminal, kFunction };

// Operator set for program trees. Division, log, and sqrt are protected so
// that evaluation stays total (see node_evaluate).
enum class NodeOp { kAdd, kSub, kMul, kDiv, kExp, kSqrt, kLog, kAbs };

int node_op_arity(NodeOp op);
const char* node_op_symbol(NodeOp op);
NodeOp node_op_from_symbol(const std::string& symbol);

// Expression-tree node with value semantics; copying a Node deep-copies the
// whole subtree. Terminals carry exactly one of constant_value /
// variable_index; function nodes carry children matching the operator arity.
struct Node {
    NodeKind kind = NodeKind::kTerminal;
    NodeOp op = NodeOp::kAdd;
    std::optional<double> constant_value;
    std::optional<int> variable_index;
    std::vector<Node> children;

    static Node variable(int index);
    static Node constant(double value);
    static Node function(NodeOp op, std::vector<Node> children);

    std::string label() const;
    bool is_terminal() const { return kind == NodeKind::kTerminal; }
};

// Evaluates the tree with variables substituted from x. Protected arithmetic:
// division by a value of magnitude < 1e-12 yields 1.0; log and sqrt operate
// on the operand's magnitude clamped to >= 1e-12.
double node_evaluate(const Node& root, const Eigen::VectorXd& x);

struct NodeMetrics {
    int depth = 0;       // lone terminal has depth 0
    int node_count = 0;  // all nodes, root included
};
NodeMetrics node_metrics(const Node& root);

// Infix rendering, fully parenthesized, e.g. "(x[0] * (x[1] + 0.5))".
std::string node_to_string(const Node& root);

bool node_equal(const Node& a, const Node& b);

// Preorder walk yielding (node, depth) pairs; the genetic operators use this
// to pick subtrees by index.
std::vector<std::pair<Node*, int>> node_preorder(Node& root);
std::vector<std::pair<const Node*, int>> node_preorder(const Node& root);

}  // namespace metaopt
