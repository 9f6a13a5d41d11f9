#include "metaopt/agent.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace metaopt {

Agent::Agent(int n_variables, int n_dimensions)
    : position(Matrix::Zero(std::max(n_variables, 0), std::max(n_dimensions, 0))),
      fitness(std::numeric_limits<double>::max()) {
    if (n_variables < 1 || n_dimensions < 1) {
        throw std::invalid_argument("agent shape must be at least 1x1, got " +
                                    std::to_string(n_variables) + "x" +
                                    std::to_string(n_dimensions));
    }
}

void clip_to_bounds(Agent& agent, const Vector& lower, const Vector& upper) {
    if (lower.size() != agent.position.rows() || upper.size() != agent.position.rows()) {
        throw std::invalid_argument("bound vectors must have one entry per variable");
    }
    for (Eigen::Index i = 0; i < agent.position.rows(); ++i) {
        for (Eigen::Index j = 0; j < agent.position.cols(); ++j) {
            agent.position(i, j) = std::clamp(agent.position(i, j), lower[i], upper[i]);
        }
    }
}

}  // namespace metaopt
