#pragma once

#include <Eigen/Core>

namespace metaopt {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// One candidate solution traversing a search space: a position tensor of
// shape n_variables x n_dimensions plus the fitness of that position.
// trial_counter backs the abandonment rule of bee-colony style searches.
struct Agent {
    Agent(int n_variables, int n_dimensions);

    int n_variables() const { return static_cast<int>(position.rows()); }
    int n_dimensions() const { return static_cast<int>(position.cols()); }

    Matrix position;   // zero at construction, overwritten by space init
    double fitness;    // max finite double until first evaluation
    int trial_counter = 0;
};

// Clamps every position component of variable i into [lower[i], upper[i]].
// In-range components are left untouched.
void clip_to_bounds(Agent& agent, const Vector& lower, const Vector& upper);

}  // namespace metaopt
