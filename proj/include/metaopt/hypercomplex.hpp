#pragma once

#include <Eigen/Core>

namespace metaopt {

// Spans one variable's d hypercomplex components, each in [0, 1], to a real
// decision value: lb + (ub - lb) * ||h||_2 / sqrt(d). The image is exactly
// [lb, ub]: the zero vector maps to lb and the all-ones vector to ub.
double hyper_span(const Eigen::VectorXd& components, double lb, double ub);

}  // namespace metaopt
