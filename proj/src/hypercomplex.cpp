#include "metaopt/hypercomplex.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace metaopt {

double hyper_span(const Eigen::VectorXd& components, double lb, double ub) {
    if (components.size() == 0) {
        throw std::invalid_argument("hyper_span needs at least one component");
    }
    if (!(lb < ub)) {
        throw std::invalid_argument("hyper_span requires lb < ub");
    }
    for (Eigen::Index i = 0; i < components.size(); ++i) {
        if (components[i] < 0.0 || components[i] > 1.0) {
            throw std::invalid_argument("hyper_span component " + std::to_string(i) +
                                        " outside [0, 1]: " + std::to_string(components[i]));
        }
    }
    const double scaled = components.norm() / std::sqrt(static_cast<double>(components.size()));
    return lb + (ub - lb) * scaled;
}

}  // namespace metaopt
