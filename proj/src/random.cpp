#include "metaopt/random.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace metaopt {

namespace {

constexpr double kTwoPow53 = 9007199254740992.0;  // 2^53

void check_count(int count) {
    if (count < 0) {
        throw std::invalid_argument("draw count must be non-negative");
    }
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) : engine_(seed), seed_(seed) {}

double RandomStream::uniform01() {
    return static_cast<double>(engine_() >> 11) / kTwoPow53;
}

double RandomStream::uniform(double lo, double hi) {
    if (lo > hi) {
        throw std::invalid_argument("uniform bounds reversed: lo > hi");
    }
    return lo + (hi - lo) * uniform01();
}

double RandomStream::gaussian(double mean, double stddev) {
    if (stddev < 0.0) {
        throw std::invalid_argument("gaussian stddev must be non-negative");
    }
    // 1 - u keeps the log argument in (0, 1].
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    return mean + stddev * z;
}

int RandomStream::bernoulli(double p) {
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("bernoulli probability must lie in [0, 1]");
    }
    return uniform01() < p ? 1 : 0;
}

double RandomStream::levy(double lambda) {
    const double sigma = levy_sigma_u(lambda);
    const double u = gaussian(0.0, sigma);
    const double v = gaussian(0.0, 1.0);
    return u / std::pow(std::abs(v), 1.0 / lambda);
}

int RandomStream::uniform_int(int lo, int hi) {
    if (lo > hi) {
        throw std::invalid_argument("uniform_int bounds reversed: lo > hi");
    }
    const int span = hi - lo + 1;
    int offset = static_cast<int>(uniform01() * span);
    if (offset >= span) {
        offset = span - 1;
    }
    return lo + offset;
}

Eigen::VectorXd RandomStream::uniform_vector(double lo, double hi, int count) {
    check_count(count);
    Eigen::VectorXd out(count);
    for (int i = 0; i < count; ++i) {
        out[i] = uniform(lo, hi);
    }
    return out;
}

Eigen::VectorXd RandomStream::gaussian_vector(double mean, double stddev, int count) {
    check_count(count);
    Eigen::VectorXd out(count);
    for (int i = 0; i < count; ++i) {
        out[i] = gaussian(mean, stddev);
    }
    return out;
}

Eigen::VectorXi RandomStream::bernoulli_vector(double p, int count) {
    check_count(count);
    Eigen::VectorXi out(count);
    for (int i = 0; i < count; ++i) {
        out[i] = bernoulli(p);
    }
    return out;
}

Eigen::VectorXd RandomStream::levy_vector(double lambda, int count) {
    check_count(count);
    Eigen::VectorXd out(count);
    for (int i = 0; i < count; ++i) {
        out[i] = levy(lambda);
    }
    return out;
}

double levy_sigma_u(double lambda) {
    if (!(lambda > 1.0 && lambda <= 3.0)) {
        throw std::invalid_argument("levy exponent must lie in (1, 3], got " +
                                    std::to_string(lambda));
    }
    const double numerator = std::tgamma(1.0 + lambda) * std::sin(M_PI * lambda / 2.0);
    const double denominator =
        std::tgamma((1.0 + lambda) / 2.0) * lambda * std::pow(2.0, (lambda - 1.0) / 2.0);
    return std::pow(numerator / denominator, 1.0 / lambda);
}

}  // namespace metaopt
