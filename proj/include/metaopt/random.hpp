#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <random>

namespace metaopt {

// Seed-deterministic random stream. A stream has a single owner and a fixed
// draw order; two streams built from the same seed replay the same sequence
// bit-exactly. Every sampler funnels through uniform01(), which is virtual so
// tests can script exact draw sequences.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);
    virtual ~RandomStream() = default;

    std::uint64_t seed() const { return seed_; }

    // One draw in [0, 1) with 53 random bits.
    virtual double uniform01();

    double uniform(double lo, double hi);
    double gaussian(double mean, double stddev);  // Box-Muller, two draws per value
    int bernoulli(double p);
    double levy(double lambda);                   // Mantegna step, 1 < lambda <= 3
    int uniform_int(int lo, int hi);              // inclusive bounds

    Eigen::VectorXd uniform_vector(double lo, double hi, int count);
    Eigen::VectorXd gaussian_vector(double mean, double stddev, int count);
    Eigen::VectorXi bernoulli_vector(double p, int count);
    Eigen::VectorXd levy_vector(double lambda, int count);

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

// Mantegna scale sigma_u(lambda); throws for lambda outside (1, 3].
double levy_sigma_u(double lambda);

}  // namespace metaopt
