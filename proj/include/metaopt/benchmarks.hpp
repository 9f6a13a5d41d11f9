#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace metaopt {

enum class BenchmarkId { kSphere, kRastrigin, kRosenbrock, kAckley, kGriewank, kSchwefel };

struct BenchmarkInfo {
    BenchmarkId id;
    const char* name;
    const char* description;
    double domain_lo;  // conventional evaluation box, same for every variable
    double domain_hi;
};

const std::vector<BenchmarkInfo>& benchmark_catalog();

BenchmarkId benchmark_from_name(const std::string& name);
const char* benchmark_name(BenchmarkId id);

double benchmark_eval(BenchmarkId id, const Eigen::VectorXd& x);

}  // namespace metaopt
