#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metaopt {

// An objective produced a non-finite value or was applied outside its domain.
class EvaluationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A run configuration failed structural or cross-field validation.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& message, int line = 0)
        : std::runtime_error(line > 0 ? message + " (line " + std::to_string(line) + ")"
                                      : message),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_ = 0;
};

// Expression text was rejected; offset() is the byte position of the failure.
class ExpressionParseError : public std::runtime_error {
public:
    ExpressionParseError(const std::string& message, std::size_t offset)
        : std::runtime_error(message + " at offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// An optimizer was stepped before initialize() bound it to a population.
class InvalidStateError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace metaopt
