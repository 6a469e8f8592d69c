#pragma once

#include <stdexcept>
#include <string>

namespace ospssv {

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

// Signals a singular parameter set: a rational function in omega was evaluated
// at a root of its reduced denominator.
struct PoleAtEvaluation : std::runtime_error {
    explicit PoleAtEvaluation(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidArgument : std::invalid_argument {
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

struct SizeMismatch : std::invalid_argument {
    explicit SizeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace ospssv
