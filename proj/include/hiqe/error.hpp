#pragma once

#include <stdexcept>
#include <string>

namespace hiqe {

/// Bad inputs: dimension mismatches, out-of-range times, violated preconditions.
struct validation_error : std::invalid_argument {
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Numerical breakdown at run time: NaN/Inf states, non-Hermitian samples.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hiqe
