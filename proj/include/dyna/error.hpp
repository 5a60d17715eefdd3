#ifndef DYNA_ERROR_HPP
#define DYNA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dyna {

// Input/usage problems (bad files, bad shapes, bad flags). CLI maps these to exit 1.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failures (non-finite loss/activations). CLI maps these to exit 2.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dyna

#endif
