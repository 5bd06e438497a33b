#ifndef TALBOTSUM_ERRORS_HPP
#define TALBOTSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace talbotsum {

// Invalid argument values (bad coprimality, out-of-range indices, ...).
// The CLI maps this to exit code 2.
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// A request that is well-formed but outside the case a formula covers
// (e.g. the odd-q closed form called with even q).
class UnsupportedCase : public ParameterError {
public:
    explicit UnsupportedCase(const std::string& what) : ParameterError(what) {}
};

// Magnitudes left the representable range of the evaluation scheme.
class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// File reading/writing failures. The CLI maps this to exit code 3.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace talbotsum

#endif
