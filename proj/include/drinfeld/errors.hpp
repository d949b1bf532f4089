#pragma once

#include <stdexcept>
#include <string>

namespace drinfeld {

/// A computation was asked for more precision than its inputs support.
class PrecisionError : public std::runtime_error {
public:
    PrecisionError(const std::string& what, int required) : std::runtime_error(what), required_(required) {}
    /// Input precision that would have been sufficient (or -1 if unknown).
    int required() const noexcept { return required_; }

private:
    int required_;
};

/// A named form whose parameters fail the existence hypothesis.
class HypothesisError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace drinfeld
