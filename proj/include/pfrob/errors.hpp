#ifndef PFROB_ERRORS_HPP
#define PFROB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pfrob
{

// Bad arguments from the caller (CLI exit status 2).
class InputError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// An enumeration or grid would exceed its configured cap.
class CapExceeded : public InputError
{
public:
    CapExceeded(const std::string &what, std::string estimate)
        : InputError(what + " (estimated size " + estimate + ")"), estimate_(std::move(estimate))
    {
    }

    const std::string &estimate() const noexcept { return estimate_; }

private:
    std::string estimate_;
};

// A mathematical invariant the code relies on did not hold (CLI exit status 3).
class InvariantViolation : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

// The interval oracle could not reach the requested width; retry with more bits.
class InsufficientPrecision : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace pfrob

#endif
