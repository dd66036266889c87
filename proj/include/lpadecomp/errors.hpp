#pragma once

#include <stdexcept>
#include <string>

namespace lpadecomp {

// Malformed or unknown user input (documents, vertex names, expressions).
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A caller violated an operation's precondition.
class ContractError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// A configured cap (vertex count, |B_H|, ...) was exceeded.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Two independent computations of the same quantity disagreed.
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace lpadecomp
