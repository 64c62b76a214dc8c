#pragma once

#include <stdexcept>
#include <string>

namespace leafbound {

// Bad input: unknown vertex, missing edge, disconnected graph, malformed file.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A proof obligation failed at runtime. Always a bug, never a user error.
class InvariantError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

// Oracle or generator asked to do more work than its configured budget.
class BudgetError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace leafbound
