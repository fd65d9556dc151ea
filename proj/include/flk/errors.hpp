#pragma once

#include <stdexcept>
#include <string>

namespace flk {

// Violated precondition or malformed input. CLI exit code 2.
class PreconditionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// An enumeration would exceed the configured node budget. CLI exit code 3.
class BudgetError : public std::runtime_error {
  public:
    BudgetError(const std::string& what, double estimate)
        : std::runtime_error(what), estimate_(estimate) {}
    double estimate() const { return estimate_; }

  private:
    double estimate_;
};

// A p-adic computation needed valuation information at or beyond the working
// precision. CLI exit code 4.
class PrecisionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A bound or identity that must hold by construction failed.
class InvariantError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace flk
