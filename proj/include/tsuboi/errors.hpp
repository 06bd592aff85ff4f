#pragma once

#include <stdexcept>
#include <string>

namespace tsuboi {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed cycle notation, cycle types, group files.
class ParseError : public Error {
public:
  using Error::Error;
};

/// A search ran out of depth, frontier, placement or time budget.
class BudgetExhausted : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed (non-integral structure constant,
/// witness that does not multiply out, ...).  Always a bug.
class VerificationError : public Error {
public:
  using Error::Error;
};

} // namespace tsuboi
