#pragma once

#include <stdexcept>
#include <string>

namespace qtaft {

/// Inverting the zero element of a field.
class division_by_zero : public std::domain_error {
 public:
  explicit division_by_zero(const std::string& what) : std::domain_error(what) {}
};

/// Two operands live over quivers of different size.
class size_mismatch : public std::invalid_argument {
 public:
  explicit size_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// y^2 = a has no solution in the working cyclotomic field; a larger
/// field order is needed for this parameter choice.
class square_root_not_in_field : public std::domain_error {
 public:
  explicit square_root_not_in_field(const std::string& what) : std::domain_error(what) {}
};

/// A closed-form operation was requested for an action outside the
/// hypotheses it is proved under (rotation, r = m, sigma = 0, gamma nonzero).
class hypothesis_violation : public std::domain_error {
 public:
  explicit hypothesis_violation(const std::string& what) : std::domain_error(what) {}
};

/// An enumeration grid exceeds the configured point budget.
class budget_exceeded : public std::runtime_error {
 public:
  explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed config or report text.
class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qtaft
