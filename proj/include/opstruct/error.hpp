#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace opstruct {

enum class ErrorKind {
  non_square,
  truncation_exceeded,
  zero_norm,
  not_regular,
  insufficient_coefficients,
  invalid_parameter,
  not_a_basis,
  index_out_of_range,
  missing_functional,
  singular_system,
  initial_conditions_fail,
  hypothesis_fail,
  schema_error,
  invalid_rational,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), message_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  // what() without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

}  // namespace opstruct
