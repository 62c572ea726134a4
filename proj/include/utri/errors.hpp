/*
   Copyright 2026 The utri Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef UTRI_ERRORS_HPP
#define UTRI_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace utri {

enum class ErrorKind {
  syntax,
  constant_term,
  variable_out_of_range,
  field_mismatch,
  arity_mismatch,
  size_mismatch,
  unbound_variable,
  non_linear_variable,
  zero_input,
  resource_limit,
  no_root_in_field,
  non_convergence,
  cap_reached,
  precondition,
  internal_inconsistency,
  budget_exhausted,
  degenerate_coefficient,
  band_violation,
  order_mismatch,
  invalid_argument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& expected)
      : Error(ErrorKind::syntax,
              "syntax error at position " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(expected) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace utri

#endif  // UTRI_ERRORS_HPP
