#pragma once

#include <stdexcept>
#include <string>

namespace frobdeg {

// Failure kinds surfaced by the library. The CLI maps these onto exit codes
// and tests match on them; anything else is a plain std::logic_error.
enum class ErrorKind {
  division_by_zero,
  field_mismatch,
  degree_overflow,
  undefined_gcd,
  shape_error,
  not_coprime,
  not_pairwise_coprime,
  constant_input,
  characteristic_too_small,
  characteristic_mismatch,
  field_too_small,
  degree_too_small,
  type_mismatch,
  rank_too_high,
  capacity_exceeded,
  verification_failed,
  invalid_input,
};

class FrobError : public std::runtime_error {
 public:
  FrobError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw FrobError(kind, what);
}

}  // namespace frobdeg
