#pragma once

#include <stdexcept>
#include <string>

namespace ammroot {

/// One code per failure mode so callers can branch without parsing messages.
enum class Errc {
  invalid_argument,
  modulus_too_small,
  both_zero,
  not_invertible,
  even_modulus,
  not_coprime,
  even_characteristic,
  char_too_small,
  not_monic,
  not_irreducible,
  trial_budget_exceeded,
  ctx_mismatch,
  zero_inverse,
  zero_element,
  r_does_not_divide,
  r_not_prime,
  not_in_subgroup,
  not_a_residue,
  unsupported_exponent,
  field_too_large,
  internal_verification_failed,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ammroot
