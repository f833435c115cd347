#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ammroot/natural.hpp"
#include "ammroot/random.hpp"

namespace ammroot {

/// Immutable description of F_p (m = 1) or F_{p^m} = F_p[X]/(f). Construct
/// through make_prime_field / make_ext_field; once built it may be shared
/// freely across threads.
struct FieldCtx {
  Natural p;                     ///< odd prime characteristic (primality is the caller's contract)
  std::size_t m = 1;             ///< extension degree
  std::vector<Natural> modulus;  ///< monic, length m+1, coefficient of X^i at index i
  Natural q;                     ///< p^m
  Natural q_minus_1;
};

bool operator==(const FieldCtx& a, const FieldCtx& b);

/// Field element as a dense coefficient vector in the monomial basis:
/// exactly m entries, each in [0, p), coeffs[i] multiplying X^i.
struct FieldElement {
  std::vector<Natural> coeffs;

  friend bool operator==(const FieldElement& a, const FieldElement& b) = default;
};

/// Lexicographic order on the coefficient vector, constant term first.
bool operator<(const FieldElement& a, const FieldElement& b);

FieldCtx make_prime_field(const Natural& p);

/// Builds F_p[X]/(f) after verifying that f is monic of degree >= 2 and
/// irreducible over F_p. Coefficients are reduced mod p first.
FieldCtx make_ext_field(const Natural& p, std::vector<Natural> modulus);

/// Monic irreducible polynomial of degree m over F_p by random sampling.
/// max_trials = 0 means the default budget of 64*m candidates.
std::vector<Natural> find_irreducible(const Natural& p, std::size_t m,
                                      RandomSource& rng, std::size_t max_trials = 0);

/// Rabin irreducibility criterion: X^{p^m} = X (mod f) and
/// gcd(X^{p^{m/l}} - X, f) = 1 for every prime l dividing m. f must be monic.
bool is_irreducible(const Natural& p, const std::vector<Natural>& f);

FieldElement zero(const FieldCtx& ctx);
FieldElement one(const FieldCtx& ctx);
bool is_zero(const FieldElement& x);
bool is_one(const FieldElement& x);

/// Validates length and coefficient range.
FieldElement make_element(const FieldCtx& ctx, std::vector<Natural> coeffs);

/// value mod p placed in the constant term.
FieldElement from_natural(const FieldCtx& ctx, const Natural& value);

FieldElement add(const FieldCtx& ctx, const FieldElement& x, const FieldElement& y);
FieldElement sub(const FieldCtx& ctx, const FieldElement& x, const FieldElement& y);
FieldElement mul(const FieldCtx& ctx, const FieldElement& x, const FieldElement& y);
FieldElement neg(const FieldCtx& ctx, const FieldElement& x);

/// Multiplicative inverse via the extended Euclidean algorithm (integer for
/// m = 1, polynomial otherwise). Rejects zero.
FieldElement inv(const FieldCtx& ctx, const FieldElement& x);

/// x^e by repeated squaring, O(log e) field multiplications; 0^0 = 1.
/// Multiplications feed the ambient CounterScope sink when one is attached.
FieldElement pow(const FieldCtx& ctx, const FieldElement& x, const Natural& e);

/// Uniform over F_q^*: each coefficient drawn uniformly in [0, p), the
/// all-zero vector rejected.
FieldElement random_nonzero(const FieldCtx& ctx, RandomSource& rng);

/// Text encoding "c0,c1,...": comma-separated decimal coefficients, constant
/// term first, exactly m entries.
std::string to_string(const FieldElement& x);

/// Parses the text encoding. Requires exactly m entries; values are reduced
/// mod p.
FieldElement parse_element(const FieldCtx& ctx, const std::string& text);

/// Modulus encoding: m+1 entries, monic, e.g. "1,0,1" for X^2 + 1.
std::string modulus_to_string(const FieldCtx& ctx);

}  // namespace ammroot
