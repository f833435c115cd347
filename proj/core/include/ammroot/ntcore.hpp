#pragma once

#include "ammroot/natural.hpp"

namespace ammroot::ntcore {

/// base^exp mod modulus by repeated squaring, O(log exp) multiplications.
/// exp = 0 yields 1. Requires modulus >= 2.
Natural modpow(const Natural& base, const Natural& exp, const Natural& modulus);

struct ExtGcd {
  Natural g;    ///< gcd(a, b)
  SignedInt x;  ///< Bezout cofactors: a*x + b*y = g
  SignedInt y;
};

/// Extended Euclidean algorithm. Rejects (0, 0).
ExtGcd ext_gcd(const Natural& a, const Natural& b);

/// The unique u in [1, n) with a*u = 1 (mod n). Requires gcd(a, n) = 1.
Natural mod_inverse(const Natural& a, const Natural& n);

/// Legendre/Jacobi symbol of a over odd p via the quadratic-reciprocity
/// Euclidean-like reduction: +1 for a nonzero quadratic residue, -1 for a
/// nonresidue, 0 when p divides a. No modular exponentiation is involved,
/// which keeps this quadratic in log p instead of cubic. Primality of p is
/// the caller's contract.
int legendre(const Natural& a, const Natural& p);

struct Decomposition {
  Natural t;
  Natural s;  ///< n = r^t * s with r not dividing s
};

/// Maximal power of r in n. Requires n >= 1, r >= 2.
Decomposition factor_out(const Natural& n, const Natural& r);

/// Least alpha >= 0 with s | r*alpha - 1. Zero when s = 1, otherwise the
/// inverse of r mod s. Requires gcd(r, s) = 1.
Natural least_alpha(const Natural& r, const Natural& s);

/// Strong pseudoprime test against a fixed panel of small-prime bases
/// (deterministic for every n below 3.3e24, probabilistic beyond).
bool is_probable_prime(const Natural& n);

}  // namespace ammroot::ntcore
