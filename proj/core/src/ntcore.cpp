#include "ammroot/ntcore.hpp"

#include <utility>

#include "ammroot/error.hpp"

namespace ammroot::ntcore {

Natural modpow(const Natural& base, const Natural& exp, const Natural& modulus) {
  if (modulus < 2) raise(Errc::modulus_too_small, "modpow: modulus must be >= 2");
  Natural result = 1;
  Natural b = base % modulus;
  Natural e = exp;
  while (e != 0) {
    if (boost::multiprecision::bit_test(e, 0)) result = result * b % modulus;
    b = b * b % modulus;
    e >>= 1;
  }
  return result;
}

ExtGcd ext_gcd(const Natural& a, const Natural& b) {
  if (a == 0 && b == 0) raise(Errc::both_zero, "ext_gcd: gcd(0, 0) is undefined");
  SignedInt r0 = a, r1 = b;
  SignedInt x0 = 1, x1 = 0;
  SignedInt y0 = 0, y1 = 1;
  while (r1 != 0) {
    SignedInt quot = r0 / r1;
    r0 -= quot * r1;
    std::swap(r0, r1);
    x0 -= quot * x1;
    std::swap(x0, x1);
    y0 -= quot * y1;
    std::swap(y0, y1);
  }
  return {Natural(r0), x0, y0};
}

Natural mod_inverse(const Natural& a, const Natural& n) {
  if (n < 2) raise(Errc::modulus_too_small, "mod_inverse: modulus must be >= 2");
  ExtGcd e = ext_gcd(a % n, n);
  if (e.g != 1) raise(Errc::not_invertible, "mod_inverse: argument shares a factor with the modulus");
  SignedInt u = e.x % SignedInt(n);
  if (u < 0) u += n;
  return Natural(u);
}

// Binary Jacobi algorithm: strip factors of two (flipping the sign per the
// second supplement when p = 3, 5 mod 8), apply quadratic reciprocity, swap,
// reduce. Runs in O(log^2 p) word operations with no exponentiation.
int legendre(const Natural& a, const Natural& p) {
  if (!boost::multiprecision::bit_test(p, 0)) {
    raise(Errc::even_modulus, "legendre: modulus must be odd");
  }
  Natural num = a % p;
  Natural den = p;
  int sign = 1;
  while (num != 0) {
    while (!boost::multiprecision::bit_test(num, 0)) {
      num >>= 1;
      const unsigned mod8 = static_cast<unsigned>(den & 7);
      if (mod8 == 3 || mod8 == 5) sign = -sign;
    }
    if ((num & 3) == 3 && (den & 3) == 3) sign = -sign;
    std::swap(num, den);
    num %= den;
  }
  return den == 1 ? sign : 0;
}

Decomposition factor_out(const Natural& n, const Natural& r) {
  if (n < 1 || r < 2) raise(Errc::invalid_argument, "factor_out: need n >= 1 and r >= 2");
  Decomposition d{0, n};
  while (d.s % r == 0) {
    d.s /= r;
    ++d.t;
  }
  return d;
}

Natural least_alpha(const Natural& r, const Natural& s) {
  if (s < 1) raise(Errc::invalid_argument, "least_alpha: s must be >= 1");
  if (boost::multiprecision::gcd(r, s) != 1) {
    raise(Errc::not_coprime, "least_alpha: r and s must be coprime");
  }
  if (s == 1) return 0;
  return mod_inverse(r % s, s);
}

bool is_probable_prime(const Natural& n) {
  static constexpr unsigned kBases[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                        31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                                        73, 79, 83, 89, 97, 101, 103, 107, 109, 113};
  if (n < 2) return false;
  for (unsigned b : kBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  // n - 1 = 2^t * s, s odd
  Decomposition d = factor_out(n - 1, 2);
  const std::size_t t = d.t.convert_to<std::size_t>();
  for (unsigned b : kBases) {
    Natural x = modpow(b, d.s, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (std::size_t i = 1; i < t; ++i) {
      x = x * x % n;
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace ammroot::ntcore
