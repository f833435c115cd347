#pragma once

#include <optional>
#include <vector>

#include "ammroot/counters.hpp"
#include "ammroot/field.hpp"

namespace ammroot {

/// Decomposition data of the extraction that produced a root:
/// q - 1 = r^t * s with gcd(r, s) = 1, and the exponent applied to delta in
/// the final step of the route taken (the least alpha with s | r*alpha - 1
/// on the general route, (s+1)/2 on the square-root route, the l of
/// s = 3l +- 1 on the cubic route). t = 0 marks the coprime shortcut.
struct ExtractionParams {
  Natural t;
  Natural s;
  Natural alpha;
};

/// Result of a root extraction. The root is verified (root^r = delta) before
/// any report is returned; all_roots, when materialized, are pairwise
/// distinct and individually verified.
struct RootReport {
  FieldElement root;
  std::optional<std::vector<FieldElement>> all_roots;
  Counters counters;
  ExtractionParams params;
};

/// Square root in F_p. Nonresidue candidates are screened with the Legendre
/// symbol; delta is rejected up front (not_a_residue) when [delta/p] = -1.
/// delta = 0 yields root 0. Requires odd prime p and 0 <= delta < p.
RootReport sqrt_prime(const Natural& p, const Natural& delta, RandomSource& rng);

/// Square root in F_{p^m}: same loop as sqrt_prime, with residuosity decided
/// by delta^{(q-1)/2} = 1 since no Legendre symbol is available beyond m = 1.
RootReport sqrt_ext(const FieldCtx& ctx, const FieldElement& delta, RandomSource& rng);

/// Cube root in F_{p^m}, s = 3l +- 1 branch logic included. Requires 3 | q-1
/// and delta a cubic residue.
RootReport cbrt(const FieldCtx& ctx, const FieldElement& delta, RandomSource& rng);

/// General r-th root for prime r | q-1. Each main-loop iteration solves an
/// order-r discrete logarithm by brute force.
RootReport rth_root(const FieldCtx& ctx, const FieldElement& delta, const Natural& r,
                    RandomSource& rng);

/// The gcd(r, q-1) = 1 shortcut: delta^{r^{-1} mod (q-1)} is the unique r-th
/// root. No randomness, no loop.
RootReport coprime_root(const FieldCtx& ctx, const FieldElement& delta, const Natural& r);

/// Dispatcher. gcd(r, q-1) = 1 goes to coprime_root; prime r | q-1 goes to
/// the specialized square/cube routes for r = 2, 3 and the general route
/// otherwise; delta = 0 yields root 0. Composite r sharing a factor with
/// q-1 is unsupported_exponent. With want_all the report carries all r roots
/// root * omega^i for the run's r-th root of unity omega = rho^{s * r^{t-1}}.
RootReport extract(const FieldCtx& ctx, const FieldElement& delta, const Natural& r,
                   RandomSource& rng, bool want_all = false);

}  // namespace ammroot
