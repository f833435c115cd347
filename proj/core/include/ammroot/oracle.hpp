#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "ammroot/field.hpp"

namespace ammroot::oracle {

/// Enumeration ceiling for the brute-force routines below.
inline constexpr std::uint64_t kDefaultBound = 1'000'000;

/// Every element of F_q in lexicographic coefficient order, zero first.
std::vector<FieldElement> elements(const FieldCtx& ctx,
                                   std::uint64_t bound = kDefaultBound);

/// The exact set {x in F_q : x^r = delta} by full enumeration. For nonzero
/// delta the size is 0 or gcd(r, q-1); for delta = 0 it is {0}.
std::set<FieldElement> brute_root(const FieldCtx& ctx, const FieldElement& delta,
                                  const Natural& r,
                                  std::uint64_t bound = kDefaultBound);

/// {x^r : x in F_q^*}, the r-th power residues.
std::set<FieldElement> residues(const FieldCtx& ctx, const Natural& r,
                                std::uint64_t bound = kDefaultBound);

}  // namespace ammroot::oracle
