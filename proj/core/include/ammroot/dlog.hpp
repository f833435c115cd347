#pragma once

#include "ammroot/counters.hpp"
#include "ammroot/field.hpp"

namespace ammroot {

/// The unique e in [0, r) with a^e = d, by brute-force trial multiplication:
/// the accumulator starts at 1 and is multiplied by a at most r-1 times, each
/// multiplication bumping counters.dlog_multiplications. Expects a of order
/// exactly r (r prime); throws not_in_subgroup when no exponent matches.
///
/// Brute force is deliberate: it is the cost driver that makes general r-th
/// root extraction degrade linearly in r.
Natural subgroup_dlog(const FieldCtx& ctx, const FieldElement& a,
                      const FieldElement& d, const Natural& r,
                      Counters& counters);

}  // namespace ammroot
