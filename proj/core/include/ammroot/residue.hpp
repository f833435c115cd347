#pragma once

#include "ammroot/counters.hpp"
#include "ammroot/field.hpp"

namespace ammroot {

/// Euler-criterion generalization: true iff delta^{(q-1)/r} = 1. Requires
/// r >= 2, r | q-1 and delta != 0.
bool is_rth_residue(const FieldCtx& ctx, const FieldElement& delta, const Natural& r);

/// Random rho with rho^{(q-1)/r} != 1. r must be prime and divide q-1.
/// Every candidate tested bumps counters.nonresidue_trials. For m = 1 and
/// r = 2 candidates are screened with the Legendre symbol instead of an
/// exponentiation. Gives up with trial_budget_exceeded after
/// ceil(64 * log2 q) candidates.
FieldElement sample_nonresidue(const FieldCtx& ctx, const Natural& r,
                               RandomSource& rng, Counters& counters);

}  // namespace ammroot
