#pragma once

// Complete search for Hall pi-subgroups: every class of subgroups whose
// order is the full pi-part of |G| and whose index is coprime to pi, one
// representative per conjugacy class.

#include "hall/arith.hpp"
#include "hall/engine/subgroup.hpp"
#include "hall/exec.hpp"

#include <vector>

namespace hall {

// The pi-part m of |G|.
std::int64_t group_pi_part(const FiniteGroup& g, const PrimeSet& pi);

// All Hall pi-subgroups of g up to conjugacy.  Empty result means no Hall
// pi-subgroup exists.  Deterministic: representatives are sorted by their
// element sets, and Serial and Parallel policies return identical output.
//
// Method: anchor at a Sylow p-subgroup P for the pi-prime with the largest
// order contribution (every Hall pi-subgroup contains a conjugate of P),
// then grow by one-element extensions x with closure order dividing m,
// de-duplicating conjugate partial subgroups at every level.  Conjugate
// partial subgroups generate conjugate completions, so pruning them keeps
// the class list complete.
std::vector<Subgroup> hall_subgroups(const FiniteGroup& g, const PrimeSet& pi,
                                     ExecPolicy policy = ExecPolicy::Serial);

}  // namespace hall
