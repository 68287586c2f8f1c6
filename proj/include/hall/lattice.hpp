#pragma once

// The family of prime sets admitting Hall subgroups in an enumerated group,
// and the structural checks on it: meet-closure, lattice structure with
// per-pair joins, the solvable-Hall criterion driven by l-element subsets,
// and intersection witnesses between Hall subgroups of two prime sets.

#include "hall/arith.hpp"
#include "hall/engine/hall.hpp"
#include "hall/engine/subgroup.hpp"
#include "hall/exec.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hall {

// All subsets tau of the prime support of |G| for which G has a Hall
// tau-subgroup.  Members are canonically ordered by size, then by their
// prime tuples; the empty set, the full support, and every singleton are
// always present.  Membership of an arbitrary prime set depends only on its
// intersection with the support.
struct PiFamily {
  PrimeSet base;                  // primes dividing |G|, ascending
  std::vector<PrimeSet> members;  // canonical order (size, then lexicographic)

  // True iff tau's reduction tau cap base belongs to the family.
  bool contains(const PrimeSet& tau) const;
};

// Canonical member comparator: by size, then lexicographically by primes.
bool pi_family_less(const PrimeSet& a, const PrimeSet& b);

// Tests every subset of the prime support of |G| for a Hall subgroup.  The
// Parallel policy distributes subsets across threads; both policies return
// identical families.  Cap refusals from group enumeration propagate.
PiFamily pi_family(const FiniteGroup& g, ExecPolicy policy = ExecPolicy::Serial);

// Result of the meet-closure check: every pairwise intersection of members
// must again be a member.  On failure, tau1 and tau2 hold the first
// offending pair in canonical order.
struct MeetClosure {
  bool holds = true;
  PrimeSet tau1;
  PrimeSet tau2;
};

MeetClosure is_meet_closed(const PiFamily& f);

// Result of the lattice check: meet-closure plus, for every pair of
// members, a unique least upper bound inside the family.  When a pair has
// no least upper bound, tau1/tau2 name it and meet_failed is false; when
// meet-closure itself fails, meet_failed is true and tau1/tau2 come from
// the meet check.
struct LatticeCheck {
  bool holds = true;
  bool meet_failed = false;
  PrimeSet tau1;
  PrimeSet tau2;
};

LatticeCheck is_lattice(const PiFamily& f);

// Least upper bound of tau1 and tau2 inside the family, if one exists and
// is unique.  Inputs are reduced to the base first.
std::optional<PrimeSet> family_join(const PiFamily& f, const PrimeSet& tau1,
                                    const PrimeSet& tau2);

// Verdict of the solvable-Hall criterion on (G, pi, l): Vacuous when some
// size-l subset rho of pi admits no Hall rho-subgroup (the hypothesis
// fails), Verified when the hypothesis holds and some Hall pi-subgroup
// class is solvable, Counterexample otherwise.
enum class Theorem1Verdict { Vacuous, Verified, Counterexample };

struct Theorem1Report {
  Theorem1Verdict verdict = Theorem1Verdict::Vacuous;
  PrimeSet missing_rho;              // set when Vacuous: the failing subset
  std::int64_t hall_class_count = 0; // Hall pi classes (hypothesis held)
  std::int64_t solvable_class = -1;  // index of a solvable class (Verified)
};

// Requires |pi| >= 3 and 2 <= l < |pi|; the boundary l == |pi| is admitted
// only when allow_l_equal_size is set (that degenerate form asserts that
// membership alone forces a solvable Hall subgroup, which fails on
// non-solvable pi-groups and exists to demonstrate the distinction).
// Violations throw std::invalid_argument.
Theorem1Report theorem1_check(const FiniteGroup& g, const PrimeSet& pi, int l,
                              bool allow_l_equal_size = false);

// Search result for a pair of Hall subgroups whose intersection is a Hall
// subgroup for the intersected prime set.  The search ranges over every
// conjugate of every class on both sides; the witness element sets are
// filled in when a pair is found.
struct IntersectionWitness {
  bool exists_pair = false;
  std::int64_t pairs_searched = 0;
  std::vector<std::int32_t> h1_elements;
  std::vector<std::int32_t> h2_elements;
};

// Requires both prime sets to admit Hall subgroups in g (throws
// std::invalid_argument otherwise).
IntersectionWitness intersection_witness(const FiniteGroup& g,
                                         const PrimeSet& pi1,
                                         const PrimeSet& pi2);

}  // namespace hall
