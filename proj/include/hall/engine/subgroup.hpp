#pragma once

// Subgroup-level computations on an enumerated FiniteGroup: closures inside
// the parent, Sylow subgroups, derived series and solvability, conjugacy,
// and a fully exhaustive subgroup enumeration for cross-checks on very
// small groups.

#include "hall/engine/group.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hall {

// A subgroup of an enumerated parent: sorted element indices plus a
// generating set.  Invariants (closure, identity, inverses) are established
// by the producing functions, all of which build via closure.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<std::int32_t> elements;    // sorted ascending; elements[0] == 0
  std::vector<std::int32_t> generators;  // may be empty for the trivial subgroup

  std::int64_t order() const { return static_cast<std::int64_t>(elements.size()); }
  bool contains(std::int32_t x) const;
};

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);

// Reusable scratch for closures: an epoch-stamped membership array sized to
// the parent group.  One buffer per thread; not shareable concurrently.
class WorkBuffer {
 public:
  explicit WorkBuffer(const FiniteGroup& g);
  void fresh();                  // start a new epoch (invalidate all marks)
  void mark(std::int32_t x);
  bool marked(std::int32_t x) const;

  std::vector<std::int32_t> queue;  // scratch for BFS orders

 private:
  std::vector<std::int64_t> stamp_;
  std::int64_t epoch_ = 0;
};

// Sorted element set of <gens>; nullopt if the closure would exceed
// `abort_above` elements.
std::optional<std::vector<std::int32_t>> close_generators(const FiniteGroup& g,
                                                          const std::vector<std::int32_t>& gens,
                                                          std::int64_t abort_above,
                                                          WorkBuffer& buffer);

// Sorted element set of <base, extra>, seeded with base's elements; nullopt
// if it would exceed `abort_above` elements.
std::optional<std::vector<std::int32_t>> extend_subgroup(const FiniteGroup& g,
                                                         const Subgroup& base, std::int32_t extra,
                                                         std::int64_t abort_above,
                                                         WorkBuffer& buffer);

// Rebuilds a subgroup as a standalone FiniteGroup over the same element
// universe (useful for reusing whole-group algorithms on a subgroup).
FiniteGroup as_group(const Subgroup& s, const std::string& name);

// A Sylow p-subgroup: order |G|_p, grown from a maximal-order p-element by
// one-element extensions that stay p-groups.
Subgroup sylow(const FiniteGroup& g, long long p);

// Commutator subgroup [S, S] as the normal closure (in S) of the pairwise
// generator commutators.
Subgroup derived_subgroup(const FiniteGroup& g, const Subgroup& s);

struct DerivedSeries {
  std::vector<std::int64_t> orders;  // |S|, |S'|, ... down to the last distinct term
  bool solvable = false;             // series reached the trivial group
  int derived_length() const { return static_cast<int>(orders.size()) - 1; }
};

DerivedSeries derived_series(const FiniteGroup& g, const Subgroup& s);
bool is_solvable(const FiniteGroup& g, const Subgroup& s);
bool is_solvable(const FiniteGroup& g);

// True iff some g in G conjugates a onto b (element-set equality fast path,
// then a direct search over G using a's generators).
bool are_conjugate(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

// All distinct conjugates g^{-1} S g as sorted element sets, in breadth-
// first discovery order starting from S itself.
std::vector<std::vector<std::int32_t>> subgroup_orbit(const FiniteGroup& g, const Subgroup& s);

bool is_abelian(const FiniteGroup& g, const Subgroup& s);
std::int64_t center_size(const FiniteGroup& g, const Subgroup& s);
long long subgroup_exponent(const FiniteGroup& g, const Subgroup& s);
// (element order, multiplicity) pairs, ascending by order.
std::vector<std::pair<int, std::int64_t>> order_histogram(const FiniteGroup& g, const Subgroup& s);

// Every subgroup of g, one entry per subgroup (not per class), found by
// closing single-element extensions starting from the trivial subgroup.
// Restricted to |g| <= 400; used as the exhaustive cross-check oracle.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

}  // namespace hall
