#pragma once

// Structure report for an enumerated subgroup: the invariants any two
// isomorphic groups share (order, element-order histogram, centre size,
// derived-series shape), plus a name tag when the invariant fingerprint
// matches a reference group of order <= 200.  The fingerprint is a
// heuristic separator in general, but the test suite asserts it is exact on
// every pair it is asked to distinguish.

#include "hall/engine/subgroup.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hall {

struct TypeDescriptor {
  std::int64_t order = 0;
  bool abelian = false;
  bool solvable = false;
  int derived_length = 0;
  long long exponent = 1;
  std::int64_t center = 0;
  std::vector<std::pair<int, std::int64_t>> histogram;  // (element order, count)
  std::vector<std::int64_t> derived_orders;
  std::optional<std::string> tag;

  // Canonical text form of the invariants (excluding the tag).
  std::string fingerprint() const;
};

TypeDescriptor identify_type(const FiniteGroup& g, const Subgroup& s);
TypeDescriptor identify_type(const FiniteGroup& g);

}  // namespace hall
