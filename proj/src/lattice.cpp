#include "hall/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace hall {

namespace {

// Subset of base selected by the bits of mask.
PrimeSet subset_from_mask(const std::vector<Int>& base, unsigned mask) {
  std::vector<Int> chosen;
  for (std::size_t i = 0; i < base.size(); ++i)
    if (mask & (1u << i)) chosen.push_back(base[i]);
  return PrimeSet::from_primes_unchecked(std::move(chosen));
}

// Size of the sorted-vector intersection, capped early once it can no
// longer reach `target` (callers only care about equality with target).
std::int64_t intersection_size(const std::vector<std::int32_t>& a,
                               const std::vector<std::int32_t>& b) {
  std::int64_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (b[j] < a[i])
      ++j;
    else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

bool pi_family_less(const PrimeSet& a, const PrimeSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool PiFamily::contains(const PrimeSet& tau) const {
  PrimeSet reduced = tau.set_intersection(base);
  return std::binary_search(members.begin(), members.end(), reduced,
                            pi_family_less);
}

PiFamily pi_family(const FiniteGroup& g, ExecPolicy policy) {
  PiFamily family;
  const std::vector<long long>& raw = g.prime_list();
  std::vector<Int> base_primes(raw.begin(), raw.end());
  family.base = PrimeSet::from_primes_unchecked(base_primes);

  const unsigned subset_count = 1u << base_primes.size();
  std::vector<char> is_member(subset_count, 0);

  if (policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int mask = 0; mask < static_cast<int>(subset_count); ++mask) {
      PrimeSet tau = subset_from_mask(base_primes, static_cast<unsigned>(mask));
      is_member[static_cast<unsigned>(mask)] =
          !hall_subgroups(g, tau, ExecPolicy::Serial).empty();
    }
  } else {
    for (unsigned mask = 0; mask < subset_count; ++mask) {
      PrimeSet tau = subset_from_mask(base_primes, mask);
      is_member[mask] = !hall_subgroups(g, tau, ExecPolicy::Serial).empty();
    }
  }

  for (unsigned mask = 0; mask < subset_count; ++mask)
    if (is_member[mask]) family.members.push_back(subset_from_mask(base_primes, mask));
  std::sort(family.members.begin(), family.members.end(), pi_family_less);
  return family;
}

MeetClosure is_meet_closed(const PiFamily& f) {
  for (std::size_t i = 0; i < f.members.size(); ++i)
    for (std::size_t j = i + 1; j < f.members.size(); ++j) {
      PrimeSet meet = f.members[i].set_intersection(f.members[j]);
      if (!f.contains(meet))
        return MeetClosure{false, f.members[i], f.members[j]};
    }
  return MeetClosure{};
}

namespace {

// Least upper bound of `lower` among f's members: an upper bound contained
// in every other upper bound.  nullopt when no upper bound is least.
std::optional<PrimeSet> least_upper_bound(const PiFamily& f,
                                          const PrimeSet& lower) {
  std::vector<const PrimeSet*> upper;
  for (const PrimeSet& m : f.members)
    if (lower.subset_of(m)) upper.push_back(&m);
  for (const PrimeSet* candidate : upper) {
    bool least = true;
    for (const PrimeSet* other : upper)
      if (!candidate->subset_of(*other)) {
        least = false;
        break;
      }
    if (least) return *candidate;
  }
  return std::nullopt;
}

}  // namespace

LatticeCheck is_lattice(const PiFamily& f) {
  MeetClosure meet = is_meet_closed(f);
  if (!meet.holds) return LatticeCheck{false, true, meet.tau1, meet.tau2};
  for (std::size_t i = 0; i < f.members.size(); ++i)
    for (std::size_t j = i + 1; j < f.members.size(); ++j) {
      PrimeSet lower = f.members[i].set_union(f.members[j]);
      if (!least_upper_bound(f, lower))
        return LatticeCheck{false, false, f.members[i], f.members[j]};
    }
  return LatticeCheck{};
}

std::optional<PrimeSet> family_join(const PiFamily& f, const PrimeSet& tau1,
                                    const PrimeSet& tau2) {
  PrimeSet a = tau1.set_intersection(f.base);
  PrimeSet b = tau2.set_intersection(f.base);
  if (!f.contains(a) || !f.contains(b)) return std::nullopt;
  return least_upper_bound(f, a.set_union(b));
}

Theorem1Report theorem1_check(const FiniteGroup& g, const PrimeSet& pi, int l,
                              bool allow_l_equal_size) {
  const int k = static_cast<int>(pi.size());
  if (k < 3)
    throw std::invalid_argument(
        "theorem1_check: the prime set must have at least three elements");
  if (l < 2 || l > k || (l == k && !allow_l_equal_size))
    throw std::invalid_argument(
        "theorem1_check: l must satisfy 2 <= l < |pi| (l == |pi| only with "
        "allow_l_equal_size)");

  const std::vector<Int>& primes = pi.primes();
  std::vector<int> choose(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) choose[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::vector<Int> chosen;
    chosen.reserve(static_cast<std::size_t>(l));
    for (int idx : choose) chosen.push_back(primes[static_cast<std::size_t>(idx)]);
    PrimeSet rho = PrimeSet::from_primes_unchecked(std::move(chosen));
    if (hall_subgroups(g, rho).empty()) {
      Theorem1Report report;
      report.verdict = Theorem1Verdict::Vacuous;
      report.missing_rho = rho;
      return report;
    }
    // Advance the combination (lexicographic).
    int pos = l - 1;
    while (pos >= 0 && choose[static_cast<std::size_t>(pos)] == k - l + pos) --pos;
    if (pos < 0) break;
    ++choose[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < l; ++i)
      choose[static_cast<std::size_t>(i)] = choose[static_cast<std::size_t>(i - 1)] + 1;
  }

  std::vector<Subgroup> classes = hall_subgroups(g, pi);
  Theorem1Report report;
  report.hall_class_count = static_cast<std::int64_t>(classes.size());
  for (std::size_t idx = 0; idx < classes.size(); ++idx)
    if (is_solvable(g, classes[idx])) {
      report.verdict = Theorem1Verdict::Verified;
      report.solvable_class = static_cast<std::int64_t>(idx);
      return report;
    }
  report.verdict = Theorem1Verdict::Counterexample;
  return report;
}

IntersectionWitness intersection_witness(const FiniteGroup& g,
                                         const PrimeSet& pi1,
                                         const PrimeSet& pi2) {
  std::vector<Subgroup> classes1 = hall_subgroups(g, pi1);
  std::vector<Subgroup> classes2 = hall_subgroups(g, pi2);
  if (classes1.empty() || classes2.empty())
    throw std::invalid_argument(
        "intersection_witness: both prime sets must admit Hall subgroups");

  const std::int64_t target = group_pi_part(g, pi1.set_intersection(pi2));

  std::vector<std::vector<std::int32_t>> side1;
  for (const Subgroup& rep : classes1)
    for (std::vector<std::int32_t>& conj : subgroup_orbit(g, rep))
      side1.push_back(std::move(conj));
  std::vector<std::vector<std::int32_t>> side2;
  for (const Subgroup& rep : classes2)
    for (std::vector<std::int32_t>& conj : subgroup_orbit(g, rep))
      side2.push_back(std::move(conj));

  IntersectionWitness witness;
  for (const std::vector<std::int32_t>& a : side1)
    for (const std::vector<std::int32_t>& b : side2) {
      ++witness.pairs_searched;
      if (intersection_size(a, b) == target) {
        witness.exists_pair = true;
        witness.h1_elements = a;
        witness.h2_elements = b;
        return witness;
      }
    }
  return witness;
}

}  // namespace hall
