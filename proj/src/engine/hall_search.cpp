#include "hall/engine/hall.hpp"

#include <algorithm>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hall {

namespace {

// Registry of partial-subgroup classes, keyed by order: every conjugate of
// every registered subgroup is stored, so class membership is a set lookup.
class ClassRegistry {
 public:
  // True if s's element set belongs to a class registered earlier.
  bool known(std::int64_t order, const std::vector<std::int32_t>& elements) const {
    auto it = classes_.find(order);
    return it != classes_.end() && it->second.count(elements) > 0;
  }

  void add_orbit(const FiniteGroup& g, const Subgroup& s) {
    auto& bucket = classes_[s.order()];
    for (auto& conjugate : subgroup_orbit(g, s)) bucket.insert(std::move(conjugate));
  }

 private:
  std::map<std::int64_t, std::set<std::vector<std::int32_t>>> classes_;
};

struct Candidate {
  std::size_t base;   // index into the current frontier
  std::int32_t extra;  // extending element
};

}  // namespace

std::int64_t group_pi_part(const FiniteGroup& g, const PrimeSet& pi) {
  std::int64_t m = 1;
  for (long long p : g.prime_list()) {
    if (!pi.contains(Int(p))) continue;
    for (std::int64_t rest = g.order(); rest % p == 0; rest /= p) m *= p;
  }
  return m;
}

std::vector<Subgroup> hall_subgroups(const FiniteGroup& g, const PrimeSet& pi, ExecPolicy policy) {
  const std::int64_t m = group_pi_part(g, pi);
  if (m == 1) return {trivial_subgroup(g)};
  if (m == g.order()) return {full_subgroup(g)};

  // Anchor prime: the pi-prime with the largest contribution |G|_p.
  long long anchor = 0;
  std::int64_t anchor_part = 0;
  for (long long p : g.prime_list()) {
    if (!pi.contains(Int(p))) continue;
    std::int64_t part = 1;
    for (std::int64_t rest = g.order(); rest % p == 0; rest /= p) part *= p;
    if (part > anchor_part) {
      anchor_part = part;
      anchor = p;
    }
  }
  const Subgroup p_sylow = sylow(g, anchor);

  std::vector<Subgroup> results;
  ClassRegistry registry;
  registry.add_orbit(g, p_sylow);
  std::vector<Subgroup> frontier;
  if (p_sylow.order() == m) {
    results.push_back(p_sylow);
  } else {
    frontier.push_back(p_sylow);
  }

  const std::uint32_t pi_mask = g.mask_of(pi);

#ifdef _OPENMP
  const int max_threads = policy == ExecPolicy::Parallel ? omp_get_max_threads() : 1;
#else
  const int max_threads = 1;
#endif
  std::vector<WorkBuffer> buffers;
  buffers.reserve(static_cast<std::size_t>(max_threads));
  for (int t = 0; t < max_threads; ++t) buffers.emplace_back(g);

  while (!frontier.empty()) {
    // Candidate enumeration: pi-elements x with ord(x) | m, one
    // representative per right coset K*x (⟨K, kx⟩ = ⟨K, x⟩ for k in K).
    std::vector<Candidate> candidates;
    for (std::size_t at = 0; at < frontier.size(); ++at) {
      const Subgroup& base = frontier[at];
      WorkBuffer& cover = buffers.front();
      cover.fresh();
      for (std::int32_t x = 0; x < g.order(); ++x) {
        if (cover.marked(x) || base.contains(x)) continue;
        if (!g.is_pi_element(x, pi_mask) || m % g.element_order(x) != 0) continue;
        candidates.push_back(Candidate{at, x});
        for (std::int32_t k : base.elements) cover.mark(g.mul(k, x));
      }
    }

    // Closure phase: independent work items; results land in per-candidate
    // slots so the merge below is scheduling-independent.
    std::vector<std::optional<std::vector<std::int32_t>>> closures(candidates.size());
    if (max_threads > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(max_threads)
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        WorkBuffer& buffer = buffers[static_cast<std::size_t>(omp_get_thread_num())];
        closures[i] = extend_subgroup(g, frontier[candidates[i].base], candidates[i].extra, m, buffer);
      }
#endif
    } else {
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        closures[i] = extend_subgroup(g, frontier[candidates[i].base], candidates[i].extra, m,
                                      buffers.front());
      }
    }

    // Merge phase, in candidate order: keep closures with order dividing m,
    // drop anything conjugate to an already-registered subgroup.
    std::vector<Subgroup> next_frontier;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (!closures[i]) continue;
      auto& elements = *closures[i];
      const auto size = static_cast<std::int64_t>(elements.size());
      if (m % size != 0) continue;
      if (registry.known(size, elements)) continue;
      const Subgroup& base = frontier[candidates[i].base];
      Subgroup built{&g, std::move(elements), base.generators};
      built.generators.push_back(candidates[i].extra);
      registry.add_orbit(g, built);
      if (size == m) {
        results.push_back(std::move(built));
      } else {
        next_frontier.push_back(std::move(built));
      }
    }
    frontier = std::move(next_frontier);
  }

  std::sort(results.begin(), results.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.elements < b.elements; });
  return results;
}

}  // namespace hall
