#include "hall/engine/subgroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace hall {

bool Subgroup::contains(std::int32_t x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup{&g, {0}, {}}; }

Subgroup full_subgroup(const FiniteGroup& g) {
  Subgroup s{&g, {}, g.generators()};
  s.elements.resize(static_cast<std::size_t>(g.order()));
  std::iota(s.elements.begin(), s.elements.end(), 0);
  return s;
}

WorkBuffer::WorkBuffer(const FiniteGroup& g)
    : stamp_(static_cast<std::size_t>(g.order()), -1) {}

void WorkBuffer::fresh() { ++epoch_; }
void WorkBuffer::mark(std::int32_t x) { stamp_[static_cast<std::size_t>(x)] = epoch_; }
bool WorkBuffer::marked(std::int32_t x) const {
  return stamp_[static_cast<std::size_t>(x)] == epoch_;
}

namespace {

// Core closure: BFS over right-multiplication by `multipliers`, seeded with
// `seed` (which must already be closed, e.g. a subgroup or {identity}).
// Returns the sorted element set, or nullopt once it grows past abort_above.
std::optional<std::vector<std::int32_t>> bfs_closure(const FiniteGroup& g,
                                                     const std::vector<std::int32_t>& seed,
                                                     const std::vector<std::int32_t>& multipliers,
                                                     std::int64_t abort_above, WorkBuffer& buffer) {
  buffer.fresh();
  auto& list = buffer.queue;
  list.clear();
  for (std::int32_t x : seed) {
    if (!buffer.marked(x)) {
      buffer.mark(x);
      list.push_back(x);
    }
  }
  for (std::size_t at = 0; at < list.size(); ++at) {
    for (std::int32_t m : multipliers) {
      const std::int32_t next = g.mul(list[at], m);
      if (buffer.marked(next)) continue;
      if (static_cast<std::int64_t>(list.size()) >= abort_above) return std::nullopt;
      buffer.mark(next);
      list.push_back(next);
    }
  }
  std::vector<std::int32_t> result(list.begin(), list.end());
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace

std::optional<std::vector<std::int32_t>> close_generators(const FiniteGroup& g,
                                                          const std::vector<std::int32_t>& gens,
                                                          std::int64_t abort_above,
                                                          WorkBuffer& buffer) {
  return bfs_closure(g, {0}, gens, abort_above, buffer);
}

std::optional<std::vector<std::int32_t>> extend_subgroup(const FiniteGroup& g,
                                                         const Subgroup& base, std::int32_t extra,
                                                         std::int64_t abort_above,
                                                         WorkBuffer& buffer) {
  std::vector<std::int32_t> multipliers = base.generators;
  multipliers.push_back(extra);
  return bfs_closure(g, base.elements, multipliers, abort_above, buffer);
}

FiniteGroup as_group(const Subgroup& s, const std::string& name) {
  const FiniteGroup& g = *s.parent;
  std::vector<Element> gens;
  for (std::int32_t x : s.generators) gens.push_back(g.element(x));
  auto ops = std::shared_ptr<const ElementOps>(&g.ops(), [](const ElementOps*) {});
  FiniteGroup rebuilt(ops, std::move(gens), name, g.order());
  if (rebuilt.order() != s.order()) {
    throw std::logic_error("as_group: rebuilt order disagrees with the subgroup");
  }
  return rebuilt;
}

Subgroup sylow(const FiniteGroup& g, long long p) {
  if (p < 2 || g.order() % p != 0) {
    throw std::invalid_argument("sylow: p must divide the group order");
  }
  std::int64_t target = 1;
  for (std::int64_t rest = g.order(); rest % p == 0; rest /= p) target *= p;

  const auto is_p_power_order = [&](std::int32_t x) {
    int ord = g.element_order(x);
    while (ord % p == 0) ord = static_cast<int>(ord / p);
    return ord == 1;
  };

  // Seed: first element realizing the maximal p-power order.
  std::int32_t seed = 0;
  int best_order = 1;
  for (std::int32_t x = 0; x < g.order(); ++x) {
    if (is_p_power_order(x) && g.element_order(x) > best_order) {
      best_order = g.element_order(x);
      seed = x;
    }
  }

  WorkBuffer buffer(g);
  Subgroup current{&g, {}, {}};
  if (seed != 0) {
    current.generators.push_back(seed);
    current.elements = *close_generators(g, current.generators, target, buffer);
  } else {
    current.elements = {0};
  }

  while (current.order() < target) {
    bool extended = false;
    for (std::int32_t x = 0; x < g.order() && !extended; ++x) {
      if (!is_p_power_order(x) || current.contains(x)) continue;
      auto closed = extend_subgroup(g, current, x, target, buffer);
      if (!closed) continue;
      std::int64_t size = static_cast<std::int64_t>(closed->size());
      while (size % p == 0) size /= p;
      if (size != 1) continue;
      current.generators.push_back(x);
      current.elements = std::move(*closed);
      extended = true;
    }
    if (!extended) throw std::logic_error("sylow: no extension found below target order");
  }
  return current;
}

Subgroup derived_subgroup(const FiniteGroup& g, const Subgroup& s) {
  WorkBuffer buffer(g);
  std::vector<std::int32_t> gens;
  const auto add_new = [&](std::int32_t x) {
    if (x != 0 && std::find(gens.begin(), gens.end(), x) == gens.end()) {
      gens.push_back(x);
      return true;
    }
    return false;
  };
  for (std::int32_t a : s.generators) {
    for (std::int32_t b : s.generators) {
      add_new(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    }
  }
  if (gens.empty()) return trivial_subgroup(g);

  std::vector<std::int32_t> elements = *close_generators(g, gens, g.order(), buffer);
  // Normal closure in s: conjugating the generators by s's generators until
  // the set stabilizes.
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t count = gens.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::int32_t c : s.generators) {
        const std::int32_t conjugate = g.conj(gens[i], c);
        if (!std::binary_search(elements.begin(), elements.end(), conjugate)) {
          add_new(conjugate);
          changed = true;
        }
      }
    }
    if (changed) elements = *close_generators(g, gens, g.order(), buffer);
  }
  return Subgroup{&g, std::move(elements), std::move(gens)};
}

DerivedSeries derived_series(const FiniteGroup& g, const Subgroup& s) {
  DerivedSeries series;
  series.orders.push_back(s.order());
  Subgroup current = s;
  while (current.order() > 1) {
    Subgroup next = derived_subgroup(g, current);
    if (next.order() == current.order()) break;  // perfect, nontrivial
    series.orders.push_back(next.order());
    current = std::move(next);
  }
  series.solvable = current.order() == 1;
  return series;
}

bool is_solvable(const FiniteGroup& g, const Subgroup& s) { return derived_series(g, s).solvable; }

bool is_solvable(const FiniteGroup& g) { return is_solvable(g, full_subgroup(g)); }

bool are_conjugate(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
  if (a.parent != &g || b.parent != &g) {
    throw std::invalid_argument("are_conjugate: subgroups of a different group");
  }
  if (a.order() != b.order()) return false;
  if (a.elements == b.elements) return true;
  for (std::int32_t c = 0; c < g.order(); ++c) {
    bool all_inside = true;
    for (std::int32_t x : a.generators) {
      if (!b.contains(g.conj(x, c))) {
        all_inside = false;
        break;
      }
    }
    // Generators conjugate into b and the orders match, so a^c = b.
    if (all_inside) return true;
  }
  return false;
}

std::vector<std::vector<std::int32_t>> subgroup_orbit(const FiniteGroup& g, const Subgroup& s) {
  std::vector<std::vector<std::int32_t>> orbit;
  std::set<std::vector<std::int32_t>> seen;
  orbit.push_back(s.elements);
  seen.insert(s.elements);
  for (std::size_t at = 0; at < orbit.size(); ++at) {
    for (std::int32_t c : g.generators()) {
      std::vector<std::int32_t> image;
      image.reserve(orbit[at].size());
      for (std::int32_t x : orbit[at]) image.push_back(g.conj(x, c));
      std::sort(image.begin(), image.end());
      if (seen.insert(image).second) orbit.push_back(std::move(image));
    }
  }
  return orbit;
}

bool is_abelian(const FiniteGroup& g, const Subgroup& s) {
  for (std::int32_t a : s.generators) {
    for (std::int32_t b : s.generators) {
      if (g.mul(a, b) != g.mul(b, a)) return false;
    }
  }
  return true;
}

std::int64_t center_size(const FiniteGroup& g, const Subgroup& s) {
  std::int64_t count = 0;
  for (std::int32_t x : s.elements) {
    bool central = true;
    for (std::int32_t c : s.generators) {
      if (g.mul(x, c) != g.mul(c, x)) {
        central = false;
        break;
      }
    }
    if (central) ++count;
  }
  return count;
}

long long subgroup_exponent(const FiniteGroup& g, const Subgroup& s) {
  long long result = 1;
  for (std::int32_t x : s.elements) {
    result = std::lcm(result, static_cast<long long>(g.element_order(x)));
  }
  return result;
}

std::vector<std::pair<int, std::int64_t>> order_histogram(const FiniteGroup& g, const Subgroup& s) {
  std::vector<std::pair<int, std::int64_t>> histogram;
  for (std::int32_t x : s.elements) {
    const int ord = g.element_order(x);
    auto it = std::find_if(histogram.begin(), histogram.end(),
                           [&](const auto& entry) { return entry.first == ord; });
    if (it == histogram.end()) {
      histogram.emplace_back(ord, 1);
    } else {
      ++it->second;
    }
  }
  std::sort(histogram.begin(), histogram.end());
  return histogram;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  if (g.order() > 400) {
    throw std::invalid_argument("all_subgroups: restricted to groups of order <= 400");
  }
  WorkBuffer buffer(g);
  std::set<std::vector<std::int32_t>> seen;
  std::vector<Subgroup> found;
  found.push_back(trivial_subgroup(g));
  seen.insert(found.back().elements);
  for (std::size_t at = 0; at < found.size(); ++at) {
    for (std::int32_t x = 1; x < g.order(); ++x) {
      if (found[at].contains(x)) continue;
      const Subgroup& base = found[at];  // re-read: found may have grown
      auto closed = extend_subgroup(g, base, x, g.order(), buffer);
      std::vector<std::int32_t> elements = std::move(*closed);
      if (seen.insert(elements).second) {
        std::vector<std::int32_t> gens = base.generators;
        gens.push_back(x);
        found.push_back(Subgroup{&g, std::move(elements), std::move(gens)});
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return found;
}

}  // namespace hall
