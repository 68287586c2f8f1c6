#include "hall/engine/identify.hpp"

#include <map>
#include <sstream>

namespace hall {

namespace {

constexpr std::int64_t kTagLimit = 200;

std::string fingerprint_of(const FiniteGroup& g, const Subgroup& s,
                           const DerivedSeries& series) {
  std::ostringstream out;
  out << "o=" << s.order();
  out << ";h=";
  bool first = true;
  for (const auto& [ord, count] : order_histogram(g, s)) {
    if (!first) out << ",";
    out << ord << ":" << count;
    first = false;
  }
  out << ";z=" << center_size(g, s);
  out << ";d=";
  first = true;
  for (std::int64_t ord : series.orders) {
    if (!first) out << ",";
    out << ord;
    first = false;
  }
  return out.str();
}

std::string whole_group_fingerprint(const FiniteGroup& g) {
  const Subgroup whole = full_subgroup(g);
  return fingerprint_of(g, whole, derived_series(g, whole));
}

// Reference fingerprints for groups of order <= 200.  First registration of
// a fingerprint wins, so isomorphic duplicates (Sym(3) vs Dihedral(3),
// coprime cyclic products, ...) keep the earlier, more specific name.
class ReferenceTable {
 public:
  ReferenceTable() {
    add(sym(3));
    add(sym(4));
    add(sym(5));
    add(alt(4));
    add(alt(5));
    add(sl2(3));
    add(sl2(5));
    add(gl2(3));
    {
      const FiniteGroup sl2_3 = sl2(3);
      add_subgroup(sl2_3, sylow(sl2_3, 2), "Q8");
      const FiniteGroup sl2_7 = sl2(7);
      add_subgroup(sl2_7, sylow(sl2_7, 2), "Q16");
    }
    {
      const FiniteGroup s4 = sym(4), s3 = sym(3);
      add(direct_product(s4, s3));
      add(direct_product(s3, s3));
      add(direct_product(s4, cyclic_perm(2)));
      add(direct_product(alt(4), cyclic_perm(2)));
    }
    for (int n = 1; n <= kTagLimit; ++n) add(cyclic(n));
    for (int m = 3; 2 * m <= kTagLimit; ++m) add(dihedral(m));
    // Non-cyclic abelian products reachable on <= 16 permutation points.
    for (int a = 2; a <= 8; ++a) {
      for (int b = a; a + b <= 16 && a * b <= kTagLimit; ++b) {
        add(direct_product(cyclic_perm(a), cyclic_perm(b)));
      }
    }
    {
      auto c2xc2 = direct_product(cyclic_perm(2), cyclic_perm(2));
      add(direct_product(c2xc2, cyclic_perm(2)), "Cyclic(2) x Cyclic(2) x Cyclic(2)");
    }
  }

  std::optional<std::string> lookup(const std::string& fingerprint) const {
    auto it = table_.find(fingerprint);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

 private:
  // Cyclic group as a permutation n-cycle so it can enter direct products.
  static FiniteGroup cyclic_perm(int n) {
    std::vector<int> cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = i;
    return FiniteGroup(std::make_shared<PermOps>(n), {PermOps::from_cycles(n, {cycle})},
                       "Cyclic(" + std::to_string(n) + ")");
  }

  void add(const FiniteGroup& g) { add(g, g.name()); }

  void add(const FiniteGroup& g, const std::string& tag) {
    if (g.order() > kTagLimit) return;
    table_.emplace(whole_group_fingerprint(g), tag);  // first wins
  }

  void add_subgroup(const FiniteGroup& g, const Subgroup& s, const std::string& tag) {
    if (s.order() > kTagLimit) return;
    table_.emplace(fingerprint_of(g, s, derived_series(g, s)), tag);
  }

  std::map<std::string, std::string> table_;
};

const ReferenceTable& reference_table() {
  static const ReferenceTable table;
  return table;
}

}  // namespace

std::string TypeDescriptor::fingerprint() const {
  std::ostringstream out;
  out << "o=" << order;
  out << ";h=";
  bool first = true;
  for (const auto& [ord, count] : histogram) {
    if (!first) out << ",";
    out << ord << ":" << count;
    first = false;
  }
  out << ";z=" << center;
  out << ";d=";
  first = true;
  for (std::int64_t ord : derived_orders) {
    if (!first) out << ",";
    out << ord;
    first = false;
  }
  return out.str();
}

TypeDescriptor identify_type(const FiniteGroup& g, const Subgroup& s) {
  TypeDescriptor d;
  d.order = s.order();
  d.abelian = is_abelian(g, s);
  const DerivedSeries series = derived_series(g, s);
  d.solvable = series.solvable;
  d.derived_length = series.derived_length();
  d.exponent = subgroup_exponent(g, s);
  d.center = center_size(g, s);
  d.histogram = order_histogram(g, s);
  d.derived_orders = series.orders;
  if (d.order <= kTagLimit) d.tag = reference_table().lookup(d.fingerprint());
  return d;
}

TypeDescriptor identify_type(const FiniteGroup& g) {
  return identify_type(g, full_subgroup(g));
}

}  // namespace hall
