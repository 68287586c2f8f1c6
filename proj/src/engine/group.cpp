#include "hall/engine/group.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>

namespace hall {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::size_t ElementHash::operator()(const Element& e) const {
  std::uint64_t lo, hi;
  std::memcpy(&lo, e.bytes.data(), 8);
  std::memcpy(&hi, e.bytes.data() + 8, 8);
  return static_cast<std::size_t>(mix64(lo) ^ (mix64(hi) * 0x9e3779b97f4a7c15ULL));
}

// ---- PermOps ----------------------------------------------------------

PermOps::PermOps(int n) : n_(n) {
  if (n < 0 || n > 16) throw std::invalid_argument("PermOps: need 0 <= n <= 16");
}

Element PermOps::identity() const {
  Element e;
  for (int i = 0; i < 16; ++i) e.bytes[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return e;
}

Element PermOps::multiply(const Element& a, const Element& b) const {
  Element r;
  for (int i = 0; i < 16; ++i) {
    r.bytes[static_cast<std::size_t>(i)] = b.bytes[a.bytes[static_cast<std::size_t>(i)]];
  }
  return r;
}

Element PermOps::inverse(const Element& a) const {
  Element r;
  for (int i = 0; i < 16; ++i) r.bytes[a.bytes[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return r;
}

std::string PermOps::to_string(const Element& a) const {
  // Cycle notation over the n moved points, 0-based.
  std::ostringstream out;
  std::array<bool, 16> seen{};
  bool any = false;
  for (int start = 0; start < n_; ++start) {
    if (seen[static_cast<std::size_t>(start)] || a.bytes[static_cast<std::size_t>(start)] == start) {
      continue;
    }
    out << "(";
    int i = start;
    bool first = true;
    while (!seen[static_cast<std::size_t>(i)]) {
      seen[static_cast<std::size_t>(i)] = true;
      if (!first) out << " ";
      out << i;
      first = false;
      i = a.bytes[static_cast<std::size_t>(i)];
    }
    out << ")";
    any = true;
  }
  if (!any) out << "()";
  return out.str();
}

Element PermOps::from_images(const std::vector<int>& images) {
  if (images.size() > 16) throw std::invalid_argument("from_images: more than 16 points");
  Element e;
  std::array<bool, 16> hit{};
  for (int i = 0; i < 16; ++i) e.bytes[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const int img = images[i];
    if (img < 0 || img >= static_cast<int>(images.size()) || hit[static_cast<std::size_t>(img)]) {
      throw std::invalid_argument("from_images: not a permutation");
    }
    hit[static_cast<std::size_t>(img)] = true;
    e.bytes[i] = static_cast<std::uint8_t>(img);
  }
  return e;
}

Element PermOps::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  std::array<bool, 16> used{};
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k];
      const int to = cycle[(k + 1) % cycle.size()];
      if (from < 0 || from >= n || used[static_cast<std::size_t>(from)]) {
        throw std::invalid_argument("from_cycles: bad or repeated point");
      }
      used[static_cast<std::size_t>(from)] = true;
      images[static_cast<std::size_t>(from)] = to;
    }
  }
  return from_images(images);
}

// ---- MatrixOps --------------------------------------------------------

MatrixOps::MatrixOps(const FieldTable& field, int dim) : field_(field), dim_(dim) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("MatrixOps: need 1 <= dim <= 3");
}

Element MatrixOps::identity() const {
  Element e;
  for (int i = 0; i < dim_; ++i) e.bytes[static_cast<std::size_t>(i * dim_ + i)] = 1;
  return e;
}

Element MatrixOps::multiply(const Element& a, const Element& b) const {
  Element r;
  for (int row = 0; row < dim_; ++row) {
    for (int col = 0; col < dim_; ++col) {
      std::uint8_t acc = 0;
      for (int k = 0; k < dim_; ++k) {
        acc = field_.add(acc, field_.mul(a.bytes[static_cast<std::size_t>(row * dim_ + k)],
                                         b.bytes[static_cast<std::size_t>(k * dim_ + col)]));
      }
      r.bytes[static_cast<std::size_t>(row * dim_ + col)] = acc;
    }
  }
  return r;
}

std::uint8_t MatrixOps::determinant(const Element& a) const {
  const auto at = [&](int r, int c) { return a.bytes[static_cast<std::size_t>(r * dim_ + c)]; };
  const FieldTable& f = field_;
  if (dim_ == 1) return at(0, 0);
  if (dim_ == 2) return f.sub(f.mul(at(0, 0), at(1, 1)), f.mul(at(0, 1), at(1, 0)));
  const std::uint8_t m00 = f.sub(f.mul(at(1, 1), at(2, 2)), f.mul(at(1, 2), at(2, 1)));
  const std::uint8_t m01 = f.sub(f.mul(at(1, 0), at(2, 2)), f.mul(at(1, 2), at(2, 0)));
  const std::uint8_t m02 = f.sub(f.mul(at(1, 0), at(2, 1)), f.mul(at(1, 1), at(2, 0)));
  std::uint8_t det = f.mul(at(0, 0), m00);
  det = f.sub(det, f.mul(at(0, 1), m01));
  det = f.add(det, f.mul(at(0, 2), m02));
  return det;
}

Element MatrixOps::inverse(const Element& a) const {
  const FieldTable& f = field_;
  const std::uint8_t det = determinant(a);
  const std::uint8_t det_inv = f.inv(det);
  const auto at = [&](int r, int c) { return a.bytes[static_cast<std::size_t>(r * dim_ + c)]; };
  Element r;
  const auto set = [&](int row, int col, std::uint8_t v) {
    r.bytes[static_cast<std::size_t>(row * dim_ + col)] = f.mul(v, det_inv);
  };
  if (dim_ == 1) {
    set(0, 0, 1);
    return r;
  }
  if (dim_ == 2) {
    set(0, 0, at(1, 1));
    set(0, 1, f.neg(at(0, 1)));
    set(1, 0, f.neg(at(1, 0)));
    set(1, 1, at(0, 0));
    return r;
  }
  // Adjugate: entry (i, j) is the (j, i) cofactor.
  const auto cof = [&](int row, int col) {
    int r0 = -1, r1 = -1, c0 = -1, c1 = -1;
    for (int i = 0; i < 3; ++i) {
      if (i == row) continue;
      (r0 < 0 ? r0 : r1) = i;
    }
    for (int j = 0; j < 3; ++j) {
      if (j == col) continue;
      (c0 < 0 ? c0 : c1) = j;
    }
    std::uint8_t minor = f.sub(f.mul(at(r0, c0), at(r1, c1)), f.mul(at(r0, c1), at(r1, c0)));
    return (row + col) % 2 == 0 ? minor : f.neg(minor);
  };
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) set(i, j, cof(j, i));
  }
  return r;
}

std::string MatrixOps::to_string(const Element& a) const {
  std::ostringstream out;
  out << "[";
  for (int row = 0; row < dim_; ++row) {
    if (row > 0) out << "; ";
    for (int col = 0; col < dim_; ++col) {
      if (col > 0) out << ",";
      out << field_.element_name(a.bytes[static_cast<std::size_t>(row * dim_ + col)]);
    }
  }
  out << "]";
  return out.str();
}

Element MatrixOps::from_entries(const std::vector<int>& entries) const {
  if (static_cast<int>(entries.size()) != dim_ * dim_) {
    throw std::invalid_argument("from_entries: wrong entry count");
  }
  Element e;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const int v = entries[i];
    if (v < 0 || v >= field_.q()) throw std::invalid_argument("from_entries: entry out of field");
    e.bytes[i] = static_cast<std::uint8_t>(v);
  }
  return e;
}

// ---- AffineOps --------------------------------------------------------

AffineOps::AffineOps(int modulus) : m_(modulus) {
  if (modulus < 1 || modulus > 65535) throw std::invalid_argument("AffineOps: bad modulus");
}

Element AffineOps::map(int a, int b) {
  Element e;
  e.bytes[0] = static_cast<std::uint8_t>(a & 0xff);
  e.bytes[1] = static_cast<std::uint8_t>((a >> 8) & 0xff);
  e.bytes[2] = static_cast<std::uint8_t>(b & 0xff);
  e.bytes[3] = static_cast<std::uint8_t>((b >> 8) & 0xff);
  return e;
}

namespace {
int affine_a(const Element& e) { return e.bytes[0] | (e.bytes[1] << 8); }
int affine_b(const Element& e) { return e.bytes[2] | (e.bytes[3] << 8); }
}  // namespace

Element AffineOps::identity() const { return map(1 % m_, 0); }

Element AffineOps::multiply(const Element& x, const Element& y) const {
  // Apply x first: t -> a1 t + b1, then y: t -> a2 t + b2.
  const long long a1 = affine_a(x), b1 = affine_b(x);
  const long long a2 = affine_a(y), b2 = affine_b(y);
  return map(static_cast<int>((a2 * a1) % m_), static_cast<int>((a2 * b1 + b2) % m_));
}

Element AffineOps::inverse(const Element& x) const {
  const long long a = affine_a(x), b = affine_b(x);
  // Extended Euclid for a^{-1} mod m; group elements always have gcd(a,m)=1.
  long long r0 = m_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const long long k = r0 / r1;
    r0 -= k * r1;
    std::swap(r0, r1);
    s0 -= k * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) throw std::domain_error("AffineOps::inverse: multiplier not a unit");
  const long long a_inv = ((s0 % m_) + m_) % m_;
  const long long b_inv = ((-(a_inv * b) % m_) + m_) % m_;
  return map(static_cast<int>(a_inv), static_cast<int>(b_inv));
}

std::string AffineOps::to_string(const Element& e) const {
  std::ostringstream out;
  out << "x->" << affine_a(e) << "x+" << affine_b(e) << " (mod " << m_ << ")";
  return out.str();
}

// ---- FiniteGroup ------------------------------------------------------

CapExceeded::CapExceeded(const std::string& what_group, std::int64_t cap)
    : std::runtime_error("enumeration of " + what_group + " exceeds the element cap of " +
                         std::to_string(cap)),
      cap_(cap) {}

FiniteGroup::FiniteGroup(std::shared_ptr<const ElementOps> ops, std::vector<Element> generators,
                         std::string name, std::int64_t cap)
    : ops_(std::move(ops)), name_(std::move(name)) {
  if (cap < 1) throw std::invalid_argument("FiniteGroup: cap must be positive");

  const Element id = ops_->identity();
  std::vector<Element> gens;
  for (const Element& g : generators) {
    if (g == id) continue;
    if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
  }

  elements_.push_back(id);
  rebuild_index(1024);
  for (std::size_t at = 0; at < elements_.size(); ++at) {
    for (const Element& g : gens) {
      const Element next = ops_->multiply(elements_[at], g);
      const std::size_t slot = probe(next);
      if (slots_[slot] >= 0) continue;
      if (static_cast<std::int64_t>(elements_.size()) >= cap) throw CapExceeded(name_, cap);
      slots_[slot] = static_cast<std::int32_t>(elements_.size());
      elements_.push_back(next);
      if (elements_.size() * 2 > slots_.size()) rebuild_index(slots_.size() * 4);
    }
  }

  for (const Element& g : gens) generators_.push_back(index_of(g));

  const auto count = static_cast<std::size_t>(order());
  inverse_.resize(count);
  order_.resize(count);
  prime_mask_.resize(count);
  for (const auto& factor : factorize(Int(order())).factors) {
    primes_.push_back(factor.first.convert_to<long long>());
  }
  for (std::size_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::int32_t>(i);
    inverse_[i] = index_of(ops_->inverse(elements_[i]));
    int ord = 1;
    std::int32_t walk = idx;
    while (walk != 0) {
      walk = mul(walk, idx);
      ++ord;
    }
    order_[i] = ord;
    std::uint32_t mask = 0;
    int rest = ord;
    for (std::size_t k = 0; k < primes_.size(); ++k) {
      while (rest % primes_[k] == 0) {
        rest /= static_cast<int>(primes_[k]);
        mask |= 1u << k;
      }
    }
    prime_mask_[i] = mask;
  }
}

void FiniteGroup::rebuild_index(std::size_t slot_count) {
  slots_.assign(slot_count, -1);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    slots_[probe(elements_[i])] = static_cast<std::int32_t>(i);
  }
}

std::size_t FiniteGroup::probe(const Element& e) const {
  const std::size_t mask = slots_.size() - 1;
  std::size_t h = ElementHash{}(e)&mask;
  while (slots_[h] >= 0 && !(elements_[static_cast<std::size_t>(slots_[h])] == e)) {
    h = (h + 1) & mask;
  }
  return h;
}

std::int32_t FiniteGroup::index_of(const Element& e) const { return slots_[probe(e)]; }

std::int32_t FiniteGroup::mul(std::int32_t a, std::int32_t b) const {
  return index_of(ops_->multiply(elements_[static_cast<std::size_t>(a)],
                                 elements_[static_cast<std::size_t>(b)]));
}

std::uint32_t FiniteGroup::mask_of(const PrimeSet& pi) const {
  std::uint32_t mask = 0;
  for (std::size_t k = 0; k < primes_.size(); ++k) {
    if (pi.contains(Int(primes_[k]))) mask |= 1u << k;
  }
  return mask;
}

Factorization FiniteGroup::order_factorization() const { return factorize(Int(order())); }

// ---- Constructors -----------------------------------------------------

namespace {

void check_order(const FiniteGroup& group, std::int64_t expected) {
  if (group.order() != expected) {
    throw std::logic_error(group.name() + ": enumerated order " + std::to_string(group.order()) +
                           ", expected " + std::to_string(expected));
  }
}

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

struct FieldRef {
  const FieldTable* table;
  int p;
  int a;
};

FieldRef field_for(int q, const std::string& which) {
  if (q < 2) throw std::invalid_argument(which + ": q must be >= 2");
  const auto decomposition = is_prime_power(Int(q));
  if (!decomposition) throw std::invalid_argument(which + ": q must be a prime power");
  const int p = static_cast<int>(decomposition->first);
  const int a = decomposition->second;
  return {&FieldTable::get(p, a), p, a};
}

// Transvection generators I + t*E_{12}, I + t*E_{21} over an F_p-basis of
// the field; together they generate SL_2(q).
std::vector<Element> sl2_generators(const MatrixOps& ops) {
  const FieldTable& f = ops.field();
  std::vector<Element> gens;
  std::uint8_t basis = 1;
  for (int i = 0; i < f.degree(); ++i) {
    gens.push_back(ops.from_entries({1, basis, 0, 1}));
    gens.push_back(ops.from_entries({1, 0, basis, 1}));
    basis = f.mul(basis, static_cast<std::uint8_t>(f.degree() > 1 ? f.p() : 1));
  }
  return gens;
}

FiniteGroup projective_closure(const MatrixOps& matrix_ops, const std::vector<Element>& matrix_gens,
                               const std::string& name, std::int64_t cap) {
  const FieldTable& f = matrix_ops.field();
  const int dim = matrix_ops.dim();
  const int q = f.q();
  long long point_count = 1;
  std::int64_t vector_count = 1;
  for (int i = 0; i < dim - 1; ++i) point_count = point_count * q + 1;
  for (int i = 0; i < dim; ++i) vector_count *= q;
  if (point_count > 16) {
    throw std::invalid_argument(name + ": too many projective points (" +
                                std::to_string(point_count) + " > 16)");
  }

  // Canonical projective points: vectors whose first nonzero coordinate is
  // 1, in lexicographic order with coordinate 0 most significant.
  const auto decode = [&](std::int64_t code) {
    std::vector<std::uint8_t> v(static_cast<std::size_t>(dim));
    for (int i = dim - 1; i >= 0; --i) {
      v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(code % q);
      code /= q;
    }
    return v;
  };
  const auto encode = [&](const std::vector<std::uint8_t>& v) {
    std::int64_t code = 0;
    for (int i = 0; i < dim; ++i) code = code * q + v[static_cast<std::size_t>(i)];
    return code;
  };
  std::vector<std::vector<std::uint8_t>> points;
  std::vector<int> point_index(static_cast<std::size_t>(vector_count), -1);
  for (std::int64_t code = 1; code < vector_count; ++code) {
    const auto v = decode(code);
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] != 1) continue;
    point_index[static_cast<std::size_t>(code)] = static_cast<int>(points.size());
    points.push_back(v);
  }
  if (static_cast<long long>(points.size()) != point_count) {
    throw std::logic_error(name + ": projective point enumeration mismatch");
  }

  const auto act = [&](const Element& m, int point) {
    const auto& v = points[static_cast<std::size_t>(point)];
    std::vector<std::uint8_t> w(static_cast<std::size_t>(dim), 0);
    for (int row = 0; row < dim; ++row) {
      for (int col = 0; col < dim; ++col) {
        w[static_cast<std::size_t>(row)] =
            f.add(w[static_cast<std::size_t>(row)],
                  f.mul(m.bytes[static_cast<std::size_t>(row * dim + col)],
                        v[static_cast<std::size_t>(col)]));
      }
    }
    std::size_t lead = 0;
    while (lead < w.size() && w[lead] == 0) ++lead;
    if (lead == w.size()) throw std::logic_error(name + ": singular matrix in projective action");
    const std::uint8_t scale = f.inv(w[lead]);
    for (auto& c : w) c = f.mul(scale, c);
    return point_index[static_cast<std::size_t>(encode(w))];
  };

  std::vector<Element> perm_gens;
  for (const Element& m : matrix_gens) {
    std::vector<int> images(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      images[i] = act(m, static_cast<int>(i));
    }
    perm_gens.push_back(PermOps::from_images(images));
  }
  return FiniteGroup(std::make_shared<PermOps>(static_cast<int>(points.size())),
                     std::move(perm_gens), name, cap);
}

}  // namespace

FiniteGroup sym(int n, std::int64_t cap) {
  if (n < 1 || n > 16) throw std::invalid_argument("sym: need 1 <= n <= 16");
  std::vector<Element> gens;
  if (n >= 2) gens.push_back(PermOps::from_cycles(n, {{0, 1}}));
  if (n >= 3) {
    std::vector<int> cycle(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = i;
    gens.push_back(PermOps::from_cycles(n, {cycle}));
  }
  FiniteGroup group(std::make_shared<PermOps>(n), std::move(gens), "Sym(" + std::to_string(n) + ")",
                    cap);
  check_order(group, factorial(n));
  return group;
}

FiniteGroup alt(int n, std::int64_t cap) {
  if (n < 1 || n > 16) throw std::invalid_argument("alt: need 1 <= n <= 16");
  std::vector<Element> gens;
  if (n >= 3) gens.push_back(PermOps::from_cycles(n, {{0, 1, 2}}));
  if (n >= 4) {
    std::vector<int> cycle;
    // Even n: the n-cycle is odd, so rotate the points 1..n-1 instead.
    for (int i = n % 2 == 0 ? 1 : 0; i < n; ++i) cycle.push_back(i);
    gens.push_back(PermOps::from_cycles(n, {cycle}));
  }
  FiniteGroup group(std::make_shared<PermOps>(n), std::move(gens), "Alt(" + std::to_string(n) + ")",
                    cap);
  check_order(group, n >= 3 ? factorial(n) / 2 : 1);
  return group;
}

FiniteGroup cyclic(int m, std::int64_t cap) {
  if (m < 1 || m > 65535) throw std::invalid_argument("cyclic: need 1 <= m <= 65535");
  std::vector<Element> gens = {AffineOps::map(1 % m, 1 % m)};
  FiniteGroup group(std::make_shared<AffineOps>(m), std::move(gens),
                    "Cyclic(" + std::to_string(m) + ")", cap);
  check_order(group, m);
  return group;
}

FiniteGroup dihedral(int m, std::int64_t cap) {
  if (m < 3 || m > 65535) throw std::invalid_argument("dihedral: need 3 <= m <= 65535");
  std::vector<Element> gens = {AffineOps::map(1, 1), AffineOps::map(m - 1, 0)};
  FiniteGroup group(std::make_shared<AffineOps>(m), std::move(gens),
                    "Dihedral(" + std::to_string(m) + ")", cap);
  check_order(group, 2LL * m);
  return group;
}

FiniteGroup gl2(int q, std::int64_t cap) {
  const FieldRef field = field_for(q, "gl2");
  auto ops = std::make_shared<MatrixOps>(*field.table, 2);
  std::vector<Element> gens = sl2_generators(*ops);
  gens.push_back(ops->from_entries({field.table->generator(), 0, 0, 1}));
  FiniteGroup group(ops, std::move(gens), "GL2(" + std::to_string(q) + ")", cap);
  check_order(group, static_cast<std::int64_t>(q) * (q - 1) * (q - 1) * (q + 1));
  return group;
}

FiniteGroup sl2(int q, std::int64_t cap) {
  const FieldRef field = field_for(q, "sl2");
  auto ops = std::make_shared<MatrixOps>(*field.table, 2);
  FiniteGroup group(ops, sl2_generators(*ops), "SL2(" + std::to_string(q) + ")", cap);
  check_order(group, static_cast<std::int64_t>(q) * (q - 1) * (q + 1));
  return group;
}

FiniteGroup gu2(int q, std::int64_t cap) {
  const FieldRef base = field_for(q, "gu2");
  if (static_cast<long long>(q) * q > 256) {
    throw std::invalid_argument("gu2: q^2 must be <= 256");
  }
  const FieldTable& f = FieldTable::get(base.p, 2 * base.a);
  auto ops = std::make_shared<MatrixOps>(f, 2);
  std::vector<Element> gens;
  // Torus diag(g, g^{-q}) for a generator g of the big field; Weyl element
  // equal to the Hermitian form antidiag(1,1); unipotents [[1,t],[0,1]] for
  // the trace-zero elements t (t + t^q = 0).
  const std::uint8_t g = f.generator();
  gens.push_back(ops->from_entries({g, 0, 0, f.pow(g, -q)}));
  gens.push_back(ops->from_entries({0, 1, 1, 0}));
  for (int t = 1; t < f.q(); ++t) {
    const auto tt = static_cast<std::uint8_t>(t);
    if (f.add(tt, f.pow(tt, q)) == 0) {
      gens.push_back(ops->from_entries({1, tt, 0, 1}));
    }
  }
  FiniteGroup group(ops, std::move(gens), "GU2(" + std::to_string(q) + ")", cap);
  check_order(group, static_cast<std::int64_t>(q) * (q - 1) * (q + 1) * (q + 1));
  return group;
}

FiniteGroup psl2(int q, std::int64_t cap) {
  const FieldRef field = field_for(q, "psl2");
  MatrixOps ops(*field.table, 2);
  FiniteGroup group =
      projective_closure(ops, sl2_generators(ops), "PSL2(" + std::to_string(q) + ")", cap);
  check_order(group, static_cast<std::int64_t>(q) * (q - 1) * (q + 1) / (q % 2 == 0 ? 1 : 2));
  return group;
}

FiniteGroup pgl2(int q, std::int64_t cap) {
  const FieldRef field = field_for(q, "pgl2");
  MatrixOps ops(*field.table, 2);
  std::vector<Element> gens = sl2_generators(ops);
  gens.push_back(ops.from_entries({field.table->generator(), 0, 0, 1}));
  FiniteGroup group = projective_closure(ops, gens, "PGL2(" + std::to_string(q) + ")", cap);
  check_order(group, static_cast<std::int64_t>(q) * (q - 1) * (q + 1));
  return group;
}

FiniteGroup psl3(int q, std::int64_t cap) {
  if (q != 2 && q != 3) throw std::invalid_argument("psl3: supported only for q in {2, 3}");
  const FieldRef field = field_for(q, "psl3");
  MatrixOps ops(*field.table, 3);
  // A transvection and the coordinate 3-cycle generate SL_3 over a prime
  // field; the centre is trivial for q = 2, 3 since gcd(3, q-1) = 1.
  const std::vector<Element> gens = {
      ops.from_entries({1, 1, 0, 0, 1, 0, 0, 0, 1}),
      ops.from_entries({0, 0, 1, 1, 0, 0, 0, 1, 0}),
  };
  FiniteGroup group = projective_closure(ops, gens, "PSL3(" + std::to_string(q) + ")", cap);
  const std::int64_t q3 = static_cast<std::int64_t>(q) * q * q;
  check_order(group, q3 * (q * q - 1) * (q3 - 1) / ((q - 1) % 3 == 0 ? 3 : 1));
  return group;
}

FiniteGroup m11(std::int64_t cap) {
  const std::vector<Element> gens = {
      PermOps::from_cycles(11, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}),
      PermOps::from_cycles(11, {{2, 6, 10, 7}, {3, 9, 4, 5}}),
  };
  FiniteGroup group(std::make_shared<PermOps>(11), gens, "M11", cap);
  check_order(group, 7920);
  return group;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, std::int64_t cap) {
  const auto* perm_a = dynamic_cast<const PermOps*>(&a.ops());
  const auto* perm_b = dynamic_cast<const PermOps*>(&b.ops());
  if (perm_a == nullptr || perm_b == nullptr) {
    throw std::invalid_argument("direct_product: both factors must be permutation groups");
  }
  const int na = perm_a->points();
  const int nb = perm_b->points();
  if (na + nb > 16) throw std::invalid_argument("direct_product: more than 16 points");

  std::vector<Element> gens;
  for (std::int32_t gi : a.generators()) gens.push_back(a.element(gi));
  for (std::int32_t gi : b.generators()) {
    const Element& g = b.element(gi);
    std::vector<int> images(static_cast<std::size_t>(na + nb));
    for (int i = 0; i < na; ++i) images[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < nb; ++i) images[static_cast<std::size_t>(na + i)] = na + g.bytes[static_cast<std::size_t>(i)];
    gens.push_back(PermOps::from_images(images));
  }
  FiniteGroup group(std::make_shared<PermOps>(na + nb), std::move(gens),
                    a.name() + " x " + b.name(), cap);
  check_order(group, a.order() * b.order());
  return group;
}

FiniteGroup projective_image(const FiniteGroup& matrix_group, std::int64_t cap) {
  const auto* ops = dynamic_cast<const MatrixOps*>(&matrix_group.ops());
  if (ops == nullptr) {
    throw std::invalid_argument("projective_image: argument must be a matrix group");
  }
  std::vector<Element> gens;
  for (std::int32_t gi : matrix_group.generators()) gens.push_back(matrix_group.element(gi));
  return projective_closure(*ops, gens, "PImage(" + matrix_group.name() + ")", cap);
}

}  // namespace hall
