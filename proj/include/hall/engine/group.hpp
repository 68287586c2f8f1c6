#pragma once

// Concrete finite groups at desk scale.  Elements live in a 16-byte POD with
// a canonical encoding (permutation images / matrix entries / affine map
// coefficients); an ElementOps object interprets the bytes.  FiniteGroup
// enumerates the whole group once by breadth-first closure and then serves
// multiplication, inversion, element orders, and prime-support masks by
// index.  Groups are immutable after construction and safe to share across
// threads.

#include "hall/arith.hpp"
#include "hall/engine/field.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hall {

struct Element {
  std::array<std::uint8_t, 16> bytes{};

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const;
};

// Interprets Element bytes for one universe of elements.  Implementations:
// permutations on up to 16 points, square matrices of dimension <= 3 over a
// field of size <= 256, and invertible affine maps x -> ax + b mod m.
class ElementOps {
 public:
  virtual ~ElementOps() = default;
  virtual Element identity() const = 0;
  virtual Element multiply(const Element& a, const Element& b) const = 0;
  virtual Element inverse(const Element& a) const = 0;
  virtual std::string to_string(const Element& a) const = 0;
};

// Permutations of {0..n-1}, image array in bytes[i]; padding entries beyond
// n are fixed points so that equality works uniformly.  Products compose
// left-to-right: (a*b)(i) = b(a(i)).
class PermOps : public ElementOps {
 public:
  explicit PermOps(int n);
  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  std::string to_string(const Element& a) const override;
  int points() const { return n_; }

  static Element from_images(const std::vector<int>& images);
  // Builds a permutation from disjoint cycles over 0-based points.
  static Element from_cycles(int n, const std::vector<std::vector<int>>& cycles);

 private:
  int n_;
};

// Row-major dim x dim matrices over the given field, entries in bytes[r*dim+c].
class MatrixOps : public ElementOps {
 public:
  MatrixOps(const FieldTable& field, int dim);
  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  std::string to_string(const Element& a) const override;
  const FieldTable& field() const { return field_; }
  int dim() const { return dim_; }

  Element from_entries(const std::vector<int>& entries) const;
  std::uint8_t determinant(const Element& a) const;

 private:
  const FieldTable& field_;
  int dim_;
};

// Invertible affine maps x -> ax + b on Z/m, gcd(a, m) = 1; a in bytes 0..1,
// b in bytes 2..3 (little endian).  Composition applies the left factor
// first, matching PermOps.
class AffineOps : public ElementOps {
 public:
  explicit AffineOps(int modulus);
  Element identity() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  std::string to_string(const Element& a) const override;
  int modulus() const { return m_; }

  static Element map(int a, int b);

 private:
  int m_;
};

// Raised when a closure would enumerate more elements than the cap allows.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what_group, std::int64_t cap);
  std::int64_t cap() const { return cap_; }

 private:
  std::int64_t cap_;
};

constexpr std::int64_t kDefaultElementCap = 100'000;

class FiniteGroup {
 public:
  // Breadth-first closure of the generators.  Deterministic element order:
  // identity first, then products in discovery order.  Throws CapExceeded
  // if more than `cap` elements appear.
  FiniteGroup(std::shared_ptr<const ElementOps> ops, std::vector<Element> generators,
              std::string name, std::int64_t cap = kDefaultElementCap);

  std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }
  const std::string& name() const { return name_; }
  const ElementOps& ops() const { return *ops_; }
  const std::vector<std::int32_t>& generators() const { return generators_; }
  const Element& element(std::int32_t i) const { return elements_[static_cast<std::size_t>(i)]; }

  // Index of an element, or -1 if it is not in the group.
  std::int32_t index_of(const Element& e) const;

  std::int32_t mul(std::int32_t a, std::int32_t b) const;
  std::int32_t inv(std::int32_t a) const { return inverse_[static_cast<std::size_t>(a)]; }
  // Conjugate x^g = g^{-1} x g.
  std::int32_t conj(std::int32_t x, std::int32_t g) const { return mul(mul(inv(g), x), g); }
  int element_order(std::int32_t a) const { return order_[static_cast<std::size_t>(a)]; }

  // Primes dividing the group order, ascending; every element order's prime
  // support is a subset (Lagrange).
  const std::vector<long long>& prime_list() const { return primes_; }
  // Bitmask over prime_list() of the primes dividing this element's order.
  std::uint32_t order_prime_mask(std::int32_t a) const {
    return prime_mask_[static_cast<std::size_t>(a)];
  }
  // Mask for a prime set restricted to this group's primes.
  std::uint32_t mask_of(const PrimeSet& pi) const;
  // True iff the element order's primes all lie in the masked set.
  bool is_pi_element(std::int32_t a, std::uint32_t pi_mask) const {
    return (order_prime_mask(a) & ~pi_mask) == 0;
  }

  Factorization order_factorization() const;

 private:
  std::shared_ptr<const ElementOps> ops_;
  std::string name_;
  std::vector<Element> elements_;
  std::vector<std::int32_t> generators_;
  std::vector<std::int32_t> inverse_;
  std::vector<int> order_;
  std::vector<std::uint32_t> prime_mask_;
  std::vector<long long> primes_;

  // Open-addressing index from element bytes to position in elements_.
  std::vector<std::int32_t> slots_;
  void rebuild_index(std::size_t slot_count);
  std::size_t probe(const Element& e) const;
};

// ---- Constructors ----------------------------------------------------

FiniteGroup sym(int n, std::int64_t cap = kDefaultElementCap);
FiniteGroup alt(int n, std::int64_t cap = kDefaultElementCap);
// Cyclic group of order m as rotations x -> x + 1 (mod m), m >= 1.
FiniteGroup cyclic(int m, std::int64_t cap = kDefaultElementCap);
// Dihedral group of order 2m (m >= 3) as affine maps x -> +-x + b (mod m).
FiniteGroup dihedral(int m, std::int64_t cap = kDefaultElementCap);
FiniteGroup gl2(int q, std::int64_t cap = kDefaultElementCap);
FiniteGroup sl2(int q, std::int64_t cap = kDefaultElementCap);
// Unitary group GU_2(q) inside GL_2(q^2), preserving the antidiagonal
// Hermitian form; order q(q-1)(q+1)^2 (asserted after closure).
FiniteGroup gu2(int q, std::int64_t cap = kDefaultElementCap);
// Projective groups as permutations of the q+1 projective-line points.
FiniteGroup psl2(int q, std::int64_t cap = kDefaultElementCap);
FiniteGroup pgl2(int q, std::int64_t cap = kDefaultElementCap);
// PSL_3(q) on the q^2+q+1 projective-plane points; q in {2, 3}.
FiniteGroup psl3(int q, std::int64_t cap = kDefaultElementCap);
// Mathieu group on 11 points from its standard generators.
FiniteGroup m11(std::int64_t cap = kDefaultElementCap);
// Direct product of two permutation groups acting on disjoint point sets.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b,
                           std::int64_t cap = kDefaultElementCap);

// Permutation image of a matrix group on the projective points of the
// underlying vector space (points ordered by their canonical normalized
// representatives).  Requires at most 16 points.
FiniteGroup projective_image(const FiniteGroup& matrix_group, std::int64_t cap = kDefaultElementCap);

}  // namespace hall
