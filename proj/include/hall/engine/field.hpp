#pragma once

// Finite fields F_{p^a} with q = p^a <= 256, represented by lookup tables.
// Elements are integers 0..q-1 encoding polynomial coefficients base p:
// the element sum c_i x^i has index sum c_i p^i, so 0 and 1 are the field's
// zero and one and the index p is the generator x of the extension.

#include <cstdint>
#include <string>
#include <vector>

namespace hall {

class FieldTable {
 public:
  // Builds F_{p^a} using the least monic irreducible polynomial of degree a
  // over F_p (least in the integer encoding of its coefficient vector).
  FieldTable(int p, int a);

  int q() const { return q_; }
  int p() const { return p_; }
  int degree() const { return a_; }

  std::uint8_t add(std::uint8_t x, std::uint8_t y) const { return add_[index(x, y)]; }
  std::uint8_t mul(std::uint8_t x, std::uint8_t y) const { return mul_[index(x, y)]; }
  std::uint8_t sub(std::uint8_t x, std::uint8_t y) const { return add_[index(x, neg_[y])]; }
  std::uint8_t neg(std::uint8_t x) const { return neg_[x]; }
  std::uint8_t inv(std::uint8_t x) const;  // throws on x == 0
  std::uint8_t pow(std::uint8_t x, long long e) const;

  // Least element of multiplicative order q - 1.
  std::uint8_t generator() const { return generator_; }

  // Coefficients c_0..c_a of the defining polynomial sum c_i x^i (monic).
  const std::vector<int>& modulus() const { return modulus_; }

  // Display form, e.g. "x+2" in F_9; plain digits in prime fields.
  std::string element_name(std::uint8_t x) const;

  // Shared per-(p, a) instance, built once.
  static const FieldTable& get(int p, int a);

 private:
  std::size_t index(std::uint8_t x, std::uint8_t y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(q_) + y;
  }

  int p_ = 0;
  int a_ = 0;
  int q_ = 0;
  std::uint8_t generator_ = 0;
  std::vector<int> modulus_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
};

}  // namespace hall
