#include "hall/engine/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hall {

namespace {

// Dense polynomials over F_p, lowest coefficient first, no trailing zeros.
using Poly = std::vector<int>;

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

// Remainder of f modulo the monic polynomial g.
Poly poly_mod(Poly f, const Poly& g, int p) {
  f = trim(std::move(f));
  const auto deg_g = static_cast<long long>(g.size()) - 1;
  while (static_cast<long long>(f.size()) - 1 >= deg_g) {
    const int lead = f.back();
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      f[shift + i] = ((f[shift + i] - lead * g[i]) % p + p * p) % p;
    }
    f = trim(std::move(f));
  }
  return f;
}

bool divides(const Poly& g, const Poly& f, int p) {
  return poly_mod(f, g, p).empty();
}

// Irreducibility by trial division: f (monic, degree a >= 2) is reducible
// iff some monic polynomial of degree 1..a/2 divides it.  The search space
// is at most p^{a/2 + 1} candidates, tiny for q <= 256.
bool is_irreducible(const Poly& f, int p) {
  const int a = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= a; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long low = 0; low < count; ++low) {
      Poly g(static_cast<std::size_t>(d) + 1, 0);
      long long rest = low;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<int>(rest % p);
        rest /= p;
      }
      g[static_cast<std::size_t>(d)] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

bool is_prime_int(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

FieldTable::FieldTable(int p, int a) : p_(p), a_(a) {
  if (!is_prime_int(p)) throw std::invalid_argument("FieldTable: p must be prime");
  if (a < 1) throw std::invalid_argument("FieldTable: degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < a; ++i) q *= p;
  if (q > 256) throw std::invalid_argument("FieldTable: field size must be <= 256");
  q_ = static_cast<int>(q);

  // Least monic irreducible of degree a: scan lower coefficients in integer
  // encoding order.  Degree 1 is x itself (encoding 0), used as-is.
  modulus_.assign(static_cast<std::size_t>(a) + 1, 0);
  modulus_[static_cast<std::size_t>(a)] = 1;
  if (a > 1) {
    bool found = false;
    for (int low = 0; low < q_ && !found; ++low) {
      int rest = low;
      for (int i = 0; i < a; ++i) {
        modulus_[static_cast<std::size_t>(i)] = rest % p;
        rest /= p;
      }
      found = is_irreducible(modulus_, p);
    }
    if (!found) throw std::logic_error("FieldTable: no irreducible polynomial found");
  }

  const auto decode = [&](int value) {
    Poly f;
    while (value > 0) {
      f.push_back(value % p);
      value /= p;
    }
    return f;
  };
  const auto encode = [&](const Poly& f) {
    int value = 0;
    for (std::size_t i = f.size(); i-- > 0;) value = value * p + f[i];
    return static_cast<std::uint8_t>(value);
  };

  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(static_cast<std::size_t>(q_));
  inv_.assign(static_cast<std::size_t>(q_), 0);
  for (int x = 0; x < q_; ++x) {
    const Poly fx = decode(x);
    for (int y = 0; y < q_; ++y) {
      const Poly fy = decode(y);
      Poly sum(std::max(fx.size(), fy.size()), 0);
      for (std::size_t i = 0; i < fx.size(); ++i) sum[i] += fx[i];
      for (std::size_t i = 0; i < fy.size(); ++i) sum[i] = (sum[i] + fy[i]) % p;
      add_[index(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y))] =
          encode(trim(std::move(sum)));

      Poly prod;
      if (!fx.empty() && !fy.empty()) {
        prod.assign(fx.size() + fy.size() - 1, 0);
        for (std::size_t i = 0; i < fx.size(); ++i) {
          for (std::size_t j = 0; j < fy.size(); ++j) {
            prod[i + j] = (prod[i + j] + fx[i] * fy[j]) % p;
          }
        }
        prod = poly_mod(std::move(prod), modulus_, p);
      }
      mul_[index(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y))] = encode(prod);
    }
    Poly negx = fx;
    for (auto& c : negx) c = (p - c) % p;
    neg_[static_cast<std::size_t>(x)] = encode(trim(std::move(negx)));
  }
  for (int x = 1; x < q_; ++x) {
    for (int y = 1; y < q_; ++y) {
      if (mul_[index(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y))] == 1) {
        inv_[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(y);
        break;
      }
    }
  }

  // Least multiplicative generator: first x whose order is exactly q - 1.
  generator_ = 0;
  if (q_ == 2) {
    generator_ = 1;
  } else {
    for (int x = 2; x < q_; ++x) {
      const auto e = static_cast<std::uint8_t>(x);
      std::uint8_t acc = e;
      int order = 1;
      while (acc != 1) {
        acc = mul(acc, e);
        ++order;
      }
      if (order == q_ - 1) {
        generator_ = e;
        break;
      }
    }
  }
  if (generator_ == 0) throw std::logic_error("FieldTable: no multiplicative generator found");
}

std::uint8_t FieldTable::inv(std::uint8_t x) const {
  if (x == 0) throw std::domain_error("FieldTable::inv: zero has no inverse");
  return inv_[x];
}

std::uint8_t FieldTable::pow(std::uint8_t x, long long e) const {
  if (x == 0) {
    if (e <= 0) throw std::domain_error("FieldTable::pow: 0 to a non-positive power");
    return 0;
  }
  if (e < 0) {
    x = inv(x);
    e = -e;
  }
  std::uint8_t result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

std::string FieldTable::element_name(std::uint8_t x) const {
  if (a_ == 1) return std::to_string(x);
  std::ostringstream out;
  bool first = true;
  for (int i = a_ - 1, value = x; i >= 0; --i) {
    int power = 1;
    for (int k = 0; k < i; ++k) power *= p_;
    const int c = value / power;
    value %= power;
    if (c == 0) continue;
    if (!first) out << "+";
    if (i == 0 || c > 1) out << c;
    if (i >= 1) {
      out << "x";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

const FieldTable& FieldTable::get(int p, int a) {
  static std::map<std::pair<int, int>, FieldTable> cache;
  static std::mutex cache_mutex;
  std::scoped_lock lock(cache_mutex);
  auto it = cache.find({p, a});
  if (it == cache.end()) {
    it = cache.emplace(std::piecewise_construct, std::forward_as_tuple(p, a),
                       std::forward_as_tuple(p, a))
             .first;
  }
  return it->second;
}

}  // namespace hall
