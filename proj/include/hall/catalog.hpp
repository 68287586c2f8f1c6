#pragma once

// Catalog of finite simple groups by family and parameters: exact orders
// (with factorizations), prime sets, and pi-parts.  Covers the alternating
// groups, the classical and exceptional groups of Lie type listed below, and
// six sporadic groups.

#include "hall/arith.hpp"

#include <optional>
#include <string>

namespace hall {

// Group families.  For type A the parameter n is the matrix dimension, so
// Lin(n, q) is PSL_n(q) and Uni(n, q) is PSU_n(q).  OrthOdd(n, q) is the
// simple group of type B_n, Symp(n, q) of type C_n, OrthPlus / OrthMinus of
// types D_n / 2D_n.  TwE6 is the twisted group 2E6(q).
enum class Family {
  Alt,
  Lin,
  Uni,
  OrthOdd,
  Symp,
  OrthPlus,
  OrthMinus,
  G2,
  E6,
  TwE6,
  E7,
  E8,
  Sporadic,
};

enum class SporadicName { M11, M22, M23, M24, J1, J4 };

// One simple group, named by family and parameters.  `n` is used by Alt and
// the classical families; `q` by every Lie-type family; `sporadic` only when
// family == Family::Sporadic.  Unused parameters stay at their defaults so
// that operator== works across mixed families.
struct SimpleGroupSpec {
  Family family = Family::Alt;
  long long n = 0;
  Int q = 0;
  SporadicName sporadic = SporadicName::M11;

  bool operator==(const SimpleGroupSpec& other) const = default;

  // Canonical grammar form, e.g. "lin:3,4" or "sporadic:M11".
  std::string to_string() const;

  static SimpleGroupSpec alt(long long n);
  static SimpleGroupSpec lin(long long n, Int q);
  static SimpleGroupSpec uni(long long n, Int q);
  static SimpleGroupSpec orth_odd(long long n, Int q);
  static SimpleGroupSpec symp(long long n, Int q);
  static SimpleGroupSpec orth_plus(long long n, Int q);
  static SimpleGroupSpec orth_minus(long long n, Int q);
  static SimpleGroupSpec g2(Int q);
  static SimpleGroupSpec e6(Int q);
  static SimpleGroupSpec tw_e6(Int q);
  static SimpleGroupSpec e7(Int q);
  static SimpleGroupSpec e8(Int q);
  static SimpleGroupSpec sporadic_group(SporadicName name);
};

std::string family_name(Family family);
std::string sporadic_name(SporadicName name);

// Result of parsing a group-spec string.  Exactly one of `spec` / `error`
// is meaningful.
struct ParseResult {
  std::optional<SimpleGroupSpec> spec;
  std::string error;
  bool ok() const { return spec.has_value(); }
};

// Parses the colon grammar: alt:n, lin:n,q, uni:n,q, orthB:n,q, symp:n,q,
// orthDp:n,q, orthDm:n,q, g2:q, e6:q, 2e6:q, e7:q, e8:q, sporadic:NAME.
// Unknown tags, malformed numbers, and wrong arity are reported as errors.
ParseResult parse_group_spec(const std::string& text);

struct ValidationResult {
  bool ok = false;
  std::string reason;  // empty when ok
};

// Accepts exactly the parameter ranges that give a (nonabelian) simple
// group: Alt(n) n >= 5; Lin(n,q) n >= 2 with q >= 4 when n = 2; Uni(n,q)
// n >= 3 except (3,2); OrthOdd/Symp n >= 2 except (2,2); OrthPlus/OrthMinus
// n >= 4; G2(q) q >= 3; E-series any prime power.  Every Lie-type q must be
// a prime power.  Rejections carry the violated constraint.
ValidationResult validate(const SimpleGroupSpec& spec);

// Exact group order together with its factorization.
struct GroupOrder {
  Int value;
  Factorization factorization;
};

// Order of the simple group (centre already quotiented out).  Memoized.
// Throws std::invalid_argument if validate(spec) rejects.
const GroupOrder& order(const SimpleGroupSpec& spec);

// Set of primes dividing the group order.
PrimeSet prime_set(const SimpleGroupSpec& spec);

// pi-part of the group order: the largest divisor supported on pi.
Int order_pi_part(const SimpleGroupSpec& spec, const PrimeSet& pi);

// Defining characteristic p for Lie-type families (q = p^alpha); 0 for
// alternating and sporadic groups.
Int characteristic(const SimpleGroupSpec& spec);

// (p, alpha) with q = p^alpha for Lie-type families; nullopt otherwise.
std::optional<std::pair<Int, int>> field_decomposition(const SimpleGroupSpec& spec);

}  // namespace hall
