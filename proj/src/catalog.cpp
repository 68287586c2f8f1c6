#include "hall/catalog.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hall {

namespace {

// Order formula of a Lie-type family written as
//   q^q_exponent * prod over terms (d, s) of (q^d - s) / divisor,
// with s in {+1, -1}, so (d, -1) denotes a factor q^d + 1.
struct LieShape {
  long long q_exponent = 0;
  std::vector<std::pair<long long, int>> terms;
  Int divisor = 1;
};

LieShape lie_shape(const SimpleGroupSpec& spec) {
  const long long n = spec.n;
  const Int& q = spec.q;
  LieShape shape;
  switch (spec.family) {
    case Family::Lin:
      shape.q_exponent = n * (n - 1) / 2;
      for (long long i = 2; i <= n; ++i) shape.terms.emplace_back(i, +1);
      shape.divisor = gcd(Int(n), q - 1);
      break;
    case Family::Uni:
      // Same degrees as Lin with alternating signs: factors q^i - (-1)^i.
      shape.q_exponent = n * (n - 1) / 2;
      for (long long i = 2; i <= n; ++i) shape.terms.emplace_back(i, i % 2 == 0 ? +1 : -1);
      shape.divisor = gcd(Int(n), q + 1);
      break;
    case Family::OrthOdd:
    case Family::Symp:
      shape.q_exponent = n * n;
      for (long long i = 1; i <= n; ++i) shape.terms.emplace_back(2 * i, +1);
      shape.divisor = gcd(Int(2), q - 1);
      break;
    case Family::OrthPlus:
      shape.q_exponent = n * (n - 1);
      shape.terms.emplace_back(n, +1);
      for (long long i = 1; i <= n - 1; ++i) shape.terms.emplace_back(2 * i, +1);
      shape.divisor = gcd(Int(4), pow(q, static_cast<unsigned>(n)) - 1);
      break;
    case Family::OrthMinus:
      shape.q_exponent = n * (n - 1);
      shape.terms.emplace_back(n, -1);
      for (long long i = 1; i <= n - 1; ++i) shape.terms.emplace_back(2 * i, +1);
      shape.divisor = gcd(Int(4), pow(q, static_cast<unsigned>(n)) + 1);
      break;
    case Family::G2:
      shape.q_exponent = 6;
      shape.terms = {{2, +1}, {6, +1}};
      break;
    case Family::E6:
      shape.q_exponent = 36;
      shape.terms = {{2, +1}, {5, +1}, {6, +1}, {8, +1}, {9, +1}, {12, +1}};
      shape.divisor = gcd(Int(3), q - 1);
      break;
    case Family::TwE6:
      shape.q_exponent = 36;
      shape.terms = {{2, +1}, {5, -1}, {6, +1}, {8, +1}, {9, -1}, {12, +1}};
      shape.divisor = gcd(Int(3), q + 1);
      break;
    case Family::E7:
      shape.q_exponent = 63;
      shape.terms = {{2, +1}, {6, +1}, {8, +1}, {10, +1}, {12, +1}, {14, +1}, {18, +1}};
      shape.divisor = gcd(Int(2), q - 1);
      break;
    case Family::E8:
      shape.q_exponent = 120;
      shape.terms = {{2, +1}, {8, +1}, {12, +1}, {14, +1}, {18, +1}, {20, +1}, {24, +1}, {30, +1}};
      break;
    default:
      throw std::logic_error("lie_shape: not a Lie-type family");
  }
  return shape;
}

struct SporadicEntry {
  SporadicName name;
  const char* text;
  std::vector<std::pair<long long, int>> factors;
};

const std::vector<SporadicEntry>& sporadic_table() {
  static const std::vector<SporadicEntry> table = {
      {SporadicName::M11, "M11", {{2, 4}, {3, 2}, {5, 1}, {11, 1}}},
      {SporadicName::M22, "M22", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}},
      {SporadicName::M23, "M23", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
      {SporadicName::M24, "M24", {{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
      {SporadicName::J1, "J1", {{2, 3}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {19, 1}}},
      {SporadicName::J4,
       "J4",
       {{2, 21}, {3, 3}, {5, 1}, {7, 1}, {11, 3}, {23, 1}, {29, 1}, {31, 1}, {37, 1}, {43, 1}}},
  };
  return table;
}

const SporadicEntry& sporadic_entry(SporadicName name) {
  for (const auto& entry : sporadic_table()) {
    if (entry.name == name) return entry;
  }
  throw std::logic_error("sporadic_entry: unknown name");
}

GroupOrder compute_order(const SimpleGroupSpec& spec) {
  GroupOrder result;
  if (spec.family == Family::Alt) {
    // |Alt(n)| = n! / 2: take the factorial and drop one factor of 2.
    Factorization fact = factorial_factorization(spec.n);
    for (auto& [prime, exponent] : fact.factors) {
      if (prime == 2) {
        --exponent;
        break;
      }
    }
    result.factorization = fact;
    result.value = fact.value();
    return result;
  }
  if (spec.family == Family::Sporadic) {
    const SporadicEntry& entry = sporadic_entry(spec.sporadic);
    for (auto [prime, exponent] : entry.factors) {
      result.factorization.factors.emplace_back(Int(prime), exponent);
    }
    result.value = result.factorization.value();
    return result;
  }

  const auto decomposition = is_prime_power(spec.q);
  if (!decomposition) throw std::logic_error("compute_order: q is not a prime power");
  const auto& [p, alpha] = *decomposition;
  if (spec.n > 512) {
    throw std::invalid_argument("compute_order: rank too large for exact computation");
  }
  const LieShape shape = lie_shape(spec);
  if (static_cast<long long>(alpha) * shape.q_exponent > (1LL << 22)) {
    throw std::invalid_argument("compute_order: order too large for exact computation");
  }

  // Split each q^d -+ 1 term into cyclotomic factors, which keeps every
  // number handed to factorize() near q^phi(e) instead of q^d:
  //   q^d - 1 = prod_{e | d} Phi_e(q),
  //   q^d + 1 = prod_{e | 2d, e not| d} Phi_e(q).
  std::map<long long, long long> cyclotomic_multiplicity;
  for (auto [d, sign] : shape.terms) {
    if (sign > 0) {
      for (long long e = 1; e <= d; ++e) {
        if (d % e == 0) ++cyclotomic_multiplicity[e];
      }
    } else {
      for (long long e = 1; e <= 2 * d; ++e) {
        if ((2 * d) % e == 0 && d % e != 0) ++cyclotomic_multiplicity[e];
      }
    }
  }

  std::map<Int, long long> prime_exponents;
  prime_exponents[p] = static_cast<long long>(alpha) * shape.q_exponent;
  for (auto [e, multiplicity] : cyclotomic_multiplicity) {
    Factorization piece = factorize(cyclotomic_eval(static_cast<int>(e), spec.q));
    for (const auto& [prime, exponent] : piece.factors) {
      prime_exponents[prime] += static_cast<long long>(exponent) * multiplicity;
    }
  }
  for (const auto& [prime, exponent] : factorize(shape.divisor).factors) {
    prime_exponents[prime] -= exponent;
    if (prime_exponents[prime] < 0) {
      throw std::logic_error("compute_order: centre divisor does not divide the product");
    }
  }

  result.value = 1;
  for (const auto& [prime, exponent] : prime_exponents) {
    if (exponent == 0) continue;
    result.factorization.factors.emplace_back(prime, static_cast<int>(exponent));
    result.value *= pow(prime, static_cast<unsigned>(exponent));
  }

  // Cross-check the cyclotomic assembly against the plain product form.
  Int direct = pow(spec.q, static_cast<unsigned>(shape.q_exponent));
  for (auto [d, sign] : shape.terms) {
    direct *= pow(spec.q, static_cast<unsigned>(d)) - sign;
  }
  Int quotient, remainder;
  boost::multiprecision::divide_qr(direct, shape.divisor, quotient, remainder);
  if (remainder != 0 || quotient != result.value) {
    throw std::logic_error("compute_order: factorization does not reconstruct the order");
  }
  return result;
}

// Strict nonnegative decimal parse; rejects empty strings, signs, and junk.
bool parse_decimal(const std::string& text, Int& out) {
  if (text.empty() || text.size() > 40) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  out = Int(text);
  return true;
}

bool parse_decimal_ll(const std::string& text, long long& out) {
  Int big;
  if (!parse_decimal(text, big) || big > 1'000'000'000) return false;
  out = static_cast<long long>(big);
  return true;
}

ParseResult parse_error(const std::string& message) {
  ParseResult result;
  result.error = message;
  return result;
}

}  // namespace

SimpleGroupSpec SimpleGroupSpec::alt(long long n) { return {Family::Alt, n, 0, SporadicName::M11}; }
SimpleGroupSpec SimpleGroupSpec::lin(long long n, Int q) {
  return {Family::Lin, n, std::move(q), SporadicName::M11};
}
SimpleGroupSpec SimpleGroupSpec::uni(long long n, Int q) {
  return {Family::Uni, n, std::move(q), SporadicName::M11};
}
SimpleGroupSpec SimpleGroupSpec::orth_odd(long long n, Int q) {
  return {Family::OrthOdd, n, std::move(q), SporadicName::M11};
}
SimpleGroupSpec SimpleGroupSpec::symp(long long n, Int q) {
  return {Family::Symp, n, std::move(q), SporadicName::M11};
}
SimpleGroupSpec SimpleGroupSpec::orth_plus(long long n, Int q) {
  return {Family::OrthPlus, n, std::move(q), SporadicName::M11};
}
SimpleGroupSpec SimpleGroupSpec::orth_minus(long long n, Int q) {
  return {Family::OrthMinus, n, std::move(q), SporadicName::M11};
}
SimpleGroupSpec SimpleGroupSpec::g2(Int q) { return {Family::G2, 0, std::move(q), SporadicName::M11}; }
SimpleGroupSpec SimpleGroupSpec::e6(Int q) { return {Family::E6, 0, std::move(q), SporadicName::M11}; }
SimpleGroupSpec SimpleGroupSpec::tw_e6(Int q) {
  return {Family::TwE6, 0, std::move(q), SporadicName::M11};
}
SimpleGroupSpec SimpleGroupSpec::e7(Int q) { return {Family::E7, 0, std::move(q), SporadicName::M11}; }
SimpleGroupSpec SimpleGroupSpec::e8(Int q) { return {Family::E8, 0, std::move(q), SporadicName::M11}; }
SimpleGroupSpec SimpleGroupSpec::sporadic_group(SporadicName name) {
  return {Family::Sporadic, 0, 0, name};
}

std::string family_name(Family family) {
  switch (family) {
    case Family::Alt: return "Alt";
    case Family::Lin: return "Lin";
    case Family::Uni: return "Uni";
    case Family::OrthOdd: return "OrthOdd";
    case Family::Symp: return "Symp";
    case Family::OrthPlus: return "OrthPlus";
    case Family::OrthMinus: return "OrthMinus";
    case Family::G2: return "G2";
    case Family::E6: return "E6";
    case Family::TwE6: return "TwE6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::Sporadic: return "Sporadic";
  }
  throw std::logic_error("family_name: unknown family");
}

std::string sporadic_name(SporadicName name) { return sporadic_entry(name).text; }

std::string SimpleGroupSpec::to_string() const {
  std::ostringstream out;
  switch (family) {
    case Family::Alt: out << "alt:" << n; break;
    case Family::Lin: out << "lin:" << n << "," << q; break;
    case Family::Uni: out << "uni:" << n << "," << q; break;
    case Family::OrthOdd: out << "orthB:" << n << "," << q; break;
    case Family::Symp: out << "symp:" << n << "," << q; break;
    case Family::OrthPlus: out << "orthDp:" << n << "," << q; break;
    case Family::OrthMinus: out << "orthDm:" << n << "," << q; break;
    case Family::G2: out << "g2:" << q; break;
    case Family::E6: out << "e6:" << q; break;
    case Family::TwE6: out << "2e6:" << q; break;
    case Family::E7: out << "e7:" << q; break;
    case Family::E8: out << "e8:" << q; break;
    case Family::Sporadic: out << "sporadic:" << sporadic_name(sporadic); break;
  }
  return out.str();
}

ParseResult parse_group_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    return parse_error("expected TAG:ARGS, got \"" + text + "\"");
  }
  const std::string tag = text.substr(0, colon);
  const std::string args = text.substr(colon + 1);

  const auto split_two = [&](long long& n, Int& q) -> std::string {
    const auto comma = args.find(',');
    if (comma == std::string::npos || args.find(',', comma + 1) != std::string::npos) {
      return tag + " takes two arguments n,q";
    }
    if (!parse_decimal_ll(args.substr(0, comma), n)) return "bad n in \"" + args + "\"";
    if (!parse_decimal(args.substr(comma + 1), q)) return "bad q in \"" + args + "\"";
    return "";
  };

  ParseResult result;
  if (tag == "alt") {
    long long n;
    if (!parse_decimal_ll(args, n)) return parse_error("bad n in \"" + args + "\"");
    result.spec = SimpleGroupSpec::alt(n);
    return result;
  }
  if (tag == "lin" || tag == "uni" || tag == "orthB" || tag == "symp" || tag == "orthDp" ||
      tag == "orthDm") {
    long long n;
    Int q;
    if (std::string error = split_two(n, q); !error.empty()) return parse_error(error);
    if (tag == "lin") result.spec = SimpleGroupSpec::lin(n, q);
    else if (tag == "uni") result.spec = SimpleGroupSpec::uni(n, q);
    else if (tag == "orthB") result.spec = SimpleGroupSpec::orth_odd(n, q);
    else if (tag == "symp") result.spec = SimpleGroupSpec::symp(n, q);
    else if (tag == "orthDp") result.spec = SimpleGroupSpec::orth_plus(n, q);
    else result.spec = SimpleGroupSpec::orth_minus(n, q);
    return result;
  }
  if (tag == "g2" || tag == "e6" || tag == "2e6" || tag == "e7" || tag == "e8") {
    Int q;
    if (!parse_decimal(args, q)) return parse_error("bad q in \"" + args + "\"");
    if (tag == "g2") result.spec = SimpleGroupSpec::g2(q);
    else if (tag == "e6") result.spec = SimpleGroupSpec::e6(q);
    else if (tag == "2e6") result.spec = SimpleGroupSpec::tw_e6(q);
    else if (tag == "e7") result.spec = SimpleGroupSpec::e7(q);
    else result.spec = SimpleGroupSpec::e8(q);
    return result;
  }
  if (tag == "sporadic") {
    for (const auto& entry : sporadic_table()) {
      if (args == entry.text) {
        result.spec = SimpleGroupSpec::sporadic_group(entry.name);
        return result;
      }
    }
    return parse_error("unknown sporadic group \"" + args + "\"");
  }
  return parse_error("unknown family tag \"" + tag + "\"");
}

ValidationResult validate(const SimpleGroupSpec& spec) {
  const auto fail = [](std::string reason) { return ValidationResult{false, std::move(reason)}; };
  const auto pass = [] { return ValidationResult{true, ""}; };

  if (spec.family == Family::Alt) {
    if (spec.n < 5) return fail("Alt(n) requires n >= 5; smaller degrees are solvable");
    return pass();
  }
  if (spec.family == Family::Sporadic) return pass();

  if (spec.q < 2 || !is_prime_power(spec.q)) {
    return fail("q must be a prime power, got " + spec.q.str());
  }
  switch (spec.family) {
    case Family::Lin:
      if (spec.n < 2) return fail("Lin(n,q) requires n >= 2");
      if (spec.n == 2 && spec.q < 4) {
        return fail("Lin(2,q) requires q >= 4; Lin(2,2) and Lin(2,3) are solvable");
      }
      return pass();
    case Family::Uni:
      if (spec.n < 3) return fail("Uni(n,q) requires n >= 3");
      if (spec.n == 3 && spec.q == 2) return fail("Uni(3,2) has order 72 and is solvable");
      return pass();
    case Family::OrthOdd:
      if (spec.n < 2) return fail("OrthOdd(n,q) requires n >= 2");
      if (spec.n == 2 && spec.q == 2) return fail("OrthOdd(2,2) is not simple");
      return pass();
    case Family::Symp:
      if (spec.n < 2) return fail("Symp(n,q) requires n >= 2");
      if (spec.n == 2 && spec.q == 2) return fail("Symp(2,2) is not simple");
      return pass();
    case Family::OrthPlus:
      if (spec.n < 4) return fail("OrthPlus(n,q) requires n >= 4");
      return pass();
    case Family::OrthMinus:
      if (spec.n < 4) return fail("OrthMinus(n,q) requires n >= 4");
      return pass();
    case Family::G2:
      if (spec.q < 3) return fail("G2(q) requires q >= 3; G2(2) is not simple");
      return pass();
    case Family::E6:
    case Family::TwE6:
    case Family::E7:
    case Family::E8:
      return pass();
    default:
      return fail("unsupported family");
  }
}

const GroupOrder& order(const SimpleGroupSpec& spec) {
  const ValidationResult check = validate(spec);
  if (!check.ok) throw std::invalid_argument("order: " + check.reason);

  static std::map<std::string, GroupOrder> memo;
  static std::mutex memo_mutex;
  const std::string key = spec.to_string();
  {
    std::scoped_lock lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  GroupOrder computed = compute_order(spec);
  std::scoped_lock lock(memo_mutex);
  return memo.emplace(key, std::move(computed)).first->second;
}

PrimeSet prime_set(const SimpleGroupSpec& spec) { return order(spec).factorization.prime_set(); }

Int order_pi_part(const SimpleGroupSpec& spec, const PrimeSet& pi) {
  const GroupOrder& total = order(spec);
  Int result = 1;
  for (const auto& [prime, exponent] : total.factorization.factors) {
    if (pi.contains(prime)) result *= pow(prime, static_cast<unsigned>(exponent));
  }
  return result;
}

Int characteristic(const SimpleGroupSpec& spec) {
  const auto decomposition = field_decomposition(spec);
  return decomposition ? decomposition->first : Int(0);
}

std::optional<std::pair<Int, int>> field_decomposition(const SimpleGroupSpec& spec) {
  if (spec.family == Family::Alt || spec.family == Family::Sporadic) return std::nullopt;
  if (spec.q < 2) return std::nullopt;
  return is_prime_power(spec.q);
}

}  // namespace hall
