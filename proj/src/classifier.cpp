#include "hall/classifier.hpp"

#include <stdexcept>
#include <utility>

namespace hall {

namespace {

const PrimeSet& set_23() {
  static const PrimeSet s = PrimeSet::of({2, 3});
  return s;
}

const PrimeSet& set_235() {
  static const PrimeSet s = PrimeSet::of({2, 3, 5});
  return s;
}

const PrimeSet& set_2357() {
  static const PrimeSet s = PrimeSet::of({2, 3, 5, 7});
  return s;
}

const PrimeSet& set_237() {
  static const PrimeSet s = PrimeSet::of({2, 3, 7});
  return s;
}

// pi(n!): the primes up to n.
PrimeSet factorial_primes(long long n) {
  if (n < 2) return {};
  return factorial_factorization(n).prime_set();
}

// Shared precondition checks of the rank-2 criteria.  Returns the
// characteristic p of q.
Int check_rank2_preconditions(const char* who, const Int& q, const PrimeSet& pi) {
  auto decomposition = is_prime_power(q);
  if (!decomposition)
    throw std::invalid_argument(std::string(who) + ": q must be a prime power");
  const Int& p = decomposition->first;
  if (p == 2) throw std::invalid_argument(std::string(who) + ": q must be odd");
  if (!pi.contains(2) || !pi.contains(3))
    throw std::invalid_argument(std::string(who) + ": pi must contain 2 and 3");
  if (pi.contains(p))
    throw std::invalid_argument(std::string(who) +
                                ": the defining characteristic must not lie in pi");
  return p;
}

bool is_fermat_prime(long long n) {
  if (n < 3 || !is_prime(Int(n))) return false;
  long long m = n - 1;
  while (m % 2 == 0) m /= 2;
  return m == 1;
}

bool is_mersenne_prime(long long n) {
  if (n < 3 || !is_prime(Int(n))) return false;
  long long m = n + 1;
  while (m % 2 == 0) m /= 2;
  return m == 1;
}

// {2,3} contained in tau contained in upper.
bool two_three_range(const PrimeSet& tau, const PrimeSet& upper) {
  return set_23().subset_of(tau) && tau.subset_of(upper);
}

// tau-condition of the "remove these cyclotomic primes" rows:
// tau = pi(S) \ pi(prod of Phi_e(q) over the listed e).
bool cyclotomic_complement(const SimpleGroupSpec& s, const PrimeSet& tau,
                           const Int& q, std::initializer_list<int> degrees) {
  Int product = 1;
  for (int e : degrees) product *= cyclotomic_eval(e, q);
  return tau == prime_set(s).set_difference(prime_divisors(product));
}

struct RowContext {
  const SimpleGroupSpec& s;
  const PrimeSet& pi;
  const ClassifierConfig& cfg;
  PrimeSet tau;           // pi cap pi(S)
  Int q = 0;              // 0 for non-Lie families
  Int p = 0;
  long long n = 0;
  std::vector<RowMatch>* out;

  void fire(RowId row) {
    out->push_back(RowMatch{row, row_aut_invariant(row), tau});
  }
};

long long sym_index(long long n, FloorVariant variant) {
  return variant == FloorVariant::ThirdOfN ? n / 3 : n / 2;
}

void alt_rows(RowContext& ctx) {
  if (ctx.n >= 7 && is_prime(Int(ctx.n)) && ctx.tau == factorial_primes(ctx.n - 1))
    ctx.fire(RowId::ALT);
}

void lin_rows(RowContext& ctx) {
  const Int& q = ctx.q;
  const long long n = ctx.n;
  if (n >= 3 && n % 2 == 1 && is_prime(Int(n)) && gcd(Int(n), q - 1) == 1 &&
      cyclotomic_complement(ctx.s, ctx.tau, q, {static_cast<int>(n)}))
    ctx.fire(RowId::LIN1);
  if (n == 4 && gcd(Int(6), q - 1) == 1 && q > 2 &&
      cyclotomic_complement(ctx.s, ctx.tau, q, {3, 4}))
    ctx.fire(RowId::LIN2);
  if (n == 5 && gcd(Int(10), q - 1) == 1 &&
      cyclotomic_complement(ctx.s, ctx.tau, q, {4, 5}))
    ctx.fire(RowId::LIN3);
  if (n == 5 && gcd(Int(30), q - 1) == 1 && q > 2 &&
      cyclotomic_complement(ctx.s, ctx.tau, q, {3, 4, 5}))
    ctx.fire(RowId::LIN4);
  if (n == 7 && gcd(Int(35), q - 1) == 1 && gcd(Int(3), q + 1) == 1 &&
      cyclotomic_complement(ctx.s, ctx.tau, q, {5, 6, 7}))
    ctx.fire(RowId::LIN5);
  if (n == 8 && gcd(Int(70), q - 1) == 1 && gcd(Int(3), q + 1) == 1 &&
      cyclotomic_complement(ctx.s, ctx.tau, q, {4, 5, 6, 7}))
    ctx.fire(RowId::LIN6);
  if (n == 11 && gcd(Int(462), q - 1) == 1 && gcd(Int(5), q + 1) == 1 &&
      cyclotomic_complement(ctx.s, ctx.tau, q, {7, 8, 9, 10, 11}))
    ctx.fire(RowId::LIN7);
  if (n == 2 && pi_part(q * q - 1, set_235()) == 120 && ctx.tau == set_235())
    ctx.fire(RowId::LIN8);
  // Wreath-type row over pi(q-1): every prime of tau outside pi(q-1) must
  // contribute to |S| exactly what it contributes to n!.
  if (!ctx.pi.contains(ctx.p) && gcd(Int(12), q - 1) == 12 && sym_ns(n, ctx.pi)) {
    PrimeSet torus = prime_divisors(q - 1);
    if (two_three_range(ctx.tau, torus.set_union(factorial_primes(n)))) {
      Factorization fact = factorial_factorization(n);
      const Factorization& order_fact = order(ctx.s).factorization;
      PrimeSet beyond_torus =
          ctx.pi.set_intersection(fact.prime_set()).set_difference(torus);
      bool exponents_match = true;
      for (const Int& r : beyond_torus.primes())
        if (order_fact.exponent_of(r) != fact.exponent_of(r)) {
          exponents_match = false;
          break;
        }
      if (exponents_match) ctx.fire(RowId::LIN9);
    }
  }
  if (gcd(Int(3), q + 1) == 3 && two_three_range(ctx.tau, prime_divisors(q * q - 1)) &&
      hall_gl2(Eta::Plus, q, ctx.pi, ctx.cfg).exists &&
      sym_ns(sym_index(n, ctx.cfg.floor_variant), ctx.pi))
    ctx.fire(RowId::LIN10);
  if (n == 4 && gcd(Int(8), q - 5) == 8 && pi_part(q + 1, PrimeSet::of({3})) == 3 &&
      pi_part(q * q + 1, PrimeSet::of({5})) == 5 && ctx.tau == set_235())
    ctx.fire(RowId::LIN11);
}

void uni_rows(RowContext& ctx) {
  const Int& q = ctx.q;
  const long long n = ctx.n;
  if (!ctx.pi.contains(ctx.p) && gcd(Int(12), q + 1) == 12 && sym_ns(n, ctx.pi)) {
    PrimeSet torus = prime_divisors(q + 1);
    if (two_three_range(ctx.tau, torus.set_union(factorial_primes(n)))) {
      Factorization fact = factorial_factorization(n);
      const Factorization& order_fact = order(ctx.s).factorization;
      PrimeSet beyond_torus =
          ctx.pi.set_intersection(fact.prime_set()).set_difference(torus);
      bool exponents_match = true;
      for (const Int& r : beyond_torus.primes())
        if (order_fact.exponent_of(r) != fact.exponent_of(r)) {
          exponents_match = false;
          break;
        }
      if (exponents_match) ctx.fire(RowId::UNI1);
    }
  }
  if (gcd(Int(3), q - 1) == 3 && two_three_range(ctx.tau, prime_divisors(q * q - 1)) &&
      hall_gl2(Eta::Minus, q, ctx.pi, ctx.cfg).exists &&
      sym_ns(sym_index(n, ctx.cfg.floor_variant), ctx.pi))
    ctx.fire(RowId::UNI2);
  if (n == 4 && gcd(Int(8), q + 5) == 8 && pi_part(q - 1, PrimeSet::of({3})) == 3 &&
      pi_part(q * q + 1, PrimeSet::of({5})) == 5 && ctx.tau == set_235())
    ctx.fire(RowId::UNI3);
}

void orth_odd_rows(RowContext& ctx) {
  const Int& q = ctx.q;
  if (ctx.p != 2) {
    Int torus = q - epsilon(q);
    if (gcd(Int(12), torus) == 12 && sym_ns(ctx.n, ctx.pi) &&
        two_three_range(ctx.tau, prime_divisors(torus)))
      ctx.fire(RowId::BN1);
  }
  if (ctx.n == 3 && !ctx.pi.contains(ctx.p) &&
      order_pi_part(ctx.s, ctx.pi) == Int(512) * 81 * 5 * 7 && ctx.tau == set_2357())
    ctx.fire(RowId::BN2);
  if (ctx.n == 4 && !ctx.pi.contains(ctx.p) &&
      order_pi_part(ctx.s, ctx.pi) == Int(16384) * 243 * 25 * 7 && ctx.tau == set_2357())
    ctx.fire(RowId::BN3);
}

void symp_rows(RowContext& ctx) {
  const Int& q = ctx.q;
  if (!two_three_range(ctx.tau, prime_divisors(q * q - 1))) return;
  SmallHallCase sl2_case = hall_sl2(q, ctx.pi);
  if (sl2_case.exists && hall_sym_exists(ctx.n, ctx.pi) &&
      (sl2_case.case_alt5 || sym_ns(ctx.n, ctx.pi)))
    ctx.fire(RowId::CN1);
}

void orth_plus_rows(RowContext& ctx) {
  const Int& q = ctx.q;
  const long long n = ctx.n;
  if (ctx.p == 2 && is_fermat_prime(n) && gcd(Int(n), q - 1) == 1) {
    Int removed = (boost::multiprecision::pow(q, static_cast<unsigned>(n)) - 1) /
                  (q - 1) *
                  (boost::multiprecision::pow(q, static_cast<unsigned>(n - 1)) + 1);
    if (ctx.tau == prime_set(ctx.s).set_difference(prime_divisors(removed)))
      ctx.fire(RowId::DN1);
  }
  if (ctx.p != 2) {
    int eps = epsilon(q);
    Int torus = q - eps;
    bool eps_power_is_one = eps == 1 || n % 2 == 0;
    if (gcd(Int(12), torus) == 12 && two_three_range(ctx.tau, prime_divisors(torus))) {
      if (eps_power_is_one && sym_ns(n, ctx.pi)) ctx.fire(RowId::DN2);
      if (!eps_power_is_one && sym_ns(n - 1, ctx.pi)) ctx.fire(RowId::DN3);
    }
  }
  if (n == 4 && !ctx.pi.contains(ctx.p) &&
      order_pi_part(ctx.s, ctx.pi) == Int(8192) * 243 * 25 * 7 && ctx.tau == set_2357())
    ctx.fire(RowId::DN4);
}

void orth_minus_rows(RowContext& ctx) {
  const Int& q = ctx.q;
  const long long n = ctx.n;
  if (ctx.p == 2 && is_mersenne_prime(n - 1) && gcd(Int(n - 1), q - 1) == 1) {
    Int removed = (boost::multiprecision::pow(q, static_cast<unsigned>(n - 1)) - 1) /
                  (q - 1) *
                  (boost::multiprecision::pow(q, static_cast<unsigned>(n)) + 1);
    if (ctx.tau == prime_set(ctx.s).set_difference(prime_divisors(removed)))
      ctx.fire(RowId::TDN1);
  }
  if (ctx.p != 2) {
    int eps = epsilon(q);
    Int torus = q - eps;
    bool eps_power_is_one = eps == 1 || n % 2 == 0;
    if (gcd(Int(12), torus) == 12 && two_three_range(ctx.tau, prime_divisors(torus))) {
      if (!eps_power_is_one && sym_ns(n, ctx.pi)) ctx.fire(RowId::TDN2);
      if (eps_power_is_one && sym_ns(n - 1, ctx.pi)) ctx.fire(RowId::TDN3);
    }
  }
}

void exceptional_rows(RowContext& ctx) {
  const Int& q = ctx.q;
  switch (ctx.s.family) {
    case Family::G2:
      if (pi_part(q * q - 1, set_237()) == 24 &&
          pi_part(q * q * q * q + q * q + 1, PrimeSet::of({7})) == 7 &&
          ctx.tau == set_237())
        ctx.fire(RowId::G2R);
      break;
    case Family::E6:
      if (set_235().subset_of(ctx.tau) && ctx.tau.subset_of(prime_divisors(q - 1)))
        ctx.fire(RowId::E6R);
      break;
    case Family::TwE6:
      if (set_235().subset_of(ctx.tau) && ctx.tau.subset_of(prime_divisors(q + 1)))
        ctx.fire(RowId::TE6R);
      break;
    case Family::E7:
    case Family::E8:
      if (ctx.p != 2 && set_2357().subset_of(ctx.tau) &&
          ctx.tau.subset_of(prime_divisors(q - epsilon(q))))
        ctx.fire(ctx.s.family == Family::E7 ? RowId::E7R : RowId::E8R);
      break;
    default:
      break;
  }
}

void sporadic_rows(RowContext& ctx) {
  static const PrimeSet m23_full = PrimeSet::of({2, 3, 5, 7, 11});
  switch (ctx.s.sporadic) {
    case SporadicName::M11:
      if (ctx.tau == set_235()) ctx.fire(RowId::SPOR_M11);
      break;
    case SporadicName::M22:
      if (ctx.tau == set_235()) ctx.fire(RowId::SPOR_M22);
      break;
    case SporadicName::M23:
      if (ctx.tau == set_235()) ctx.fire(RowId::SPOR_M23_235);
      if (ctx.tau == set_2357()) ctx.fire(RowId::SPOR_M23_2357);
      if (ctx.tau == m23_full) ctx.fire(RowId::SPOR_M23_23571);
      break;
    case SporadicName::M24:
      if (ctx.tau == set_235()) ctx.fire(RowId::SPOR_M24);
      break;
    case SporadicName::J1:
      if (ctx.tau == set_235()) ctx.fire(RowId::SPOR_J1);
      break;
    case SporadicName::J4:
      if (ctx.tau == set_235()) ctx.fire(RowId::SPOR_J4);
      break;
  }
}

}  // namespace

std::string small_hall_tag_name(SmallHallTag tag) {
  switch (tag) {
    case SmallHallTag::Dihedral: return "dihedral";
    case SmallHallTag::Sym4: return "sym4";
    case SmallHallTag::AltSym4: return "alt4-or-sym4";
    case SmallHallTag::Alt5: return "alt5";
  }
  return "?";
}

SmallHallCase hall_gl2(Eta eta, const Int& q, const PrimeSet& pi,
                       const ClassifierConfig& cfg) {
  check_rank2_preconditions("hall_gl2", q, pi);
  int eps = epsilon(q);
  Int torus = q - eps;
  if (eta == Eta::Minus && cfg.eta_adjust) torus = q + eps;
  PrimeSet tau = pi.set_intersection(prime_divisors(q * q - 1));
  SmallHallCase out;
  out.case_dihedral = tau.subset_of(prime_divisors(torus));
  out.case_sym4 = tau == set_23() && pi_part(q * q - 1, set_23()) == 24;
  out.exists = out.case_dihedral || out.case_sym4;
  if (out.case_dihedral)
    out.tag = SmallHallTag::Dihedral;
  else if (out.case_sym4)
    out.tag = SmallHallTag::Sym4;
  out.single_class = out.case_dihedral != out.case_sym4;
  return out;
}

SmallHallCase hall_sl2(const Int& q, const PrimeSet& pi) {
  check_rank2_preconditions("hall_sl2", q, pi);
  PrimeSet tau = pi.set_intersection(prime_divisors(q * q - 1));
  Int part23 = pi_part(q * q - 1, set_23());
  SmallHallCase out;
  out.case_dihedral = tau.subset_of(prime_divisors(q - epsilon(q)));
  out.case_altsym4 = tau == set_23() && (part23 == 24 || part23 == 48);
  out.case_alt5 = tau == set_235() && pi_part(q * q - 1, set_235()) == 120;
  out.exists = out.case_dihedral || out.case_altsym4 || out.case_alt5;
  if (out.case_dihedral)
    out.tag = SmallHallTag::Dihedral;
  else if (out.case_altsym4)
    out.tag = SmallHallTag::AltSym4;
  else if (out.case_alt5)
    out.tag = SmallHallTag::Alt5;
  out.single_class = out.case_dihedral && !out.case_altsym4 && !out.case_alt5;
  return out;
}

bool hall_sym_exists(long long n, const PrimeSet& pi) {
  if (n < 0) throw std::invalid_argument("hall_sym_exists: n must be >= 0");
  PrimeSet whole = factorial_primes(n);
  PrimeSet tau = pi.set_intersection(whole);
  if (tau.size() <= 1) return true;
  if (tau == whole) return true;
  if (is_prime(Int(n)) && tau == factorial_primes(n - 1)) return true;
  if ((n == 7 || n == 8) && tau == set_23()) return true;
  return false;
}

bool sym_ns(long long n, const PrimeSet& pi) {
  if (n < 0) throw std::invalid_argument("sym_ns: n must be >= 0");
  PrimeSet whole = factorial_primes(n);
  PrimeSet tau = pi.set_intersection(whole);
  if (n >= 5 && tau == whole) return true;
  if (n >= 7 && is_prime(Int(n)) && tau == factorial_primes(n - 1)) return true;
  return false;
}

GuardResult solvability_guards(const SimpleGroupSpec& s, const PrimeSet& pi) {
  auto check = validate(s);
  if (!check.ok)
    throw std::invalid_argument("solvability_guards: " + check.reason);
  if (prime_set(s).subset_of(pi)) return {GuardOutcome::PiGroup};
  if (!pi.contains(2)) return {GuardOutcome::NoTwo};
  if (!pi.contains(3)) return {GuardOutcome::NoThree};
  return {GuardOutcome::Pass};
}

const char* row_name(RowId row) {
  switch (row) {
    case RowId::ALT: return "ALT";
    case RowId::LIN1: return "LIN1";
    case RowId::LIN2: return "LIN2";
    case RowId::LIN3: return "LIN3";
    case RowId::LIN4: return "LIN4";
    case RowId::LIN5: return "LIN5";
    case RowId::LIN6: return "LIN6";
    case RowId::LIN7: return "LIN7";
    case RowId::LIN8: return "LIN8";
    case RowId::LIN9: return "LIN9";
    case RowId::LIN10: return "LIN10";
    case RowId::LIN11: return "LIN11";
    case RowId::UNI1: return "UNI1";
    case RowId::UNI2: return "UNI2";
    case RowId::UNI3: return "UNI3";
    case RowId::BN1: return "BN1";
    case RowId::BN2: return "BN2";
    case RowId::BN3: return "BN3";
    case RowId::CN1: return "CN1";
    case RowId::DN1: return "DN1";
    case RowId::DN2: return "DN2";
    case RowId::DN3: return "DN3";
    case RowId::DN4: return "DN4";
    case RowId::TDN1: return "TDN1";
    case RowId::TDN2: return "TDN2";
    case RowId::TDN3: return "TDN3";
    case RowId::G2R: return "G2R";
    case RowId::E6R: return "E6R";
    case RowId::TE6R: return "TE6R";
    case RowId::E7R: return "E7R";
    case RowId::E8R: return "E8R";
    case RowId::SPOR_M11: return "SPOR:M11";
    case RowId::SPOR_M22: return "SPOR:M22";
    case RowId::SPOR_M23_235: return "SPOR:M23:{2,3,5}";
    case RowId::SPOR_M23_2357: return "SPOR:M23:{2,3,5,7}";
    case RowId::SPOR_M23_23571: return "SPOR:M23:{2,3,5,7,11}";
    case RowId::SPOR_M24: return "SPOR:M24";
    case RowId::SPOR_J1: return "SPOR:J1";
    case RowId::SPOR_J4: return "SPOR:J4";
  }
  return "?";
}

bool row_aut_invariant(RowId row) {
  switch (row) {
    case RowId::LIN9:
    case RowId::UNI1:
    case RowId::BN1:
    case RowId::DN2:
    case RowId::DN3:
    case RowId::TDN2:
    case RowId::TDN3:
    case RowId::G2R:
    case RowId::E6R:
    case RowId::TE6R:
    case RowId::E7R:
    case RowId::E8R:
      return true;
    default:
      return false;
  }
}

std::vector<RowMatch> table1_rows(const SimpleGroupSpec& s, const PrimeSet& pi,
                                  const ClassifierConfig& cfg) {
  auto check = validate(s);
  if (!check.ok) throw std::invalid_argument("table1_rows: " + check.reason);
  std::vector<RowMatch> out;
  RowContext ctx{s, pi, cfg, pi.set_intersection(prime_set(s)), 0, 0, s.n, &out};
  if (auto field = field_decomposition(s)) {
    ctx.q = s.q;
    ctx.p = field->first;
  }
  switch (s.family) {
    case Family::Alt: alt_rows(ctx); break;
    case Family::Lin: lin_rows(ctx); break;
    case Family::Uni: uni_rows(ctx); break;
    case Family::OrthOdd: orth_odd_rows(ctx); break;
    case Family::Symp: symp_rows(ctx); break;
    case Family::OrthPlus: orth_plus_rows(ctx); break;
    case Family::OrthMinus: orth_minus_rows(ctx); break;
    case Family::G2:
    case Family::E6:
    case Family::TwE6:
    case Family::E7:
    case Family::E8:
      exceptional_rows(ctx);
      break;
    case Family::Sporadic: sporadic_rows(ctx); break;
  }
  return out;
}

NsDecision e_pi_ns(const SimpleGroupSpec& s, const PrimeSet& pi,
                   const ClassifierConfig& cfg) {
  NsDecision out;
  GuardResult guard = solvability_guards(s, pi);
  if (guard.outcome == GuardOutcome::PiGroup) {
    out.in_e_ns = true;
    out.reason = NsDecision::Reason::PiGroup;
    out.aut_invariant = true;  // the whole group is the unique Hall subgroup
    return out;
  }
  if (guard.blocks_nonsolvable()) {
    out.reason = NsDecision::Reason::GuardFailed;
    out.guard = guard.outcome;
    return out;
  }
  out.rows = table1_rows(s, pi, cfg);
  if (out.rows.empty()) {
    out.reason = NsDecision::Reason::NoRow;
    return out;
  }
  out.in_e_ns = true;
  out.reason = NsDecision::Reason::Rows;
  for (const RowMatch& match : out.rows)
    if (match.aut_invariant) out.aut_invariant = true;
  return out;
}

MeetCheckResult row_meet_check(const SimpleGroupSpec& s, const PrimeSet& pi1,
                               const PrimeSet& pi2, const ClassifierConfig& cfg) {
  auto rows1 = table1_rows(s, pi1, cfg);
  auto rows2 = table1_rows(s, pi2, cfg);
  MeetCheckResult out;
  for (const RowMatch& a : rows1)
    for (const RowMatch& b : rows2)
      if (a.row == b.row) out.shared.push_back(a.row);
  if (out.shared.empty())
    throw std::invalid_argument("row_meet_check: no row fires for both prime sets");
  auto meet_rows = table1_rows(s, pi1.set_intersection(pi2), cfg);
  out.holds = true;
  for (RowId row : out.shared) {
    bool found = false;
    for (const RowMatch& match : meet_rows)
      if (match.row == row) {
        found = true;
        break;
      }
    if (!found) {
      out.holds = false;
      out.violation = row;
      break;
    }
  }
  return out;
}

}  // namespace hall
