#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hall/classifier.hpp"
#include "hall/engine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using hall::ClassifierConfig;
using hall::Eta;
using hall::FloorVariant;
using hall::GuardOutcome;
using hall::Int;
using hall::NsDecision;
using hall::PrimeSet;
using hall::RowId;
using hall::RowMatch;
using hall::SimpleGroupSpec;
using hall::SmallHallTag;

namespace {

const PrimeSet kP23 = PrimeSet::of({2, 3});
const PrimeSet kP235 = PrimeSet::of({2, 3, 5});
const PrimeSet kP237 = PrimeSet::of({2, 3, 7});
const PrimeSet kP2357 = PrimeSet::of({2, 3, 5, 7});

SimpleGroupSpec parse(const std::string& text) {
  auto result = hall::parse_group_spec(text);
  REQUIRE_MESSAGE(result.ok(), text << ": " << result.error);
  return *result.spec;
}

std::vector<RowId> fired(const std::string& text, const PrimeSet& pi,
                         const ClassifierConfig& cfg = {}) {
  std::vector<RowId> ids;
  for (const RowMatch& match : hall::table1_rows(parse(text), pi, cfg))
    ids.push_back(match.row);
  return ids;
}

bool fires(const std::string& text, const PrimeSet& pi, RowId row,
           const ClassifierConfig& cfg = {}) {
  auto ids = fired(text, pi, cfg);
  return std::find(ids.begin(), ids.end(), row) != ids.end();
}

// All nonempty subsets of the given prime set.
std::vector<PrimeSet> nonempty_subsets(const PrimeSet& base) {
  auto primes = base.primes();
  std::vector<PrimeSet> out;
  for (unsigned mask = 1; mask < (1u << primes.size()); ++mask) {
    std::vector<Int> chosen;
    for (size_t i = 0; i < primes.size(); ++i)
      if (mask & (1u << i)) chosen.push_back(primes[i]);
    out.push_back(PrimeSet::from(std::move(chosen)));
  }
  return out;
}

// Odd prime powers in [3, limit].
std::vector<long long> odd_prime_powers_upto(long long limit) {
  std::vector<long long> out;
  for (long long q = 3; q <= limit; q += 2)
    if (hall::is_prime_power(Int(q))) out.push_back(q);
  return out;
}

// Engine-side ground truth: Hall pi-subgroup conjugacy classes of g.
std::vector<hall::Subgroup> engine_classes(const hall::FiniteGroup& g,
                                           const PrimeSet& pi) {
  return hall::hall_subgroups(g, pi);
}

bool engine_has_nonsolvable_hall(const hall::FiniteGroup& g, const PrimeSet& pi) {
  for (const auto& cls : engine_classes(g, pi))
    if (!hall::is_solvable(g, cls)) return true;
  return false;
}

}  // namespace

TEST_CASE("rank-2 linear criteria: cases, tags, and uniqueness flags") {
  // eta = + (GL2 side).  q = 5: the {2,3}-part of q^2-1 = 24 and tau' = {2,3},
  // so only the octahedral case fires; q = 7: q^2-1 = 48 kills both cases;
  // q = 11, 13: torus and octahedral cases fire together.
  auto c5 = hall::hall_gl2(Eta::Plus, 5, kP23);
  CHECK(c5.exists);
  CHECK(c5.tag == SmallHallTag::Sym4);
  CHECK_FALSE(c5.case_dihedral);
  CHECK(c5.case_sym4);
  CHECK(c5.single_class);

  auto c7 = hall::hall_gl2(Eta::Plus, 7, kP23);
  CHECK_FALSE(c7.exists);
  CHECK_FALSE(c7.tag.has_value());
  CHECK_FALSE(c7.single_class);

  for (long long q : {11LL, 13LL}) {
    auto c = hall::hall_gl2(Eta::Plus, q, kP23);
    CHECK(c.exists);
    CHECK(c.case_dihedral);
    CHECK(c.case_sym4);
    CHECK(c.tag == SmallHallTag::Dihedral);
    CHECK_FALSE(c.single_class);
  }

  // Dihedral case with tau' larger than {2,3}: q = 41, pi = {2,3,5}.
  // q - eps = 40, tau' = {2,3,5}; 3 does not divide 40, so the torus case
  // fails; 41^2-1 = 1680 has {2,3}-part 48, so the octahedral case fails too.
  auto c41 = hall::hall_gl2(Eta::Plus, 41, kP235);
  CHECK_FALSE(c41.exists);
  // q = 59, pi = {2,3,5}: q - eps = 60 absorbs tau' = {2,3,5} entirely.
  auto c59 = hall::hall_gl2(Eta::Plus, 59, kP235);
  CHECK(c59.exists);
  CHECK(c59.case_dihedral);
  CHECK(c59.single_class);
}

TEST_CASE("rank-2 linear criteria: unitary side and the torus-reading switch") {
  // Literal reading (default): the torus stays q - eps(q) for both signs.
  auto literal5 = hall::hall_gl2(Eta::Minus, 5, kP23);
  CHECK(literal5.exists);  // octahedral case: (24)_{2,3} = 24
  CHECK(literal5.tag == SmallHallTag::Sym4);

  auto literal7 = hall::hall_gl2(Eta::Minus, 7, kP23);
  CHECK_FALSE(literal7.exists);  // engine-verified: GU2(7) has no {2,3}-Hall

  // Adjusted reading (q + eps for the minus sign) is available but
  // contradicts the brute-force result for q = 7; it stays off by default.
  ClassifierConfig adjusted;
  adjusted.eta_adjust = true;
  auto adj7 = hall::hall_gl2(Eta::Minus, 7, kP23, adjusted);
  CHECK(adj7.exists);
  CHECK(adj7.case_dihedral);

  // The switch never changes the plus sign.
  auto plus13 = hall::hall_gl2(Eta::Plus, 13, kP23, adjusted);
  CHECK(plus13.exists);
  CHECK(plus13.case_dihedral);
}

TEST_CASE("rank-2 linear criteria: preconditions are enforced") {
  CHECK_THROWS_AS(hall::hall_gl2(Eta::Plus, 8, kP23), std::invalid_argument);
  CHECK_THROWS_AS(hall::hall_gl2(Eta::Plus, 15, kP23), std::invalid_argument);
  CHECK_THROWS_AS(hall::hall_gl2(Eta::Plus, 7, PrimeSet::of({3, 7})),
                  std::invalid_argument);
  CHECK_THROWS_AS(hall::hall_gl2(Eta::Plus, 7, PrimeSet::of({2, 7})),
                  std::invalid_argument);
  CHECK_THROWS_AS(hall::hall_gl2(Eta::Plus, 5, kP235), std::invalid_argument);
  CHECK_THROWS_AS(hall::hall_gl2(Eta::Minus, 3, kP23), std::invalid_argument);

  CHECK_THROWS_AS(hall::hall_sl2(9, kP235), std::invalid_argument);
  CHECK_THROWS_AS(hall::hall_sl2(9, kP23), std::invalid_argument);
  CHECK_THROWS_AS(hall::hall_sl2(16, kP23), std::invalid_argument);
  CHECK_THROWS_AS(hall::hall_sl2(21, kP23), std::invalid_argument);
  CHECK_THROWS_AS(hall::hall_sl2(11, PrimeSet::of({2, 5})), std::invalid_argument);
}

TEST_CASE("rank-2 special linear criteria: cases, tags, and uniqueness flags") {
  auto c5 = hall::hall_sl2(5, kP23);
  CHECK(c5.exists);
  CHECK(c5.tag == SmallHallTag::AltSym4);
  CHECK_FALSE(c5.case_dihedral);
  CHECK(c5.case_altsym4);
  CHECK_FALSE(c5.case_alt5);
  // Uniqueness is only promised for the torus case; engine finds one class
  // here, but the flag stays conservative.
  CHECK_FALSE(c5.single_class);

  auto c7 = hall::hall_sl2(7, kP23);
  CHECK(c7.exists);
  CHECK(c7.tag == SmallHallTag::AltSym4);
  CHECK(c7.case_altsym4);
  CHECK_FALSE(c7.case_dihedral);  // tau' = {2,3} but 3 does not divide q-eps=8

  for (long long q : {11LL, 13LL, 25LL}) {
    auto c = hall::hall_sl2(q, kP23);
    CHECK(c.exists);
    CHECK(c.case_dihedral);
    CHECK(c.case_altsym4);
    CHECK_FALSE(c.single_class);
  }

  auto c49 = hall::hall_sl2(49, kP23);
  CHECK(c49.exists);
  CHECK(c49.case_dihedral);
  CHECK_FALSE(c49.case_altsym4);  // (49^2-1)_{2,3} = 96 is neither 24 nor 48
  CHECK(c49.single_class);

  auto icosa = hall::hall_sl2(11, kP235);
  CHECK(icosa.exists);
  CHECK(icosa.tag == SmallHallTag::Alt5);
  CHECK(icosa.case_alt5);
  CHECK_FALSE(icosa.case_dihedral);
  CHECK_FALSE(icosa.single_class);

  // q = 59: torus q-eps = 60 covers {2,3,5} and (q^2-1)_{2,3,5} = 120, so
  // cases (1) and (3) fire together.
  auto both59 = hall::hall_sl2(59, kP235);
  CHECK(both59.case_dihedral);
  CHECK(both59.case_alt5);
  CHECK_FALSE(both59.single_class);

  CHECK_FALSE(hall::hall_sl2(13, kP237).exists);
  CHECK_FALSE(hall::hall_sl2(25, PrimeSet::of({2, 3, 13})).exists);
}

TEST_CASE("hall existence and non-solvability in symmetric groups") {
  // Engine-frozen existence verdicts for tau = {2,3}.
  CHECK(hall::hall_sym_exists(5, kP23));
  CHECK_FALSE(hall::hall_sym_exists(6, kP23));
  CHECK(hall::hall_sym_exists(7, kP23));
  CHECK(hall::hall_sym_exists(8, kP23));

  // Small tau always exists (Sylow / trivial).
  CHECK(hall::hall_sym_exists(6, PrimeSet::of({5})));
  CHECK(hall::hall_sym_exists(6, PrimeSet::of({7})));
  CHECK(hall::hall_sym_exists(9, PrimeSet::of({11})));
  CHECK(hall::hall_sym_exists(0, kP23));
  CHECK(hall::hall_sym_exists(1, kP235));

  // Whole prime set and the prime-degree point stabilizer.
  CHECK(hall::hall_sym_exists(6, kP235));
  CHECK(hall::hall_sym_exists(7, kP235));
  CHECK(hall::hall_sym_exists(11, kP2357));

  // Two-prime tau outside the special cases.
  CHECK_FALSE(hall::hall_sym_exists(6, PrimeSet::of({2, 5})));
  CHECK_FALSE(hall::hall_sym_exists(6, PrimeSet::of({3, 5})));
  CHECK_FALSE(hall::hall_sym_exists(9, kP23));

  CHECK_THROWS_AS(hall::hall_sym_exists(-1, kP23), std::invalid_argument);

  // Non-solvable refinement.
  CHECK(hall::sym_ns(7, kP235));
  CHECK_FALSE(hall::sym_ns(7, kP23));
  CHECK_FALSE(hall::sym_ns(4, kP23));
  CHECK(hall::sym_ns(5, kP235));
  CHECK(hall::sym_ns(6, kP235));
  CHECK(hall::sym_ns(8, kP2357));
  CHECK(hall::sym_ns(13, PrimeSet::of({2, 3, 5, 7, 11})));
  CHECK_FALSE(hall::sym_ns(8, kP235));  // 8 not prime, and {2,3,5} misses 7
  CHECK(hall::sym_ns(9, kP2357));       // full prime support of 9! qualifies
  CHECK_FALSE(hall::sym_ns(9, kP235));  // 9 not prime, {2,3,5} misses 7
  CHECK_FALSE(hall::sym_ns(0, kP23));
  CHECK_FALSE(hall::sym_ns(2, kP23));
  CHECK_THROWS_AS(hall::sym_ns(-2, kP23), std::invalid_argument);

  // Non-solvable implies existence.
  for (long long n = 0; n <= 12; ++n)
    for (const auto& pi : nonempty_subsets(kP2357))
      if (hall::sym_ns(n, pi)) CHECK(hall::hall_sym_exists(n, pi));
}

TEST_CASE("solvability guards") {
  auto g1 = hall::solvability_guards(SimpleGroupSpec::alt(7), PrimeSet::of({3, 5, 7}));
  CHECK(g1.outcome == GuardOutcome::NoTwo);
  CHECK(g1.blocks_nonsolvable());

  auto g2 = hall::solvability_guards(SimpleGroupSpec::lin(2, 11),
                                     PrimeSet::of({2, 5, 11}));
  CHECK(g2.outcome == GuardOutcome::NoThree);
  CHECK(g2.blocks_nonsolvable());

  auto g3 = hall::solvability_guards(SimpleGroupSpec::alt(5), kP235);
  CHECK(g3.outcome == GuardOutcome::PiGroup);
  CHECK_FALSE(g3.blocks_nonsolvable());

  auto g4 = hall::solvability_guards(SimpleGroupSpec::alt(7), kP235);
  CHECK(g4.outcome == GuardOutcome::Pass);
  CHECK_FALSE(g4.blocks_nonsolvable());

  CHECK_THROWS_AS(hall::solvability_guards(SimpleGroupSpec::alt(3), kP23),
                  std::invalid_argument);

  // A pi-group is recognized exactly when pi covers the whole prime set.
  const std::vector<std::string> specs = {"alt:6",    "lin:2,7", "lin:3,3",
                                          "symp:2,3", "g2:3",    "sporadic:M11"};
  for (const auto& text : specs) {
    auto spec = parse(text);
    PrimeSet support = hall::prime_set(spec);
    for (const auto& pi : nonempty_subsets(support)) {
      auto guard = hall::solvability_guards(spec, pi);
      CHECK((guard.outcome == GuardOutcome::PiGroup) == support.subset_of(pi));
    }
  }
}

TEST_CASE("classification rows: alternating and sporadic families") {
  CHECK(fired("alt:7", kP235) == std::vector<RowId>{RowId::ALT});
  CHECK(fired("alt:11", kP2357) == std::vector<RowId>{RowId::ALT});
  CHECK(fired("alt:13", PrimeSet::of({2, 3, 5, 7, 11})) ==
        std::vector<RowId>{RowId::ALT});
  CHECK(fired("alt:5", kP23).empty());
  CHECK(fired("alt:7", kP23).empty());          // tau misses 5
  CHECK(fired("alt:9", kP2357).empty());        // 9 is not prime
  CHECK(fired("alt:11", kP235).empty());        // tau misses 7
  CHECK(fired("alt:7", kP2357).empty());        // tau = pi(7!), not pi(6!)

  CHECK(fired("sporadic:M11", kP235) == std::vector<RowId>{RowId::SPOR_M11});
  CHECK(fired("sporadic:M11", kP2357) == std::vector<RowId>{RowId::SPOR_M11});
  CHECK(fired("sporadic:M11", PrimeSet::of({2, 3, 5, 11})).empty());  // pi-group
  CHECK(fired("sporadic:M22", kP235) == std::vector<RowId>{RowId::SPOR_M22});
  CHECK(fired("sporadic:M24", kP235) == std::vector<RowId>{RowId::SPOR_M24});
  CHECK(fired("sporadic:J1", kP235) == std::vector<RowId>{RowId::SPOR_J1});
  CHECK(fired("sporadic:J4", kP235) == std::vector<RowId>{RowId::SPOR_J4});

  CHECK(fired("sporadic:M23", kP235) == std::vector<RowId>{RowId::SPOR_M23_235});
  CHECK(fired("sporadic:M23", kP2357) == std::vector<RowId>{RowId::SPOR_M23_2357});
  CHECK(fired("sporadic:M23", PrimeSet::of({2, 3, 5, 7, 11})) ==
        std::vector<RowId>{RowId::SPOR_M23_23571});
  CHECK(fired("sporadic:M23", PrimeSet::of({2, 3, 7})).empty());
  CHECK(fired("sporadic:J1", kP23).empty());
}

TEST_CASE("classification rows: linear family, cyclotomic-complement rows") {
  // n odd prime with gcd(n, q-1) = 1.
  CHECK(fires("lin:3,5", kP235, RowId::LIN1));
  CHECK_FALSE(fires("lin:3,4", kP23, RowId::LIN1));  // gcd(3, 3) = 3
  CHECK(fires("lin:5,3", PrimeSet::of({2, 3, 5, 13}), RowId::LIN1));
  // Boundary artifact kept as printed: for q = 2, 3 the row fires with
  // tau = {2,3} although a {2,3}-group is always solvable; see the engine
  // cross-checks, which exclude these two parameter pairs.
  CHECK(fires("lin:3,2", kP23, RowId::LIN1));
  CHECK(fires("lin:3,3", kP23, RowId::LIN1));

  CHECK(fires("lin:4,8", kP237, RowId::LIN2));
  CHECK_FALSE(fires("lin:4,8", kP23, RowId::LIN2));  // tau too small
  CHECK_FALSE(fires("lin:4,4", kP237, RowId::LIN2)); // gcd(6, 3) = 3
  CHECK_FALSE(fires("lin:4,2", kP23, RowId::LIN2));  // q > 2 required

  // n = 5 rows: gcd conditions distinguish LIN3 and LIN4.
  // q = 8: gcd(10, 7) = 1 and gcd(30, 7) = 1, so both tau shapes are present.
  {
    auto spec = parse("lin:5,8");
    PrimeSet support = hall::prime_set(spec);
    Int q = 8;
    PrimeSet tau3 = support.set_difference(hall::prime_divisors(
        hall::cyclotomic_eval(4, q) * hall::cyclotomic_eval(5, q)));
    PrimeSet tau4 = support.set_difference(hall::prime_divisors(
        hall::cyclotomic_eval(3, q) * hall::cyclotomic_eval(4, q) *
        hall::cyclotomic_eval(5, q)));
    CHECK(fires("lin:5,8", tau3, RowId::LIN3));
    CHECK(fires("lin:5,8", tau4, RowId::LIN4));
    CHECK_FALSE(fires("lin:5,8", tau4, RowId::LIN3));
  }
  // lin:5,2 is valid for LIN3 but excluded from LIN4 by q > 2.
  {
    auto spec = parse("lin:5,2");
    PrimeSet support = hall::prime_set(spec);
    Int q = 2;
    PrimeSet tau3 = support.set_difference(hall::prime_divisors(
        hall::cyclotomic_eval(4, q) * hall::cyclotomic_eval(5, q)));
    PrimeSet tau4 = support.set_difference(hall::prime_divisors(
        hall::cyclotomic_eval(3, q) * hall::cyclotomic_eval(4, q) *
        hall::cyclotomic_eval(5, q)));
    CHECK(fires("lin:5,2", tau3, RowId::LIN3));
    CHECK_FALSE(fires("lin:5,2", tau4, RowId::LIN4));
  }

  // Degree-7 and degree-8 rows need gcd(3, q+1) = 1, so q = 4 is the
  // smallest field that works (q = 2 has q+1 = 3).
  {
    Int q = 4;
    auto spec7 = parse("lin:7,4");
    PrimeSet tau7 = hall::prime_set(spec7).set_difference(hall::prime_divisors(
        hall::cyclotomic_eval(5, q) * hall::cyclotomic_eval(6, q) *
        hall::cyclotomic_eval(7, q)));
    CHECK(fires("lin:7,4", tau7, RowId::LIN5));

    auto spec8 = parse("lin:8,4");
    PrimeSet tau8 = hall::prime_set(spec8).set_difference(hall::prime_divisors(
        hall::cyclotomic_eval(4, q) * hall::cyclotomic_eval(5, q) *
        hall::cyclotomic_eval(6, q) * hall::cyclotomic_eval(7, q)));
    CHECK(fires("lin:8,4", tau8, RowId::LIN6));
  }
  // Degree 11 instead needs gcd(5, q+1) = 1, which q = 2 satisfies.
  {
    Int q = 2;
    auto spec11 = parse("lin:11,2");
    PrimeSet tau11 = hall::prime_set(spec11).set_difference(hall::prime_divisors(
        hall::cyclotomic_eval(7, q) * hall::cyclotomic_eval(8, q) *
        hall::cyclotomic_eval(9, q) * hall::cyclotomic_eval(10, q) *
        hall::cyclotomic_eval(11, q)));
    CHECK(fires("lin:11,2", tau11, RowId::LIN7));
  }
  // gcd guards: q = 2 and q = 3 both make gcd(3, q+1) = 3.
  CHECK(fired("lin:7,2", kP2357).empty());
  CHECK(fired("lin:7,3", kP237).empty());
  CHECK_FALSE(fires("lin:8,2", kP2357, RowId::LIN6));
  CHECK_FALSE(fires("lin:8,3", kP2357, RowId::LIN6));
}

TEST_CASE("classification rows: linear family, torus and wreath rows") {
  // Projective-line row.
  CHECK(fired("lin:2,11", kP235) == std::vector<RowId>{RowId::LIN8});
  CHECK(fired("lin:2,11", kP23).empty());
  CHECK(fired("lin:2,19", kP235).empty());  // (360)_{2,3,5} = 360, not 120
  CHECK(fired("lin:2,29", kP235) == std::vector<RowId>{RowId::LIN8});
  CHECK(fired("lin:2,31", kP235).empty());  // (960)_{2,3,5} = 960, not 120
  CHECK(fired("lin:2,59", kP235) == std::vector<RowId>{RowId::LIN8});

  // Wreath-type row over pi(q-1).
  CHECK(fired("lin:5,13", kP235) == std::vector<RowId>{RowId::LIN9});
  CHECK(fires("lin:5,61", kP235, RowId::LIN9));
  CHECK(fired("lin:5,13", kP2357).empty());  // 7 lies outside the tau range
  CHECK(fired("lin:5,11", kP235).empty());   // gcd(12, 10) != 12
  // Degree 7 over F_13: Sym_7 qualifies through its point stabilizer
  // (tau = {2,3,5} is the full prime support of 6!), and 5 divides
  // |PSL_7(13)| exactly once, matching its share of 7!.
  CHECK(fired("lin:7,13", kP235) == std::vector<RowId>{RowId::LIN9});
  {
    // Exponent condition: r = 5 contributes to |S| exactly its share of 5!.
    auto rows = fired("lin:5,13", kP235);
    REQUIRE(rows.size() == 1);
    // lin:6,13 doubles the 5-exponent ((13^4-1) and (13^5-1)... the second
    // factor is 5-free, but |PSL_6(13)| gains 5s from 13^4-1 only; Sym_6 in
    // E^{ns} needs tau = {2,3,5} and the exponent check still passes).
    CHECK(fires("lin:6,13", kP235, RowId::LIN9));
    // lin:10,13: (10!)_5 = 5^2 but |S|_5 = 5^2 via 13^4-1 and 13^8-1; the
    // sym side fails first: 7 | 10! and 7 is outside pi.
    CHECK_FALSE(fires("lin:10,13", kP235, RowId::LIN9));
  }

  // Rank-splitting row: needs Sym_{floor(n/3)} non-solvable territory.
  CHECK(fires("lin:15,59", kP235, RowId::LIN10));
  CHECK_FALSE(fires("lin:12,59", kP235, RowId::LIN10));  // floor(12/3) = 4
  ClassifierConfig half;
  half.floor_variant = FloorVariant::HalfOfN;
  CHECK(fires("lin:12,59", kP235, RowId::LIN10, half));  // floor(12/2) = 6
  CHECK(fires("lin:15,59", kP235, RowId::LIN10, half));
  CHECK_FALSE(fires("lin:15,61", kP235, RowId::LIN10));  // gcd(3, 62) = 1
  CHECK_FALSE(fires("lin:15,41", kP235, RowId::LIN10));  // GL2(41) fails {2,3,5}

  // Octad row: frozen satisfiability sweep over odd prime powers.
  const std::vector<long long> expected_lin11 = {173, 317, 653, 677, 797};
  std::vector<long long> got;
  for (long long q : odd_prime_powers_upto(1000))
    if (fires("lin:4," + std::to_string(q), kP235, RowId::LIN11)) got.push_back(q);
  CHECK(got == expected_lin11);
}

TEST_CASE("classification rows: unitary family") {
  CHECK(fired("uni:5,59", kP235) == std::vector<RowId>{RowId::UNI1});
  CHECK(fires("uni:6,59", kP235, RowId::UNI1));
  CHECK(fired("uni:5,11", kP235).empty());  // |S|_5 = 25 exceeds (5!)_5
  CHECK(fired("uni:5,13", kP235).empty());  // gcd(12, 14) != 12

  CHECK(fires("uni:15,61", kP235, RowId::UNI2));
  CHECK_FALSE(fires("uni:12,61", kP235, RowId::UNI2));
  ClassifierConfig half;
  half.floor_variant = FloorVariant::HalfOfN;
  CHECK(fires("uni:12,61", kP235, RowId::UNI2, half));
  CHECK_FALSE(fires("uni:15,59", kP235, RowId::UNI2));  // gcd(3, 58) = 1

  const std::vector<long long> expected_uni3 = {67, 283, 547, 787};
  std::vector<long long> got;
  for (long long q : odd_prime_powers_upto(1000))
    if (fires("uni:4," + std::to_string(q), kP235, RowId::UNI3)) got.push_back(q);
  CHECK(got == expected_uni3);
}

TEST_CASE("classification rows: odd-orthogonal and symplectic families") {
  CHECK(fired("orthB:5,59", kP235) == std::vector<RowId>{RowId::BN1});
  CHECK(fired("orthB:5,11", kP235).empty());  // 5 outside pi(q - eps) = {2,3}
  CHECK(fired("orthB:5,8", kP235).empty());   // even q never matches eps rows

  // Fixed-order rows: frozen sweep, pi = {2,3,5,7}.  Each q was confirmed by
  // recomputing the {2,3,5,7}-part of the group order from the torus factors
  // (q = 997: (q^2-1) gives 2^3*3, (q^4-1) adds 2*5, (q^6-1) adds 3*7, ...).
  const std::vector<long long> expected_b = {173, 277, 283, 317, 347, 563, 653,
                                             677, 733, 787, 877, 947, 997};
  std::vector<long long> got_b3;
  std::vector<long long> got_b4;
  for (long long q : odd_prime_powers_upto(1000)) {
    if (fires("orthB:3," + std::to_string(q), kP2357, RowId::BN2))
      got_b3.push_back(q);
    if (fires("orthB:4," + std::to_string(q), kP2357, RowId::BN3))
      got_b4.push_back(q);
  }
  CHECK(got_b3 == expected_b);
  CHECK(got_b4 == expected_b);
  CHECK_FALSE(fires("orthB:3,11", kP2357, RowId::BN2));

  // Symplectic row: rank-2 criterion plus symmetric-group existence, with
  // non-solvability supplied by either factor.
  CHECK(fired("symp:2,11", kP235) == std::vector<RowId>{RowId::CN1});
  CHECK(fires("symp:4,11", kP235, RowId::CN1));
  CHECK(fires("symp:5,11", kP235, RowId::CN1));
  CHECK(fires("symp:6,11", kP235, RowId::CN1));
  CHECK(fires("symp:7,11", kP235, RowId::CN1));
  CHECK_FALSE(fires("symp:2,7", kP23, RowId::CN1));   // both factors solvable
  CHECK_FALSE(fires("symp:5,7", kP23, RowId::CN1));
  // Sym_3 is itself a {2,3,5}-group, so the symmetric factor exists (as the
  // whole group) and the rank-2 factor supplies the Alt_5 case.
  CHECK(fires("symp:3,11", kP235, RowId::CN1));
  CHECK_FALSE(fires("symp:2,13", kP235, RowId::CN1)); // 5 does not divide 13^2-1
  // Non-solvability via the symmetric factor with a solvable rank-2 case:
  // q = 59 keeps tau = {2,3,5} inside pi(q - eps) = pi(60).
  CHECK(fires("symp:5,59", kP235, RowId::CN1));
}

TEST_CASE("classification rows: even-orthogonal families") {
  CHECK(fired("orthDp:5,2", kP2357) == std::vector<RowId>{RowId::DN1});
  CHECK(fired("orthDp:5,4", hall::prime_set(parse("orthDp:5,4"))
                                .set_difference(hall::prime_divisors(
                                    Int(341) * 257))) ==
        std::vector<RowId>{RowId::DN1});
  CHECK(fired("orthDp:4,2", kP235).empty());   // 4 is not a Fermat prime
  CHECK(fired("orthDp:6,2", kP2357).empty());  // 6 is not prime
  CHECK_FALSE(fires("orthDp:5,16", kP2357, RowId::DN1));  // gcd(5, 15) = 5

  CHECK(fires("orthDp:6,59", kP235, RowId::DN2));   // eps^6 = 1
  CHECK(fires("orthDp:5,61", kP235, RowId::DN2));   // eps = +1
  CHECK(fires("orthDp:7,59", kP235, RowId::DN3));   // eps^7 = -1, Sym_6
  CHECK_FALSE(fires("orthDp:5,59", kP235, RowId::DN2));
  CHECK_FALSE(fires("orthDp:5,59", kP235, RowId::DN3));  // Sym_4 is solvable

  // Fixed-order row never fires at desk scale: frozen negative sweep.
  for (long long q : odd_prime_powers_upto(1000))
    CHECK_FALSE(fires("orthDp:4," + std::to_string(q), kP2357, RowId::DN4));

  CHECK(fired("orthDm:4,2", kP235) == std::vector<RowId>{RowId::TDN1});
  CHECK_FALSE(fires("orthDm:4,4", kP235, RowId::TDN1));  // gcd(3, 3) = 3
  CHECK(fires("orthDm:8,2",
              hall::prime_set(parse("orthDm:8,2"))
                  .set_difference(hall::prime_divisors(Int(127) * 257)),
              RowId::TDN1));
  CHECK(fired("orthDm:5,2", kP235).empty());  // 4 is not a Mersenne prime

  CHECK(fires("orthDm:5,59", kP235, RowId::TDN2));  // eps^5 = -1
  CHECK(fires("orthDm:6,59", kP235, RowId::TDN3));  // eps^6 = 1, Sym_5
  CHECK(fires("orthDm:7,61", kP235, RowId::TDN3));  // eps = +1, Sym_6
  CHECK_FALSE(fires("orthDm:5,61", kP235, RowId::TDN2));
  CHECK_FALSE(fires("orthDm:5,61", kP235, RowId::TDN3));  // Sym_4 solvable
}

TEST_CASE("classification rows: exceptional families") {
  const std::vector<long long> expected_g2 = {5, 11, 59, 61, 101, 131, 149, 157, 173};
  std::vector<long long> got;
  for (long long q = 3; q <= 200; ++q) {
    if (!hall::is_prime_power(Int(q))) continue;
    if (fires("g2:" + std::to_string(q), kP237, RowId::G2R)) got.push_back(q);
  }
  CHECK(got == expected_g2);
  CHECK(fired("g2:5", kP237) == std::vector<RowId>{RowId::G2R});
  CHECK(fired("g2:5", kP23).empty());
  CHECK(fired("g2:7", kP237).empty());  // p = 7 lies in pi, so 7 misses tau

  CHECK(fired("e6:31", kP235) == std::vector<RowId>{RowId::E6R});
  CHECK(fired("e6:7", kP235).empty());
  CHECK(fires("e6:31", PrimeSet::of({2, 3, 5, 31}), RowId::E6R) == false);
  CHECK(fired("2e6:29", kP235) == std::vector<RowId>{RowId::TE6R});
  CHECK(fired("2e6:31", kP235).empty());

  CHECK(fired("e7:419", kP2357) == std::vector<RowId>{RowId::E7R});
  CHECK(fired("e8:419", kP2357) == std::vector<RowId>{RowId::E8R});
  CHECK(fired("e7:421", kP2357) == std::vector<RowId>{RowId::E7R});  // 420 = q-1
  CHECK(fired("e7:31", kP2357).empty());
  CHECK(fired("e8:2", kP2357).empty());  // eps rows never match even q
}

TEST_CASE("row names and invariance marks") {
  const std::vector<RowId> all_rows = {
      RowId::ALT,   RowId::LIN1,  RowId::LIN2,  RowId::LIN3,  RowId::LIN4,
      RowId::LIN5,  RowId::LIN6,  RowId::LIN7,  RowId::LIN8,  RowId::LIN9,
      RowId::LIN10, RowId::LIN11, RowId::UNI1,  RowId::UNI2,  RowId::UNI3,
      RowId::BN1,   RowId::BN2,   RowId::BN3,   RowId::CN1,   RowId::DN1,
      RowId::DN2,   RowId::DN3,   RowId::DN4,   RowId::TDN1,  RowId::TDN2,
      RowId::TDN3,  RowId::G2R,   RowId::E6R,   RowId::TE6R,  RowId::E7R,
      RowId::E8R,   RowId::SPOR_M11, RowId::SPOR_M22, RowId::SPOR_M23_235,
      RowId::SPOR_M23_2357, RowId::SPOR_M23_23571, RowId::SPOR_M24,
      RowId::SPOR_J1, RowId::SPOR_J4};
  std::set<std::string> names;
  for (RowId row : all_rows) names.insert(hall::row_name(row));
  CHECK(names.size() == all_rows.size());

  const std::set<RowId> invariant = {RowId::LIN9, RowId::UNI1, RowId::BN1,
                                     RowId::DN2,  RowId::DN3,  RowId::TDN2,
                                     RowId::TDN3, RowId::G2R,  RowId::E6R,
                                     RowId::TE6R, RowId::E7R,  RowId::E8R};
  for (RowId row : all_rows)
    CHECK(hall::row_aut_invariant(row) == (invariant.count(row) > 0));

  // RowMatch carries the invariance mark and tau.
  auto matches = hall::table1_rows(parse("g2:5"), kP237);
  REQUIRE(matches.size() == 1);
  CHECK(matches[0].aut_invariant);
  CHECK(matches[0].tau == kP237);
  auto lin8 = hall::table1_rows(parse("lin:2,11"), kP235);
  REQUIRE(lin8.size() == 1);
  CHECK_FALSE(lin8[0].aut_invariant);
}

TEST_CASE("membership decisions") {
  auto pi_group = hall::e_pi_ns(SimpleGroupSpec::alt(5), kP235);
  CHECK(pi_group.in_e_ns);
  CHECK(pi_group.reason == NsDecision::Reason::PiGroup);
  CHECK(pi_group.aut_invariant);
  CHECK(pi_group.rows.empty());

  // The pi-group branch takes priority over row evaluation.
  auto whole = hall::e_pi_ns(SimpleGroupSpec::alt(7), kP2357);
  CHECK(whole.in_e_ns);
  CHECK(whole.reason == NsDecision::Reason::PiGroup);

  auto via_row = hall::e_pi_ns(SimpleGroupSpec::lin(2, 11), kP235);
  CHECK(via_row.in_e_ns);
  CHECK(via_row.reason == NsDecision::Reason::Rows);
  REQUIRE(via_row.rows.size() == 1);
  CHECK(via_row.rows[0].row == RowId::LIN8);
  CHECK_FALSE(via_row.aut_invariant);

  auto invariant_row = hall::e_pi_ns(parse("g2:5"), kP237);
  CHECK(invariant_row.in_e_ns);
  CHECK(invariant_row.aut_invariant);

  auto no_row = hall::e_pi_ns(SimpleGroupSpec::lin(2, 11), kP23);
  CHECK_FALSE(no_row.in_e_ns);
  CHECK(no_row.reason == NsDecision::Reason::NoRow);

  auto guarded = hall::e_pi_ns(SimpleGroupSpec::alt(7), PrimeSet::of({3, 5, 7}));
  CHECK_FALSE(guarded.in_e_ns);
  CHECK(guarded.reason == NsDecision::Reason::GuardFailed);
  CHECK(guarded.guard == GuardOutcome::NoTwo);

  CHECK_THROWS_AS(hall::e_pi_ns(SimpleGroupSpec::lin(2, 2), kP23),
                  std::invalid_argument);
}

TEST_CASE("guard soundness across a catalog sweep") {
  const std::vector<std::string> specs = {
      "alt:5",     "alt:6",      "alt:7",      "alt:8",     "alt:11",
      "lin:2,7",   "lin:2,11",   "lin:2,13",   "lin:3,3",   "lin:3,5",
      "lin:4,3",   "lin:5,13",   "uni:3,3",    "uni:4,5",   "uni:5,59",
      "orthB:3,3", "orthB:3,173","symp:2,11",  "symp:3,3",  "orthDp:5,2",
      "orthDm:4,2","g2:5",       "e6:2",       "2e6:2",     "e7:2",
      "e8:2",      "sporadic:M11", "sporadic:M23", "sporadic:J4"};
  for (const auto& text : specs) {
    auto spec = parse(text);
    PrimeSet support = hall::prime_set(spec);
    auto primes = support.primes();
    // Keep the sweep bounded for huge supports.
    if (primes.size() > 6) primes.resize(6);
    for (const auto& pi : nonempty_subsets(PrimeSet::from(std::move(primes)))) {
      if (support.subset_of(pi)) continue;
      if (pi.contains(2) && pi.contains(3)) continue;
      auto decision = hall::e_pi_ns(spec, pi);
      CHECK_FALSE(decision.in_e_ns);
      CHECK(decision.reason == NsDecision::Reason::GuardFailed);
    }
  }
}

TEST_CASE("meet checks on classification rows") {
  // Idempotence.
  auto same = hall::row_meet_check(parse("g2:5"), kP237, kP237);
  CHECK(same.holds);
  CHECK(same.shared == std::vector<RowId>{RowId::G2R});
  CHECK_FALSE(same.violation.has_value());

  // Distinct prime sets sharing a row; the intersection keeps it.
  auto spor = hall::row_meet_check(parse("sporadic:M11"), kP235, kP2357);
  CHECK(spor.holds);
  CHECK(spor.shared == std::vector<RowId>{RowId::SPOR_M11});

  auto alt = hall::row_meet_check(parse("alt:7"), kP235,
                                  PrimeSet::of({2, 3, 5, 11}));
  CHECK(alt.holds);

  auto lin8 = hall::row_meet_check(parse("lin:2,11"), kP235, kP2357);
  CHECK(lin8.holds);

  auto cn = hall::row_meet_check(parse("symp:2,11"), kP235, kP2357);
  CHECK(cn.holds);

  // No shared row: reported as a precondition error.
  CHECK_THROWS_AS(hall::row_meet_check(parse("alt:5"), kP23, kP23),
                  std::invalid_argument);
  CHECK_THROWS_AS(hall::row_meet_check(parse("alt:7"), kP235, kP23),
                  std::invalid_argument);
}

TEST_CASE("meet-closure property sweep") {
  std::vector<std::string> specs;
  for (long long q = 4; q <= 49; ++q)
    if (hall::is_prime_power(Int(q))) specs.push_back("lin:2," + std::to_string(q));
  for (long long q : {3LL, 4LL, 5LL, 7LL, 8LL, 9LL, 11LL})
    specs.push_back("g2:" + std::to_string(q));
  for (const char* name : {"M11", "M22", "M23", "M24", "J1", "J4"})
    specs.push_back(std::string("sporadic:") + name);
  for (const char* text :
       {"alt:7", "alt:11", "alt:13", "lin:5,13", "lin:5,61", "lin:6,13",
        "lin:7,13", "lin:15,59", "uni:5,59", "uni:6,59", "uni:15,61",
        "symp:2,11", "symp:3,11", "symp:5,11", "symp:5,59", "orthB:5,59",
        "orthB:3,173", "orthB:4,173", "orthDp:6,59", "orthDp:5,61",
        "orthDp:7,59", "orthDm:5,59", "orthDm:6,59", "orthDm:4,2",
        "orthDp:5,2", "e6:31", "2e6:29", "e7:419", "e8:419"})
    specs.push_back(text);

  long long checked = 0;
  for (const auto& text : specs) {
    auto spec = parse(text);
    PrimeSet support = hall::prime_set(spec);
    // Keep the subset enumeration tractable for large supports.
    PrimeSet base = support.size() <= 7
                        ? support
                        : support.set_intersection(
                              PrimeSet::of({2, 3, 5, 7, 11, 13}));
    // Candidate prime sets: every subset of the base, plus each subset
    // widened by one prime outside the support (which leaves tau unchanged).
    long long outside = 0;
    for (long long candidate : {101LL, 103LL, 107LL, 109LL, 113LL})
      if (!support.contains(Int(candidate))) {
        outside = candidate;
        break;
      }
    REQUIRE(outside != 0);
    auto subsets = nonempty_subsets(base);
    for (size_t i = 0, end = subsets.size(); i < end; ++i)
      subsets.push_back(subsets[i].set_union(PrimeSet::of({outside})));
    for (const auto& pi1 : subsets) {
      auto rows1 = hall::table1_rows(spec, pi1);
      if (rows1.empty()) continue;
      for (const auto& pi2 : subsets) {
        auto rows2 = hall::table1_rows(spec, pi2);
        bool shared = false;
        for (const auto& a : rows1)
          for (const auto& b : rows2)
            if (a.row == b.row) shared = true;
        if (!shared) continue;
        auto result = hall::row_meet_check(spec, pi1, pi2);
        ++checked;
        CHECK_MESSAGE(result.holds, text << " pi1=" << pi1.to_string()
                                         << " pi2=" << pi2.to_string());
      }
    }
  }
  // The sweep must actually exercise shared-row pairs.
  CHECK(checked >= 100);
}

TEST_CASE("containment observation for degree-5 wreath rows") {
  // Wherever the wreath row fires with n = 5 and q <= 49, the primes of
  // q - 1 together with 5 stay inside the support minus the degree-5
  // cyclotomic part.
  bool fired_somewhere = false;
  for (long long q : odd_prime_powers_upto(49)) {
    auto spec = parse("lin:5," + std::to_string(q));
    PrimeSet pi = hall::prime_divisors(Int(q) - 1).set_union(kP235);
    if (!fires("lin:5," + std::to_string(q), pi, RowId::LIN9)) continue;
    fired_somewhere = true;
    PrimeSet lhs = hall::prime_divisors(Int(q) - 1).set_union(PrimeSet::of({5}));
    PrimeSet rhs = hall::prime_set(spec).set_difference(
        hall::prime_divisors(hall::cyclotomic_eval(5, Int(q))));
    CHECK_MESSAGE(lhs.subset_of(rhs), "q = " << q);
  }
  CHECK(fired_somewhere);
}

TEST_CASE("octahedral-row incompatibility") {
  // gcd(6, q-1) = 1 forces q even; gcd(8, q-5) = 8 forces q odd.
  for (long long q = 2; q <= 1000; ++q) {
    bool lin2_cond = hall::gcd(Int(6), Int(q) - 1) == 1 && q > 2;
    bool lin11_cond = hall::gcd(Int(8), Int(q) - 5) == 8;
    CHECK_FALSE((lin2_cond && lin11_cond));
  }
  // Row-level restatement for the swept pi.
  for (long long q : odd_prime_powers_upto(1000)) {
    auto ids = fired("lin:4," + std::to_string(q), kP235);
    bool has2 = std::find(ids.begin(), ids.end(), RowId::LIN2) != ids.end();
    bool has11 = std::find(ids.begin(), ids.end(), RowId::LIN11) != ids.end();
    CHECK_FALSE((has2 && has11));
  }
}

TEST_CASE("oracle and engine agree on rank-2 criteria") {
  struct Probe {
    const char* label;
    hall::FiniteGroup group;
    hall::SmallHallCase verdict;
  };
  std::vector<Probe> probes;
  probes.push_back({"gl2(5)", hall::gl2(5), hall::hall_gl2(Eta::Plus, 5, kP23)});
  probes.push_back({"gl2(7)", hall::gl2(7), hall::hall_gl2(Eta::Plus, 7, kP23)});
  probes.push_back({"gl2(11)", hall::gl2(11), hall::hall_gl2(Eta::Plus, 11, kP23)});
  probes.push_back({"gl2(13)", hall::gl2(13), hall::hall_gl2(Eta::Plus, 13, kP23)});
  probes.push_back({"gu2(5)", hall::gu2(5), hall::hall_gl2(Eta::Minus, 5, kP23)});
  probes.push_back({"gu2(7)", hall::gu2(7), hall::hall_gl2(Eta::Minus, 7, kP23)});
  probes.push_back({"sl2(5)", hall::sl2(5), hall::hall_sl2(5, kP23)});
  probes.push_back({"sl2(7)", hall::sl2(7), hall::hall_sl2(7, kP23)});
  probes.push_back({"sl2(11)", hall::sl2(11), hall::hall_sl2(11, kP23)});
  probes.push_back({"sl2(13)", hall::sl2(13), hall::hall_sl2(13, kP23)});
  probes.push_back({"sl2(25)", hall::sl2(25), hall::hall_sl2(25, kP23)});
  probes.push_back(
      {"sl2(49)", hall::sl2(49, 130000), hall::hall_sl2(49, kP23)});

  for (const auto& probe : probes) {
    auto classes = engine_classes(probe.group, kP23);
    INFO(probe.label);
    CHECK(probe.verdict.exists == !classes.empty());
    if (probe.verdict.single_class) CHECK(classes.size() == 1);
    Int expected_order =
        hall::pi_part(Int(probe.group.order()), kP23);
    for (const auto& cls : classes) CHECK(Int(cls.order()) == expected_order);
  }

  // Frozen class counts for the uniqueness-flag calibration.
  CHECK(engine_classes(hall::gl2(5), kP23).size() == 1);
  CHECK(engine_classes(hall::gl2(7), kP23).empty());
  CHECK(engine_classes(hall::gl2(11), kP23).size() == 2);
  CHECK(engine_classes(hall::gl2(13), kP23).size() == 2);
  CHECK(engine_classes(hall::gu2(5), kP23).size() == 1);
  CHECK(engine_classes(hall::gu2(7), kP23).empty());
  CHECK(engine_classes(hall::sl2(5), kP23).size() == 1);
  CHECK(engine_classes(hall::sl2(7), kP23).size() == 2);
  CHECK(engine_classes(hall::sl2(11), kP23).size() == 2);
  CHECK(engine_classes(hall::sl2(25), kP23).size() == 3);
  CHECK(engine_classes(hall::sl2(49, 130000), kP23).size() == 1);

  // Alt5 case of the special-linear criterion: one icosahedral-type class of
  // order 120 in SL2(11).
  auto icosa = engine_classes(hall::sl2(11), kP235);
  auto verdict = hall::hall_sl2(11, kP235);
  CHECK(verdict.exists);
  CHECK(!icosa.empty());
  for (const auto& cls : icosa) CHECK(cls.order() == 120);

  // Negative three-prime case.
  CHECK(engine_classes(hall::sl2(13), kP237).empty());
  CHECK_FALSE(hall::hall_sl2(13, kP237).exists);
  CHECK(engine_classes(hall::sl2(25), PrimeSet::of({2, 3, 13})).empty());
  CHECK_FALSE(hall::hall_sl2(25, PrimeSet::of({2, 3, 13})).exists);
}

TEST_CASE("oracle and engine agree on symmetric groups") {
  for (int n = 3; n <= 8; ++n) {
    hall::FiniteGroup g = hall::sym(n);
    PrimeSet support = hall::prime_divisors(Int(g.order()));
    for (const auto& pi : nonempty_subsets(support)) {
      bool predicted = hall::hall_sym_exists(n, pi);
      bool found = !engine_classes(g, pi).empty();
      CHECK_MESSAGE(predicted == found,
                    "n = " << n << ", pi = " << pi.to_string());
    }
  }
}

TEST_CASE("oracle and engine agree on full-group membership") {
  struct Entry {
    std::string spec_text;
    hall::FiniteGroup group;
  };
  std::vector<Entry> battery;
  battery.push_back({"alt:5", hall::alt(5)});
  battery.push_back({"alt:6", hall::alt(6)});
  battery.push_back({"alt:7", hall::alt(7)});
  battery.push_back({"lin:2,5", hall::psl2(5)});
  battery.push_back({"lin:2,7", hall::psl2(7)});
  battery.push_back({"lin:2,9", hall::psl2(9)});
  battery.push_back({"lin:2,11", hall::psl2(11)});
  battery.push_back({"lin:2,13", hall::psl2(13)});
  battery.push_back({"sporadic:M11", hall::m11()});

  for (const auto& entry : battery) {
    auto spec = parse(entry.spec_text);
    CHECK(Int(entry.group.order()) == hall::order(spec).value);
    PrimeSet support = hall::prime_set(spec);
    for (const auto& pi : nonempty_subsets(support)) {
      bool predicted = hall::e_pi_ns(spec, pi).in_e_ns;
      bool found = engine_has_nonsolvable_hall(entry.group, pi);
      CHECK_MESSAGE(predicted == found,
                    entry.spec_text << ", pi = " << pi.to_string());
    }
  }

  // The membership example behind the projective-line row: the order-60
  // classes in PSL2(11) are of icosahedral type, hence non-solvable, while
  // every order-12 Hall subgroup is solvable.
  hall::FiniteGroup psl2_11 = hall::psl2(11);
  auto classes60 = engine_classes(psl2_11, kP235);
  CHECK(classes60.size() == 2);
  for (const auto& cls : classes60) {
    CHECK(cls.order() == 60);
    CHECK_FALSE(hall::is_solvable(psl2_11, cls));
    hall::FiniteGroup h = hall::as_group(cls, "order-60 candidate");
    CHECK(hall::identify_type(h).tag == std::string("Alt(5)"));
  }
  auto classes12 = engine_classes(psl2_11, kP23);
  CHECK(classes12.size() == 2);
  for (const auto& cls : classes12) CHECK(hall::is_solvable(psl2_11, cls));
}

TEST_CASE("boundary parameters where the printed degree-prime row over-claims") {
  // The degree-prime row fires for these two parameter pairs with tau =
  // {2,3}, but every {2,3}-group is solvable, and the engine confirms only
  // solvable Hall subgroups exist.  Kept as printed; recorded here so the
  // boundary stays visible.
  CHECK(fires("lin:3,2", kP23, RowId::LIN1));
  CHECK(fires("lin:3,3", kP23, RowId::LIN1));
  CHECK_FALSE(engine_has_nonsolvable_hall(hall::psl3(2), kP23));
  CHECK_FALSE(engine_has_nonsolvable_hall(hall::psl3(3), kP23));
  // Away from the boundary the row's claim is genuine: PSL3(5)'s Hall
  // {2,3,5}-subgroups are the point/line stabilizers, which contain a copy
  // of SL2(5).  (Order 372000 is far over the enumeration cap, so the
  // witness here is the next-best engine fact: GL2(5) is non-solvable.)
  CHECK_FALSE(hall::is_solvable(hall::gl2(5)));
  CHECK(fires("lin:3,5", kP235, RowId::LIN1));
}
