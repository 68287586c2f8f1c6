#pragma once

// Arithmetic existence oracle for Hall pi-subgroups of finite simple groups.
//
// Three layers:
//   * small-rank criteria: Hall pi-subgroups of GL2/GU2 (hall_gl2), SL2
//     (hall_sl2), and Sym_n (hall_sym_exists / sym_ns);
//   * solvability guards that settle the non-solvable question negatively
//     whenever 2 or 3 is missing from pi;
//   * the classification table (table1_rows): one row per family-specific
//     condition under which a simple group has a non-solvable proper Hall
//     pi-subgroup, combined by e_pi_ns into the full verdict.
//
// All predicates are pure arithmetic on the group parameters; the brute-force
// engine provides the independent ground truth the defaults were checked
// against.

#include "hall/arith.hpp"
#include "hall/catalog.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hall {

// Index of the symmetric-group factor in the rank-n linear/unitary rows
// (LIN10 / UNI2): floor(n/3) or floor(n/2).
enum class FloorVariant { ThirdOfN, HalfOfN };

// Switches for the two readings the source conditions admit.  Defaults are
// the readings confirmed by the brute-force engine on small groups.
struct ClassifierConfig {
  // Dihedral-case torus condition of hall_gl2 for the unitary sign: false
  // uses pi(q - epsilon(q)) for both signs; true replaces it for GU2 by
  // pi(q + epsilon(q)).  GU2(7) with pi = {2,3} separates the readings:
  // the 2688-element group has no subgroup of order 384, so the unadjusted
  // reading is correct and is the default.
  bool eta_adjust = false;
  FloorVariant floor_variant = FloorVariant::ThirdOfN;
};

// Sign eta of the rank-2 linear family: GL2^+ = GL2, GL2^- = GU2.
enum class Eta { Plus, Minus };

// Which numbered case of the rank-2 criteria produced a Hall subgroup.
enum class SmallHallTag { Dihedral, Sym4, AltSym4, Alt5 };

std::string small_hall_tag_name(SmallHallTag tag);

// Verdict of hall_gl2 / hall_sl2.  The case flags record every case whose
// condition holds (more than one can); `tag` is the lowest-numbered one.
// single_class is set only when the criteria guarantee that all Hall
// pi-subgroups form one conjugacy class: for GL2/GU2 when exactly one case
// applies, for SL2 when only the dihedral case applies.
struct SmallHallCase {
  bool exists = false;
  std::optional<SmallHallTag> tag;
  bool case_dihedral = false;  // pi cap pi(G) contained in the torus primes
  bool case_sym4 = false;      // GL2/GU2: tau = {2,3}, (q^2-1)_{2,3} = 24
  bool case_altsym4 = false;   // SL2: tau = {2,3}, (q^2-1)_{2,3} in {24, 48}
  bool case_alt5 = false;      // SL2: tau = {2,3,5}, (q^2-1)_{2,3,5} = 120
  bool single_class = false;
};

// Hall pi-subgroup existence in GL2(q) (eta = Plus) or GU2(q) (eta = Minus).
// Requires odd prime-power q, 2 and 3 in pi, and the defining characteristic
// not in pi; violations throw std::invalid_argument (they are precondition
// failures, not "no Hall subgroup" verdicts).
SmallHallCase hall_gl2(Eta eta, const Int& q, const PrimeSet& pi,
                       const ClassifierConfig& cfg = {});

// Hall pi-subgroup existence in SL2(q); preconditions as in hall_gl2.
SmallHallCase hall_sl2(const Int& q, const PrimeSet& pi);

// Hall pi-subgroup existence in Sym_n (n >= 1): true iff tau = pi cap pi(n!)
// is empty or a single prime (Sylow), or tau = pi(n!) (the whole group), or
// n is prime with tau = pi((n-1)!), or n in {7, 8} with tau = {2, 3}.
bool hall_sym_exists(long long n, const PrimeSet& pi);

// Sym_n has a NON-solvable Hall pi-subgroup: tau = pi(n!) with n >= 5, or
// n is a prime >= 7 with tau = pi((n-1)!).
bool sym_ns(long long n, const PrimeSet& pi);

// Why a (group, pi) pair can be settled before consulting the row table.
enum class GuardOutcome {
  Pass,     // no shortcut; consult the rows
  PiGroup,  // pi(S) contained in pi: S is its own non-solvable Hall subgroup
  NoTwo,    // 2 not in pi: every Hall pi-subgroup has odd order, so solvable
  NoThree,  // 3 not in pi: every Hall pi-subgroup is solvable
};

struct GuardResult {
  GuardOutcome outcome = GuardOutcome::Pass;
  bool blocks_nonsolvable() const {
    return outcome == GuardOutcome::NoTwo || outcome == GuardOutcome::NoThree;
  }
};

// Evaluates the shortcuts above; throws std::invalid_argument on an invalid
// group spec.
GuardResult solvability_guards(const SimpleGroupSpec& s, const PrimeSet& pi);

// Rows of the classification table.  Numbering within a family follows the
// order the conditions are listed in table1_rows; the sporadic rows carry
// the group name and the exact tau they require.
enum class RowId {
  ALT,
  LIN1, LIN2, LIN3, LIN4, LIN5, LIN6, LIN7, LIN8, LIN9, LIN10, LIN11,
  UNI1, UNI2, UNI3,
  BN1, BN2, BN3,
  CN1,
  DN1, DN2, DN3, DN4,
  TDN1, TDN2, TDN3,
  G2R, E6R, TE6R, E7R, E8R,
  SPOR_M11, SPOR_M22, SPOR_M23_235, SPOR_M23_2357, SPOR_M23_23571,
  SPOR_M24, SPOR_J1, SPOR_J4,
};

const char* row_name(RowId row);

// True for the rows that guarantee an Aut(S)-invariant conjugacy class of
// Hall pi-subgroups.
bool row_aut_invariant(RowId row);

struct RowMatch {
  RowId row;
  bool aut_invariant = false;
  PrimeSet tau;  // pi cap pi(S), the value the row's tau-condition constrains

  bool operator==(const RowMatch&) const = default;
};

// Every row whose parameter conditions and tau-condition hold for (s, pi).
// Pure predicate evaluation: guards are NOT applied here.  Throws
// std::invalid_argument on an invalid spec.
std::vector<RowMatch> table1_rows(const SimpleGroupSpec& s, const PrimeSet& pi,
                                  const ClassifierConfig& cfg = {});

// Full verdict on "S has a non-solvable Hall pi-subgroup".
struct NsDecision {
  enum class Reason { PiGroup, Rows, GuardFailed, NoRow };

  bool in_e_ns = false;
  Reason reason = Reason::NoRow;
  GuardOutcome guard = GuardOutcome::Pass;  // set when reason == GuardFailed
  std::vector<RowMatch> rows;               // fired rows when reason == Rows
  // True when some Aut(S)-invariant class is guaranteed: a "+" row fired, or
  // S is a pi-group (S is then its own unique Hall pi-subgroup).
  bool aut_invariant = false;
};

NsDecision e_pi_ns(const SimpleGroupSpec& s, const PrimeSet& pi,
                   const ClassifierConfig& cfg = {});

// Meet-closure check: every row that fires for both pi1 and pi2 must fire
// for pi1 cap pi2.  Throws std::invalid_argument when no row is shared.
struct MeetCheckResult {
  bool holds = false;
  std::vector<RowId> shared;        // rows firing for both pi1 and pi2
  std::optional<RowId> violation;   // first shared row missing for the meet
};

MeetCheckResult row_meet_check(const SimpleGroupSpec& s, const PrimeSet& pi1,
                               const PrimeSet& pi2,
                               const ClassifierConfig& cfg = {});

}  // namespace hall
