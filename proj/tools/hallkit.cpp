// hallkit: command-line front end for the Hall-subgroup toolkit.
//
// Subcommands:
//   classify        arithmetic existence verdict for a simple group, or the
//                   small-rank criteria for sl2/gl2/gu2/sym inputs
//   lattice         the family of Hall-admitting prime sets of a concrete
//                   group, as text, structured text, or a DOT Hasse diagram
//   verify          named verification suites pitting the arithmetic
//                   criteria against the brute-force engine
//   oracle-compare  sweep report: criteria verdict vs engine verdict
//
// Exit codes: 0 = pass/answered, 1 = verification failure or counterexample,
// 2 = usage or validation error.

#include "CLI11.hpp"
#include "hall/catalog.hpp"
#include "hall/classifier.hpp"
#include "hall/engine/group.hpp"
#include "hall/engine/hall.hpp"
#include "hall/engine/identify.hpp"
#include "hall/engine/subgroup.hpp"
#include "hall/lattice.hpp"

#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using hall::FiniteGroup;
using hall::Int;
using hall::PiFamily;
using hall::PrimeSet;
using hall::SimpleGroupSpec;

// ---------------------------------------------------------------------------
// Shared plumbing

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

struct CommonFlags {
  std::string pi_text;
  std::string format = "text";
  std::int64_t cap = hall::kDefaultElementCap;
  long long q_max = 0;  // 0 = suite default
  std::string eta_adjust = "off";
  std::string floor_variant = "n3";
  std::string strict_l = "on";
  bool no_timing = false;
  bool verbose = false;

  hall::ClassifierConfig config() const {
    hall::ClassifierConfig cfg;
    cfg.eta_adjust = eta_adjust == "on";
    cfg.floor_variant = floor_variant == "n2" ? hall::FloorVariant::HalfOfN
                                              : hall::FloorVariant::ThirdOfN;
    return cfg;
  }
};

// Raised for input problems that should exit with the usage/validation code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PrimeSet parse_pi(const std::string& text) {
  if (text.empty()) throw UsageError("--pi is required for this command");
  std::vector<Int> primes;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      long long value = std::stoll(item, &used);
      if (used != item.size() || value < 2)
        throw UsageError("--pi: '" + item + "' is not a prime");
      primes.push_back(Int(value));
    } catch (const std::invalid_argument&) {
      throw UsageError("--pi: '" + item + "' is not a number");
    } catch (const std::out_of_range&) {
      throw UsageError("--pi: '" + item + "' is out of range");
    }
  }
  try {
    return PrimeSet::from(std::move(primes));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--pi: ") + e.what());
  }
}

// Canonical structured rendering: keys sorted (std::map), one per line, with
// pre-rendered values.  Two runs with the same inputs emit identical bytes
// (the duration key is omitted under --no-timing).
struct Structured {
  std::map<std::string, std::string> fields;

  static std::string str(const std::string& s) { return "\"" + s + "\""; }
  static std::string boolean(bool b) { return b ? "true" : "false"; }
  static std::string list(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out += ", ";
      out += items[i];
    }
    return out + "]";
  }

  void print() const {
    std::cout << "{\n";
    std::size_t index = 0;
    for (const auto& [key, value] : fields) {
      std::cout << "  \"" << key << "\": " << value;
      if (++index != fields.size()) std::cout << ",";
      std::cout << "\n";
    }
    std::cout << "}\n";
  }
};

std::string pi_as_list(const PrimeSet& pi) {
  std::vector<std::string> items;
  for (const Int& p : pi.primes()) items.push_back(p.str());
  return Structured::list(items);
}

// ---------------------------------------------------------------------------
// Engine group construction from a short spec string

std::optional<FiniteGroup> build_engine_group(const std::string& text,
                                              std::int64_t cap) {
  auto split = text.find(':');
  std::string head = text.substr(0, split);
  long long arg = -1;
  if (split != std::string::npos) {
    std::string tail = text.substr(split + 1);
    try {
      std::size_t used = 0;
      arg = std::stoll(tail, &used);
      if (used != tail.size()) return std::nullopt;
    } catch (...) {
      return std::nullopt;
    }
  }
  try {
    if (head == "sym" && arg >= 1) return hall::sym(static_cast<int>(arg), cap);
    if (head == "alt" && arg >= 3) return hall::alt(static_cast<int>(arg), cap);
    if (head == "sl2" && arg >= 2) return hall::sl2(static_cast<int>(arg), cap);
    if (head == "gl2" && arg >= 2) return hall::gl2(static_cast<int>(arg), cap);
    if (head == "gu2" && arg >= 2) return hall::gu2(static_cast<int>(arg), cap);
    if (head == "psl2" && arg >= 4) return hall::psl2(static_cast<int>(arg), cap);
    if (head == "psl3" && arg >= 2) return hall::psl3(static_cast<int>(arg), cap);
    if (head == "dihedral" && arg >= 2)
      return hall::dihedral(static_cast<int>(arg), cap);
    if (head == "cyclic" && arg >= 1) return hall::cyclic(static_cast<int>(arg), cap);
    if (text == "m11" || text == "sporadic:M11") return hall::m11(cap);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("group spec '") + text + "': " + e.what());
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// classify

const std::vector<hall::RowId>& family_rows(hall::Family family,
                                            hall::SporadicName sporadic) {
  using hall::RowId;
  static const std::vector<RowId> kAlt = {RowId::ALT};
  static const std::vector<RowId> kLin = {
      RowId::LIN1, RowId::LIN2, RowId::LIN3, RowId::LIN4,  RowId::LIN5, RowId::LIN6,
      RowId::LIN7, RowId::LIN8, RowId::LIN9, RowId::LIN10, RowId::LIN11};
  static const std::vector<RowId> kUni = {RowId::UNI1, RowId::UNI2, RowId::UNI3};
  static const std::vector<RowId> kOrthOdd = {RowId::BN1, RowId::BN2, RowId::BN3};
  static const std::vector<RowId> kSymp = {RowId::CN1};
  static const std::vector<RowId> kOrthPlus = {RowId::DN1, RowId::DN2, RowId::DN3,
                                               RowId::DN4};
  static const std::vector<RowId> kOrthMinus = {RowId::TDN1, RowId::TDN2,
                                                RowId::TDN3};
  static const std::vector<RowId> kG2 = {RowId::G2R};
  static const std::vector<RowId> kE6 = {RowId::E6R};
  static const std::vector<RowId> kTwE6 = {RowId::TE6R};
  static const std::vector<RowId> kE7 = {RowId::E7R};
  static const std::vector<RowId> kE8 = {RowId::E8R};
  static const std::vector<RowId> kM11 = {RowId::SPOR_M11};
  static const std::vector<RowId> kM22 = {RowId::SPOR_M22};
  static const std::vector<RowId> kM23 = {RowId::SPOR_M23_235, RowId::SPOR_M23_2357,
                                          RowId::SPOR_M23_23571};
  static const std::vector<RowId> kM24 = {RowId::SPOR_M24};
  static const std::vector<RowId> kJ1 = {RowId::SPOR_J1};
  static const std::vector<RowId> kJ4 = {RowId::SPOR_J4};
  switch (family) {
    case hall::Family::Alt: return kAlt;
    case hall::Family::Lin: return kLin;
    case hall::Family::Uni: return kUni;
    case hall::Family::OrthOdd: return kOrthOdd;
    case hall::Family::Symp: return kSymp;
    case hall::Family::OrthPlus: return kOrthPlus;
    case hall::Family::OrthMinus: return kOrthMinus;
    case hall::Family::G2: return kG2;
    case hall::Family::E6: return kE6;
    case hall::Family::TwE6: return kTwE6;
    case hall::Family::E7: return kE7;
    case hall::Family::E8: return kE8;
    case hall::Family::Sporadic:
      switch (sporadic) {
        case hall::SporadicName::M11: return kM11;
        case hall::SporadicName::M22: return kM22;
        case hall::SporadicName::M23: return kM23;
        case hall::SporadicName::M24: return kM24;
        case hall::SporadicName::J1: return kJ1;
        case hall::SporadicName::J4: return kJ4;
      }
  }
  return kAlt;  // unreachable
}

std::string reason_name(hall::NsDecision::Reason reason, hall::GuardOutcome guard) {
  switch (reason) {
    case hall::NsDecision::Reason::PiGroup: return "pi-group";
    case hall::NsDecision::Reason::Rows: return "rows";
    case hall::NsDecision::Reason::NoRow: return "no-row";
    case hall::NsDecision::Reason::GuardFailed:
      return guard == hall::GuardOutcome::NoTwo ? "guard-no-2" : "guard-no-3";
  }
  return "?";
}

// Small-rank criteria answer for sl2:/gl2:/gu2:/sym: spec strings; returns
// false if the spec is not one of those shapes.
bool classify_small(const std::string& text, const PrimeSet& pi,
                    const CommonFlags& flags) {
  auto split = text.find(':');
  if (split == std::string::npos) return false;
  std::string head = text.substr(0, split);
  if (head != "sl2" && head != "gl2" && head != "gu2" && head != "sym")
    return false;
  long long arg = 0;
  try {
    std::size_t used = 0;
    arg = std::stoll(text.substr(split + 1), &used);
    if (used != text.size() - split - 1) throw std::invalid_argument("trailing");
  } catch (...) {
    throw UsageError("spec '" + text + "': malformed parameter");
  }

  Timer timer;
  if (head == "sym") {
    bool exists = hall::hall_sym_exists(arg, pi);
    bool ns = hall::sym_ns(arg, pi);
    if (flags.format == "text") {
      std::cout << "criterion: symmetric group, n = " << arg << "\n"
                << "pi: " << pi.to_string() << "\n"
                << "hall-exists: " << (exists ? "yes" : "no") << "\n"
                << "non-solvable-hall: " << (ns ? "yes" : "no") << "\n";
      if (!flags.no_timing) std::cout << "duration-ms: " << timer.ms() << "\n";
    } else {
      Structured out;
      out.fields["command"] = Structured::str("classify");
      out.fields["criterion"] = Structured::str("sym");
      out.fields["n"] = std::to_string(arg);
      out.fields["pi"] = pi_as_list(pi);
      out.fields["hall_exists"] = Structured::boolean(exists);
      out.fields["non_solvable_hall"] = Structured::boolean(ns);
      if (!flags.no_timing) out.fields["duration_ms"] = std::to_string(timer.ms());
      out.print();
    }
    return true;
  }

  hall::SmallHallCase verdict;
  if (head == "sl2")
    verdict = hall::hall_sl2(Int(arg), pi);
  else
    verdict = hall::hall_gl2(head == "gl2" ? hall::Eta::Plus : hall::Eta::Minus,
                             Int(arg), pi, flags.config());
  std::string tag =
      verdict.tag ? hall::small_hall_tag_name(*verdict.tag) : std::string("none");
  if (flags.format == "text") {
    std::cout << "criterion: " << head << ", q = " << arg << "\n"
              << "pi: " << pi.to_string() << "\n"
              << "hall-exists: " << (verdict.exists ? "yes" : "no") << "\n"
              << "case: " << tag << "\n"
              << "cases: dihedral=" << verdict.case_dihedral
              << " sym4=" << verdict.case_sym4
              << " altsym4=" << verdict.case_altsym4
              << " alt5=" << verdict.case_alt5 << "\n"
              << "single-class: " << (verdict.single_class ? "yes" : "no") << "\n";
    if (!flags.no_timing) std::cout << "duration-ms: " << timer.ms() << "\n";
  } else {
    Structured out;
    out.fields["command"] = Structured::str("classify");
    out.fields["criterion"] = Structured::str(head);
    out.fields["q"] = std::to_string(arg);
    out.fields["pi"] = pi_as_list(pi);
    out.fields["hall_exists"] = Structured::boolean(verdict.exists);
    out.fields["case"] = Structured::str(tag);
    out.fields["case_dihedral"] = Structured::boolean(verdict.case_dihedral);
    out.fields["case_sym4"] = Structured::boolean(verdict.case_sym4);
    out.fields["case_altsym4"] = Structured::boolean(verdict.case_altsym4);
    out.fields["case_alt5"] = Structured::boolean(verdict.case_alt5);
    out.fields["single_class"] = Structured::boolean(verdict.single_class);
    if (!flags.no_timing) out.fields["duration_ms"] = std::to_string(timer.ms());
    out.print();
  }
  return true;
}

int cmd_classify(const std::string& spec_text, const CommonFlags& flags) {
  PrimeSet pi = parse_pi(flags.pi_text);
  if (classify_small(spec_text, pi, flags)) return 0;

  auto parsed = hall::parse_group_spec(spec_text);
  if (!parsed.ok()) throw UsageError("spec '" + spec_text + "': " + parsed.error);
  SimpleGroupSpec spec = *parsed.spec;
  auto valid = hall::validate(spec);
  if (!valid.ok) throw UsageError("spec '" + spec_text + "': " + valid.reason);

  Timer timer;
  hall::NsDecision decision = hall::e_pi_ns(spec, pi, flags.config());

  std::vector<std::string> row_labels;
  for (const auto& match : decision.rows) {
    std::string label = hall::row_name(match.row);
    if (match.aut_invariant) label += "+";
    row_labels.push_back(label);
  }

  if (flags.format == "text") {
    std::cout << "group: " << spec.to_string() << "\n"
              << "pi: " << pi.to_string() << "\n"
              << "verdict: " << (decision.in_e_ns ? "in" : "not in")
              << " E_pi^ns (non-solvable Hall pi-subgroup "
              << (decision.in_e_ns ? "exists" : "does not exist") << ")\n"
              << "reason: " << reason_name(decision.reason, decision.guard) << "\n";
    std::cout << "rows:";
    if (row_labels.empty()) std::cout << " (none)";
    for (const auto& label : row_labels) std::cout << " " << label;
    std::cout << "\n";
    std::cout << "aut-invariant-class: " << (decision.aut_invariant ? "yes" : "no")
              << "\n";
    if (flags.verbose) {
      std::cout << "conditions:\n";
      for (hall::RowId row : family_rows(spec.family, spec.sporadic)) {
        bool fired = false;
        for (const auto& match : decision.rows)
          if (match.row == row) fired = true;
        std::cout << "  " << hall::row_name(row) << ": "
                  << (fired ? "holds" : "does not hold") << "\n";
      }
    }
    if (!flags.no_timing) std::cout << "duration-ms: " << timer.ms() << "\n";
  } else {
    Structured out;
    out.fields["command"] = Structured::str("classify");
    out.fields["group"] = Structured::str(spec.to_string());
    out.fields["pi"] = pi_as_list(pi);
    out.fields["in_e_ns"] = Structured::boolean(decision.in_e_ns);
    out.fields["reason"] =
        Structured::str(reason_name(decision.reason, decision.guard));
    std::vector<std::string> quoted;
    for (const auto& label : row_labels) quoted.push_back(Structured::str(label));
    out.fields["rows"] = Structured::list(quoted);
    out.fields["aut_invariant_class"] = Structured::boolean(decision.aut_invariant);
    if (!flags.no_timing) out.fields["duration_ms"] = std::to_string(timer.ms());
    out.print();
  }
  return 0;
}

// ---------------------------------------------------------------------------
// lattice

void print_lattice_dot(const PiFamily& family) {
  const auto& m = family.members;
  std::cout << "digraph hall_family {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < m.size(); ++i)
    std::cout << "  n" << i << " [label=\"" << m[i].to_string() << "\"];\n";
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i == j || !m[i].subset_of(m[j])) continue;
      bool covering = true;
      for (std::size_t k = 0; k < m.size() && covering; ++k)
        if (k != i && k != j && m[i].subset_of(m[k]) && m[k].subset_of(m[j]) &&
            !(m[k] == m[i]) && !(m[k] == m[j]))
          covering = false;
      if (covering) std::cout << "  n" << i << " -> n" << j << ";\n";
    }
  std::cout << "}\n";
}

int cmd_lattice(const std::string& spec_text, const CommonFlags& flags) {
  auto group = build_engine_group(spec_text, flags.cap);
  if (!group)
    throw UsageError("group spec '" + spec_text +
                     "': expected sym:n, alt:n, sl2:q, gl2:q, gu2:q, psl2:q, "
                     "psl3:q, dihedral:m, cyclic:m, or m11");

  Timer timer;
  PiFamily family;
  try {
    family = hall::pi_family(*group, hall::ExecPolicy::Parallel);
  } catch (const hall::CapExceeded& e) {
    throw UsageError(std::string("cap exceeded: ") + e.what());
  }
  auto meet = hall::is_meet_closed(family);
  auto lattice = hall::is_lattice(family);

  if (flags.format == "dot") {
    print_lattice_dot(family);
    return 0;
  }
  if (flags.format == "text") {
    std::cout << "group: " << group->name() << " (order " << group->order()
              << ")\n"
              << "base: " << family.base.to_string() << "\n"
              << "members (" << family.members.size() << "):\n";
    for (const auto& member : family.members)
      std::cout << "  " << member.to_string() << "\n";
    std::cout << "meet-closed: " << (meet.holds ? "yes" : "no") << "\n"
              << "lattice: " << (lattice.holds ? "yes" : "no") << "\n";
    if (!flags.no_timing) std::cout << "duration-ms: " << timer.ms() << "\n";
  } else {
    Structured out;
    out.fields["command"] = Structured::str("lattice");
    out.fields["group"] = Structured::str(group->name());
    out.fields["order"] = std::to_string(group->order());
    out.fields["base"] = pi_as_list(family.base);
    std::vector<std::string> members;
    for (const auto& member : family.members) members.push_back(pi_as_list(member));
    out.fields["members"] = Structured::list(members);
    out.fields["meet_closed"] = Structured::boolean(meet.holds);
    out.fields["lattice"] = Structured::boolean(lattice.holds);
    if (!flags.no_timing) out.fields["duration_ms"] = std::to_string(timer.ms());
    out.print();
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify suites

struct SuiteReport {
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> failure_lines;

  void fail(const std::string& line) {
    ++failures;
    failure_lines.push_back(line);
  }
};

// The engine battery: symmetric and alternating groups, the rank-2 matrix
// groups, three projective families, the smallest Mathieu group, and the
// dihedral groups of order up to 100.
std::vector<FiniteGroup> verification_battery(std::int64_t cap) {
  std::vector<FiniteGroup> out;
  for (int n = 3; n <= 7; ++n) out.push_back(hall::sym(n, cap));
  for (int n = 4; n <= 7; ++n) out.push_back(hall::alt(n, cap));
  for (int q : {5, 7, 9, 11, 13}) out.push_back(hall::sl2(q, cap));
  out.push_back(hall::gl2(5, cap));
  out.push_back(hall::gl2(7, cap));
  out.push_back(hall::gu2(3, cap));
  out.push_back(hall::gu2(5, cap));
  for (int q : {7, 11, 13}) out.push_back(hall::psl2(q, cap));
  out.push_back(hall::psl3(3, cap));
  out.push_back(hall::m11(cap));
  for (int m = 3; m <= 50; ++m) out.push_back(hall::dihedral(m, cap));
  return out;
}

SuiteReport suite_theorem2(const CommonFlags& flags) {
  SuiteReport report;
  for (const FiniteGroup& g : verification_battery(flags.cap)) {
    PiFamily family = hall::pi_family(g, hall::ExecPolicy::Parallel);
    auto meet = hall::is_meet_closed(family);
    ++report.checks;
    if (!meet.holds)
      report.fail(g.name() + ": meet fails at " + meet.tau1.to_string() + " vs " +
                  meet.tau2.to_string());
  }
  return report;
}

SuiteReport suite_corollary1(const CommonFlags& flags) {
  SuiteReport report;
  for (const FiniteGroup& g : verification_battery(flags.cap)) {
    PiFamily family = hall::pi_family(g, hall::ExecPolicy::Parallel);
    auto lattice = hall::is_lattice(family);
    ++report.checks;
    if (!lattice.holds)
      report.fail(g.name() + ": no lattice, pair " + lattice.tau1.to_string() +
                  " vs " + lattice.tau2.to_string());
  }
  // The join can exceed the set union.
  PiFamily family = hall::pi_family(hall::alt(5, flags.cap));
  auto join = hall::family_join(family, PrimeSet::of({2}), PrimeSet::of({5}));
  ++report.checks;
  if (!join || !(*join == PrimeSet::of({2, 3, 5})))
    report.fail("alt:5 join({2},{5}) != {2,3,5}");
  return report;
}

SuiteReport suite_theorem1(const CommonFlags& flags) {
  SuiteReport report;
  const bool include_boundary = flags.strict_l == "off";
  long long boundary_counterexamples = 0;
  for (const FiniteGroup& g : verification_battery(flags.cap)) {
    const auto base = g.prime_list();
    const unsigned subsets = 1u << base.size();
    for (unsigned mask = 0; mask < subsets; ++mask) {
      std::vector<Int> chosen;
      for (std::size_t i = 0; i < base.size(); ++i)
        if (mask & (1u << i)) chosen.push_back(Int(base[i]));
      if (chosen.size() < 3) continue;
      PrimeSet pi = PrimeSet::from_primes_unchecked(std::move(chosen));
      const int size = static_cast<int>(pi.size());
      for (int l = 2; l < size; ++l) {
        auto r = hall::theorem1_check(g, pi, l);
        ++report.checks;
        if (r.verdict == hall::Theorem1Verdict::Counterexample)
          report.fail(g.name() + " pi=" + pi.to_string() + " l=" +
                      std::to_string(l) + ": counterexample");
      }
      if (include_boundary) {
        auto r = hall::theorem1_check(g, pi, size, true);
        ++report.checks;
        if (r.verdict == hall::Theorem1Verdict::Counterexample) {
          ++boundary_counterexamples;
          std::cout << "  boundary l = |pi|: expected counterexample at "
                    << g.name() << " pi=" << pi.to_string() << "\n";
        }
      }
    }
  }
  if (include_boundary && boundary_counterexamples == 0)
    report.fail(
        "boundary sweep found no counterexample, but the l = |pi| form is "
        "expected to fail (e.g. the order-60 simple group)");
  return report;
}

SuiteReport suite_lemmas(const CommonFlags& flags) {
  SuiteReport report;
  const long long q_max = flags.q_max == 0 ? 13 : flags.q_max;
  hall::ClassifierConfig cfg = flags.config();

  struct Rank2Sweep {
    const char* label;
    std::vector<int> qs;
  };
  const Rank2Sweep sweeps[] = {
      {"sl2", {5, 7, 9, 11, 13}},
      {"gl2", {5, 7}},
      {"gu2", {3, 5}},
  };
  for (const auto& sweep : sweeps) {
    for (int q : sweep.qs) {
      if (q > q_max) continue;
      std::string label = std::string(sweep.label) + ":" + std::to_string(q);
      FiniteGroup g = sweep.label == std::string("sl2") ? hall::sl2(q, flags.cap)
                      : sweep.label == std::string("gl2")
                          ? hall::gl2(q, flags.cap)
                          : hall::gu2(q, flags.cap);
      // The defining characteristic of these q values.
      long long p = q == 9 ? 3 : q;
      const auto base = g.prime_list();
      const unsigned subsets = 1u << base.size();
      for (unsigned mask = 0; mask < subsets; ++mask) {
        std::vector<Int> chosen;
        for (std::size_t i = 0; i < base.size(); ++i)
          if (mask & (1u << i)) chosen.push_back(Int(base[i]));
        PrimeSet pi = PrimeSet::from_primes_unchecked(std::move(chosen));
        if (!pi.contains(Int(2)) || !pi.contains(Int(3))) continue;
        if (pi.contains(Int(p))) continue;
        bool oracle;
        if (sweep.label == std::string("sl2"))
          oracle = hall::hall_sl2(Int(q), pi).exists;
        else
          oracle = hall::hall_gl2(sweep.label == std::string("gl2")
                                      ? hall::Eta::Plus
                                      : hall::Eta::Minus,
                                  Int(q), pi, cfg)
                       .exists;
        bool engine = !hall::hall_subgroups(g, pi).empty();
        ++report.checks;
        if (oracle != engine)
          report.fail(label + " pi=" + pi.to_string() + ": criteria say " +
                      (oracle ? "exists" : "absent") + ", engine says " +
                      (engine ? "exists" : "absent"));
      }
    }
  }

  for (int n = 3; n <= 8; ++n) {
    FiniteGroup g = hall::sym(n, flags.cap);
    const auto base = g.prime_list();
    const unsigned subsets = 1u << base.size();
    for (unsigned mask = 0; mask < subsets; ++mask) {
      std::vector<Int> chosen;
      for (std::size_t i = 0; i < base.size(); ++i)
        if (mask & (1u << i)) chosen.push_back(Int(base[i]));
      PrimeSet pi = PrimeSet::from_primes_unchecked(std::move(chosen));
      bool oracle = hall::hall_sym_exists(n, pi);
      bool engine = !hall::hall_subgroups(g, pi).empty();
      ++report.checks;
      if (oracle != engine)
        report.fail("sym:" + std::to_string(n) + " pi=" + pi.to_string() +
                    ": criteria say " + (oracle ? "exists" : "absent") +
                    ", engine says " + (engine ? "exists" : "absent"));
    }
  }
  return report;
}

SuiteReport suite_table1_meet(const CommonFlags& flags) {
  SuiteReport report;
  hall::ClassifierConfig cfg = flags.config();

  std::vector<SimpleGroupSpec> specs;
  auto add_if_valid = [&](SimpleGroupSpec spec) {
    if (hall::validate(spec).ok) specs.push_back(spec);
  };
  auto bounded = [&](long long suite_default) {
    return flags.q_max == 0 ? suite_default
                            : std::min<long long>(suite_default, flags.q_max);
  };
  for (long long q = 2; q <= bounded(49); ++q)
    if (hall::is_prime_power(Int(q))) add_if_valid(SimpleGroupSpec::lin(2, Int(q)));
  for (int n = 3; n <= 8; ++n)
    for (long long q = 2; q <= bounded(9); ++q)
      if (hall::is_prime_power(Int(q))) add_if_valid(SimpleGroupSpec::lin(n, Int(q)));
  for (int n = 3; n <= 6; ++n)
    for (long long q = 2; q <= bounded(5); ++q)
      if (hall::is_prime_power(Int(q))) add_if_valid(SimpleGroupSpec::uni(n, Int(q)));
  for (long long q = 3; q <= bounded(11); ++q)
    if (hall::is_prime_power(Int(q))) add_if_valid(SimpleGroupSpec::g2(Int(q)));
  for (auto name : {hall::SporadicName::M11, hall::SporadicName::M22,
                    hall::SporadicName::M23, hall::SporadicName::M24,
                    hall::SporadicName::J1, hall::SporadicName::J4})
    add_if_valid(SimpleGroupSpec::sporadic_group(name));

  for (const SimpleGroupSpec& spec : specs) {
    PrimeSet support = hall::prime_set(spec);
    if (support.size() > 7) continue;
    const auto& primes = support.primes();
    const unsigned subsets = 1u << primes.size();
    std::vector<PrimeSet> all;
    std::vector<std::vector<hall::RowMatch>> rows;
    for (unsigned mask = 0; mask < subsets; ++mask) {
      std::vector<Int> chosen;
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (mask & (1u << i)) chosen.push_back(primes[i]);
      PrimeSet pi = PrimeSet::from_primes_unchecked(std::move(chosen));
      rows.push_back(hall::table1_rows(spec, pi, cfg));
      all.push_back(std::move(pi));
    }
    for (unsigned i = 0; i < subsets; ++i) {
      if (rows[i].empty()) continue;
      for (unsigned j = 0; j < subsets; ++j) {
        if (rows[j].empty()) continue;
        bool shared = false;
        for (const auto& a : rows[i])
          for (const auto& b : rows[j])
            if (a.row == b.row) shared = true;
        if (!shared) continue;  // vacuous pair
        auto result = hall::row_meet_check(spec, all[i], all[j], cfg);
        ++report.checks;
        if (!result.holds)
          report.fail(spec.to_string() + " pi1=" + all[i].to_string() +
                      " pi2=" + all[j].to_string() + ": row " +
                      hall::row_name(*result.violation) +
                      " does not fire for the intersection");
      }
    }
  }
  return report;
}

SuiteReport suite_sym7_example(const CommonFlags& flags) {
  SuiteReport report;
  FiniteGroup s6 = hall::sym(6, flags.cap);
  FiniteGroup s7 = hall::sym(7, flags.cap);

  ++report.checks;
  if (!hall::hall_subgroups(s6, PrimeSet::of({2, 3})).empty())
    report.fail("sym:6 unexpectedly has a Hall {2,3}-subgroup");

  auto big = hall::hall_subgroups(s7, PrimeSet::of({2, 3, 5}));
  ++report.checks;
  if (big.size() != 1)
    report.fail("sym:7 {2,3,5}: expected one class, got " +
                std::to_string(big.size()));
  if (big.size() == 1) {
    ++report.checks;
    bool all_fix = true;
    for (const auto& members : hall::subgroup_orbit(s7, big[0])) {
      bool fixes = false;
      for (int point = 0; point < 7 && !fixes; ++point) {
        bool every = true;
        for (std::int32_t idx : members)
          if (s7.element(idx).bytes[static_cast<std::size_t>(point)] != point) {
            every = false;
            break;
          }
        fixes = every;
      }
      if (!fixes) all_fix = false;
    }
    if (!all_fix) report.fail("sym:7 {2,3,5}: some member fixes no point");
  }

  auto small = hall::hall_subgroups(s7, PrimeSet::of({2, 3}));
  ++report.checks;
  if (small.size() != 1 || small[0].order() != 144)
    report.fail("sym:7 {2,3}: expected one class of order 144");

  auto witness = hall::intersection_witness(s7, PrimeSet::of({2, 3, 5}),
                                            PrimeSet::of({2, 3}));
  ++report.checks;
  if (witness.exists_pair)
    report.fail("sym:7: unexpected intersection pair after " +
                std::to_string(witness.pairs_searched) + " pairs");
  return report;
}

int cmd_verify(const std::string& suite, const CommonFlags& flags) {
  Timer timer;
  SuiteReport report;
  if (suite == "theorem2")
    report = suite_theorem2(flags);
  else if (suite == "corollary1")
    report = suite_corollary1(flags);
  else if (suite == "theorem1")
    report = suite_theorem1(flags);
  else if (suite == "lemmas")
    report = suite_lemmas(flags);
  else if (suite == "table1-meet")
    report = suite_table1_meet(flags);
  else if (suite == "sym7-example")
    report = suite_sym7_example(flags);
  else
    throw UsageError("unknown suite '" + suite +
                     "' (expected theorem2, corollary1, theorem1, lemmas, "
                     "table1-meet, or sym7-example)");

  for (const auto& line : report.failure_lines) std::cout << "  FAIL " << line << "\n";
  std::cout << "suite " << suite << ": "
            << (report.failures == 0 ? "PASS" : "FAIL") << " ("
            << report.checks << " checks, " << report.failures << " failures";
  if (!flags.no_timing) std::cout << ", " << timer.ms() << " ms";
  std::cout << ")\n";
  return report.failures == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// oracle-compare

int cmd_oracle_compare(const std::string& family, const CommonFlags& flags) {
  Timer timer;
  hall::ClassifierConfig cfg = flags.config();
  long long disagreements = 0;
  long long rows = 0;

  auto sweep_rank2 = [&](const std::string& label, const std::vector<int>& qs) {
    for (int q : qs) {
      if (flags.q_max != 0 && q > flags.q_max) continue;
      FiniteGroup g = label == "sl2"   ? hall::sl2(q, flags.cap)
                      : label == "gl2" ? hall::gl2(q, flags.cap)
                                       : hall::gu2(q, flags.cap);
      long long p = q == 9 ? 3 : q;
      const auto base = g.prime_list();
      const unsigned subsets = 1u << base.size();
      for (unsigned mask = 0; mask < subsets; ++mask) {
        std::vector<Int> chosen;
        for (std::size_t i = 0; i < base.size(); ++i)
          if (mask & (1u << i)) chosen.push_back(Int(base[i]));
        PrimeSet pi = PrimeSet::from_primes_unchecked(std::move(chosen));
        if (!pi.contains(Int(2)) || !pi.contains(Int(3)) || pi.contains(Int(p)))
          continue;
        bool oracle = label == "sl2"
                          ? hall::hall_sl2(Int(q), pi).exists
                          : hall::hall_gl2(label == "gl2" ? hall::Eta::Plus
                                                          : hall::Eta::Minus,
                                           Int(q), pi, cfg)
                                .exists;
        std::size_t classes = hall::hall_subgroups(g, pi).size();
        bool agree = oracle == (classes > 0);
        ++rows;
        if (!agree) ++disagreements;
        std::cout << label << ":" << q << " pi=" << pi.to_string()
                  << " criteria=" << (oracle ? "exists" : "absent")
                  << " engine-classes=" << classes
                  << (agree ? "" : "  << DISAGREE") << "\n";
      }
    }
  };

  if (family == "all" || family == "sl2") sweep_rank2("sl2", {5, 7, 9, 11, 13});
  if (family == "all" || family == "gl2") sweep_rank2("gl2", {5, 7});
  if (family == "all" || family == "gu2") sweep_rank2("gu2", {3, 5, 7});
  if (family == "all" || family == "sym") {
    for (int n = 3; n <= 8; ++n) {
      FiniteGroup g = hall::sym(n, flags.cap);
      const auto base = g.prime_list();
      const unsigned subsets = 1u << base.size();
      for (unsigned mask = 1; mask < subsets; ++mask) {
        std::vector<Int> chosen;
        for (std::size_t i = 0; i < base.size(); ++i)
          if (mask & (1u << i)) chosen.push_back(Int(base[i]));
        PrimeSet pi = PrimeSet::from_primes_unchecked(std::move(chosen));
        bool oracle = hall::hall_sym_exists(n, pi);
        std::size_t classes = hall::hall_subgroups(g, pi).size();
        bool agree = oracle == (classes > 0);
        ++rows;
        if (!agree) ++disagreements;
        std::cout << "sym:" << n << " pi=" << pi.to_string()
                  << " criteria=" << (oracle ? "exists" : "absent")
                  << " engine-classes=" << classes
                  << (agree ? "" : "  << DISAGREE") << "\n";
      }
    }
  }

  std::cout << "rows: " << rows << ", disagreements: " << disagreements;
  if (!flags.no_timing) std::cout << ", " << timer.ms() << " ms";
  std::cout << "\n";
  return disagreements == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hall-subgroup toolkit: arithmetic criteria and brute-force "
               "verification for Hall pi-subgroups"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string spec_text;
  std::string suite;
  std::string compare_family = "all";

  auto add_common = [&](CLI::App* cmd, bool with_pi) {
    if (with_pi) cmd->add_option("--pi", flags.pi_text, "comma-separated primes");
    cmd->add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"text", "json-like-structured", "dot"}));
    cmd->add_option("--cap", flags.cap, "element cap for group enumeration");
    cmd->add_option("--q-max", flags.q_max, "upper bound for swept field sizes");
    cmd->add_option("--eta-adjust", flags.eta_adjust,
                    "unitary torus reading: off = q - eps(q) for both signs")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--floor-variant", flags.floor_variant,
                    "symmetric index in the rank-splitting rows: n3 = "
                    "floor(n/3), n2 = floor(n/2)")
        ->check(CLI::IsMember({"n3", "n2"}));
    cmd->add_option("--strict-l", flags.strict_l,
                    "on: sweep 2 <= l < |pi| only; off: also test l = |pi| "
                    "(expected to produce boundary counterexamples)")
        ->check(CLI::IsMember({"on", "off"}));
    cmd->add_flag("--no-timing", flags.no_timing,
                  "suppress duration fields for byte-identical reruns");
    cmd->add_flag("--verbose", flags.verbose,
                  "print each row condition evaluated and its truth value");
  };

  CLI::App* classify = app.add_subcommand(
      "classify", "existence verdict for a group spec and prime set");
  classify->add_option("spec", spec_text,
                       "catalog spec (e.g. lin:2,11, alt:7, sporadic:M11) or "
                       "small-rank criterion (sl2:q, gl2:q, gu2:q, sym:n)")
      ->required();
  add_common(classify, true);

  CLI::App* lattice = app.add_subcommand(
      "lattice", "family of Hall-admitting prime sets of a concrete group");
  lattice->add_option("spec", spec_text,
                      "engine group (sym:n, alt:n, sl2:q, gl2:q, gu2:q, "
                      "psl2:q, psl3:q, dihedral:m, cyclic:m, m11)")
      ->required();
  add_common(lattice, false);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite,
                     "theorem2 | corollary1 | theorem1 | lemmas | table1-meet "
                     "| sym7-example")
      ->required();
  add_common(verify, false);

  CLI::App* compare = app.add_subcommand(
      "oracle-compare", "criteria vs engine sweep with a disagreement table");
  compare->add_option("--family", compare_family, "sweep family")
      ->check(CLI::IsMember({"all", "sl2", "gl2", "gu2", "sym"}));
  add_common(compare, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(classify)) return cmd_classify(spec_text, flags);
    if (app.got_subcommand(lattice)) return cmd_lattice(spec_text, flags);
    if (app.got_subcommand(verify)) return cmd_verify(suite, flags);
    return cmd_oracle_compare(compare_family, flags);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hall::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
