#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rcg/limits.hpp"
#include "rcg/perm_group.hpp"
#include "rcg/zoo.hpp"

namespace rcg {

enum class Status { Pass, Fail, Skipped, Vacuous, Counterexample };
std::string to_string(Status s);

/// Suite names accepted by verify_group.
const std::vector<std::string>& all_suites();
/// lemmas, theoremA, theoremB, prop45, prop31, lemma41.
const std::vector<std::string>& default_verify_suites();

/// One family of assertions inside a suite.
struct CheckTally {
  std::string id;
  std::uint64_t assertions = 0;
  std::uint64_t failures = 0;
  std::uint64_t skipped = 0;
};

struct SuiteResult {
  std::string suite;
  Status status = Status::Pass;
  std::uint64_t assertions = 0;
  std::string reason;
  std::vector<CheckTally> checks;
  /// Replay payload for FAIL and COUNTEREXAMPLE results, otherwise empty.
  std::string witness_json;
};

struct ClassSummary {
  std::string representative;  // 1-based cycle notation
  std::uint64_t element_order = 1;
  std::uint64_t size = 1;
  bool is_real = false;
};

/// A good element together with the data certifying it.
struct GoodCertificate {
  ClassSummary cls;
  std::string reversing_conjugator;  // g with x^g = x^-1, 1-based cycles
  bool conjugator_verified = false;
  std::string size_factorization;    // e.g. "2^2 * 3"
  bool four_divides_size = false;
  std::uint64_t center_order = 1;
  bool order_coprime_to_center = false;
};

struct TwoFlags {
  bool two_closed = false;
  bool two_nilpotent = false;
};

struct GroupReport {
  std::string name;
  std::string spec;
  std::uint64_t order = 0;
  std::size_t degree = 0;
  /// Set when the group could not be built or analysed; `error_is_cap`
  /// distinguishes cap refusals (SKIPPED) from invalid input (FAIL).
  std::string error;
  bool error_is_cap = false;

  std::size_t class_count = 0;
  std::size_t real_class_count = 0;
  std::vector<std::uint64_t> real_sizes;
  std::vector<std::uint64_t> odd_ppo_real_sizes;
  bool property_T = false;
  bool property_WT = false;
  std::optional<ClassSummary> T_violator;
  std::optional<ClassSummary> WT_violator;
  bool solvable = false;
  std::uint64_t center_order = 1;
  std::uint64_t o2_order = 1;
  std::uint64_t o2prime_order = 1;
  std::uint64_t o_upper_2prime_order = 1;
  TwoFlags flags_group;
  TwoFlags flags_o_upper;
  std::optional<TwoFlags> flags_top;  // G / O_{2'}(G); absent past the quotient cap
  std::vector<ClassSummary> good_elements;
  std::string conjecture_c;
  bool navarro_hypothesis = false;

  std::vector<SuiteResult> suites;
  double seconds = 0.0;

  const SuiteResult* suite(const std::string& name) const;
};

GroupReport verify_group(const PermGroup& group, const std::set<std::string>& suites,
                         const std::string& name = "", const std::string& spec = "");

struct Prop31Result {
  std::string name;
  Status status = Status::Skipped;
  std::string reason;
  std::optional<GoodCertificate> certificate;
};

/// For each nonabelian simple target, looks for a good element and certifies
/// it; other targets are SKIPPED.
std::vector<Prop31Result> verify_prop31(const std::vector<NamedGroup>& targets);
std::optional<GoodCertificate> certify_good_element(const PermGroup& group);

struct CorpusOptions {
  std::set<std::string> suites;
  unsigned jobs = 1;
  bool strict = false;
  Limits limits = default_limits();
};

struct SuiteCounts {
  std::uint64_t pass = 0, fail = 0, skipped = 0, vacuous = 0, counterexample = 0;
  std::uint64_t assertions = 0;
};

struct CorpusReport {
  std::vector<GroupReport> groups;  // sorted by name
  std::map<std::string, SuiteCounts> summary;
  std::vector<std::string> suites;
  int exit_code = 0;
  double seconds = 0.0;
};

CorpusReport run_corpus(const std::vector<GroupSpec>& corpus, const CorpusOptions& options);

inline constexpr int kReportSchemaVersion = 1;

std::string report_to_json(const GroupReport& report, bool timing = true);
std::string corpus_report_to_json(const CorpusReport& report, bool timing = true);
std::string corpus_report_to_text(const CorpusReport& report, bool timing = true);
std::string certificate_to_text(const GoodCertificate& cert);

/// Re-runs the suite named in a witness on the group it carries. Returns the
/// fresh result; `reproduced` is true when it is again FAIL or COUNTEREXAMPLE.
struct ReplayOutcome {
  std::string name;
  SuiteResult result;
  bool reproduced = false;
};
ReplayOutcome replay_witness(const std::string& witness_json, const Limits& limits = default_limits());

}  // namespace rcg
