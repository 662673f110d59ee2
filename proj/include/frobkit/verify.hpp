#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace frobkit {

enum class Suite {
  CkUpdate,         // rank-one update of principal minor sums
  LinAlg,           // vanishing moments <=> charpoly invariant under nu_lambda
  QaInRa,           // commutator certificates imply vanishing moments
  Filtration,       // R_A as a union of filtration strata
  CanonicalForm,    // Frobenius form, invariant factors, transpose conjugator
  CayleyHamilton,   // Faddeev chain and P_A(A) = 0
  OrbitCensus,      // brute-force similarity classes for n = 2 over F_3
  Equivariance,     // the group action commutes with nu_lambda and rho_f
};

inline constexpr Suite kAllSuites[] = {Suite::CkUpdate,      Suite::LinAlg,         Suite::QaInRa,
                                       Suite::Filtration,    Suite::CanonicalForm,  Suite::CayleyHamilton,
                                       Suite::OrbitCensus,   Suite::Equivariance};

std::string suite_name(Suite s);
std::optional<Suite> suite_from_name(const std::string& name);

struct FieldSpec {
  std::uint64_t p = 3;
  unsigned k = 1;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Every suite has a default corpus. `fields`, `n_max` and `trials` replace
/// the field list, the largest dimension and the per-cell trial count of the
/// randomized corpora; the fixed exhaustive cases are unaffected.
struct VerifyConfig {
  std::uint64_t seed = 20240601;
  std::vector<FieldSpec> fields;
  std::optional<std::size_t> n_max;
  std::optional<std::uint64_t> trials;
  std::uint64_t exhaustive_bound = 6561;
  std::vector<Suite> suites;  // empty: all, in the order of kAllSuites
  bool mutate_ck_update = false;  // swap in a corrupted update formula
  bool timing = false;            // record wall time (breaks byte-identity)
  unsigned threads = 0;           // 0: hardware concurrency

  /// ConfigError on an unusable configuration.
  void validate() const;
};

/// A violated identity with everything needed to re-check it by hand.
struct Counterexample {
  std::string identity;
  nlohmann::json instance;
  nlohmann::json lhs;
  nlohmann::json rhs;
};

struct SuiteResult {
  Suite suite = Suite::CkUpdate;
  bool pass = true;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::map<std::string, std::uint64_t> tallies;
  std::optional<Counterexample> counterexample;
  std::optional<double> seconds;
};

struct Report {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;
  bool pass() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

/// Runs the selected suites. Cells run concurrently; the report is
/// assembled in a fixed order, so for a fixed seed it does not depend on
/// the thread count (timing aside).
Report run_verify(const VerifyConfig& config);
SuiteResult run_suite(Suite s, const VerifyConfig& config);

}  // namespace frobkit
