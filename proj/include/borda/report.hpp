#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "borda/ballot.hpp"
#include "borda/criteria.hpp"
#include "borda/manipulation.hpp"
#include "borda/scoring.hpp"

namespace borda {

enum class OutputFormat { json, csv, table };

struct RunConfig {
  std::vector<Method> methods{kBordaMethods.begin(), kBordaMethods.end()};
  TieRule tie_rule = TieRule::lowest_index;
  int spoiler_cap = 10;
  std::vector<std::string> writein_patterns = CvrConfig{}.writein_patterns;
  bool unranked_last = true;  // last-place vote for the unique unranked candidate
  OutputFormat format = OutputFormat::table;
  SearchLimits limits;

  void validate() const;  // throws InputError
};

struct NormalizationStats {
  long long ballots_read = 0;
  long long empty_excluded = 0;
  long long with_duplicate = 0;
  long long with_skip = 0;
  long long with_overvote = 0;
  long long with_writein = 0;
};

// Election-level facts the failure criteria compare against.
struct CriteriaSummary {
  std::optional<CandidateId> majority_winner;
  std::optional<CandidateId> majority_loser;
  std::optional<CandidateId> condorcet_winner;
  std::optional<CandidateId> condorcet_loser;
};

struct MethodReport {
  Method method = Method::ebc;
  std::vector<CandidateId> winners;
  std::optional<CandidateId> winner;  // tie-broken; empty under report_only ties
  bool tie = false;
  std::vector<Rational> totals;       // per candidate; empty for IRV
  std::optional<IrvResult> irv;
  std::optional<VerifiableFailures> failures;  // unset when winner is unset
  Detection truncation;
  Detection compromise;
  Detection spoiler;
};

struct ElectionReport {
  std::string election;
  std::vector<std::string> roster;
  NormalizationStats normalization;
  long long total_ballots = 0;
  CriteriaSummary criteria;
  std::vector<MethodReport> methods;
  // Methods grouped by equal winner sets, in first-appearance order.
  std::vector<std::vector<Method>> agreement;
};

// Full pipeline over a named fixture or a CVR file on disk.
ElectionReport analyze(const std::string& path_or_fixture, const RunConfig& config);
ElectionReport analyze_stream(const std::string& id, std::istream& in,
                              const RunConfig& config);
ElectionReport analyze_profile(const std::string& id, const Profile& profile,
                               const NormalizationStats& stats,
                               const RunConfig& config);

enum class FailureKind {
  majority_winner,
  majority_loser,
  condorcet_winner,
  condorcet_loser,
  truncation,
  compromise,
  spoiler,
};
inline constexpr std::array<FailureKind, 7> kFailureKinds = {
    FailureKind::majority_winner, FailureKind::majority_loser,
    FailureKind::condorcet_winner, FailureKind::condorcet_loser,
    FailureKind::truncation,      FailureKind::compromise,
    FailureKind::spoiler};
const char* failure_kind_name(FailureKind kind);

struct AggregateCell {
  long long count = 0;
  long long denominator = 0;
};

// Failure counts per method over a batch, with the per-kind denominators:
// majority rates over elections having such a candidate, Condorcet rates
// likewise, spoilers over elections within the candidate cap, manipulation
// rates over every analyzed election.
struct AggregateMatrix {
  std::vector<Method> methods;
  std::vector<std::vector<AggregateCell>> cells;  // [method][failure kind]
};

AggregateMatrix aggregate_reports(const std::vector<ElectionReport>& reports,
                                  const std::vector<Method>& methods);

struct BatchResult {
  std::vector<ElectionReport> reports;
  std::vector<std::string> errors;  // "file: message", run continues
  AggregateMatrix aggregate;
  AgreementMatrix agreement;
};

BatchResult batch(const std::string& directory, const RunConfig& config);

std::string emit_json(const ElectionReport& report);
std::string emit_json(const BatchResult& result);
ElectionReport report_from_json(const std::string& text);
std::string emit_csv(const ElectionReport& report);
std::string emit_csv(const BatchResult& result);
std::string emit_table(const ElectionReport& report);
std::string emit_table(const BatchResult& result);

std::string emit(const ElectionReport& report, OutputFormat format);
std::string emit(const BatchResult& result, OutputFormat format);

}  // namespace borda
