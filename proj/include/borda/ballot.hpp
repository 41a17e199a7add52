#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace borda {

// Index into an election's candidate roster.
using CandidateId = int;

class Roster {
 public:
  Roster() = default;
  explicit Roster(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name_of(CandidateId id) const;
  const std::vector<std::string>& names() const { return names_; }
  // -1 when the name is not on the roster.
  CandidateId find(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, CandidateId> index_;
};

enum class MarkKind { candidate, skip, overvote, write_in };

// One rank slot of a cast ballot, as read from the CVR.
struct Mark {
  MarkKind kind = MarkKind::skip;
  std::string name;  // set for candidate marks only
};

struct RawBallot {
  long line = 0;  // 1-based source line, 0 for synthetic ballots
  std::vector<Mark> marks;
};

struct NormalizationFlags {
  bool had_duplicate = false;
  bool had_skip = false;
  bool had_overvote = false;
  bool had_writein = false;
  bool any() const { return had_duplicate || had_skip || had_overvote || had_writein; }
  bool operator==(const NormalizationFlags&) const = default;
};

struct Ballot {
  std::vector<CandidateId> ranking;  // distinct ids; may be empty
  NormalizationFlags flags;
};

struct CvrConfig {
  // Vendors report write-in candidates under a single designated name.
  std::vector<std::string> writein_patterns = {"Write-In", "Write-in", "UWI"};
  // When set, unknown candidate tokens are an error instead of growing the
  // roster discovered from the file.
  std::optional<std::vector<std::string>> roster;
};

struct CvrFile {
  int max_rank = 0;  // m, from the rank1..rankm header
  std::vector<RawBallot> rows;
};

// Canonical CVR CSV: header `rank1,...,rankm`, one row per ballot, cells are
// candidate names or the literals `skipped` / `overvote` / a write-in
// pattern. RFC 4180 quoting for names containing commas or quotes.
CvrFile parse_cvr(std::istream& in, const CvrConfig& config);

// Cleaning pipeline, applied in a fixed order so results are reproducible:
// write-ins out, duplicates after the first out, skipped ranks closed up,
// then everything at and below the first overvote cut off.
Ballot normalize(const RawBallot& raw, const Roster& roster);

// Throws InternalError when a ballot breaks its invariants (duplicate
// entries, ids outside the roster).
void validate_ballot(const Ballot& ballot, const Roster& roster);

struct Profile {
  Roster roster;
  // ballot ranking -> count; every count positive, rankings reference only
  // roster members.
  std::map<std::vector<CandidateId>, long long> types;
  long long total_ballots = 0;
};

struct ProfileBuild {
  Profile profile;
  long long empty_excluded = 0;  // ballots that normalized to an empty ranking
};

ProfileBuild build_profile(const std::vector<Ballot>& ballots,
                           const Roster& roster);

// Convenience for tests and fixtures: counts per ranking, no normalization.
Profile make_profile(Roster roster,
                     const std::vector<std::pair<std::vector<CandidateId>,
                                                 long long>>& types);

// Deletes the given candidates from the slate. Remaining candidates keep
// their relative order within each ballot; rankings that become empty drop
// out of the profile. The result's roster is reindexed.
Profile remove_candidates(const Profile& profile,
                          const std::set<CandidateId>& removed);

// Distinct candidate names appearing in a parsed file, sorted.
Roster roster_from_cvr(const CvrFile& file);

}  // namespace borda
