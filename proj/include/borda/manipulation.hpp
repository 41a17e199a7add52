#pragma once

#include <optional>
#include <set>
#include <vector>

#include "borda/ballot.hpp"
#include "borda/scoring.hpp"

namespace borda {

enum class WitnessKind { truncation, compromise, spoiler };

// One ballot-type modification: `count` ballots move from `original` to
// `modified`. For truncation `modified` is a strict prefix of `original`;
// for compromise it is `original` with the challenger moved to rank 1.
struct BallotMove {
  std::vector<CandidateId> original;
  std::vector<CandidateId> modified;
  long long count = 0;
};

// A machine-checkable demonstration of a failure: replaying it against the
// original profile makes `resulting_winner` the unique winner.
struct Witness {
  WitnessKind kind = WitnessKind::truncation;
  std::optional<CandidateId> challenger;  // truncation/compromise
  std::vector<BallotMove> moves;          // truncation/compromise
  std::set<CandidateId> removed;          // spoiler
  CandidateId resulting_winner = -1;
  long long total_moved() const;
};

enum class DetectionStatus {
  witness,       // failure found, see `witness`
  none,          // searched, no failure
  immune,        // theorem rules the failure out for this method
  skipped,       // slate larger than the spoiler cap
  not_searched,  // method or tie state outside the detector's scope
};

struct Detection {
  DetectionStatus status = DetectionStatus::none;
  std::optional<Witness> witness;
  // Set when the exact search could not run to completion (too many eligible
  // ballot types or search budget exhausted): a `none` may be a false
  // negative and a witness count may not be minimal.
  bool heuristic = false;
};

struct SearchLimits {
  // Exact truncation refinement runs when at most this many ballot types are
  // eligible; beyond it only the first-stage heuristic cut is tried.
  int exact_type_limit = 12;
  long long cut_combo_limit = 20000;
  long long node_budget = 2'000'000;
};

// Searches for a losing candidate whose supporters could cut their ballots
// short and flip the election to them. Stage 1 applies the heuristic cut
// (truncate every eligible ballot just above the winner); stage 2 refines
// over per-type cut points and counts, exactly within SearchLimits.
Detection truncation_failure(const Profile& profile, Method method,
                             TieRule rule = TieRule::lowest_index,
                             const SearchLimits& limits = {});

// Searches for a losing candidate that eligible voters (those ranking the
// candidate above the winner, with someone ranked higher still) could
// promote to rank 1 and thereby elect.
Detection compromise_failure(const Profile& profile, Method method,
                             TieRule rule = TieRule::lowest_index,
                             const SearchLimits& limits = {});

// Removes every nonempty proper subset of losing candidates in turn and
// reports the lexicographically smallest subset that changes the winner.
Detection spoiler_effect(const Profile& profile, Method method,
                         int max_candidates = 10,
                         TieRule rule = TieRule::lowest_index);

// Exhaustive reference search over the same modification model, for small
// instances only (n <= 4, <= 6 ballot types, per-type counts <= 8). Kept
// deliberately simple and separate from the staged detectors above; the test
// suites check the two agree on failure existence.
std::optional<Witness> brute_force_oracle(const Profile& profile, Method method,
                                          WitnessKind kind,
                                          TieRule rule = TieRule::lowest_index);

// Applies the moves of a truncation/compromise witness to a profile.
Profile apply_moves(const Profile& profile, const std::vector<BallotMove>& moves);

// True when replaying the witness yields its resulting_winner as the unique
// winner. Every detector asserts this before emitting.
bool replay_witness(const Profile& profile, Method method, const Witness& witness);

}  // namespace borda
