#pragma once

#include <optional>
#include <vector>

#include "borda/ballot.hpp"

namespace borda {

// counts(x, y): ballots ranking x above y. A ranked candidate beats every
// unranked one; ballots leaving both unranked contribute nothing to the pair.
class PairwiseMatrix {
 public:
  explicit PairwiseMatrix(int n) : n_(n), counts_(n * n, 0) {}
  int size() const { return n_; }
  long long at(CandidateId x, CandidateId y) const { return counts_[x * n_ + y]; }
  void add(CandidateId x, CandidateId y, long long c) { counts_[x * n_ + y] += c; }

 private:
  int n_;
  std::vector<long long> counts_;
};

PairwiseMatrix pairwise_matrix(const Profile& profile);

// Candidate with a strict majority of first-place votes, if any.
std::optional<CandidateId> majority_winner(const Profile& profile);

// Candidate with a strict majority of last-place votes, if any. A complete
// ballot's lowest-ranked candidate gets its last-place vote; when
// unranked_last is set, so does the unique unranked candidate of a ballot
// ranking n-1. Ballots leaving two or more candidates unranked carry no
// last-place vote but still count toward the majority denominator.
std::optional<CandidateId> majority_loser(const Profile& profile,
                                          bool unranked_last = true);

struct CondorcetPair {
  std::optional<CandidateId> winner;  // beats every other head-to-head
  std::optional<CandidateId> loser;   // loses every matchup
};

CondorcetPair condorcet_candidates(const PairwiseMatrix& matrix);

struct FailureWitness {
  CandidateId criterion_candidate;
  CandidateId method_winner;
  bool operator==(const FailureWitness&) const = default;
};

struct VerifiableFailures {
  std::optional<FailureWitness> majority_winner_failure;
  std::optional<FailureWitness> majority_loser_failure;
  std::optional<FailureWitness> condorcet_winner_failure;
  std::optional<FailureWitness> condorcet_loser_failure;
  int count() const {
    return (majority_winner_failure ? 1 : 0) + (majority_loser_failure ? 1 : 0) +
           (condorcet_winner_failure ? 1 : 0) + (condorcet_loser_failure ? 1 : 0);
  }
};

// Cross-checks the four criteria against a method's tie-broken winner.
VerifiableFailures verifiable_failures(const Profile& profile,
                                       CandidateId method_winner,
                                       bool unranked_last = true);

}  // namespace borda
