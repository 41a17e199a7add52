#include "borda/criteria.hpp"

#include <algorithm>

#include "borda/errors.hpp"

namespace borda {

PairwiseMatrix pairwise_matrix(const Profile& profile) {
  int n = profile.roster.size();
  PairwiseMatrix out(n);
  std::vector<int> pos(n);
  for (const auto& [ranking, count] : profile.types) {
    std::fill(pos.begin(), pos.end(), -1);
    for (int i = 0; i < static_cast<int>(ranking.size()); ++i)
      pos[ranking[i]] = i;
    for (CandidateId x = 0; x < n; ++x) {
      if (pos[x] < 0) continue;
      for (CandidateId y = 0; y < n; ++y) {
        if (x == y) continue;
        if (pos[y] < 0 || pos[x] < pos[y]) out.add(x, y, count);
      }
    }
  }
  return out;
}

std::optional<CandidateId> majority_winner(const Profile& profile) {
  std::vector<long long> first(profile.roster.size(), 0);
  for (const auto& [ranking, count] : profile.types) first[ranking.front()] += count;
  for (CandidateId c = 0; c < profile.roster.size(); ++c) {
    if (2 * first[c] > profile.total_ballots) return c;
  }
  return std::nullopt;
}

std::optional<CandidateId> majority_loser(const Profile& profile,
                                          bool unranked_last) {
  int n = profile.roster.size();
  std::vector<long long> last(n, 0);
  std::vector<bool> ranked(n);
  for (const auto& [ranking, count] : profile.types) {
    int k = static_cast<int>(ranking.size());
    if (k == n) {
      last[ranking.back()] += count;
    } else if (k == n - 1 && unranked_last) {
      // One candidate unranked: the ballot determines the full order.
      std::fill(ranked.begin(), ranked.end(), false);
      for (CandidateId c : ranking) ranked[c] = true;
      for (CandidateId c = 0; c < n; ++c) {
        if (!ranked[c]) {
          last[c] += count;
          break;
        }
      }
    }
    // Two or more unranked: no last-place vote from this ballot.
  }
  for (CandidateId c = 0; c < n; ++c) {
    if (2 * last[c] > profile.total_ballots) return c;
  }
  return std::nullopt;
}

CondorcetPair condorcet_candidates(const PairwiseMatrix& matrix) {
  CondorcetPair out;
  int n = matrix.size();
  for (CandidateId x = 0; x < n; ++x) {
    bool wins_all = true, loses_all = true;
    for (CandidateId y = 0; y < n; ++y) {
      if (x == y) continue;
      if (matrix.at(x, y) <= matrix.at(y, x)) wins_all = false;
      if (matrix.at(y, x) <= matrix.at(x, y)) loses_all = false;
    }
    if (n > 1 && wins_all) out.winner = x;
    if (n > 1 && loses_all) out.loser = x;
  }
  return out;
}

VerifiableFailures verifiable_failures(const Profile& profile,
                                       CandidateId method_winner,
                                       bool unranked_last) {
  if (method_winner < 0 || method_winner >= profile.roster.size())
    throw ArgumentError("method winner is not on the roster");
  VerifiableFailures out;
  if (auto mw = majority_winner(profile); mw && *mw != method_winner)
    out.majority_winner_failure = FailureWitness{*mw, method_winner};
  if (auto ml = majority_loser(profile, unranked_last); ml && *ml == method_winner)
    out.majority_loser_failure = FailureWitness{*ml, method_winner};
  CondorcetPair cp = condorcet_candidates(pairwise_matrix(profile));
  if (cp.winner && *cp.winner != method_winner)
    out.condorcet_winner_failure = FailureWitness{*cp.winner, method_winner};
  if (cp.loser && *cp.loser == method_winner)
    out.condorcet_loser_failure = FailureWitness{*cp.loser, method_winner};
  return out;
}

}  // namespace borda
