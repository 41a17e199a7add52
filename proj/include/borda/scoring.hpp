#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "borda/ballot.hpp"
#include "borda/rational.hpp"

namespace borda {

enum class Method { ebc, qbc, abc, bcu, mbc, plurality, irv };

inline constexpr std::array<Method, 7> kAllMethods = {
    Method::ebc, Method::qbc, Method::abc,       Method::bcu,
    Method::mbc, Method::irv, Method::plurality};
inline constexpr std::array<Method, 5> kBordaMethods = {
    Method::ebc, Method::qbc, Method::abc, Method::bcu, Method::mbc};

const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);
bool is_points_based(Method m);

// How a voting tie resolves. lowest_index picks the tied candidate that
// appears first on the roster as the nominal winner; report_only refuses to
// pick and downstream consumers see only the tied set.
enum class TieRule { lowest_index, report_only };

// Per-rank points awarded to a ballot ranking k of n candidates.
//   EBC   p_i = 2^(n-i)              unranked get the averaged remainder
//   QBC   p_i = 1 + (n-i)(n-i+1)/2   unranked get the averaged remainder
//   ABC   p_i = n-i+1                unranked each get (n-k+1)/2
//   BCU   p_i = n-i+1                unranked get 0
//   MBC   p_i = k-i+1                unranked get 0
struct PointsVector {
  std::vector<Rational> rank_points;  // size k, nonincreasing
  Rational unranked_share;            // unused when k == n
};

PointsVector points_vector(Method method, int n, int k);

struct Tally {
  Method method = Method::ebc;
  std::vector<Rational> totals;      // indexed by CandidateId
  std::vector<CandidateId> winners;  // argmax set, ascending ids
  bool tie() const { return winners.size() > 1; }
};

// Points-based methods only; throws ArgumentError for plurality/IRV and
// InputError for an empty profile.
Tally tally(const Profile& profile, Method method);

Tally plurality_result(const Profile& profile);

struct IrvRound {
  // Current top-choice count per continuing candidate, -1 once eliminated.
  std::vector<long long> votes;
  std::optional<CandidateId> eliminated;  // unset for the final round
  bool tie_break_used = false;
};

struct IrvResult {
  std::vector<IrvRound> rounds;
  std::vector<CandidateId> winners;  // usually one; two only on a final tie
  bool tie_break_used = false;
};

IrvResult irv_result(const Profile& profile,
                     TieRule rule = TieRule::lowest_index);

// The deterministic single winner used by the failure detectors. Empty only
// under TieRule::report_only with an actual tie.
std::optional<CandidateId> nominal_winner(const std::vector<CandidateId>& winners,
                                          TieRule rule);

// Winner set under any method, including plurality and IRV.
std::vector<CandidateId> winner_set(const Profile& profile, Method method,
                                    TieRule rule = TieRule::lowest_index);

struct AgreementMatrix {
  std::vector<Method> methods;
  // pair_agree[i][j]: profiles where methods i and j produced the same
  // winner set (ties compare as sets).
  std::vector<std::vector<long long>> pair_agree;
  long long all_agree = 0;
  long long profiles = 0;
};

AgreementMatrix winner_agreement(const std::vector<Profile>& profiles,
                                 const std::vector<Method>& methods,
                                 TieRule rule = TieRule::lowest_index);

}  // namespace borda
