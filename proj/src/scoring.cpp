#include "borda/scoring.hpp"

#include <algorithm>
#include <map>

#include "borda/errors.hpp"

namespace borda {

const char* method_name(Method m) {
  switch (m) {
    case Method::ebc: return "EBC";
    case Method::qbc: return "QBC";
    case Method::abc: return "ABC";
    case Method::bcu: return "BCU";
    case Method::mbc: return "MBC";
    case Method::plurality: return "Plurality";
    case Method::irv: return "IRV";
  }
  throw InternalError("unreachable method");
}

std::optional<Method> method_from_name(const std::string& name) {
  for (Method m : kAllMethods) {
    if (name == method_name(m)) return m;
  }
  return std::nullopt;
}

bool is_points_based(Method m) {
  return m != Method::plurality && m != Method::irv;
}

namespace {

// Points for rank i (1-based) on a complete ballot.
Rational complete_points(Method method, int n, int i) {
  switch (method) {
    case Method::ebc:
      return Rational(BigInt::two_pow(static_cast<unsigned>(n - i)));
    case Method::qbc: {
      long long d = n - i;
      return Rational(1 + d * (d + 1) / 2);
    }
    case Method::abc:
    case Method::bcu:
    case Method::mbc:
      return Rational(n - i + 1);
    default:
      throw ArgumentError("method has no points vector");
  }
}

}  // namespace

PointsVector points_vector(Method method, int n, int k) {
  if (!is_points_based(method))
    throw ArgumentError(std::string(method_name(method)) +
                        " is not a points-based method");
  if (n < 1) throw ArgumentError("roster size must be at least 1");
  if (k < 1 || k > n)
    throw ArgumentError("ranked count k=" + std::to_string(k) +
                        " outside 1.." + std::to_string(n));
  PointsVector out;
  out.rank_points.reserve(k);
  if (method == Method::mbc) {
    for (int i = 1; i <= k; ++i) out.rank_points.emplace_back(k - i + 1);
    out.unranked_share = Rational(0);
    return out;
  }
  Rational assigned(0);
  for (int i = 1; i <= k; ++i) {
    out.rank_points.push_back(complete_points(method, n, i));
    assigned += out.rank_points.back();
  }
  if (k == n) {
    out.unranked_share = Rational(0);
  } else if (method == Method::bcu) {
    out.unranked_share = Rational(0);
  } else if (method == Method::abc) {
    out.unranked_share = Rational(BigInt(n - k + 1), BigInt(2));
  } else {
    // EBC/QBC split the rest of the complete vector evenly.
    Rational full(0);
    for (int i = 1; i <= n; ++i) full += complete_points(method, n, i);
    out.unranked_share = (full - assigned) / Rational(n - k);
  }
  return out;
}

namespace {

std::vector<CandidateId> argmax_set(const std::vector<Rational>& totals) {
  std::vector<CandidateId> out;
  for (CandidateId c = 0; c < static_cast<int>(totals.size()); ++c) {
    if (out.empty() || totals[c] > totals[out.front()]) {
      out.assign(1, c);
    } else if (totals[c] == totals[out.front()]) {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

Tally tally(const Profile& profile, Method method) {
  if (!is_points_based(method))
    throw ArgumentError(std::string(method_name(method)) +
                        " is not a points-based method");
  if (profile.total_ballots == 0) throw InputError("empty profile");
  int n = profile.roster.size();
  Tally out;
  out.method = method;
  out.totals.assign(n, Rational(0));
  std::map<int, PointsVector> by_k;
  std::vector<bool> ranked(n);
  for (const auto& [ranking, count] : profile.types) {
    int k = static_cast<int>(ranking.size());
    auto it = by_k.find(k);
    if (it == by_k.end()) it = by_k.emplace(k, points_vector(method, n, k)).first;
    const PointsVector& pv = it->second;
    Rational c(count);
    std::fill(ranked.begin(), ranked.end(), false);
    for (int i = 0; i < k; ++i) {
      out.totals[ranking[i]] += pv.rank_points[i] * c;
      ranked[ranking[i]] = true;
    }
    if (k < n && !pv.unranked_share.is_zero()) {
      Rational add = pv.unranked_share * c;
      for (CandidateId cand = 0; cand < n; ++cand) {
        if (!ranked[cand]) out.totals[cand] += add;
      }
    }
  }
  out.winners = argmax_set(out.totals);
  return out;
}

Tally plurality_result(const Profile& profile) {
  if (profile.total_ballots == 0) throw InputError("empty profile");
  Tally out;
  out.method = Method::plurality;
  out.totals.assign(profile.roster.size(), Rational(0));
  for (const auto& [ranking, count] : profile.types)
    out.totals[ranking.front()] += Rational(count);
  out.winners = argmax_set(out.totals);
  return out;
}

IrvResult irv_result(const Profile& profile, TieRule rule) {
  if (profile.total_ballots == 0) throw InputError("empty profile");
  int n = profile.roster.size();
  std::vector<bool> continuing(n, true);
  IrvResult out;
  for (;;) {
    IrvRound round;
    round.votes.assign(n, -1);
    long long active = 0;
    for (CandidateId c = 0; c < n; ++c) {
      if (continuing[c]) round.votes[c] = 0;
    }
    for (const auto& [ranking, count] : profile.types) {
      for (CandidateId c : ranking) {
        if (continuing[c]) {
          round.votes[c] += count;
          active += count;
          break;
        }
      }
    }
    std::vector<CandidateId> leaders, trailers;
    int remaining = 0;
    for (CandidateId c = 0; c < n; ++c) {
      if (!continuing[c]) continue;
      ++remaining;
      if (leaders.empty() || round.votes[c] > round.votes[leaders.front()])
        leaders.assign(1, c);
      else if (round.votes[c] == round.votes[leaders.front()])
        leaders.push_back(c);
      if (trailers.empty() || round.votes[c] < round.votes[trailers.front()])
        trailers.assign(1, c);
      else if (round.votes[c] == round.votes[trailers.front()])
        trailers.push_back(c);
    }
    // Strict majority of continuing ballots ends the count.
    if (!leaders.empty() && 2 * round.votes[leaders.front()] > active) {
      out.rounds.push_back(round);
      out.winners = leaders;
      break;
    }
    if (remaining <= 2 || active == 0) {
      // Down to two candidates (or every ballot exhausted): the leaders win,
      // jointly when tied.
      round.tie_break_used = leaders.size() > 1;
      out.tie_break_used = out.tie_break_used || round.tie_break_used;
      out.rounds.push_back(round);
      out.winners = leaders;
      break;
    }
    CandidateId eliminate = trailers.front();  // lowest roster index among tied
    round.tie_break_used = trailers.size() > 1;
    out.tie_break_used = out.tie_break_used || round.tie_break_used;
    round.eliminated = eliminate;
    out.rounds.push_back(round);
    continuing[eliminate] = false;
  }
  (void)rule;  // both rules eliminate the lowest-index tied candidate
  return out;
}

std::optional<CandidateId> nominal_winner(
    const std::vector<CandidateId>& winners, TieRule rule) {
  if (winners.empty()) return std::nullopt;
  if (winners.size() == 1) return winners.front();
  if (rule == TieRule::report_only) return std::nullopt;
  return winners.front();
}

std::vector<CandidateId> winner_set(const Profile& profile, Method method,
                                    TieRule rule) {
  if (method == Method::plurality) return plurality_result(profile).winners;
  if (method == Method::irv) return irv_result(profile, rule).winners;
  return tally(profile, method).winners;
}

AgreementMatrix winner_agreement(const std::vector<Profile>& profiles,
                                 const std::vector<Method>& methods,
                                 TieRule rule) {
  AgreementMatrix out;
  out.methods = methods;
  std::size_t m = methods.size();
  out.pair_agree.assign(m, std::vector<long long>(m, 0));
  out.profiles = static_cast<long long>(profiles.size());
  for (const Profile& p : profiles) {
    std::vector<std::vector<CandidateId>> sets;
    sets.reserve(m);
    for (Method method : methods) sets.push_back(winner_set(p, method, rule));
    bool all_same = true;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (sets[i] == sets[j]) out.pair_agree[i][j] += 1;
      }
      if (sets[i] != sets[0]) all_same = false;
    }
    if (all_same && m > 0) out.all_agree += 1;
  }
  return out;
}

}  // namespace borda
