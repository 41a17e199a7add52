#include "borda/manipulation.hpp"

#include <algorithm>
#include <map>

#include "borda/criteria.hpp"
#include "borda/errors.hpp"

namespace borda {

long long Witness::total_moved() const {
  long long out = 0;
  for (const BallotMove& m : moves) out += m.count;
  return out;
}

namespace {

BigInt lcm(const BigInt& a, const BigInt& b) {
  return a / BigInt::gcd(a, b) * b;
}

// Floor division (round toward minus infinity).
BigInt fdiv(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  if (!r.is_zero() && (a.sign() < 0) != (b.sign() < 0)) q -= BigInt(1);
  return q;
}

// Per-candidate points one ballot with `ranking` awards. Cache keyed by k.
using PointsCache = std::map<int, PointsVector>;

std::vector<Rational> ballot_points(const std::vector<CandidateId>& ranking,
                                    int n, Method method, PointsCache& cache) {
  int k = static_cast<int>(ranking.size());
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, points_vector(method, n, k)).first;
  const PointsVector& pv = it->second;
  std::vector<Rational> out(n, k < n ? pv.unranked_share : Rational(0));
  for (int i = 0; i < k; ++i) out[ranking[i]] = pv.rank_points[i];
  return out;
}

// One candidate modification of one ballot type.
struct MoveOption {
  std::vector<CandidateId> modified;
  std::vector<Rational> delta;  // per-candidate points change per ballot
};

struct EligibleType {
  std::vector<CandidateId> ranking;
  long long count = 0;
  std::vector<MoveOption> options;
};

// Linear system over per-type move counts m_T:
//   for every row c:  sum_T coef[c][T] * m_T > rhs[c],  0 <= m_T <= upper[T].
// Rows are scaled to integers so the search below never touches fractions.
struct IntSystem {
  std::vector<std::vector<BigInt>> coef;
  std::vector<BigInt> rhs;
  std::vector<long long> upper;
};

void add_row(IntSystem& sys, const std::vector<Rational>& coef,
             const Rational& rhs) {
  BigInt d = rhs.den();
  for (const Rational& r : coef) d = lcm(d, r.den());
  std::vector<BigInt> row;
  row.reserve(coef.size());
  for (const Rational& r : coef) row.push_back(r.num() * (d / r.den()));
  sys.coef.push_back(std::move(row));
  sys.rhs.push_back(rhs.num() * (d / rhs.den()));
}

// The success condition "challenger strictly beats every other candidate"
// as an IntSystem over the chosen move options.
IntSystem build_system(const std::vector<Rational>& base, CandidateId challenger,
                       const std::vector<const MoveOption*>& chosen,
                       const std::vector<const EligibleType*>& types) {
  IntSystem sys;
  for (const EligibleType* t : types) sys.upper.push_back(t->count);
  int n = static_cast<int>(base.size());
  std::vector<Rational> coef(chosen.size());
  for (CandidateId x = 0; x < n; ++x) {
    if (x == challenger) continue;
    for (std::size_t v = 0; v < chosen.size(); ++v)
      coef[v] = chosen[v]->delta[challenger] - chosen[v]->delta[x];
    add_row(sys, coef, base[x] - base[challenger]);
  }
  return sys;
}

void add_total_cap(IntSystem& sys, long long cap) {
  sys.coef.emplace_back(sys.upper.size(), BigInt(-1));
  sys.rhs.push_back(BigInt(-cap - 1));  // sum m <= cap, in strict form
}

enum class DecideStatus { feasible, infeasible, budget };

struct DecideOutcome {
  DecideStatus status = DecideStatus::infeasible;
  std::vector<long long> point;
};

// Exact integer feasibility by constraint propagation plus interval
// splitting: tighten every variable's bounds against each row's residual
// extremes until stable, accept a box whose worst corner satisfies all rows,
// discard one that cannot, and otherwise split the widest variable.
// Deterministic; the node budget turns pathological instances into an
// explicit "unknown" instead of an open-ended run.
class Decider {
 public:
  Decider(const IntSystem& sys, long long& budget) : sys_(sys), budget_(budget) {
    lo_.assign(sys.upper.size(), 0);
    hi_ = sys.upper;
  }

  DecideOutcome run() {
    DecideOutcome out;
    if (rec()) {
      out.status = DecideStatus::feasible;
      out.point = *found_;
    } else {
      out.status = budget_out_ ? DecideStatus::budget : DecideStatus::infeasible;
    }
    return out;
  }

 private:
  // Bounds consistency: from sum_u a_u m_u > rhs it follows that
  // a_v m_v > rhs - max(rest), which snaps lo/hi to the feasible slab.
  // Returns false when some variable's interval empties.
  bool propagate() {
    for (int pass = 0; pass < 64; ++pass) {
      if (budget_-- <= 0) {
        budget_out_ = true;
        return false;
      }
      bool changed = false;
      for (std::size_t c = 0; c < sys_.coef.size(); ++c) {
        BigInt maxv(0);
        for (std::size_t v = 0; v < lo_.size(); ++v) {
          const BigInt& a = sys_.coef[c][v];
          if (a.sign() == 0) continue;
          maxv += a * BigInt(a.sign() > 0 ? hi_[v] : lo_[v]);
        }
        if (maxv <= sys_.rhs[c]) return false;
        for (std::size_t v = 0; v < lo_.size(); ++v) {
          const BigInt& a = sys_.coef[c][v];
          int s = a.sign();
          if (s == 0) continue;
          BigInt maxrest = maxv - a * BigInt(s > 0 ? hi_[v] : lo_[v]);
          BigInt g = sys_.rhs[c] - maxrest;  // need a*m > g
          if (s > 0) {
            BigInt new_lo = fdiv(g, a) + BigInt(1);
            if (new_lo > BigInt(hi_[v])) return false;
            if (new_lo > BigInt(lo_[v])) {
              lo_[v] = new_lo.to_int64();
              changed = true;
            }
          } else {
            // m < g/a with a negative: largest admissible integer.
            BigInt new_hi = -fdiv(-g, a) - BigInt(1);
            if (new_hi < BigInt(lo_[v])) return false;
            if (new_hi < BigInt(hi_[v])) {
              hi_[v] = new_hi.to_int64();
              changed = true;
            }
          }
        }
      }
      if (!changed) return true;
    }
    return true;
  }

  bool rec() {
    if (budget_-- <= 0) {
      budget_out_ = true;
      return false;
    }
    std::vector<long long> sav_lo = lo_, sav_hi = hi_;
    bool viable = propagate();
    if (!viable) {
      lo_ = std::move(sav_lo);
      hi_ = std::move(sav_hi);
      return false;
    }
    bool whole_box_ok = true;
    for (std::size_t c = 0; c < sys_.coef.size() && whole_box_ok; ++c) {
      BigInt minv(0);
      for (std::size_t v = 0; v < lo_.size(); ++v) {
        const BigInt& a = sys_.coef[c][v];
        if (a.sign() == 0) continue;
        minv += a * BigInt(a.sign() > 0 ? lo_[v] : hi_[v]);
      }
      if (minv <= sys_.rhs[c]) whole_box_ok = false;
    }
    if (whole_box_ok) {
      found_ = lo_;  // low corner: the fewest-ballots point of the box
      lo_ = std::move(sav_lo);
      hi_ = std::move(sav_hi);
      return true;
    }
    std::size_t j = 0;
    long long width = -1;
    for (std::size_t v = 0; v < lo_.size(); ++v) {
      if (hi_[v] - lo_[v] > width) {
        width = hi_[v] - lo_[v];
        j = v;
      }
    }
    long long mid = lo_[j] + (hi_[j] - lo_[j]) / 2;
    long long sav = hi_[j];
    hi_[j] = mid;
    bool r = rec();
    hi_[j] = sav;
    if (!r && !budget_out_) {
      sav = lo_[j];
      lo_[j] = mid + 1;
      r = rec();
      lo_[j] = sav;
    }
    lo_ = std::move(sav_lo);
    hi_ = std::move(sav_hi);
    return r;
  }

  const IntSystem& sys_;
  long long& budget_;
  std::vector<long long> lo_, hi_;
  std::optional<std::vector<long long>> found_;
  bool budget_out_ = false;
};

bool point_satisfies(const IntSystem& sys, const std::vector<long long>& m) {
  for (std::size_t c = 0; c < sys.coef.size(); ++c) {
    BigInt v(0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (sys.coef[c][i].sign() != 0 && m[i] != 0)
        v += sys.coef[c][i] * BigInt(m[i]);
    }
    if (v <= sys.rhs[c]) return false;
  }
  return true;
}

// Lowers each count to the least value that keeps every row satisfied with
// the others held fixed. Per variable the satisfying set is an interval, so
// the bound is closed-form; iterating to a fixpoint guarantees that
// decrementing any count by one breaks the witness. Row totals are kept
// incrementally so a pass costs rows x vars.
void polish_point(const IntSystem& sys, std::vector<long long>& m) {
  std::vector<BigInt> row_total(sys.coef.size(), BigInt(0));
  for (std::size_t c = 0; c < sys.coef.size(); ++c) {
    for (std::size_t u = 0; u < m.size(); ++u) {
      if (sys.coef[c][u].sign() != 0 && m[u] != 0)
        row_total[c] += sys.coef[c][u] * BigInt(m[u]);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      long long best_low = 0;
      for (std::size_t c = 0; c < sys.coef.size(); ++c) {
        const BigInt& a = sys.coef[c][v];
        if (a.sign() <= 0) continue;
        BigInt rest = row_total[c] - a * BigInt(m[v]);
        BigInt need = sys.rhs[c] - rest;  // a*m > need
        long long low = (fdiv(need, a) + BigInt(1)).to_int64();
        best_low = std::max(best_low, low);
      }
      if (best_low < m[v]) {
        BigInt delta(m[v] - best_low);
        for (std::size_t c = 0; c < sys.coef.size(); ++c) {
          if (sys.coef[c][v].sign() != 0)
            row_total[c] -= sys.coef[c][v] * delta;
        }
        m[v] = best_low;
        changed = true;
      }
    }
  }
}

bool unique_win(const std::vector<Rational>& totals, CandidateId c) {
  for (CandidateId x = 0; x < static_cast<int>(totals.size()); ++x) {
    if (x != c && totals[x] >= totals[c]) return false;
  }
  return true;
}

Witness make_move_witness(WitnessKind kind, CandidateId challenger,
                          const std::vector<const EligibleType*>& types,
                          const std::vector<const MoveOption*>& chosen,
                          const std::vector<long long>& counts) {
  Witness w;
  w.kind = kind;
  w.challenger = challenger;
  w.resulting_winner = challenger;
  for (std::size_t v = 0; v < types.size(); ++v) {
    if (counts[v] == 0) continue;
    w.moves.push_back(BallotMove{types[v]->ranking, chosen[v]->modified, counts[v]});
  }
  return w;
}

int position_of(const std::vector<CandidateId>& ranking, CandidateId c) {
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    if (ranking[i] == c) return static_cast<int>(i) + 1;  // 1-based
  }
  return 0;  // unranked
}

// Challengers ordered strongest first (highest base points, then lowest
// index): the first witness reported is the one for the closest race.
std::vector<CandidateId> challengers_by_strength(const Tally& base,
                                                 CandidateId winner) {
  std::vector<CandidateId> out;
  for (CandidateId c = 0; c < static_cast<int>(base.totals.size()); ++c) {
    if (c != winner) out.push_back(c);
  }
  std::stable_sort(out.begin(), out.end(), [&](CandidateId a, CandidateId b) {
    return base.totals[a] > base.totals[b];
  });
  return out;
}

struct MoveSearchResult {
  std::optional<Witness> witness;
  bool heuristic = false;
};

// Shared tail of the truncation/compromise searches: find the cheapest count
// vector for some option assignment, minimize the total moved, and polish.
// `options_complete` says the caller built the full modification space; when
// it could not, the result is heuristic no matter how small the system is.
MoveSearchResult search_assignments(
    WitnessKind kind, const std::vector<Rational>& base, CandidateId challenger,
    const std::vector<const EligibleType*>& types, const SearchLimits& limits,
    long long& budget, bool options_complete) {
  MoveSearchResult out;
  long long combos = 1;
  for (const EligibleType* t : types) {
    combos *= static_cast<long long>(t->options.size());
    if (combos > limits.cut_combo_limit) break;
  }
  if (!options_complete ||
      static_cast<int>(types.size()) > limits.exact_type_limit ||
      combos > limits.cut_combo_limit) {
    // Heuristic fallback: cut every eligible ballot just above the winner
    // (each type's first option) and move them all.
    out.heuristic = true;
    std::vector<const MoveOption*> chosen;
    chosen.reserve(types.size());
    for (const EligibleType* t : types) chosen.push_back(&t->options.front());
    IntSystem sys = build_system(base, challenger, chosen, types);
    std::vector<long long> counts = sys.upper;
    if (!point_satisfies(sys, counts)) return out;
    polish_point(sys, counts);
    out.witness = make_move_witness(kind, challenger, types, chosen, counts);
    return out;
  }

  // Exact: enumerate option assignments, decide integer feasibility for
  // each, and keep the assignment with the smallest total move count.
  std::optional<long long> best_total;
  std::vector<const MoveOption*> best_chosen;
  std::vector<long long> best_counts;

  std::vector<std::size_t> pick(types.size(), 0);
  for (;;) {
    std::vector<const MoveOption*> chosen;
    chosen.reserve(types.size());
    for (std::size_t v = 0; v < types.size(); ++v)
      chosen.push_back(&types[v]->options[pick[v]]);
    IntSystem sys = build_system(base, challenger, chosen, types);
    if (best_total) add_total_cap(sys, *best_total - 1);
    Decider decider(sys, budget);
    DecideOutcome res = decider.run();
    if (res.status == DecideStatus::budget) {
      out.heuristic = true;
      break;
    }
    if (res.status == DecideStatus::feasible) {
      long long total = 0;
      for (long long c : res.point) total += c;
      std::vector<long long> point = res.point;
      // Binary search the least total moved that stays feasible.
      long long lo = 1, hi = total;
      bool interrupted = false;
      while (lo < hi) {
        long long mid = lo + (hi - lo) / 2;
        IntSystem capped = build_system(base, challenger, chosen, types);
        add_total_cap(capped, mid);
        Decider d2(capped, budget);
        DecideOutcome r2 = d2.run();
        if (r2.status == DecideStatus::budget) {
          out.heuristic = true;
          interrupted = true;
          break;
        }
        if (r2.status == DecideStatus::feasible) {
          hi = mid;
          point = r2.point;
        } else {
          lo = mid + 1;
        }
      }
      long long achieved = 0;
      for (long long c : point) achieved += c;
      (void)interrupted;
      if (!best_total || achieved < *best_total) {
        best_total = achieved;
        best_chosen = chosen;
        best_counts = point;
      }
    }
    // Next assignment.
    std::size_t v = 0;
    while (v < pick.size() && ++pick[v] == types[v]->options.size()) {
      pick[v] = 0;
      ++v;
    }
    if (v == pick.size()) break;
    if (pick.empty()) break;
  }

  if (best_total) {
    IntSystem sys = build_system(base, challenger, best_chosen, types);
    polish_point(sys, best_counts);
    out.witness =
        make_move_witness(kind, challenger, types, best_chosen, best_counts);
  }
  return out;
}

}  // namespace

Detection truncation_failure(const Profile& profile, Method method,
                             TieRule rule, const SearchLimits& limits) {
  if (!is_points_based(method))
    throw ArgumentError("truncation search needs a points-based method");
  if (method == Method::mbc) {
    Detection d;
    d.status = DetectionStatus::immune;
    return d;
  }
  Tally base = tally(profile, method);
  std::optional<CandidateId> winner = nominal_winner(base.winners, rule);
  Detection out;
  if (!winner) {
    out.status = DetectionStatus::not_searched;
    return out;
  }
  int n = profile.roster.size();
  PointsCache cache;
  long long budget = limits.node_budget;
  auto pv_for = [&](int k) -> const PointsVector& {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, points_vector(method, n, k)).first;
    return it->second;
  };
  for (CandidateId loser : challengers_by_strength(base, *winner)) {
    // Positions first: when more types are eligible than the exact search
    // handles, only the single heuristic cut per type gets built.
    std::vector<std::pair<const std::vector<CandidateId>*, long long>> raw;
    for (const auto& [ranking, count] : profile.types) {
      int pos_l = position_of(ranking, loser);
      int pos_w = position_of(ranking, *winner);
      if (pos_l != 0 && pos_w != 0 && pos_l < pos_w)
        raw.emplace_back(&ranking, count);
    }
    if (raw.empty()) continue;
    // Cheap exact dismissal: the winner keeps at least the unranked share of
    // the shallowest cut, so this is the most any coalition can take away.
    // The challenger's own points never move.
    {
      Rational margin = base.totals[*winner] - base.totals[loser];
      Rational max_drop(0);
      for (const auto& [ranking_ptr, count] : raw) {
        int k = static_cast<int>(ranking_ptr->size());
        int pos_w = position_of(*ranking_ptr, *winner);
        Rational drop = pv_for(k).rank_points[pos_w - 1] -
                        pv_for(pos_w - 1).unranked_share;
        max_drop += drop * Rational(count);
      }
      if (max_drop <= margin) continue;
    }
    bool exact = static_cast<int>(raw.size()) <= limits.exact_type_limit;
    std::vector<EligibleType> eligible;
    for (const auto& [ranking_ptr, count] : raw) {
      const std::vector<CandidateId>& ranking = *ranking_ptr;
      int pos_l = position_of(ranking, loser);
      int pos_w = position_of(ranking, *winner);
      std::vector<Rational> orig = ballot_points(ranking, n, method, cache);
      EligibleType et;
      et.ranking = ranking;
      et.count = count;
      // Cut points from just above the winner down to keeping only the
      // challenger's prefix.
      for (int cut = pos_w - 1; cut >= (exact ? pos_l : pos_w - 1); --cut) {
        MoveOption opt;
        opt.modified.assign(ranking.begin(), ranking.begin() + cut);
        std::vector<Rational> mod = ballot_points(opt.modified, n, method, cache);
        opt.delta.resize(n);
        bool nonzero = false;
        for (CandidateId c = 0; c < n; ++c) {
          opt.delta[c] = mod[c] - orig[c];
          if (!opt.delta[c].is_zero()) nonzero = true;
        }
        if (!nonzero) continue;
        bool dup = false;
        for (const MoveOption& seen : et.options) {
          if (seen.delta == opt.delta) {
            dup = true;
            break;
          }
        }
        if (!dup) et.options.push_back(std::move(opt));
      }
      if (!et.options.empty()) eligible.push_back(std::move(et));
    }
    if (eligible.empty()) continue;
    std::vector<const EligibleType*> types;
    types.reserve(eligible.size());
    for (const EligibleType& et : eligible) types.push_back(&et);
    MoveSearchResult res = search_assignments(WitnessKind::truncation,
                                              base.totals, loser, types,
                                              limits, budget, exact);
    out.heuristic = out.heuristic || res.heuristic;
    if (res.witness) {
      if (!replay_witness(profile, method, *res.witness))
        throw InternalError("truncation witness failed replay");
      out.status = DetectionStatus::witness;
      out.witness = std::move(res.witness);
      out.heuristic = res.heuristic;
      return out;
    }
  }
  out.status = DetectionStatus::none;
  return out;
}

Detection compromise_failure(const Profile& profile, Method method,
                             TieRule rule, const SearchLimits& limits) {
  if (!is_points_based(method))
    throw ArgumentError("compromise search needs a points-based method");
  Tally base = tally(profile, method);
  std::optional<CandidateId> winner = nominal_winner(base.winners, rule);
  Detection out;
  if (!winner) {
    out.status = DetectionStatus::not_searched;
    return out;
  }
  int n = profile.roster.size();
  PointsCache cache;
  long long budget = limits.node_budget;
  auto pv_for = [&](int k) -> const PointsVector& {
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, points_vector(method, n, k)).first;
    return it->second;
  };
  for (CandidateId challenger : challengers_by_strength(base, *winner)) {
    // The challenger sits below at least one candidate but above the winner
    // (who may be unranked entirely).
    std::vector<std::pair<const std::vector<CandidateId>*, long long>> raw;
    for (const auto& [ranking, count] : profile.types) {
      int pos_c = position_of(ranking, challenger);
      int pos_w = position_of(ranking, *winner);
      if (pos_c >= 2 && (pos_w == 0 || pos_w > pos_c))
        raw.emplace_back(&ranking, count);
    }
    if (raw.empty()) continue;
    // Promotion leaves the winner untouched, so the challenger's best gain
    // must at least cover the margin; exact dismissal otherwise.
    {
      Rational margin = base.totals[*winner] - base.totals[challenger];
      Rational capacity(0);
      for (const auto& [ranking_ptr, count] : raw) {
        int k = static_cast<int>(ranking_ptr->size());
        int pos_c = position_of(*ranking_ptr, challenger);
        Rational gain =
            pv_for(k).rank_points[0] - pv_for(k).rank_points[pos_c - 1];
        capacity += gain * Rational(count);
      }
      if (capacity <= margin) continue;
    }
    std::vector<EligibleType> eligible;
    for (const auto& [ranking_ptr, count] : raw) {
      const std::vector<CandidateId>& ranking = *ranking_ptr;
      std::vector<Rational> orig = ballot_points(ranking, n, method, cache);
      MoveOption opt;
      opt.modified.reserve(ranking.size());
      opt.modified.push_back(challenger);
      for (CandidateId c : ranking) {
        if (c != challenger) opt.modified.push_back(c);
      }
      std::vector<Rational> mod = ballot_points(opt.modified, n, method, cache);
      opt.delta.resize(n);
      bool nonzero = false;
      for (CandidateId c = 0; c < n; ++c) {
        opt.delta[c] = mod[c] - orig[c];
        if (!opt.delta[c].is_zero()) nonzero = true;
      }
      if (!nonzero) continue;
      EligibleType et;
      et.ranking = ranking;
      et.count = count;
      et.options.push_back(std::move(opt));
      eligible.push_back(std::move(et));
    }
    if (eligible.empty()) continue;
    // Promotion only ever helps the challenger, so if moving every eligible
    // ballot fails there is no witness for this challenger.
    std::vector<Rational> maxed = base.totals;
    for (const EligibleType& et : eligible) {
      Rational c(et.count);
      for (CandidateId x = 0; x < n; ++x)
        maxed[x] += et.options.front().delta[x] * c;
    }
    if (!unique_win(maxed, challenger)) continue;
    std::vector<const EligibleType*> types;
    types.reserve(eligible.size());
    for (const EligibleType& et : eligible) types.push_back(&et);
    MoveSearchResult res = search_assignments(WitnessKind::compromise,
                                              base.totals, challenger, types,
                                              limits, budget,
                                              /*options_complete=*/true);
    out.heuristic = out.heuristic || res.heuristic;
    if (!res.witness) {
      // The all-ballots promotion succeeds, so a witness exists; the exact
      // minimizer can only have run out of budget. Fall back to the full
      // promotion, lowered per type.
      std::vector<const MoveOption*> chosen;
      chosen.reserve(types.size());
      for (const EligibleType* t : types) chosen.push_back(&t->options.front());
      IntSystem sys = build_system(base.totals, challenger, chosen, types);
      std::vector<long long> counts = sys.upper;
      polish_point(sys, counts);
      res.witness = make_move_witness(WitnessKind::compromise, challenger,
                                      types, chosen, counts);
      res.heuristic = true;
      out.heuristic = true;
    }
    if (!replay_witness(profile, method, *res.witness))
      throw InternalError("compromise witness failed replay");
    out.status = DetectionStatus::witness;
    out.witness = std::move(res.witness);
    out.heuristic = res.heuristic;
    return out;
  }
  out.status = DetectionStatus::none;
  return out;
}

Detection spoiler_effect(const Profile& profile, Method method,
                         int max_candidates, TieRule rule) {
  if (!is_points_based(method))
    throw ArgumentError("spoiler search needs a points-based method");
  Detection out;
  int n = profile.roster.size();
  if (n > max_candidates) {
    out.status = DetectionStatus::skipped;
    return out;
  }
  Tally base = tally(profile, method);
  std::optional<CandidateId> winner = nominal_winner(base.winners, rule);
  if (!winner) {
    out.status = DetectionStatus::not_searched;
    return out;
  }
  std::vector<CandidateId> losers;
  for (CandidateId c = 0; c < n; ++c) {
    if (c != *winner) losers.push_back(c);
  }
  // Every nonempty proper subset of the losers, lexicographically smallest
  // first so repeated runs report the identical witness.
  std::vector<std::vector<CandidateId>> subsets;
  for (unsigned mask = 1; mask + 1 < (1u << losers.size()); ++mask) {
    std::vector<CandidateId> s;
    for (std::size_t i = 0; i < losers.size(); ++i) {
      if (mask & (1u << i)) s.push_back(losers[i]);
    }
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end());
  for (const std::vector<CandidateId>& s : subsets) {
    Profile reduced =
        remove_candidates(profile, std::set<CandidateId>(s.begin(), s.end()));
    if (reduced.total_ballots == 0) continue;
    Tally t = tally(reduced, method);
    if (t.winners.size() != 1) continue;
    CandidateId orig =
        profile.roster.find(reduced.roster.name_of(t.winners.front()));
    if (orig == *winner) continue;
    Witness w;
    w.kind = WitnessKind::spoiler;
    w.removed = std::set<CandidateId>(s.begin(), s.end());
    w.resulting_winner = orig;
    if (!replay_witness(profile, method, w))
      throw InternalError("spoiler witness failed replay");
    out.status = DetectionStatus::witness;
    out.witness = std::move(w);
    return out;
  }
  out.status = DetectionStatus::none;
  return out;
}

namespace {

constexpr int kOracleMaxCandidates = 4;
constexpr int kOracleMaxTypes = 6;
constexpr long long kOracleMaxCount = 8;

// The oracle works in integers: every per-ballot point value is scaled by
// the common denominator of the method's unranked shares.
struct ScaledPoints {
  // Indexed by ranked count k: per-rank points and the unranked share.
  std::vector<std::vector<long long>> rank;
  std::vector<long long> share;
};

ScaledPoints scale_points(Method method, int n) {
  std::vector<PointsVector> pv;
  pv.reserve(n);
  BigInt d(1);
  for (int k = 1; k <= n; ++k) {
    pv.push_back(points_vector(method, n, k));
    d = lcm(d, pv.back().unranked_share.den());
    for (const Rational& r : pv.back().rank_points) d = lcm(d, r.den());
  }
  Rational scale{d};
  ScaledPoints out;
  out.rank.resize(n + 1);
  out.share.resize(n + 1, 0);
  for (int k = 1; k <= n; ++k) {
    for (const Rational& r : pv[k - 1].rank_points)
      out.rank[k].push_back((r * scale).num().to_int64());
    out.share[k] = (pv[k - 1].unranked_share * scale).num().to_int64();
  }
  return out;
}

std::vector<long long> scaled_ballot_points(const std::vector<CandidateId>& r,
                                            int n, const ScaledPoints& sp) {
  int k = static_cast<int>(r.size());
  std::vector<long long> out(n, k < n ? sp.share[k] : 0);
  for (int i = 0; i < k; ++i) out[r[i]] = sp.rank[k][i];
  return out;
}

struct OracleOption {
  std::vector<CandidateId> modified;
  std::vector<long long> delta;
};

struct OracleType {
  std::vector<CandidateId> ranking;
  long long count;
  std::vector<OracleOption> options;
};

class OracleSearch {
 public:
  OracleSearch(std::vector<OracleType> types, std::vector<long long> totals,
               CandidateId challenger)
      : types_(std::move(types)), totals_(std::move(totals)),
        challenger_(challenger), picks_(types_.size()) {
    int n = static_cast<int>(totals_.size());
    // best_gain[t][x]: the most the challenger's lead on x can grow using
    // types t..end. Sound upper bound used for pruning only.
    best_gain_.assign(types_.size() + 1, std::vector<long long>(n, 0));
    for (std::size_t t = types_.size(); t-- > 0;) {
      for (int x = 0; x < n; ++x) {
        long long best = 0;
        for (const OracleOption& o : types_[t].options) {
          long long g = (o.delta[challenger_] - o.delta[x]) * types_[t].count;
          best = std::max(best, g);
        }
        best_gain_[t][x] = best_gain_[t + 1][x] + best;
      }
    }
  }

  std::optional<Witness> run(WitnessKind kind) {
    kind_ = kind;
    rec(0);
    return found_;
  }

 private:
  bool succeeded() const {
    for (int x = 0; x < static_cast<int>(totals_.size()); ++x) {
      if (x != challenger_ && totals_[x] >= totals_[challenger_]) return false;
    }
    return true;
  }

  void rec(std::size_t t) {
    if (found_) return;
    if (succeeded()) {
      Witness w;
      w.kind = kind_;
      w.challenger = challenger_;
      w.resulting_winner = challenger_;
      for (std::size_t u = 0; u < t; ++u) {
        const auto& [opt, m] = picks_[u];
        if (m > 0)
          w.moves.push_back(BallotMove{types_[u].ranking, opt->modified, m});
      }
      found_ = std::move(w);
      return;
    }
    if (t == types_.size()) return;
    for (int x = 0; x < static_cast<int>(totals_.size()); ++x) {
      if (x == challenger_) continue;
      if (totals_[challenger_] - totals_[x] + best_gain_[t][x] <= 0) return;
    }
    picks_[t] = {nullptr, 0};
    rec(t + 1);
    if (found_) return;
    for (const OracleOption& o : types_[t].options) {
      for (long long m = 1; m <= types_[t].count; ++m) {
        for (std::size_t c = 0; c < totals_.size(); ++c) totals_[c] += o.delta[c];
        picks_[t] = {&o, m};
        rec(t + 1);
        if (found_) {
          for (std::size_t c = 0; c < totals_.size(); ++c)
            totals_[c] -= m * o.delta[c];
          return;
        }
      }
      for (std::size_t c = 0; c < totals_.size(); ++c)
        totals_[c] -= types_[t].count * o.delta[c];
    }
  }

  std::vector<OracleType> types_;
  std::vector<long long> totals_;
  CandidateId challenger_;
  WitnessKind kind_ = WitnessKind::truncation;
  std::vector<std::pair<const OracleOption*, long long>> picks_;
  std::vector<std::vector<long long>> best_gain_;
  std::optional<Witness> found_;
};

}  // namespace

std::optional<Witness> brute_force_oracle(const Profile& profile, Method method,
                                          WitnessKind kind, TieRule rule) {
  if (!is_points_based(method))
    throw ArgumentError("oracle needs a points-based method");
  int n = profile.roster.size();
  if (n > kOracleMaxCandidates ||
      profile.types.size() > static_cast<std::size_t>(kOracleMaxTypes))
    throw ArgumentError("instance too large for the brute-force oracle");
  for (const auto& [ranking, count] : profile.types) {
    if (count > kOracleMaxCount)
      throw ArgumentError("instance too large for the brute-force oracle");
  }
  if (profile.total_ballots == 0) throw InputError("empty profile");

  if (kind == WitnessKind::spoiler) {
    // Spoiler is brute force by nature; re-run the subset walk directly.
    Detection d = spoiler_effect(profile, method, kOracleMaxCandidates, rule);
    return d.witness;
  }

  ScaledPoints sp = scale_points(method, n);
  std::vector<long long> base(n, 0);
  for (const auto& [ranking, count] : profile.types) {
    std::vector<long long> pts = scaled_ballot_points(ranking, n, sp);
    for (int c = 0; c < n; ++c) base[c] += pts[c] * count;
  }
  std::vector<CandidateId> winners;
  for (int c = 0; c < n; ++c) {
    if (winners.empty() || base[c] > base[winners.front()]) winners.assign(1, c);
    else if (base[c] == base[winners.front()]) winners.push_back(c);
  }
  std::optional<CandidateId> w = nominal_winner(winners, rule);
  if (!w) return std::nullopt;

  for (CandidateId challenger = 0; challenger < n; ++challenger) {
    if (challenger == *w) continue;
    std::vector<OracleType> types;
    for (const auto& [ranking, count] : profile.types) {
      int pos_c = position_of(ranking, challenger);
      int pos_w = position_of(ranking, *w);
      OracleType ot;
      ot.ranking = ranking;
      ot.count = count;
      std::vector<long long> orig = scaled_ballot_points(ranking, n, sp);
      if (kind == WitnessKind::truncation) {
        if (pos_c == 0 || pos_w == 0 || pos_c >= pos_w) continue;
        for (int cut = pos_c; cut <= pos_w - 1; ++cut) {
          OracleOption o;
          o.modified.assign(ranking.begin(), ranking.begin() + cut);
          std::vector<long long> mod = scaled_ballot_points(o.modified, n, sp);
          o.delta.resize(n);
          bool nonzero = false;
          for (int c = 0; c < n; ++c) {
            o.delta[c] = mod[c] - orig[c];
            nonzero = nonzero || o.delta[c] != 0;
          }
          if (nonzero) ot.options.push_back(std::move(o));
        }
      } else {
        if (pos_c < 2 || (pos_w != 0 && pos_w < pos_c)) continue;
        OracleOption o;
        o.modified.push_back(challenger);
        for (CandidateId c : ranking) {
          if (c != challenger) o.modified.push_back(c);
        }
        std::vector<long long> mod = scaled_ballot_points(o.modified, n, sp);
        o.delta.resize(n);
        bool nonzero = false;
        for (int c = 0; c < n; ++c) {
          o.delta[c] = mod[c] - orig[c];
          nonzero = nonzero || o.delta[c] != 0;
        }
        if (nonzero) ot.options.push_back(std::move(o));
      }
      if (!ot.options.empty()) types.push_back(std::move(ot));
    }
    if (types.empty()) continue;
    OracleSearch search(std::move(types), base, challenger);
    std::optional<Witness> found = search.run(kind);
    if (found) {
      if (!replay_witness(profile, method, *found))
        throw InternalError("oracle witness failed replay");
      return found;
    }
  }
  return std::nullopt;
}

Profile apply_moves(const Profile& profile,
                    const std::vector<BallotMove>& moves) {
  Profile out = profile;
  for (const BallotMove& mv : moves) {
    auto it = out.types.find(mv.original);
    if (it == out.types.end() || it->second < mv.count)
      throw ArgumentError("witness moves more ballots than the profile holds");
    it->second -= mv.count;
    if (it->second == 0) out.types.erase(it);
    if (mv.modified.empty()) {
      out.total_ballots -= mv.count;
    } else {
      out.types[mv.modified] += mv.count;
    }
  }
  return out;
}

bool replay_witness(const Profile& profile, Method method,
                    const Witness& witness) {
  if (witness.kind == WitnessKind::spoiler) {
    Profile reduced = remove_candidates(profile, witness.removed);
    if (reduced.total_ballots == 0) return false;
    Tally t = tally(reduced, method);
    if (t.winners.size() != 1) return false;
    return profile.roster.find(reduced.roster.name_of(t.winners.front())) ==
           witness.resulting_winner;
  }
  Profile modified = apply_moves(profile, witness.moves);
  Tally t = tally(modified, method);
  return t.winners.size() == 1 && t.winners.front() == witness.resulting_winner;
}

}  // namespace borda
