#include <doctest.h>

#include <random>

#include "borda/errors.hpp"
#include "borda/scoring.hpp"

using namespace borda;

namespace {

Rational rat(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

std::vector<Rational> complete_vector(Method m, int n) {
  return points_vector(m, n, n).rank_points;
}

const Roster kAbc({"A", "B", "C"});

Profile example1() {
  return make_profile(kAbc, {{{0, 1, 2}, 4}, {{1, 2, 0}, 3}});
}

Profile example2() {
  return make_profile(
      kAbc, {{{0, 1, 2}, 4}, {{0, 2, 1}, 3}, {{1, 2, 0}, 4}, {{2, 1, 0}, 4}});
}

Profile example3() {
  return make_profile(kAbc, {{{0}, 2}, {{1, 2, 0}, 2}, {{2, 1, 0}, 1}});
}

Profile example4() {
  return make_profile(kAbc,
                      {{{0, 1, 2}, 2}, {{0, 2, 1}, 2}, {{1}, 5}, {{2}, 5}});
}

// The nine displayed ballot types, three-candidate rows taken as complete.
Profile alaska_displayed() {
  return make_profile(Roster({"Begich", "Palin", "Peltola"}),
                      {{{0}, 11181}, {{0, 1, 2}, 27165}, {{0, 2, 1}, 15488},
                       {{1}, 21177}, {{1, 0, 2}, 34155}, {{1, 2, 0}, 3678},
                       {{2}, 23650}, {{2, 0, 1}, 47407}, {{2, 1, 0}, 4699}});
}

Profile district6() {
  return make_profile(Roster({"Bryant", "Flora", "Vance"}),
                      {{{0}, 125}, {{0, 1, 2}, 185}, {{0, 2, 1}, 41},
                       {{1}, 1708}, {{1, 0, 2}, 2118}, {{1, 2, 0}, 382},
                       {{2}, 3907}, {{2, 0, 1}, 318}, {{2, 1, 0}, 735}});
}

}  // namespace

TEST_CASE("six-candidate complete points vectors") {
  CHECK(complete_vector(Method::ebc, 6) ==
        std::vector<Rational>{32, 16, 8, 4, 2, 1});
  CHECK(complete_vector(Method::qbc, 6) ==
        std::vector<Rational>{16, 11, 7, 4, 2, 1});
  for (Method m : {Method::abc, Method::bcu, Method::mbc}) {
    CHECK(complete_vector(m, 6) == std::vector<Rational>{6, 5, 4, 3, 2, 1});
  }
}

TEST_CASE("averaged remainder for a two-ranked six-candidate ballot") {
  PointsVector pv = points_vector(Method::ebc, 6, 2);
  CHECK(pv.rank_points == std::vector<Rational>{32, 16});
  CHECK(pv.unranked_share == rat(15, 4));
}

TEST_CASE("partial-ballot treatments differ only off the ranked prefix") {
  PointsVector abc = points_vector(Method::abc, 5, 3);
  CHECK(abc.rank_points == std::vector<Rational>{5, 4, 3});
  CHECK(abc.unranked_share == rat(3, 2));
  PointsVector mbc = points_vector(Method::mbc, 5, 3);
  CHECK(mbc.rank_points == std::vector<Rational>{3, 2, 1});
  CHECK(mbc.unranked_share == rat(0));
  PointsVector bcu = points_vector(Method::bcu, 5, 3);
  CHECK(bcu.rank_points == std::vector<Rational>{5, 4, 3});
  CHECK(bcu.unranked_share == rat(0));
  // On complete three-candidate ballots the three treatments coincide.
  CHECK(complete_vector(Method::abc, 3) == complete_vector(Method::bcu, 3));
  CHECK(complete_vector(Method::abc, 3) == complete_vector(Method::mbc, 3));
}

TEST_CASE("points_vector argument errors") {
  CHECK_THROWS_AS(points_vector(Method::ebc, 3, 0), ArgumentError);
  CHECK_THROWS_AS(points_vector(Method::ebc, 3, 4), ArgumentError);
  CHECK_THROWS_AS(points_vector(Method::plurality, 3, 1), ArgumentError);
  CHECK_THROWS_AS(points_vector(Method::irv, 3, 1), ArgumentError);
}

TEST_CASE("exponential points stay exact on a 66-candidate slate") {
  PointsVector pv = points_vector(Method::ebc, 66, 66);
  CHECK(pv.rank_points.front().to_string() == "36893488147419103232");
  CHECK(pv.rank_points.back() == rat(1));
}

TEST_CASE("per-ballot point conservation for averaged treatments") {
  for (int n = 1; n <= 12; ++n) {
    Rational borda_sum = rat(static_cast<long long>(n) * (n + 1) / 2);
    Rational ebc_sum(BigInt::two_pow(n) - BigInt(1));
    Rational qbc_sum(0);
    for (const Rational& p : complete_vector(Method::qbc, n)) qbc_sum += p;
    for (int k = 1; k <= n; ++k) {
      for (auto [m, full] : {std::pair{Method::abc, borda_sum},
                             std::pair{Method::ebc, ebc_sum},
                             std::pair{Method::qbc, qbc_sum}}) {
        PointsVector pv = points_vector(m, n, k);
        Rational total(0);
        for (const Rational& p : pv.rank_points) total += p;
        total += pv.unranked_share * rat(n - k);
        CHECK(total == full);
      }
    }
  }
}

TEST_CASE("rank points never increase down the ballot") {
  for (Method m : kBordaMethods) {
    for (int n = 1; n <= 10; ++n) {
      for (int k = 1; k <= n; ++k) {
        PointsVector pv = points_vector(m, n, k);
        for (std::size_t i = 1; i < pv.rank_points.size(); ++i)
          CHECK(pv.rank_points[i - 1] >= pv.rank_points[i]);
        if (k < n && !pv.unranked_share.is_zero())
          CHECK(pv.rank_points.back() >= pv.unranked_share);
      }
    }
  }
}

TEST_CASE("complete-vector differences are convex for extended scales") {
  for (Method m : {Method::ebc, Method::qbc, Method::abc}) {
    for (int n = 3; n <= 10; ++n) {
      std::vector<Rational> p = complete_vector(m, n);
      for (int i = 0; i + 2 < n; ++i)
        CHECK(p[i] - p[i + 1] >= p[i + 1] - p[i + 2]);
    }
  }
}

TEST_CASE("a seven-ballot election scored exponentially") {
  Tally t = tally(example1(), Method::ebc);
  CHECK(t.totals == std::vector<Rational>{19, 20, 10});
  CHECK(t.winners == std::vector<CandidateId>{1});
}

TEST_CASE("untreated scoring with bullet ballots") {
  Tally t = tally(example3(), Method::bcu);
  CHECK(t.totals == std::vector<Rational>{9, 8, 7});
  CHECK(t.winners == std::vector<CandidateId>{0});
}

TEST_CASE("zero-fill scoring with bullet ballots") {
  Tally t = tally(example4(), Method::mbc);
  CHECK(t.totals == std::vector<Rational>{12, 11, 11});
  CHECK(t.winners == std::vector<CandidateId>{0});
}

TEST_CASE("fifteen-ballot election rewards a last-place majority candidate") {
  Tally t = tally(example2(), Method::ebc);
  CHECK(t.totals == std::vector<Rational>{36, 35, 34});
  CHECK(t.winners == std::vector<CandidateId>{0});
}

TEST_CASE("alaska displayed profile orders begich-peltola-palin under mbc") {
  Tally t = tally(alaska_displayed(), Method::mbc);
  CHECK(t.winners == std::vector<CandidateId>{0});
  CHECK(t.totals[0] == rat(310641));
  CHECK(t.totals[2] == rat(279620));
  CHECK(t.totals[1] == rat(261299));
}

TEST_CASE("plurality counts first-place votes only") {
  Tally t = plurality_result(alaska_displayed());
  CHECK(t.totals[2] == rat(75756));
  CHECK(t.winners == std::vector<CandidateId>{2});
  Tally e1 = plurality_result(example1());
  CHECK(e1.totals[0] == rat(4));
  CHECK(e1.winners == std::vector<CandidateId>{0});
  Profile single = make_profile(kAbc, {{{2, 0}, 1}});
  CHECK(plurality_result(single).winners == std::vector<CandidateId>{2});
}

TEST_CASE("tally rejects empty profiles and count-based methods") {
  Profile empty;
  empty.roster = kAbc;
  CHECK_THROWS_AS(tally(empty, Method::ebc), InputError);
  CHECK_THROWS_AS(plurality_result(empty), InputError);
  CHECK_THROWS_AS(irv_result(empty), InputError);
  CHECK_THROWS_AS(tally(example1(), Method::plurality), ArgumentError);
  CHECK_THROWS_AS(tally(example1(), Method::irv), ArgumentError);
}

TEST_CASE("instant runoff on the alaska displayed profile") {
  IrvResult r = irv_result(alaska_displayed());
  REQUIRE(r.rounds.size() == 2);
  CHECK(r.rounds[0].votes == std::vector<long long>{53834, 59010, 75756});
  CHECK(r.rounds[0].eliminated == CandidateId{0});
  CHECK(r.rounds[1].votes == std::vector<long long>{-1, 86175, 91244});
  CHECK(r.winners == std::vector<CandidateId>{2});
  CHECK_FALSE(r.tie_break_used);
}

TEST_CASE("two-candidate instant runoff is a pairwise majority vote") {
  Profile p = make_profile(Roster({"A", "B"}), {{{0, 1}, 3}, {{1, 0}, 2}});
  IrvResult r = irv_result(p);
  CHECK(r.winners == std::vector<CandidateId>{0});
  CHECK(r.rounds.size() == 1);
}

TEST_CASE("instant runoff elimination tie is broken by index and flagged") {
  // Top counts 7-4-4; the two eliminations lead to different winners, so the
  // tie flag matters. Eliminating B (lower index) transfers B>C>A to C.
  Profile p = example2();
  IrvResult r = irv_result(p);
  REQUIRE(!r.rounds.empty());
  CHECK(r.rounds[0].votes == std::vector<long long>{7, 4, 4});
  CHECK(r.rounds[0].eliminated == CandidateId{1});
  CHECK(r.rounds[0].tie_break_used);
  CHECK(r.tie_break_used);
  CHECK(r.winners == std::vector<CandidateId>{2});
  // The other branch: with C eliminated instead, B collects C's transfers
  // and wins 8-7. Candidate removal and vote transfer coincide here.
  IrvResult other = irv_result(remove_candidates(p, {2}));
  CHECK(other.winners == std::vector<CandidateId>{1});
}

TEST_CASE("tally totals sum to ballots times the complete-vector total") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('A' + i)));
    std::vector<std::pair<std::vector<CandidateId>, long long>> types;
    int t = 1 + rng() % 6;
    for (int i = 0; i < t; ++i) {
      std::vector<CandidateId> order(n);
      for (int c = 0; c < n; ++c) order[c] = c;
      std::shuffle(order.begin(), order.end(), rng);
      order.resize(1 + rng() % n);
      types.push_back({order, 1 + static_cast<long long>(rng() % 20)});
    }
    Profile p = make_profile(Roster(names), types);
    for (Method m : {Method::abc, Method::ebc, Method::qbc}) {
      Rational full(0);
      for (const Rational& v : complete_vector(m, n)) full += v;
      Rational sum(0);
      for (const Rational& v : tally(p, m).totals) sum += v;
      CHECK(sum == full * rat(p.total_ballots));
      CHECK_FALSE(tally(p, m).winners.empty());
    }
  }
}

TEST_CASE("winner sets split between averaged and prefix-valued treatments") {
  Profile p = district6();
  CHECK(winner_set(p, Method::abc) == std::vector<CandidateId>{1});
  CHECK(winner_set(p, Method::mbc) == std::vector<CandidateId>{1});
  CHECK(winner_set(p, Method::ebc) == std::vector<CandidateId>{2});
  CHECK(winner_set(p, Method::qbc) == std::vector<CandidateId>{2});
  CHECK(winner_set(p, Method::bcu) == std::vector<CandidateId>{2});
  Tally abc = tally(p, Method::abc);
  CHECK(abc.totals[1] - abc.totals[2] == rat(185, 2));  // Flora by 92.5
}

TEST_CASE("winner agreement counts equal winner sets") {
  std::vector<Method> methods(kBordaMethods.begin(), kBordaMethods.end());
  AgreementMatrix single = winner_agreement({alaska_displayed()}, methods);
  CHECK(single.all_agree == 1);
  AgreementMatrix both =
      winner_agreement({alaska_displayed(), district6()}, methods);
  CHECK(both.all_agree == 1);
  CHECK(both.profiles == 2);
  // EBC/QBC/BCU agree on both profiles, EBC/ABC only on the first.
  CHECK(both.pair_agree[0][1] == 2);
  CHECK(both.pair_agree[0][3] == 2);
  CHECK(both.pair_agree[0][2] == 1);
  CHECK(both.pair_agree[2][4] == 2);  // ABC with MBC
}

TEST_CASE("rank-capped contests score by the actual ranked count") {
  // A jurisdiction capping ballots at two ranks of four candidates: k is
  // just the ranked count, the partial-ballot formulas do the rest.
  Profile p = make_profile(Roster({"A", "B", "C", "D"}),
                           {{{0, 1}, 3}, {{2, 3}, 2}, {{1}, 1}});
  Tally abc = tally(p, Method::abc);
  // A: first place on three ballots, then the 3/2 and 2-point shares.
  Rational expected_a = rat(12) + rat(2) * Rational(BigInt(3), BigInt(2)) +
                        rat(1) * Rational(BigInt(4), BigInt(2));
  CHECK(abc.totals[0] == expected_a);
  CHECK(expected_a == rat(17));
  Rational total(0);
  for (const Rational& t : abc.totals) total += t;
  CHECK(total == rat(10 * p.total_ballots));  // every ballot spends 10 points
  Tally mbc = tally(p, Method::mbc);
  CHECK(mbc.totals[0] == rat(3 * 2));
  CHECK(mbc.totals[1] == rat(3 * 1 + 1 * 1));
}

TEST_CASE("instant runoff rounds are well formed on random profiles") {
  std::mt19937 rng(515);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('A' + i)));
    std::vector<std::pair<std::vector<CandidateId>, long long>> types;
    int t = 1 + rng() % 6;
    for (int i = 0; i < t; ++i) {
      std::vector<CandidateId> order(n);
      for (int c = 0; c < n; ++c) order[c] = c;
      std::shuffle(order.begin(), order.end(), rng);
      order.resize(1 + rng() % n);
      types.push_back({order, 1 + static_cast<long long>(rng() % 9)});
    }
    Profile p = make_profile(Roster(names), types);
    IrvResult r = irv_result(p);
    CHECK_FALSE(r.winners.empty());
    CHECK(r.rounds.size() <= static_cast<std::size_t>(n));
    std::set<CandidateId> eliminated;
    for (std::size_t i = 0; i < r.rounds.size(); ++i) {
      const IrvRound& round = r.rounds[i];
      if (i + 1 < r.rounds.size()) {
        // Every round but the last eliminates exactly one fresh candidate.
        REQUIRE(round.eliminated.has_value());
        CHECK(eliminated.insert(*round.eliminated).second);
      }
      for (CandidateId c : eliminated) {
        if (round.eliminated != c) CHECK(round.votes[c] == -1);
      }
    }
    for (CandidateId w : r.winners) CHECK_FALSE(eliminated.count(w));
  }
}

TEST_CASE("nominal winner respects the tie rule") {
  Profile p = make_profile(Roster({"A", "B"}), {{{0, 1}, 1}, {{1, 0}, 1}});
  Tally t = tally(p, Method::abc);
  CHECK(t.tie());
  CHECK(nominal_winner(t.winners, TieRule::lowest_index) == CandidateId{0});
  CHECK_FALSE(nominal_winner(t.winners, TieRule::report_only).has_value());
}
