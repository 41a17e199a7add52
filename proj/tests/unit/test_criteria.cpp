#include <doctest.h>

#include <random>

#include "borda/criteria.hpp"
#include "borda/errors.hpp"
#include "borda/scoring.hpp"

using namespace borda;

namespace {

const Roster kAbc({"A", "B", "C"});

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

Profile alaska_displayed() {
  return make_profile(Roster({"Begich", "Palin", "Peltola"}),
                      {{{0}, 11181}, {{0, 1, 2}, 27165}, {{0, 2, 1}, 15488},
                       {{1}, 21177}, {{1, 0, 2}, 34155}, {{1, 2, 0}, 3678},
                       {{2}, 23650}, {{2, 0, 1}, 47407}, {{2, 1, 0}, 4699}});
}

Profile san_leandro() {
  return make_profile(Roster({"Aguilar", "Thomas"}),
                      {{{0}, 4332}, {{0, 1}, 7570}, {{1}, 4936}, {{1, 0}, 6422}});
}

Profile oakland() {
  return make_profile(Roster({"Hutchinson", "Manigo", "Resnick"}),
                      {{{0}, 2327}, {{0, 2, 1}, 2337}, {{0, 1, 2}, 3563},
                       {{2}, 3740}, {{2, 0, 1}, 3095}, {{2, 1, 0}, 3180},
                       {{1}, 1846}, {{1, 0, 2}, 4194}, {{1, 2, 0}, 2150}});
}

Profile random_profile(std::mt19937& rng, int n, bool complete_only) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, char('A' + i)));
  std::vector<std::pair<std::vector<CandidateId>, long long>> types;
  int t = 1 + rng() % 6;
  for (int i = 0; i < t; ++i) {
    std::vector<CandidateId> order(n);
    for (int c = 0; c < n; ++c) order[c] = c;
    std::shuffle(order.begin(), order.end(), rng);
    if (!complete_only) order.resize(1 + rng() % n);
    types.push_back({order, 1 + static_cast<long long>(rng() % 15)});
  }
  return make_profile(Roster(names), types);
}

}  // namespace

TEST_CASE("pairwise comparisons favor ranked over unranked") {
  PairwiseMatrix m = pairwise_matrix(example4());
  CHECK(m.at(1, 0) == 5);  // B's bullets beat an unranked A
  CHECK(m.at(0, 1) == 4);
  CHECK(m.at(2, 0) == 5);
  CHECK(m.at(0, 2) == 4);
  // B-bullet and C-bullet ballots say nothing about B vs C.
  CHECK(m.at(1, 2) == 7);
  CHECK(m.at(2, 1) == 7);
}

TEST_CASE("complete-ballot profiles split every pair exactly") {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 80; ++trial) {
    Profile p = random_profile(rng, 2 + rng() % 4, true);
    PairwiseMatrix m = pairwise_matrix(p);
    for (CandidateId x = 0; x < p.roster.size(); ++x) {
      for (CandidateId y = x + 1; y < p.roster.size(); ++y)
        CHECK(m.at(x, y) + m.at(y, x) == p.total_ballots);
    }
  }
}

TEST_CASE("alaska pairwise counts by hand") {
  PairwiseMatrix m = pairwise_matrix(alaska_displayed());
  CHECK(m.at(0, 2) == 87989);  // Begich over Peltola
  CHECK(m.at(2, 0) == 79434);
  CHECK(m.at(0, 2) > m.at(2, 0));
}

TEST_CASE("majority winner wants a strict majority of first places") {
  Profile e1 = make_profile(kAbc, {{{0, 1, 2}, 4}, {{1, 2, 0}, 3}});
  CHECK(majority_winner(e1) == CandidateId{0});  // 4 of 7
  CHECK(majority_winner(san_leandro()) == CandidateId{0});  // 11902 of 23260
  CHECK_FALSE(majority_winner(alaska_displayed()).has_value());  // 75756 < half
}

TEST_CASE("majority loser counts complete and almost-complete ballots") {
  CHECK(majority_loser(example2()) == CandidateId{0});  // last on 8 of 15
  CHECK(majority_loser(example3()) == CandidateId{0});  // last on 3 of 5
  Profile bullets =
      make_profile(kAbc, {{{0}, 3}, {{1}, 2}, {{2}, 2}});
  CHECK_FALSE(majority_loser(bullets).has_value());  // nobody holds a last place
}

TEST_CASE("the unranked-last toggle controls almost-complete ballots") {
  // Two-candidate bullets put the unlisted candidate last when the toggle is
  // on; with it off, bullets carry no last-place vote at all.
  Profile p = san_leandro();
  CHECK(majority_loser(p, true) == CandidateId{1});  // Thomas, 11902 of 23260
  CHECK_FALSE(majority_loser(p, false).has_value());
}

TEST_CASE("condorcet winner and loser from the alaska profile") {
  CondorcetPair cp = condorcet_candidates(pairwise_matrix(alaska_displayed()));
  CHECK(cp.winner == CandidateId{0});  // Begich
  CHECK(cp.loser == CandidateId{1});   // Palin
}

TEST_CASE("a three-way cycle has neither condorcet candidate") {
  CondorcetPair cp = condorcet_candidates(pairwise_matrix(oakland()));
  CHECK_FALSE(cp.winner.has_value());
  CHECK_FALSE(cp.loser.has_value());
}

TEST_CASE("bullet-heavy profile makes the points winner a condorcet loser") {
  CondorcetPair cp = condorcet_candidates(pairwise_matrix(example4()));
  CHECK(cp.loser == CandidateId{0});
  CHECK_FALSE(cp.winner.has_value());  // B and C tie head-to-head
}

TEST_CASE("san leandro untreated scoring fails all four criteria at once") {
  Profile p = san_leandro();
  Tally t = tally(p, Method::bcu);
  CHECK(t.totals[1] == Rational(30286));
  CHECK(t.totals[0] == Rational(30226));
  REQUIRE(t.winners == std::vector<CandidateId>{1});
  VerifiableFailures f = verifiable_failures(p, t.winners.front());
  CHECK(f.count() == 4);
  CHECK(f.majority_winner_failure == FailureWitness{0, 1});
  CHECK(f.majority_loser_failure == FailureWitness{1, 1});
  CHECK(f.condorcet_winner_failure == FailureWitness{0, 1});
  CHECK(f.condorcet_loser_failure == FailureWitness{1, 1});
}

TEST_CASE("district 6 averaged winner incurs both winner failures") {
  Profile p = make_profile(Roster({"Bryant", "Flora", "Vance"}),
                           {{{0}, 125}, {{0, 1, 2}, 185}, {{0, 2, 1}, 41},
                            {{1}, 1708}, {{1, 0, 2}, 2118}, {{1, 2, 0}, 382},
                            {{2}, 3907}, {{2, 0, 1}, 318}, {{2, 1, 0}, 735}});
  Tally abc = tally(p, Method::abc);
  REQUIRE(abc.winners == std::vector<CandidateId>{1});
  VerifiableFailures f = verifiable_failures(p, 1);
  CHECK(f.majority_winner_failure == FailureWitness{2, 1});
  CHECK(f.condorcet_winner_failure == FailureWitness{2, 1});
  CHECK_FALSE(f.majority_loser_failure.has_value());
  CHECK_FALSE(f.condorcet_loser_failure.has_value());
}

TEST_CASE("electing the condorcet winner leaves nothing to flag") {
  Profile p = alaska_displayed();
  VerifiableFailures f = verifiable_failures(p, 0);
  CHECK(f.count() == 0);
}

TEST_CASE("a majority winner is always the condorcet winner") {
  std::mt19937 rng(9090);
  int observed = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Profile p = random_profile(rng, 2 + rng() % 4, false);
    auto mw = majority_winner(p);
    if (!mw) continue;
    ++observed;
    CondorcetPair cp = condorcet_candidates(pairwise_matrix(p));
    REQUIRE(cp.winner.has_value());
    CHECK(*cp.winner == *mw);
  }
  CHECK(observed > 20);
}

TEST_CASE("on complete ballots a majority loser is the condorcet loser") {
  std::mt19937 rng(808);
  int observed = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Profile p = random_profile(rng, 2 + rng() % 4, true);
    auto ml = majority_loser(p);
    if (!ml) continue;
    ++observed;
    CondorcetPair cp = condorcet_candidates(pairwise_matrix(p));
    REQUIRE(cp.loser.has_value());
    CHECK(*cp.loser == *ml);
  }
  CHECK(observed > 20);
}

TEST_CASE("condorcet winner and loser never coincide") {
  std::mt19937 rng(6161);
  for (int trial = 0; trial < 300; ++trial) {
    Profile p = random_profile(rng, 2 + rng() % 4, false);
    CondorcetPair cp = condorcet_candidates(pairwise_matrix(p));
    if (cp.winner && cp.loser && p.roster.size() >= 2)
      CHECK(*cp.winner != *cp.loser);
  }
}

TEST_CASE("verifiable_failures rejects a winner off the roster") {
  CHECK_THROWS_AS(verifiable_failures(example2(), 9), ArgumentError);
}
