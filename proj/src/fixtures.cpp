#include "borda/fixtures.hpp"

#include "borda/errors.hpp"

namespace borda {

namespace {

using Rows = std::vector<std::pair<std::vector<std::string>, long long>>;

Fixture fx(std::string name, std::string description, int max_rank, Rows rows) {
  Fixture f;
  f.name = std::move(name);
  f.description = std::move(description);
  f.max_rank = max_rank;
  f.rows = std::move(rows);
  return f;
}

std::vector<Fixture> build() {
  std::vector<Fixture> out;

  // 2022 Alaska U.S. House special election (Begich, Palin, Peltola).
  // Jurisdiction reporting collapses two-candidate ballots into the
  // three-candidate rows; the split between truly complete and two-ranked
  // ballots below reconstructs the published per-method point totals, which
  // score partial ballots differently under MBC and BCU.
  out.push_back(fx(
      "alaska-2022-special",
      "2022 Alaska U.S. House special election", 3,
      {
          {{"Begich", "skipped", "skipped"}, 11181},
          {{"Begich", "Palin", "Peltola"}, 8484},
          {{"Begich", "Palin", "skipped"}, 18681},
          {{"Begich", "Peltola", "Palin"}, 7411},
          {{"Begich", "Peltola", "skipped"}, 8077},
          {{"Palin", "skipped", "skipped"}, 21177},
          {{"Palin", "Begich", "Peltola"}, 10666},
          {{"Palin", "Begich", "skipped"}, 23489},
          {{"Palin", "Peltola", "Begich"}, 2748},
          {{"Palin", "Peltola", "skipped"}, 930},
          {{"Peltola", "skipped", "skipped"}, 23650},
          {{"Peltola", "Begich", "Palin"}, 22684},
          {{"Peltola", "Begich", "skipped"}, 24786},
          {{"Peltola", "Palin", "Begich"}, 3511},
          {{"Peltola", "Palin", "skipped"}, 1188},
      }));

  // 2022 Alaska State House District 6 (Bryant, Flora, Vance).
  out.push_back(fx(
      "alaska-2022-house-district-6",
      "2022 Alaska State House District 6 election", 3,
      {
          {{"Bryant", "skipped", "skipped"}, 125},
          {{"Bryant", "Flora", "Vance"}, 185},
          {{"Bryant", "Vance", "Flora"}, 41},
          {{"Flora", "skipped", "skipped"}, 1708},
          {{"Flora", "Bryant", "Vance"}, 2118},
          {{"Flora", "Vance", "Bryant"}, 382},
          {{"Vance", "skipped", "skipped"}, 3907},
          {{"Vance", "Bryant", "Flora"}, 318},
          {{"Vance", "Flora", "Bryant"}, 735},
      }));

  // 2021 NYC Queens Borough President Democratic primary (Crowley,
  // Richards, Van Bramer). Two-ranked ballots reconstructed as above.
  out.push_back(fx(
      "queens-2021",
      "2021 New York City Queens Borough President Democratic primary", 3,
      {
          {{"Crowley", "skipped", "skipped"}, 35009},
          {{"Crowley", "Richards", "Van Bramer"}, 20144},
          {{"Crowley", "Richards", "skipped"}, 9573},
          {{"Crowley", "Van Bramer", "Richards"}, 11759},
          {{"Crowley", "Van Bramer", "skipped"}, 3814},
          {{"Richards", "skipped", "skipped"}, 33452},
          {{"Richards", "Crowley", "Van Bramer"}, 22741},
          {{"Richards", "Crowley", "skipped"}, 10805},
          {{"Richards", "Van Bramer", "Crowley"}, 8055},
          {{"Richards", "Van Bramer", "skipped"}, 5438},
          {{"Van Bramer", "skipped", "skipped"}, 11721},
          {{"Van Bramer", "Crowley", "Richards"}, 8195},
          {{"Van Bramer", "Crowley", "skipped"}, 2659},
          {{"Van Bramer", "Richards", "Crowley"}, 7003},
          {{"Van Bramer", "Richards", "skipped"}, 4728},
      }));

  // 2018 San Leandro, CA County Council District 3 (Aguilar, Thomas).
  out.push_back(fx(
      "san-leandro-2018",
      "2018 San Leandro, CA County Council District 3 election", 2,
      {
          {{"Aguilar", "skipped"}, 4332},
          {{"Aguilar", "Thomas"}, 7570},
          {{"Thomas", "skipped"}, 4936},
          {{"Thomas", "Aguilar"}, 6422},
      }));

  // 2022 Oakland, CA School Board District 4 (Hutchinson, Resnick, Manigo):
  // a three-way head-to-head cycle, so no Condorcet candidate exists.
  out.push_back(fx(
      "oakland-2022-school-board",
      "2022 Oakland, CA School Board District 4 election", 3,
      {
          {{"Hutchinson", "skipped", "skipped"}, 2327},
          {{"Hutchinson", "Resnick", "Manigo"}, 2337},
          {{"Hutchinson", "Manigo", "Resnick"}, 3563},
          {{"Resnick", "skipped", "skipped"}, 3740},
          {{"Resnick", "Hutchinson", "Manigo"}, 3095},
          {{"Resnick", "Manigo", "Hutchinson"}, 3180},
          {{"Manigo", "skipped", "skipped"}, 1846},
          {{"Manigo", "Hutchinson", "Resnick"}, 4194},
          {{"Manigo", "Resnick", "Hutchinson"}, 2150},
      }));

  // Small constructed elections exercising one failure each.
  out.push_back(fx("example-1",
                   "Seven ballots where the first-place majority candidate "
                   "loses under extended points scales",
                   3,
                   {
                       {{"A", "B", "C"}, 4},
                       {{"B", "C", "A"}, 3},
                   }));
  out.push_back(fx("example-2",
                   "Fifteen ballots where the last-place majority candidate "
                   "wins under extended points scales",
                   3,
                   {
                       {{"A", "B", "C"}, 4},
                       {{"A", "C", "B"}, 3},
                       {{"B", "C", "A"}, 4},
                       {{"C", "B", "A"}, 4},
                   }));
  out.push_back(fx("example-3",
                   "Five ballots where untreated partial-ballot scoring "
                   "elects the last-place majority candidate",
                   3,
                   {
                       {{"A", "skipped", "skipped"}, 2},
                       {{"B", "C", "A"}, 2},
                       {{"C", "B", "A"}, 1},
                   }));
  out.push_back(fx("example-4",
                   "Fourteen ballots where zero-fill partial-ballot scoring "
                   "elects a head-to-head loser",
                   3,
                   {
                       {{"A", "B", "C"}, 2},
                       {{"A", "C", "B"}, 2},
                       {{"B", "skipped", "skipped"}, 5},
                       {{"C", "skipped", "skipped"}, 5},
                   }));
  return out;
}

}  // namespace

const std::vector<Fixture>& bundled_fixtures() {
  static const std::vector<Fixture> fixtures = build();
  return fixtures;
}

const Fixture* find_fixture(const std::string& name) {
  for (const Fixture& f : bundled_fixtures()) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

std::string fixture_to_csv(const Fixture& fixture) {
  std::string out;
  for (int i = 1; i <= fixture.max_rank; ++i) {
    if (i > 1) out += ',';
    out += "rank" + std::to_string(i);
  }
  out += '\n';
  std::string row;
  for (const auto& [cells, count] : fixture.rows) {
    if (static_cast<int>(cells.size()) != fixture.max_rank)
      throw InternalError("fixture row width mismatch in " + fixture.name);
    row.clear();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) row += ',';
      row += cells[i];
    }
    row += '\n';
    for (long long i = 0; i < count; ++i) out += row;
  }
  return out;
}

}  // namespace borda
