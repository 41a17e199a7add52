#pragma once

#include <string>
#include <vector>

namespace borda {

// A bundled election: ballot-type rows with counts, in canonical CVR form.
struct Fixture {
  std::string name;
  std::string description;
  int max_rank = 0;
  // Each row: rank cells (candidate name or "skipped") and a ballot count.
  std::vector<std::pair<std::vector<std::string>, long long>> rows;
};

const std::vector<Fixture>& bundled_fixtures();
const Fixture* find_fixture(const std::string& name);

// Expands a fixture to canonical CVR CSV, one line per ballot.
std::string fixture_to_csv(const Fixture& fixture);

}  // namespace borda
