#include "borda/ballot.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "borda/errors.hpp"

namespace borda {

Roster::Roster(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw ArgumentError("roster must have at least one candidate");
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    if (!index_.emplace(names_[i], i).second)
      throw ArgumentError("duplicate candidate name '" + names_[i] + "' in roster");
  }
}

const std::string& Roster::name_of(CandidateId id) const {
  if (id < 0 || id >= size())
    throw ArgumentError("candidate id out of range: " + std::to_string(id));
  return names_[id];
}

CandidateId Roster::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

namespace {

// Splits one CSV record. Supports RFC 4180 quoting (commas and doubled
// quotes inside quoted fields); embedded newlines are not supported.
std::vector<std::string> split_csv_line(const std::string& line, long lineno) {
  std::vector<std::string> fields;
  std::string cur;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        cur.push_back(c);
      }
    } else if (c == '"' && cur.empty()) {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (in_quotes)
    throw InputError("line " + std::to_string(lineno) + ": unterminated quote");
  fields.push_back(cur);
  return fields;
}

bool matches_any(const std::string& s, const std::vector<std::string>& pats) {
  return std::find(pats.begin(), pats.end(), s) != pats.end();
}

}  // namespace

CvrFile parse_cvr(std::istream& in, const CvrConfig& config) {
  std::string line;
  long lineno = 0;
  // Header
  std::string header;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    header = line;
    have_header = true;
    break;
  }
  if (!have_header) throw InputError("empty file");
  std::vector<std::string> cols = split_csv_line(header, lineno);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (cols[i] != "rank" + std::to_string(i + 1))
      throw InputError("line " + std::to_string(lineno) +
                       ": expected header rank1,...,rankm, got '" + header + "'");
  }
  CvrFile out;
  out.max_rank = static_cast<int>(cols.size());

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells = split_csv_line(line, lineno);
    if (static_cast<int>(cells.size()) != out.max_rank)
      throw InputError("line " + std::to_string(lineno) + ": expected " +
                       std::to_string(out.max_rank) + " fields, got " +
                       std::to_string(cells.size()));
    RawBallot row;
    row.line = lineno;
    row.marks.reserve(cells.size());
    for (const std::string& cell : cells) {
      Mark m;
      if (cell.empty() || cell == "skipped") {
        m.kind = MarkKind::skip;
      } else if (cell == "overvote") {
        m.kind = MarkKind::overvote;
      } else if (matches_any(cell, config.writein_patterns)) {
        m.kind = MarkKind::write_in;
      } else {
        m.kind = MarkKind::candidate;
        m.name = cell;
        if (config.roster &&
            std::find(config.roster->begin(), config.roster->end(), cell) ==
                config.roster->end())
          throw InputError("line " + std::to_string(lineno) +
                           ": unknown candidate '" + cell + "'");
      }
      row.marks.push_back(std::move(m));
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

Ballot normalize(const RawBallot& raw, const Roster& roster) {
  Ballot out;
  // Resolve candidate tokens and drop write-ins.
  struct Slot {
    bool skip = false;
    bool overvote = false;
    CandidateId id = -1;
  };
  std::vector<Slot> slots;
  slots.reserve(raw.marks.size());
  for (const Mark& m : raw.marks) {
    Slot s;
    switch (m.kind) {
      case MarkKind::write_in:
        out.flags.had_writein = true;
        continue;
      case MarkKind::skip:
        s.skip = true;
        break;
      case MarkKind::overvote:
        s.overvote = true;
        break;
      case MarkKind::candidate: {
        s.id = roster.find(m.name);
        if (s.id < 0)
          throw InputError("line " + std::to_string(raw.line) +
                           ": unknown candidate '" + m.name + "'");
        break;
      }
    }
    slots.push_back(s);
  }
  // Duplicates after the first occurrence.
  {
    std::vector<bool> seen(roster.size(), false);
    std::vector<Slot> kept;
    for (const Slot& s : slots) {
      if (s.id >= 0) {
        if (seen[s.id]) {
          out.flags.had_duplicate = true;
          continue;
        }
        seen[s.id] = true;
      }
      kept.push_back(s);
    }
    slots = std::move(kept);
  }
  // Skipped ranks close up. Trailing skips are ordinary partial-ballot
  // padding; only a skip above a later-ranked candidate gets flagged.
  {
    std::vector<Slot> kept;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (slots[i].skip) {
        for (std::size_t j = i + 1; j < slots.size(); ++j) {
          if (slots[j].id >= 0) {
            out.flags.had_skip = true;
            break;
          }
        }
        continue;
      }
      kept.push_back(slots[i]);
    }
    slots = std::move(kept);
  }
  // First overvote cuts that slot and everything below it.
  for (const Slot& s : slots) {
    if (s.overvote) {
      out.flags.had_overvote = true;
      break;
    }
    out.ranking.push_back(s.id);
  }
  return out;
}

void validate_ballot(const Ballot& ballot, const Roster& roster) {
  std::vector<bool> seen(roster.size(), false);
  if (ballot.ranking.size() > static_cast<std::size_t>(roster.size()))
    throw InternalError("ballot ranks more candidates than the roster holds");
  for (CandidateId id : ballot.ranking) {
    if (id < 0 || id >= roster.size())
      throw InternalError("ballot references candidate id " + std::to_string(id) +
                          " outside the roster");
    if (seen[id])
      throw InternalError("ballot ranks candidate '" + roster.name_of(id) +
                          "' twice");
    seen[id] = true;
  }
}

ProfileBuild build_profile(const std::vector<Ballot>& ballots,
                           const Roster& roster) {
  ProfileBuild out;
  out.profile.roster = roster;
  for (const Ballot& b : ballots) {
    validate_ballot(b, roster);
    if (b.ranking.empty()) {
      ++out.empty_excluded;
      continue;
    }
    out.profile.types[b.ranking] += 1;
    out.profile.total_ballots += 1;
  }
  return out;
}

Profile make_profile(Roster roster,
                     const std::vector<std::pair<std::vector<CandidateId>,
                                                 long long>>& types) {
  Profile out;
  out.roster = std::move(roster);
  for (const auto& [ranking, count] : types) {
    if (count <= 0) throw ArgumentError("ballot type count must be positive");
    validate_ballot(Ballot{ranking, {}}, out.roster);
    if (ranking.empty()) throw ArgumentError("empty ranking in profile");
    out.types[ranking] += count;
    out.total_ballots += count;
  }
  return out;
}

Profile remove_candidates(const Profile& profile,
                          const std::set<CandidateId>& removed) {
  if (removed.empty()) throw ArgumentError("no candidates to remove");
  for (CandidateId id : removed) {
    if (id < 0 || id >= profile.roster.size())
      throw ArgumentError("cannot remove candidate id " + std::to_string(id) +
                          ": not on the roster");
  }
  if (static_cast<int>(removed.size()) >= profile.roster.size())
    throw ArgumentError("cannot remove every candidate from the slate");

  std::vector<std::string> kept_names;
  std::vector<CandidateId> remap(profile.roster.size(), -1);
  for (CandidateId id = 0; id < profile.roster.size(); ++id) {
    if (removed.count(id)) continue;
    remap[id] = static_cast<CandidateId>(kept_names.size());
    kept_names.push_back(profile.roster.name_of(id));
  }

  Profile out;
  out.roster = Roster(kept_names);
  for (const auto& [ranking, count] : profile.types) {
    std::vector<CandidateId> reduced;
    for (CandidateId id : ranking) {
      if (remap[id] >= 0) reduced.push_back(remap[id]);
    }
    if (reduced.empty()) continue;
    out.types[reduced] += count;
    out.total_ballots += count;
  }
  return out;
}

Roster roster_from_cvr(const CvrFile& file) {
  std::set<std::string> names;
  for (const RawBallot& row : file.rows) {
    for (const Mark& m : row.marks) {
      if (m.kind == MarkKind::candidate) names.insert(m.name);
    }
  }
  if (names.empty()) throw InputError("no candidates found in file");
  return Roster(std::vector<std::string>(names.begin(), names.end()));
}

}  // namespace borda
