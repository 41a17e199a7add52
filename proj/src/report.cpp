#include "borda/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "borda/errors.hpp"
#include "borda/fixtures.hpp"

namespace borda {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

void RunConfig::validate() const {
  if (methods.empty()) throw InputError("at least one method must be requested");
  if (spoiler_cap < 2) throw InputError("spoiler candidate cap must be at least 2");
}

const char* failure_kind_name(FailureKind kind) {
  switch (kind) {
    case FailureKind::majority_winner: return "majority_winner";
    case FailureKind::majority_loser: return "majority_loser";
    case FailureKind::condorcet_winner: return "condorcet_winner";
    case FailureKind::condorcet_loser: return "condorcet_loser";
    case FailureKind::truncation: return "truncation";
    case FailureKind::compromise: return "compromise";
    case FailureKind::spoiler: return "spoiler";
  }
  throw InternalError("unreachable failure kind");
}

ElectionReport analyze_profile(const std::string& id, const Profile& profile,
                               const NormalizationStats& stats,
                               const RunConfig& config) {
  config.validate();
  if (profile.total_ballots == 0)
    throw InputError(id + ": no non-empty ballots to analyze");
  ElectionReport out;
  out.election = id;
  out.roster = profile.roster.names();
  out.normalization = stats;
  out.total_ballots = profile.total_ballots;

  out.criteria.majority_winner = majority_winner(profile);
  out.criteria.majority_loser = majority_loser(profile, config.unranked_last);
  CondorcetPair cp = condorcet_candidates(pairwise_matrix(profile));
  out.criteria.condorcet_winner = cp.winner;
  out.criteria.condorcet_loser = cp.loser;

  for (Method method : config.methods) {
    MethodReport mr;
    mr.method = method;
    if (method == Method::irv) {
      mr.irv = irv_result(profile, config.tie_rule);
      mr.winners = mr.irv->winners;
    } else if (method == Method::plurality) {
      Tally t = plurality_result(profile);
      mr.winners = t.winners;
      mr.totals = std::move(t.totals);
    } else {
      Tally t = tally(profile, method);
      mr.winners = t.winners;
      mr.totals = std::move(t.totals);
    }
    mr.tie = mr.winners.size() > 1;
    mr.winner = nominal_winner(mr.winners, config.tie_rule);
    if (mr.winner)
      mr.failures = verifiable_failures(profile, *mr.winner, config.unranked_last);
    if (is_points_based(method) && mr.winner) {
      mr.truncation =
          truncation_failure(profile, method, config.tie_rule, config.limits);
      mr.compromise =
          compromise_failure(profile, method, config.tie_rule, config.limits);
      mr.spoiler =
          spoiler_effect(profile, method, config.spoiler_cap, config.tie_rule);
    } else {
      mr.truncation.status = DetectionStatus::not_searched;
      mr.compromise.status = DetectionStatus::not_searched;
      mr.spoiler.status = DetectionStatus::not_searched;
    }
    out.methods.push_back(std::move(mr));
  }

  for (const MethodReport& mr : out.methods) {
    bool placed = false;
    for (std::size_t g = 0; g < out.agreement.size(); ++g) {
      const MethodReport& lead = *std::find_if(
          out.methods.begin(), out.methods.end(),
          [&](const MethodReport& m) { return m.method == out.agreement[g].front(); });
      if (lead.winners == mr.winners) {
        out.agreement[g].push_back(mr.method);
        placed = true;
        break;
      }
    }
    if (!placed) out.agreement.push_back({mr.method});
  }
  return out;
}

ElectionReport analyze_stream(const std::string& id, std::istream& in,
                              const RunConfig& config) {
  config.validate();
  CvrConfig cvr;
  cvr.writein_patterns = config.writein_patterns;
  CvrFile file = parse_cvr(in, cvr);
  Roster roster = roster_from_cvr(file);
  NormalizationStats stats;
  stats.ballots_read = static_cast<long long>(file.rows.size());
  std::vector<Ballot> ballots;
  ballots.reserve(file.rows.size());
  for (const RawBallot& raw : file.rows) {
    Ballot b = normalize(raw, roster);
    stats.with_duplicate += b.flags.had_duplicate;
    stats.with_skip += b.flags.had_skip;
    stats.with_overvote += b.flags.had_overvote;
    stats.with_writein += b.flags.had_writein;
    ballots.push_back(std::move(b));
  }
  ProfileBuild built = build_profile(ballots, roster);
  stats.empty_excluded = built.empty_excluded;
  return analyze_profile(id, built.profile, stats, config);
}

ElectionReport analyze(const std::string& path_or_fixture,
                       const RunConfig& config) {
  if (const Fixture* f = find_fixture(path_or_fixture)) {
    std::istringstream in(fixture_to_csv(*f));
    return analyze_stream(f->name, in, config);
  }
  std::ifstream in(path_or_fixture);
  if (!in)
    throw InputError("cannot open '" + path_or_fixture +
                     "' (not a file or bundled fixture)");
  std::string id = fs::path(path_or_fixture).stem().string();
  return analyze_stream(id, in, config);
}

namespace {

bool failure_flagged(const MethodReport& mr, FailureKind kind) {
  switch (kind) {
    case FailureKind::majority_winner:
      return mr.failures && mr.failures->majority_winner_failure.has_value();
    case FailureKind::majority_loser:
      return mr.failures && mr.failures->majority_loser_failure.has_value();
    case FailureKind::condorcet_winner:
      return mr.failures && mr.failures->condorcet_winner_failure.has_value();
    case FailureKind::condorcet_loser:
      return mr.failures && mr.failures->condorcet_loser_failure.has_value();
    case FailureKind::truncation:
      return mr.truncation.status == DetectionStatus::witness;
    case FailureKind::compromise:
      return mr.compromise.status == DetectionStatus::witness;
    case FailureKind::spoiler:
      return mr.spoiler.status == DetectionStatus::witness;
  }
  throw InternalError("unreachable failure kind");
}

bool counts_in_denominator(const ElectionReport& report,
                           const MethodReport& mr, FailureKind kind) {
  switch (kind) {
    case FailureKind::majority_winner:
      return report.criteria.majority_winner.has_value();
    case FailureKind::majority_loser:
      return report.criteria.majority_loser.has_value();
    case FailureKind::condorcet_winner:
      return report.criteria.condorcet_winner.has_value();
    case FailureKind::condorcet_loser:
      return report.criteria.condorcet_loser.has_value();
    case FailureKind::truncation:
    case FailureKind::compromise:
      return true;
    case FailureKind::spoiler:
      return mr.spoiler.status != DetectionStatus::skipped;
  }
  throw InternalError("unreachable failure kind");
}

}  // namespace

AggregateMatrix aggregate_reports(const std::vector<ElectionReport>& reports,
                                  const std::vector<Method>& methods) {
  AggregateMatrix out;
  out.methods = methods;
  out.cells.assign(methods.size(),
                   std::vector<AggregateCell>(kFailureKinds.size()));
  for (const ElectionReport& report : reports) {
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
      auto it = std::find_if(
          report.methods.begin(), report.methods.end(),
          [&](const MethodReport& m) { return m.method == methods[mi]; });
      if (it == report.methods.end()) continue;
      for (std::size_t ki = 0; ki < kFailureKinds.size(); ++ki) {
        if (!counts_in_denominator(report, *it, kFailureKinds[ki])) continue;
        out.cells[mi][ki].denominator += 1;
        if (failure_flagged(*it, kFailureKinds[ki])) out.cells[mi][ki].count += 1;
      }
    }
  }
  return out;
}

namespace {

AgreementMatrix agreement_from_reports(
    const std::vector<ElectionReport>& reports,
    const std::vector<Method>& methods) {
  AgreementMatrix out;
  out.methods = methods;
  out.pair_agree.assign(methods.size(),
                        std::vector<long long>(methods.size(), 0));
  out.profiles = static_cast<long long>(reports.size());
  for (const ElectionReport& report : reports) {
    std::vector<const std::vector<CandidateId>*> sets(methods.size(), nullptr);
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
      auto it = std::find_if(
          report.methods.begin(), report.methods.end(),
          [&](const MethodReport& m) { return m.method == methods[mi]; });
      if (it != report.methods.end()) sets[mi] = &it->winners;
    }
    bool all_same = true;
    for (std::size_t i = 0; i < methods.size(); ++i) {
      for (std::size_t j = 0; j < methods.size(); ++j) {
        if (sets[i] && sets[j] && *sets[i] == *sets[j])
          out.pair_agree[i][j] += 1;
      }
      if (!sets[i] || !sets[0] || *sets[i] != *sets[0]) all_same = false;
    }
    if (all_same) out.all_agree += 1;
  }
  return out;
}

}  // namespace

BatchResult batch(const std::string& directory, const RunConfig& config) {
  config.validate();
  fs::path dir(directory);
  if (!fs::is_directory(dir))
    throw InputError("'" + directory + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".csv")
      files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty())
    throw InputError("no .csv files found in '" + directory + "'");

  BatchResult out;
  // Files are independent; analyze them concurrently in waves of at most
  // hardware_concurrency threads and merge in name order so output stays
  // deterministic.
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  auto policy = workers > 1 ? std::launch::async : std::launch::deferred;
  for (std::size_t start = 0; start < files.size(); start += workers) {
    std::size_t end = std::min(start + workers, files.size());
    std::vector<std::future<ElectionReport>> wave;
    for (std::size_t i = start; i < end; ++i) {
      wave.push_back(std::async(policy, [&, i] {
        return analyze(files[i].string(), config);
      }));
    }
    for (std::size_t i = start; i < end; ++i) {
      try {
        out.reports.push_back(wave[i - start].get());
      } catch (const InputError& e) {
        out.errors.push_back(files[i].filename().string() + ": " + e.what());
      }
    }
  }
  out.aggregate = aggregate_reports(out.reports, config.methods);
  out.agreement = agreement_from_reports(out.reports, config.methods);
  return out;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string candidate_name(const std::vector<std::string>& roster,
                           CandidateId id) {
  if (id < 0 || id >= static_cast<int>(roster.size()))
    throw InternalError("candidate id outside report roster");
  return roster[id];
}

ordered_json names_json(const std::vector<std::string>& roster,
                        const std::vector<CandidateId>& ids) {
  ordered_json arr = ordered_json::array();
  for (CandidateId id : ids) arr.push_back(candidate_name(roster, id));
  return arr;
}

ordered_json failure_json(const std::vector<std::string>& roster,
                          const std::optional<FailureWitness>& w) {
  if (!w) return nullptr;
  ordered_json out;
  out["candidate"] = candidate_name(roster, w->criterion_candidate);
  out["method_winner"] = candidate_name(roster, w->method_winner);
  return out;
}

const char* status_name(DetectionStatus s) {
  switch (s) {
    case DetectionStatus::witness: return "witness";
    case DetectionStatus::none: return "none";
    case DetectionStatus::immune: return "immune";
    case DetectionStatus::skipped: return "skipped";
    case DetectionStatus::not_searched: return "not_searched";
  }
  throw InternalError("unreachable detection status");
}

DetectionStatus status_from_name(const std::string& s) {
  for (DetectionStatus st :
       {DetectionStatus::witness, DetectionStatus::none, DetectionStatus::immune,
        DetectionStatus::skipped, DetectionStatus::not_searched}) {
    if (s == status_name(st)) return st;
  }
  throw InputError("unknown detection status '" + s + "'");
}

ordered_json detection_json(const std::vector<std::string>& roster,
                            const Detection& d, WitnessKind kind) {
  ordered_json out;
  out["status"] = status_name(d.status);
  out["heuristic"] = d.heuristic;
  if (d.witness) {
    const Witness& w = *d.witness;
    if (kind == WitnessKind::spoiler) {
      ordered_json removed = ordered_json::array();
      for (CandidateId id : w.removed) removed.push_back(candidate_name(roster, id));
      out["removed"] = std::move(removed);
    } else {
      out["challenger"] = candidate_name(roster, *w.challenger);
      ordered_json moves = ordered_json::array();
      for (const BallotMove& mv : w.moves) {
        ordered_json m;
        m["from"] = names_json(roster, mv.original);
        m["to"] = names_json(roster, mv.modified);
        m["count"] = mv.count;
        moves.push_back(std::move(m));
      }
      out["moves"] = std::move(moves);
    }
    out["resulting_winner"] = candidate_name(roster, w.resulting_winner);
  }
  return out;
}

ordered_json report_json(const ElectionReport& r) {
  ordered_json out;
  out["election"] = r.election;
  out["roster"] = r.roster;
  ordered_json norm;
  norm["ballots_read"] = r.normalization.ballots_read;
  norm["empty_excluded"] = r.normalization.empty_excluded;
  norm["with_duplicate"] = r.normalization.with_duplicate;
  norm["with_skip"] = r.normalization.with_skip;
  norm["with_overvote"] = r.normalization.with_overvote;
  norm["with_writein"] = r.normalization.with_writein;
  out["normalization"] = std::move(norm);
  out["total_ballots"] = r.total_ballots;
  ordered_json crit;
  auto opt_name = [&](const std::optional<CandidateId>& id) -> ordered_json {
    if (!id) return nullptr;
    return candidate_name(r.roster, *id);
  };
  crit["majority_winner"] = opt_name(r.criteria.majority_winner);
  crit["majority_loser"] = opt_name(r.criteria.majority_loser);
  crit["condorcet_winner"] = opt_name(r.criteria.condorcet_winner);
  crit["condorcet_loser"] = opt_name(r.criteria.condorcet_loser);
  out["criteria"] = std::move(crit);
  ordered_json methods;
  for (const MethodReport& mr : r.methods) {
    ordered_json m;
    m["winner"] = opt_name(mr.winner);
    m["tie"] = mr.tie;
    m["winners"] = names_json(r.roster, mr.winners);
    if (!mr.totals.empty()) {
      ordered_json totals;
      for (std::size_t c = 0; c < mr.totals.size(); ++c)
        totals[r.roster[c]] = mr.totals[c].to_string();
      m["totals"] = std::move(totals);
    }
    if (mr.irv) {
      ordered_json rounds = ordered_json::array();
      for (const IrvRound& round : mr.irv->rounds) {
        ordered_json rj;
        ordered_json votes;
        for (std::size_t c = 0; c < round.votes.size(); ++c) {
          if (round.votes[c] >= 0) votes[r.roster[c]] = round.votes[c];
        }
        rj["votes"] = std::move(votes);
        rj["eliminated"] = opt_name(round.eliminated);
        rj["tie_break"] = round.tie_break_used;
        rounds.push_back(std::move(rj));
      }
      m["rounds"] = std::move(rounds);
    }
    if (mr.failures) {
      ordered_json f;
      f["majority_winner"] = failure_json(r.roster, mr.failures->majority_winner_failure);
      f["majority_loser"] = failure_json(r.roster, mr.failures->majority_loser_failure);
      f["condorcet_winner"] = failure_json(r.roster, mr.failures->condorcet_winner_failure);
      f["condorcet_loser"] = failure_json(r.roster, mr.failures->condorcet_loser_failure);
      m["failures"] = std::move(f);
    } else {
      m["failures"] = nullptr;
    }
    ordered_json w;
    w["truncation"] = detection_json(r.roster, mr.truncation, WitnessKind::truncation);
    w["compromise"] = detection_json(r.roster, mr.compromise, WitnessKind::compromise);
    w["spoiler"] = detection_json(r.roster, mr.spoiler, WitnessKind::spoiler);
    m["witnesses"] = std::move(w);
    methods[method_name(mr.method)] = std::move(m);
  }
  out["methods"] = std::move(methods);
  ordered_json agreement = ordered_json::array();
  for (const auto& group : r.agreement) {
    ordered_json g = ordered_json::array();
    for (Method method : group) g.push_back(method_name(method));
    agreement.push_back(std::move(g));
  }
  out["agreement"] = std::move(agreement);
  return out;
}

CandidateId id_of(const std::vector<std::string>& roster, const std::string& name) {
  for (std::size_t i = 0; i < roster.size(); ++i) {
    if (roster[i] == name) return static_cast<CandidateId>(i);
  }
  throw InputError("candidate '" + name + "' not in report roster");
}

std::optional<CandidateId> opt_id(const std::vector<std::string>& roster,
                                  const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return id_of(roster, j.get<std::string>());
}

std::optional<FailureWitness> failure_from_json(
    const std::vector<std::string>& roster, const ordered_json& j) {
  if (j.is_null()) return std::nullopt;
  return FailureWitness{id_of(roster, j.at("candidate").get<std::string>()),
                        id_of(roster, j.at("method_winner").get<std::string>())};
}

std::vector<CandidateId> ids_from_json(const std::vector<std::string>& roster,
                                       const ordered_json& j) {
  std::vector<CandidateId> out;
  for (const auto& name : j) out.push_back(id_of(roster, name.get<std::string>()));
  return out;
}

Detection detection_from_json(const std::vector<std::string>& roster,
                              const ordered_json& j, WitnessKind kind) {
  Detection d;
  d.status = status_from_name(j.at("status").get<std::string>());
  d.heuristic = j.at("heuristic").get<bool>();
  if (d.status == DetectionStatus::witness) {
    Witness w;
    w.kind = kind;
    if (kind == WitnessKind::spoiler) {
      for (const auto& name : j.at("removed"))
        w.removed.insert(id_of(roster, name.get<std::string>()));
    } else {
      w.challenger = id_of(roster, j.at("challenger").get<std::string>());
      for (const auto& mv : j.at("moves")) {
        BallotMove m;
        m.original = ids_from_json(roster, mv.at("from"));
        m.modified = ids_from_json(roster, mv.at("to"));
        m.count = mv.at("count").get<long long>();
        w.moves.push_back(std::move(m));
      }
    }
    w.resulting_winner = id_of(roster, j.at("resulting_winner").get<std::string>());
    d.witness = std::move(w);
  }
  return d;
}

}  // namespace

std::string emit_json(const ElectionReport& report) {
  return report_json(report).dump(2) + "\n";
}

namespace {
ElectionReport report_from_json_impl(const ordered_json& j);
}  // namespace

ElectionReport report_from_json(const std::string& text) {
  try {
    return report_from_json_impl(ordered_json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad report JSON: ") + e.what());
  }
}

namespace {

ElectionReport report_from_json_impl(const ordered_json& j) {
  ElectionReport r;
  r.election = j.at("election").get<std::string>();
  r.roster = j.at("roster").get<std::vector<std::string>>();
  const ordered_json& norm = j.at("normalization");
  r.normalization.ballots_read = norm.at("ballots_read").get<long long>();
  r.normalization.empty_excluded = norm.at("empty_excluded").get<long long>();
  r.normalization.with_duplicate = norm.at("with_duplicate").get<long long>();
  r.normalization.with_skip = norm.at("with_skip").get<long long>();
  r.normalization.with_overvote = norm.at("with_overvote").get<long long>();
  r.normalization.with_writein = norm.at("with_writein").get<long long>();
  r.total_ballots = j.at("total_ballots").get<long long>();
  const ordered_json& crit = j.at("criteria");
  r.criteria.majority_winner = opt_id(r.roster, crit.at("majority_winner"));
  r.criteria.majority_loser = opt_id(r.roster, crit.at("majority_loser"));
  r.criteria.condorcet_winner = opt_id(r.roster, crit.at("condorcet_winner"));
  r.criteria.condorcet_loser = opt_id(r.roster, crit.at("condorcet_loser"));
  for (const auto& [name, m] : j.at("methods").items()) {
    MethodReport mr;
    auto method = method_from_name(name);
    if (!method) throw InputError("unknown method '" + name + "' in report");
    mr.method = *method;
    mr.winner = opt_id(r.roster, m.at("winner"));
    mr.tie = m.at("tie").get<bool>();
    mr.winners = ids_from_json(r.roster, m.at("winners"));
    if (m.contains("totals")) {
      mr.totals.assign(r.roster.size(), Rational(0));
      for (const auto& [cand, val] : m.at("totals").items())
        mr.totals[id_of(r.roster, cand)] =
            Rational::from_string(val.get<std::string>());
    }
    if (m.contains("rounds")) {
      IrvResult irv;
      for (const auto& rj : m.at("rounds")) {
        IrvRound round;
        round.votes.assign(r.roster.size(), -1);
        for (const auto& [cand, val] : rj.at("votes").items())
          round.votes[id_of(r.roster, cand)] = val.get<long long>();
        round.eliminated = opt_id(r.roster, rj.at("eliminated"));
        round.tie_break_used = rj.at("tie_break").get<bool>();
        irv.tie_break_used = irv.tie_break_used || round.tie_break_used;
        irv.rounds.push_back(std::move(round));
      }
      irv.winners = mr.winners;
      mr.irv = std::move(irv);
    }
    if (!m.at("failures").is_null()) {
      const ordered_json& f = m.at("failures");
      VerifiableFailures vf;
      vf.majority_winner_failure = failure_from_json(r.roster, f.at("majority_winner"));
      vf.majority_loser_failure = failure_from_json(r.roster, f.at("majority_loser"));
      vf.condorcet_winner_failure = failure_from_json(r.roster, f.at("condorcet_winner"));
      vf.condorcet_loser_failure = failure_from_json(r.roster, f.at("condorcet_loser"));
      mr.failures = vf;
    }
    const ordered_json& w = m.at("witnesses");
    mr.truncation = detection_from_json(r.roster, w.at("truncation"),
                                        WitnessKind::truncation);
    mr.compromise = detection_from_json(r.roster, w.at("compromise"),
                                        WitnessKind::compromise);
    mr.spoiler = detection_from_json(r.roster, w.at("spoiler"), WitnessKind::spoiler);
    r.methods.push_back(std::move(mr));
  }
  for (const auto& group : j.at("agreement")) {
    std::vector<Method> g;
    for (const auto& name : group) {
      auto method = method_from_name(name.get<std::string>());
      if (!method) throw InputError("unknown method in agreement group");
      g.push_back(*method);
    }
    r.agreement.push_back(std::move(g));
  }
  return r;
}

}  // namespace

std::string emit_json(const BatchResult& result) {
  ordered_json out;
  ordered_json elections = ordered_json::array();
  for (const ElectionReport& r : result.reports) elections.push_back(report_json(r));
  out["elections"] = std::move(elections);
  out["errors"] = result.errors;
  ordered_json agg;
  for (std::size_t mi = 0; mi < result.aggregate.methods.size(); ++mi) {
    ordered_json row;
    for (std::size_t ki = 0; ki < kFailureKinds.size(); ++ki) {
      ordered_json cell;
      cell["count"] = result.aggregate.cells[mi][ki].count;
      cell["denominator"] = result.aggregate.cells[mi][ki].denominator;
      row[failure_kind_name(kFailureKinds[ki])] = std::move(cell);
    }
    agg[method_name(result.aggregate.methods[mi])] = std::move(row);
  }
  out["aggregate"] = std::move(agg);
  ordered_json agr;
  ordered_json agr_methods = ordered_json::array();
  for (Method m : result.agreement.methods) agr_methods.push_back(method_name(m));
  agr["methods"] = std::move(agr_methods);
  agr["pairwise"] = result.agreement.pair_agree;
  agr["all_agree"] = result.agreement.all_agree;
  agr["elections"] = result.agreement.profiles;
  out["agreement"] = std::move(agr);
  return out.dump(2) + "\n";
}

namespace {

std::string rate_string(const AggregateCell& cell) {
  if (cell.denominator == 0) return "-";
  // Fixed four decimal places, exact integer arithmetic.
  long long scaled = (cell.count * 20000 + cell.denominator) / (2 * cell.denominator);
  std::string frac = std::to_string(scaled % 10000);
  return std::to_string(scaled / 10000) + "." +
         std::string(4 - frac.size(), '0') + frac;
}

void csv_matrix(std::ostringstream& out, const AggregateMatrix& matrix) {
  out << "method,failure,count,denominator,rate\n";
  for (std::size_t mi = 0; mi < matrix.methods.size(); ++mi) {
    for (std::size_t ki = 0; ki < kFailureKinds.size(); ++ki) {
      const AggregateCell& cell = matrix.cells[mi][ki];
      out << method_name(matrix.methods[mi]) << ','
          << failure_kind_name(kFailureKinds[ki]) << ',' << cell.count << ','
          << cell.denominator << ',' << rate_string(cell) << '\n';
    }
  }
}

void table_report(std::ostringstream& out, const ElectionReport& r) {
  out << "Election: " << r.election << "\n";
  out << "Candidates:";
  for (const std::string& name : r.roster) out << ' ' << name;
  out << "\n";
  out << "Ballots: " << r.total_ballots << " counted (" << r.normalization.ballots_read
      << " read, " << r.normalization.empty_excluded << " empty, "
      << r.normalization.with_duplicate << " with duplicates, "
      << r.normalization.with_skip << " with skips, "
      << r.normalization.with_overvote << " with overvotes, "
      << r.normalization.with_writein << " with write-ins)\n";
  auto opt_name = [&](const std::optional<CandidateId>& id) {
    return id ? r.roster[*id] : std::string("none");
  };
  out << "Majority winner: " << opt_name(r.criteria.majority_winner)
      << "   Majority loser: " << opt_name(r.criteria.majority_loser) << "\n";
  out << "Condorcet winner: " << opt_name(r.criteria.condorcet_winner)
      << "   Condorcet loser: " << opt_name(r.criteria.condorcet_loser) << "\n";
  for (const MethodReport& mr : r.methods) {
    out << "\n" << method_name(mr.method) << ": winner ";
    if (mr.winner) {
      out << r.roster[*mr.winner];
    } else {
      out << "(unresolved)";
    }
    if (mr.tie) {
      out << " [tie:";
      for (CandidateId c : mr.winners) out << ' ' << r.roster[c];
      out << "]";
    }
    out << "\n";
    if (!mr.totals.empty()) {
      out << "  totals:";
      for (std::size_t c = 0; c < mr.totals.size(); ++c)
        out << ' ' << r.roster[c] << '=' << mr.totals[c].decimal_string();
      out << "\n";
    }
    if (mr.irv) {
      for (std::size_t i = 0; i < mr.irv->rounds.size(); ++i) {
        const IrvRound& round = mr.irv->rounds[i];
        out << "  round " << i + 1 << ":";
        for (std::size_t c = 0; c < round.votes.size(); ++c) {
          if (round.votes[c] >= 0) out << ' ' << r.roster[c] << '=' << round.votes[c];
        }
        if (round.eliminated) out << "  eliminated " << r.roster[*round.eliminated];
        if (round.tie_break_used) out << "  (tie broken)";
        out << "\n";
      }
    }
    if (mr.failures) {
      out << "  verifiable failures:";
      if (mr.failures->count() == 0) out << " none";
      if (mr.failures->majority_winner_failure) out << " majority-winner";
      if (mr.failures->majority_loser_failure) out << " majority-loser";
      if (mr.failures->condorcet_winner_failure) out << " condorcet-winner";
      if (mr.failures->condorcet_loser_failure) out << " condorcet-loser";
      out << "\n";
    }
    auto detection_line = [&](const char* label, const Detection& d) {
      out << "  " << label << ": " << status_name(d.status);
      if (d.witness) {
        if (d.witness->kind == WitnessKind::spoiler) {
          out << " remove {";
          bool first = true;
          for (CandidateId c : d.witness->removed) {
            if (!first) out << ", ";
            out << r.roster[c];
            first = false;
          }
          out << "} -> " << r.roster[d.witness->resulting_winner];
        } else {
          out << " move " << d.witness->total_moved() << " ballots -> "
              << r.roster[d.witness->resulting_winner];
        }
      }
      if (d.heuristic) out << " (heuristic)";
      out << "\n";
    };
    detection_line("truncation", mr.truncation);
    detection_line("compromise", mr.compromise);
    detection_line("spoiler", mr.spoiler);
  }
  out << "\nAgreement:";
  for (const auto& group : r.agreement) {
    out << " {";
    for (std::size_t i = 0; i < group.size(); ++i) {
      if (i) out << ' ';
      out << method_name(group[i]);
    }
    out << "}";
  }
  out << "\n";
}

}  // namespace

std::string emit_csv(const ElectionReport& report) {
  std::ostringstream out;
  std::vector<Method> methods;
  methods.reserve(report.methods.size());
  for (const MethodReport& mr : report.methods) methods.push_back(mr.method);
  csv_matrix(out, aggregate_reports({report}, methods));
  return out.str();
}

std::string emit_csv(const BatchResult& result) {
  std::ostringstream out;
  csv_matrix(out, result.aggregate);
  return out.str();
}

std::string emit_table(const ElectionReport& report) {
  std::ostringstream out;
  table_report(out, report);
  return out.str();
}

std::string emit_table(const BatchResult& result) {
  std::ostringstream out;
  for (const ElectionReport& r : result.reports) {
    table_report(out, r);
    out << "\n";
  }
  if (!result.errors.empty()) {
    out << "Errors:\n";
    for (const std::string& e : result.errors) out << "  " << e << "\n";
    out << "\n";
  }
  out << "Aggregate failure rates (" << result.reports.size() << " elections):\n";
  std::ostringstream csv;
  csv_matrix(csv, result.aggregate);
  out << csv.str();
  out << "All methods agree on " << result.agreement.all_agree << " of "
      << result.agreement.profiles << " elections\n";
  return out.str();
}

std::string emit(const ElectionReport& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return emit_json(report);
    case OutputFormat::csv: return emit_csv(report);
    case OutputFormat::table: return emit_table(report);
  }
  throw ArgumentError("unknown output format");
}

std::string emit(const BatchResult& result, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return emit_json(result);
    case OutputFormat::csv: return emit_csv(result);
    case OutputFormat::table: return emit_table(result);
  }
  throw ArgumentError("unknown output format");
}

}  // namespace borda
