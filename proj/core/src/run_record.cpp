#include "tourney/run_record.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace tourney {
namespace {

using nlohmann::ordered_json;

ordered_json players_json(const std::vector<PlayerId>& players) {
  ordered_json out = ordered_json::array();
  for (const PlayerId p : players) out.push_back(p.index);
  return out;
}

ordered_json stats_json(const LookupStats& s) {
  ordered_json per_alpha = ordered_json::array();
  for (const AlphaCost& c : s.per_alpha) {
    per_alpha.push_back(ordered_json{{"alpha", c.alpha}, {"comparisons", c.comparisons}});
  }
  return ordered_json{{"comparisons", s.comparisons},
                      {"inferences", s.inferences},
                      {"batch_calls", s.batch_calls},
                      {"cache_hits", s.cache_hits},
                      {"per_alpha", per_alpha}};
}

template <typename Loss>
ordered_json champion_json(const BasicChampionReport<Loss>& r) {
  return ordered_json{{"champions", players_json(r.champions)},
                      {"losses", r.losses},
                      {"final_alpha", r.final_alpha},
                      {"stats", stats_json(r.stats)}};
}

ordered_json report_json(const RunRecord& record) {
  return std::visit(
      [&](const auto& r) -> ordered_json {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, TopKReport>) {
          return ordered_json{{"players", players_json(r.players)},
                              {"losses", r.losses},
                              {"final_alpha", r.final_alpha},
                              {"stats", stats_json(r.stats)}};
        } else if constexpr (std::is_same_v<R, BatchedReport>) {
          ordered_json out = champion_json(static_cast<const ChampionReport&>(r));
          const BatchDiagnostics& d = r.diagnostics;
          ordered_json rounds = ordered_json::array();
          for (const auto& c : d.per_round) {
            rounds.push_back(ordered_json{{"alpha", c.alpha},
                                          {"elimination_calls", c.elimination_calls},
                                          {"brute_force_calls", c.brute_force_calls}});
          }
          out["batch"] = ordered_json{{"elimination_calls", d.elimination_calls},
                                      {"brute_force_calls", d.brute_force_calls},
                                      {"halving_window_violations", d.halving_window_violations},
                                      {"loss_cap_violations", d.loss_cap_violations},
                                      {"discarded_results", d.discarded_results},
                                      {"per_round", rounds}};
          return out;
        } else if constexpr (std::is_same_v<R, FullSolution>) {
          const std::int64_t best = r.champions.empty() ? 0 : r.losses[r.champions.front().index];
          LookupStats s;
          s.comparisons = record.baseline_cost.comparisons;
          s.inferences = record.baseline_cost.inferences;
          return ordered_json{{"champions", players_json(r.champions)},
                              {"losses", best},
                              {"loss_vector", r.losses},
                              {"ranking", players_json(r.ranking)},
                              {"stats", stats_json(s)}};
        } else {
          return champion_json(r);
        }
      },
      record.report);
}

}  // namespace

std::uint64_t RunRecord::inferences() const {
  return std::visit(
      [&](const auto& r) -> std::uint64_t {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, FullSolution>) {
          return baseline_cost.inferences;
        } else {
          return r.stats.inferences;
        }
      },
      report);
}

std::optional<double> RunRecord::speedup() const {
  const std::uint64_t mine = inferences();
  if (mine == 0 || baseline_cost.inferences == 0) return std::nullopt;
  return static_cast<double>(baseline_cost.inferences) / static_cast<double>(mine);
}

std::string to_json(const RunRecord& record) {
  ordered_json flags = ordered_json::object();
  for (const auto& [name, value] : record.flags) flags[name] = value;
  ordered_json out{{"format_version", kRunRecordFormatVersion},
                   {"command", record.command},
                   {"flags", flags},
                   {"instance_digest", record.instance_digest},
                   {"n", record.n},
                   {"asymmetric", record.asymmetric},
                   {"report", report_json(record)},
                   {"baseline_cost",
                    ordered_json{{"comparisons", record.baseline_cost.comparisons},
                                 {"inferences", record.baseline_cost.inferences}}}};
  if (auto s = record.speedup()) {
    out["speedup"] = *s;
  } else {
    out["speedup"] = nullptr;
  }
  return out.dump();
}

std::string summarize(const RunRecord& record) {
  const ordered_json report = report_json(record);
  std::ostringstream os;
  os << record.command << ": n = " << record.n;
  if (report.contains("champions")) {
    os << ", champions " << report["champions"].dump() << " with " << report["losses"].dump()
       << " losses";
  } else {
    os << ", top-k " << report["players"].dump() << " with losses " << report["losses"].dump();
  }
  const std::uint64_t inf = record.inferences();
  os << "; " << inf << " inferences vs " << record.baseline_cost.inferences << " for all pairs";
  if (auto s = record.speedup()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", *s);
    os << " (speedup " << buf << "x)";
  }
  return os.str();
}

}  // namespace tourney
