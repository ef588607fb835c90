#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tourney/algorithms.hpp"
#include "tourney/baseline.hpp"
#include "tourney/batched.hpp"
#include "tourney/probabilistic.hpp"

namespace tourney {

inline constexpr int kRunRecordFormatVersion = 1;

/// Everything one CLI invocation reports, serialized as a single JSON object.
struct RunRecord {
  std::string command;
  /// Flags in the order they should appear, as (name, value) strings.
  std::vector<std::pair<std::string, std::string>> flags;
  std::string instance_digest;
  std::size_t n = 0;
  bool asymmetric = true;
  std::variant<ChampionReport, ExpectedChampionReport, TopKReport, BatchedReport, FullSolution> report;
  FullTournamentCost baseline_cost;

  /// Baseline inferences over the algorithm's, when both are positive.
  [[nodiscard]] std::optional<double> speedup() const;
  [[nodiscard]] std::uint64_t inferences() const;
};

/// Stable field names; "format_version" is kRunRecordFormatVersion.
std::string to_json(const RunRecord& record);

/// Short human-readable summary for the terminal.
std::string summarize(const RunRecord& record);

}  // namespace tourney
