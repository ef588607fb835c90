#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tourney/generators.hpp"

namespace tourney {

enum class BenchAlgorithm {
  /// Full tournament read; costs full_tournament_cost.
  brute,
  champion,
  /// champion with the order-preserving schedule
  champion_ordered,
  /// champion without memoization across rounds
  champion_nomemo,
  topk,
  batched,
  /// probabilistic search on the 0/1 instance, or on random-prob instances
  prob,
};

std::string_view to_string(BenchAlgorithm a) noexcept;
BenchAlgorithm parse_bench_algorithm(std::string_view name);

struct AnomalousSize {
  std::size_t k = 0;
  std::size_t m = 0;
};

/// A grid of instance configurations times algorithm configurations. Every
/// cell runs on `seeds` instances seeded base_seed, base_seed + 1, ...
struct BenchSuite {
  GenKind kind = GenKind::planted;
  std::vector<std::size_t> sizes;
  /// planted only
  std::vector<std::size_t> ells{0};
  /// anomalous only; replaces `sizes`
  std::vector<AnomalousSize> anomalous;
  /// top-k values, used by topk
  std::vector<std::size_t> ks{1};
  /// used by batched
  std::vector<std::size_t> batch_sizes{1};
  std::vector<BenchAlgorithm> algorithms{BenchAlgorithm::champion};
  std::size_t seeds = 10;
  std::uint64_t base_seed = 0;
  bool asymmetric = true;
  bool memoize = true;
  bool batch_fill = true;
};

/// Throws Error(invalid_spec) on inconsistent parameters, e.g. an empty grid,
/// an algorithm that cannot run on the instance kind or a planted size that
/// the generator rejects.
void validate(const BenchSuite& suite);

/// JSON object with the field names of BenchSuite; "kind" uses the generator
/// names ("random-prob" included), "anomalous" is a list of [k, m] pairs and
/// "algorithms" uses the names of parse_bench_algorithm. Missing fields keep
/// their defaults. Throws Error(invalid_spec).
BenchSuite parse_bench_suite(std::string_view json);

/// Parses "3", "1,2,5", "1..5" or "2..256*2" (a geometric range).
std::vector<std::size_t> parse_size_list(std::string_view text);

/// One line of the output table. Means are over the suite's seeds; optional
/// columns are empty when they do not apply.
struct BenchRow {
  std::string kind;
  std::size_t n = 0;
  std::optional<std::size_t> ell;
  std::size_t k = 1;
  std::optional<std::size_t> batch_size;
  std::string algorithm;
  double comparisons = 0;
  double inferences = 0;
  std::optional<double> batch_calls;
  std::optional<double> speedup;
  std::size_t seeds = 0;
};

/// Rows come out in grid order: instance configuration, then algorithm, then
/// its k or B values.
std::vector<BenchRow> run_bench(const BenchSuite& suite);

/// Header `kind,n,ell,k,B,algorithm,comparisons,inferences,batch_calls,speedup,seeds`
/// and one line per row; reals use three decimals.
std::string to_csv(const std::vector<BenchRow>& rows);

/// Same cells as to_csv, space-aligned for reading.
std::string to_text_table(const std::vector<BenchRow>& rows);

}  // namespace tourney
