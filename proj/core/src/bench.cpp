#include "tourney/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <functional>

#include <json.hpp>

#include "tourney/algorithms.hpp"
#include "tourney/baseline.hpp"
#include "tourney/batched.hpp"
#include "tourney/error.hpp"
#include "tourney/io.hpp"
#include "tourney/probabilistic.hpp"

namespace tourney {
namespace {

[[noreturn]] void bad_suite(const std::string& what) { throw Error(ErrorKind::invalid_spec, what); }

constexpr BenchAlgorithm kAllAlgorithms[] = {
    BenchAlgorithm::brute,   BenchAlgorithm::champion, BenchAlgorithm::champion_ordered,
    BenchAlgorithm::champion_nomemo, BenchAlgorithm::topk, BenchAlgorithm::batched,
    BenchAlgorithm::prob,
};

struct InstanceConfig {
  std::size_t n = 0;
  std::optional<std::size_t> ell;
  GenSpec spec;
};

std::vector<InstanceConfig> instance_configs(const BenchSuite& suite) {
  std::vector<InstanceConfig> out;
  if (suite.kind == GenKind::anomalous) {
    for (const AnomalousSize& a : suite.anomalous) {
      GenSpec spec{GenKind::anomalous, a.k + a.m, 0, a.k, a.m, 0};
      out.push_back({a.k + a.m, (3 * a.k - 1) / 2, spec});
    }
    return out;
  }
  for (const std::size_t n : suite.sizes) {
    GenSpec spec{suite.kind, n, 0, 0, 0, 0};
    switch (suite.kind) {
      case GenKind::planted:
        for (const std::size_t ell : suite.ells) {
          spec.ell = ell;
          out.push_back({n, ell, spec});
        }
        break;
      case GenKind::transitive: out.push_back({n, 0, spec}); break;
      case GenKind::regular: out.push_back({n, (n - 1) / 2, spec}); break;
      default: out.push_back({n, std::nullopt, spec}); break;
    }
  }
  return out;
}

/// One algorithm configuration; `param` is k for topk and B for batched.
struct Cell {
  BenchAlgorithm algorithm;
  std::size_t param = 0;
  double comparisons = 0;
  double inferences = 0;
  double batch_calls = 0;
};

std::vector<Cell> algorithm_cells(const BenchSuite& suite) {
  std::vector<Cell> out;
  for (const BenchAlgorithm a : suite.algorithms) {
    if (a == BenchAlgorithm::topk) {
      for (const std::size_t k : suite.ks) out.push_back({a, k});
    } else if (a == BenchAlgorithm::batched) {
      for (const std::size_t b : suite.batch_sizes) out.push_back({a, b});
    } else {
      out.push_back({a, 1});
    }
  }
  return out;
}

LookupStats run_binary(const MatrixTournament& m, const BenchSuite& suite, const Cell& cell) {
  MatrixOracle oracle(m, {suite.asymmetric, false});
  SearchOptions options;
  options.memoize = suite.memoize;
  switch (cell.algorithm) {
    case BenchAlgorithm::brute: {
      const FullTournamentCost cost = full_tournament_cost(m.size(), suite.asymmetric);
      LookupStats s;
      s.comparisons = cost.comparisons;
      s.inferences = cost.inferences;
      return s;
    }
    case BenchAlgorithm::champion: return find_champions(oracle, options).stats;
    case BenchAlgorithm::champion_ordered:
      options.schedule = Schedule::order_preserving;
      return find_champions(oracle, options).stats;
    case BenchAlgorithm::champion_nomemo:
      options.memoize = false;
      return find_champions(oracle, options).stats;
    case BenchAlgorithm::topk: return top_k_champions(oracle, cell.param, options).stats;
    case BenchAlgorithm::batched: {
      BatchedOptions b;
      b.batch_size = cell.param;
      b.memoize = suite.memoize;
      b.batch_fill = suite.batch_fill && suite.memoize;
      return find_champions_batched(oracle, b).stats;
    }
    case BenchAlgorithm::prob: {
      const ProbabilisticTournament p = ProbabilisticTournament::from_binary(m);
      ProbabilisticOracle prob_oracle(p, {suite.asymmetric, false});
      return find_champions_probabilistic(prob_oracle, options).stats;
    }
  }
  return {};
}

LookupStats run_probabilistic(const ProbabilisticTournament& p, const BenchSuite& suite,
                              const Cell& cell) {
  if (cell.algorithm == BenchAlgorithm::brute) {
    const FullTournamentCost cost = full_tournament_cost(p.size(), suite.asymmetric);
    LookupStats s;
    s.comparisons = cost.comparisons;
    s.inferences = cost.inferences;
    return s;
  }
  ProbabilisticOracle oracle(p, {suite.asymmetric, false});
  SearchOptions options;
  options.memoize = suite.memoize;
  return find_champions_probabilistic(oracle, options).stats;
}

std::string fixed3(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::vector<std::string> row_cells(const BenchRow& r) {
  auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string(); };
  auto optf = [](const std::optional<double>& v) { return v ? fixed3(*v) : std::string(); };
  return {r.kind,
          std::to_string(r.n),
          opt(r.ell),
          std::to_string(r.k),
          opt(r.batch_size),
          r.algorithm,
          fixed3(r.comparisons),
          fixed3(r.inferences),
          optf(r.batch_calls),
          optf(r.speedup),
          std::to_string(r.seeds)};
}

const std::vector<std::string> kHeader = {"kind",       "n",           "ell",         "k",
                                          "B",          "algorithm",   "comparisons", "inferences",
                                          "batch_calls", "speedup",    "seeds"};

std::vector<std::size_t> json_sizes(const nlohmann::json& j, const char* field) {
  if (!j.is_array()) bad_suite(std::string("'") + field + "' must be a list of non-negative integers");
  std::vector<std::size_t> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) {
      bad_suite(std::string("'") + field + "' must be a list of non-negative integers");
    }
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

bool json_bool(const nlohmann::json& j, const char* field) {
  if (!j.is_boolean()) bad_suite(std::string("'") + field + "' must be true or false");
  return j.get<bool>();
}

std::uint64_t json_uint(const nlohmann::json& j, const char* field) {
  if (!j.is_number_unsigned()) bad_suite(std::string("'") + field + "' must be a non-negative integer");
  return j.get<std::uint64_t>();
}

}  // namespace

std::string_view to_string(BenchAlgorithm a) noexcept {
  switch (a) {
    case BenchAlgorithm::brute: return "brute";
    case BenchAlgorithm::champion: return "champion";
    case BenchAlgorithm::champion_ordered: return "champion-ordered";
    case BenchAlgorithm::champion_nomemo: return "champion-nomemo";
    case BenchAlgorithm::topk: return "topk";
    case BenchAlgorithm::batched: return "batched";
    case BenchAlgorithm::prob: return "prob";
  }
  return "?";
}

BenchAlgorithm parse_bench_algorithm(std::string_view name) {
  for (const BenchAlgorithm a : kAllAlgorithms) {
    if (to_string(a) == name) return a;
  }
  bad_suite("unknown algorithm '" + std::string(name) +
            "' (expected brute, champion, champion-ordered, champion-nomemo, topk, batched or prob)");
}

void validate(const BenchSuite& suite) {
  if (suite.seeds == 0) bad_suite("a suite needs at least one seed");
  if (suite.algorithms.empty()) bad_suite("a suite needs at least one algorithm");
  if (suite.kind == GenKind::anomalous) {
    if (suite.anomalous.empty()) bad_suite("anomalous suites need at least one (k, m) pair");
  } else if (suite.sizes.empty()) {
    bad_suite("a suite needs at least one size n");
  }
  if (suite.kind == GenKind::planted && suite.ells.empty()) bad_suite("planted suites need ell values");
  for (const std::size_t n : suite.sizes) {
    if (n == 0) bad_suite("sizes must be positive");
  }
  std::size_t smallest = 0;
  if (suite.kind == GenKind::anomalous) {
    smallest = suite.anomalous.front().k + suite.anomalous.front().m;
    for (const AnomalousSize& a : suite.anomalous) smallest = std::min(smallest, a.k + a.m);
  } else {
    smallest = *std::min_element(suite.sizes.begin(), suite.sizes.end());
  }
  for (const BenchAlgorithm a : suite.algorithms) {
    if (suite.kind == GenKind::random_prob && a != BenchAlgorithm::prob && a != BenchAlgorithm::brute) {
      bad_suite("random-prob instances only support the prob and brute algorithms, not '" +
                std::string(to_string(a)) + "'");
    }
    if (a == BenchAlgorithm::topk) {
      if (suite.ks.empty()) bad_suite("topk needs at least one k");
      for (const std::size_t k : suite.ks) {
        if (k == 0 || k > smallest) {
          bad_suite("k = " + std::to_string(k) + " is outside 1.." + std::to_string(smallest));
        }
      }
    }
    if (a == BenchAlgorithm::batched) {
      if (suite.batch_sizes.empty()) bad_suite("batched needs at least one batch size");
      for (const std::size_t b : suite.batch_sizes) {
        if (b == 0) bad_suite("batch sizes must be at least 1");
      }
    }
  }
}

BenchSuite parse_bench_suite(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad_suite(std::string("suite is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) bad_suite("suite must be a JSON object");
  BenchSuite suite;
  for (const auto& [key, value] : j.items()) {
    if (key == "kind") {
      if (!value.is_string()) bad_suite("'kind' must be a string");
      suite.kind = parse_gen_kind(value.get<std::string>());
    } else if (key == "sizes") {
      suite.sizes = json_sizes(value, "sizes");
    } else if (key == "ells") {
      suite.ells = json_sizes(value, "ells");
    } else if (key == "ks") {
      suite.ks = json_sizes(value, "ks");
    } else if (key == "batch_sizes") {
      suite.batch_sizes = json_sizes(value, "batch_sizes");
    } else if (key == "anomalous") {
      if (!value.is_array()) bad_suite("'anomalous' must be a list of [k, m] pairs");
      suite.anomalous.clear();
      for (const auto& pair : value) {
        const auto km = json_sizes(pair, "anomalous");
        if (km.size() != 2) bad_suite("'anomalous' must be a list of [k, m] pairs");
        suite.anomalous.push_back({km[0], km[1]});
      }
    } else if (key == "algorithms") {
      if (!value.is_array()) bad_suite("'algorithms' must be a list of names");
      suite.algorithms.clear();
      for (const auto& name : value) {
        if (!name.is_string()) bad_suite("'algorithms' must be a list of names");
        suite.algorithms.push_back(parse_bench_algorithm(name.get<std::string>()));
      }
    } else if (key == "seeds") {
      suite.seeds = json_uint(value, "seeds");
    } else if (key == "base_seed") {
      suite.base_seed = json_uint(value, "base_seed");
    } else if (key == "asymmetric") {
      suite.asymmetric = json_bool(value, "asymmetric");
    } else if (key == "memoize") {
      suite.memoize = json_bool(value, "memoize");
    } else if (key == "batch_fill") {
      suite.batch_fill = json_bool(value, "batch_fill");
    } else {
      bad_suite("unknown suite field '" + key + "'");
    }
  }
  validate(suite);
  return suite;
}

std::vector<std::size_t> parse_size_list(std::string_view text) {
  std::vector<std::size_t> out;
  auto number = [&](std::string_view s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      bad_suite("expected a non-negative integer, got '" + std::string(s) + "' in '" +
                std::string(text) + "'");
    }
    return v;
  };
  std::string_view rest = text;
  while (true) {
    const std::size_t comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const std::size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(number(item));
    } else {
      std::string_view hi_text = item.substr(dots + 2);
      std::size_t factor = 0;
      if (const std::size_t star = hi_text.find('*'); star != std::string_view::npos) {
        factor = number(hi_text.substr(star + 1));
        hi_text = hi_text.substr(0, star);
        if (factor < 2) bad_suite("geometric ranges need a factor of at least 2");
      }
      const std::size_t lo = number(item.substr(0, dots));
      const std::size_t hi = number(hi_text);
      if (lo > hi) bad_suite("empty range '" + std::string(item) + "'");
      if (factor == 0) {
        for (std::size_t v = lo; v <= hi; ++v) out.push_back(v);
      } else {
        if (lo == 0) bad_suite("geometric ranges must start above 0");
        for (std::size_t v = lo; v <= hi; v *= factor) out.push_back(v);
      }
    }
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  return out;
}

std::vector<BenchRow> run_bench(const BenchSuite& suite) {
  validate(suite);
  std::vector<BenchRow> rows;
  for (const InstanceConfig& config : instance_configs(suite)) {
    std::vector<Cell> cells = algorithm_cells(suite);
    for (std::size_t i = 0; i < suite.seeds; ++i) {
      GenSpec spec = config.spec;
      spec.seed = suite.base_seed + i;
      if (suite.kind == GenKind::random_prob) {
        const ProbabilisticTournament p = gen_random_probabilistic(spec.n, spec.seed);
        for (Cell& cell : cells) {
          const LookupStats s = run_probabilistic(p, suite, cell);
          cell.comparisons += static_cast<double>(s.comparisons);
          cell.inferences += static_cast<double>(s.inferences);
          cell.batch_calls += static_cast<double>(s.batch_calls);
        }
      } else {
        const MatrixTournament m = generate_matrix(spec);
        for (Cell& cell : cells) {
          const LookupStats s = run_binary(m, suite, cell);
          cell.comparisons += static_cast<double>(s.comparisons);
          cell.inferences += static_cast<double>(s.inferences);
          cell.batch_calls += static_cast<double>(s.batch_calls);
        }
      }
    }
    const double seeds = static_cast<double>(suite.seeds);
    const double full = static_cast<double>(full_tournament_cost(config.n, suite.asymmetric).inferences);
    for (const Cell& cell : cells) {
      BenchRow row;
      row.kind = std::string(to_string(suite.kind));
      row.n = config.n;
      row.ell = config.ell;
      row.k = cell.algorithm == BenchAlgorithm::topk ? cell.param : 1;
      row.algorithm = std::string(to_string(cell.algorithm));
      row.comparisons = cell.comparisons / seeds;
      row.inferences = cell.inferences / seeds;
      if (cell.algorithm == BenchAlgorithm::batched) {
        row.batch_size = cell.param;
        row.batch_calls = cell.batch_calls / seeds;
      }
      if (row.inferences > 0 && full > 0) row.speedup = full / row.inferences;
      row.seeds = suite.seeds;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(kHeader);
  for (const BenchRow& r : rows) line(row_cells(r));
  return out;
}

std::string to_text_table(const std::vector<BenchRow>& rows) {
  std::vector<std::vector<std::string>> table{kHeader};
  for (const BenchRow& r : rows) table.push_back(row_cells(r));
  std::vector<std::size_t> width(kHeader.size(), 0);
  for (const auto& cells : table) {
    for (std::size_t i = 0; i < cells.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  }
  std::string out;
  for (const auto& cells : table) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) line += "  ";
      // text columns left-aligned, numbers right-aligned
      const bool left = i == 0 || i == 5;
      const std::string pad(width[i] - cells[i].size(), ' ');
      line += left ? cells[i] + pad : pad + cells[i];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

}  // namespace tourney
