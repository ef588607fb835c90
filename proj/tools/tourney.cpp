// tourney: champion search on tournament files from the command line.

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tourney/algorithms.hpp"
#include "tourney/baseline.hpp"
#include "tourney/batched.hpp"
#include "tourney/bench.hpp"
#include "tourney/error.hpp"
#include "tourney/io.hpp"
#include "tourney/probabilistic.hpp"
#include "tourney/run_record.hpp"

namespace {

using namespace tourney;

struct RunFlags {
  std::string in;
  std::string gen;
  bool order_preserving = false;
  bool memoize = true;
  bool batch_fill = true;
  bool symmetric = false;
  bool json_only = false;
  std::uint64_t seed = 0;
  std::size_t k = 1;
  std::size_t batch_size = 1;
};

struct GenFlags {
  std::string kind;
  std::size_t n = 0;
  std::size_t ell = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::string out;
};

struct BenchFlags {
  std::string suite;
  std::string kind = "planted";
  std::string sizes;
  std::string ells = "0";
  std::string ks = "1";
  std::string batch_sizes = "1";
  std::string anomalous;
  std::string algorithms = "champion";
  std::size_t seeds = 10;
  std::uint64_t seed = 0;
  bool symmetric = false;
  bool memoize = true;
  bool batch_fill = true;
  bool table = false;
  std::string out;
};

std::uint64_t default_seed() {
  const char* env = std::getenv("TOURNEY_SEED");
  if (env == nullptr || *env == '\0') return 0;
  const std::string_view text(env);
  std::uint64_t seed = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), seed);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::invalid_spec,
                "TOURNEY_SEED must be a non-negative integer, got '" + std::string(text) + "'");
  }
  return seed;
}

std::string on_off(bool b) { return b ? "true" : "false"; }

/// The instance text, either read from --in or generated from --gen.
std::string instance_text(const RunFlags& f, bool probabilistic) {
  if (!f.in.empty() && !f.gen.empty()) {
    throw Error(ErrorKind::invalid_spec, "give either --in or --gen, not both");
  }
  if (!f.in.empty()) return read_text_file(f.in);
  if (f.gen.empty()) throw Error(ErrorKind::invalid_spec, "no instance: pass --in FILE or --gen SPEC");
  GenSpec spec = parse_gen_spec(f.gen);
  if (f.gen.find("seed=") == std::string::npos) spec.seed = f.seed;
  if (spec.kind == GenKind::random_prob) {
    if (!probabilistic) {
      throw Error(ErrorKind::invalid_spec, "random-prob instances only work with the prob subcommand");
    }
    return format_probabilistic_matrix(gen_random_probabilistic(spec.n, spec.seed));
  }
  return format_binary_matrix(generate_matrix(spec));
}

int run_algorithm(const std::string& command, const RunFlags& f) {
  const bool asymmetric = !f.symmetric;
  const bool probabilistic = command == "prob";
  const std::string text = instance_text(f, probabilistic);

  RunRecord record;
  record.command = command;
  record.instance_digest = content_digest(text);
  record.asymmetric = asymmetric;
  if (!f.in.empty()) record.flags.emplace_back("in", f.in);
  if (!f.gen.empty()) {
    record.flags.emplace_back("gen", f.gen);
    if (f.gen.find("seed=") == std::string::npos) record.flags.emplace_back("seed", std::to_string(f.seed));
  }

  SearchOptions options;
  options.memoize = f.memoize;
  options.schedule = f.order_preserving ? Schedule::order_preserving : Schedule::array_swap;
  const OracleOptions oracle_options{asymmetric, false};

  if (probabilistic) {
    const ProbabilisticTournament p = parse_probabilistic_matrix(text);
    ProbabilisticOracle oracle(p, oracle_options);
    record.n = p.size();
    record.report = find_champions_probabilistic(oracle, options);
  } else {
    const MatrixTournament m = parse_binary_matrix(text);
    record.n = m.size();
    MatrixOracle oracle(m, oracle_options);
    if (command == "champion") {
      record.report = find_champions(oracle, options);
    } else if (command == "topk") {
      record.flags.emplace_back("k", std::to_string(f.k));
      record.report = top_k_champions(oracle, f.k, options);
    } else if (command == "batched") {
      BatchedOptions b;
      b.batch_size = f.batch_size;
      b.memoize = f.memoize;
      b.batch_fill = f.batch_fill && f.memoize;
      record.flags.emplace_back("batch_size", std::to_string(f.batch_size));
      record.flags.emplace_back("batch_fill", on_off(b.batch_fill));
      record.report = find_champions_batched(oracle, b);
    } else {
      record.report = brute_force_champions(m);
    }
  }
  if (command != "brute") {
    if (command != "batched") {
      record.flags.emplace_back("order_preserving", on_off(f.order_preserving));
    }
    record.flags.emplace_back("memoize", on_off(f.memoize));
  }
  record.flags.emplace_back("symmetric", on_off(f.symmetric));
  record.baseline_cost = full_tournament_cost(record.n, asymmetric);

  std::cout << to_json(record) << '\n';
  if (!f.json_only) std::cerr << summarize(record) << '\n';
  return 0;
}

int run_gen(const GenFlags& f) {
  GenSpec spec{parse_gen_kind(f.kind), f.n, f.ell, f.k, f.m, f.seed};
  const std::string text = spec.kind == GenKind::random_prob
                               ? format_probabilistic_matrix(gen_random_probabilistic(spec.n, spec.seed))
                               : format_binary_matrix(generate_matrix(spec));
  if (f.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(f.out, text);
    std::cerr << "wrote " << f.out << " (" << content_digest(text) << ")\n";
  }
  return 0;
}

std::vector<AnomalousSize> parse_anomalous_list(const std::string& text) {
  // "3x11,5x17"
  std::vector<AnomalousSize> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    const std::string item = text.substr(pos, comma - pos);
    const std::size_t x = item.find('x');
    if (x == std::string::npos) {
      throw Error(ErrorKind::invalid_spec, "anomalous sizes look like 3x11, got '" + item + "'");
    }
    const auto k = parse_size_list(item.substr(0, x));
    const auto m = parse_size_list(item.substr(x + 1));
    if (k.size() != 1 || m.size() != 1) {
      throw Error(ErrorKind::invalid_spec, "anomalous sizes look like 3x11, got '" + item + "'");
    }
    out.push_back({k.front(), m.front()});
    pos = comma + 1;
  }
  return out;
}

int run_bench_command(const BenchFlags& f, const CLI::App& sub) {
  BenchSuite suite;
  if (!f.suite.empty()) {
    suite = parse_bench_suite(read_text_file(f.suite));
    // command-line seed settings override the file
    if (sub.count("--seeds") > 0) suite.seeds = f.seeds;
    if (sub.count("--seed") > 0) suite.base_seed = f.seed;
  } else {
    suite.kind = parse_gen_kind(f.kind);
    if (!f.sizes.empty()) suite.sizes = parse_size_list(f.sizes);
    suite.ells = parse_size_list(f.ells);
    suite.ks = parse_size_list(f.ks);
    suite.batch_sizes = parse_size_list(f.batch_sizes);
    if (!f.anomalous.empty()) suite.anomalous = parse_anomalous_list(f.anomalous);
    suite.algorithms.clear();
    std::size_t pos = 0;
    while (pos <= f.algorithms.size()) {
      std::size_t comma = f.algorithms.find(',', pos);
      if (comma == std::string::npos) comma = f.algorithms.size();
      suite.algorithms.push_back(parse_bench_algorithm(f.algorithms.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    suite.seeds = f.seeds;
    suite.base_seed = f.seed;
    suite.asymmetric = !f.symmetric;
    suite.memoize = f.memoize;
    suite.batch_fill = f.batch_fill;
  }
  const auto rows = run_bench(suite);
  const std::string csv = to_csv(rows);
  if (!f.out.empty()) write_text_file(f.out, csv);
  if (f.table) {
    std::cout << to_text_table(rows);
  } else if (f.out.empty()) {
    std::cout << csv;
  }
  return 0;
}

void add_run_flags(CLI::App* sub, RunFlags& f) {
  sub->add_option("--in", f.in, "instance file");
  sub->add_option("--gen", f.gen, "generate the instance, e.g. planted:n=100,ell=4");
  sub->add_flag("--memoize,!--no-memoize", f.memoize, "reuse lookups across rounds (default on)");
  sub->add_flag("--symmetric", f.symmetric, "count one inference per comparison instead of two");
  sub->add_flag("--json-only", f.json_only, "do not print the summary on stderr");
  sub->add_option("--seed", f.seed, "seed for --gen when the spec has none (default $TOURNEY_SEED or 0)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Copeland champions of tournaments with few arc lookups"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "show help for every subcommand");

  RunFlags run;
  GenFlags gen;
  BenchFlags bench;
  try {
    run.seed = default_seed();
    gen.seed = run.seed;
    bench.seed = run.seed;
  } catch (const Error& e) {
    std::cerr << "tourney: error: " << e.what() << '\n';
    return 2;
  }

  auto* champion = app.add_subcommand("champion", "all players with the fewest losses");
  add_run_flags(champion, run);
  champion->add_flag("--order-preserving", run.order_preserving, "keep input order when pairing players");

  auto* topk = app.add_subcommand("topk", "the k players with the fewest losses");
  add_run_flags(topk, run);
  topk->add_flag("--order-preserving", run.order_preserving, "keep input order when pairing players");
  topk->add_option("--k", run.k, "how many players to return")->required();

  auto* prob = app.add_subcommand("prob", "champions by expected losses of a probabilistic instance");
  add_run_flags(prob, run);
  prob->add_flag("--order-preserving", run.order_preserving, "keep input order when pairing players");

  auto* batched = app.add_subcommand("batched", "champion search with parallel lookups");
  add_run_flags(batched, run);
  batched->add_option("--batch-size", run.batch_size, "arcs per parallel call")->required();
  batched->add_flag("--batch-fill,!--no-batch-fill", run.batch_fill,
                    "pad partial batches with useful arcs (default on, needs --memoize)");

  auto* brute = app.add_subcommand("brute", "read every match");
  add_run_flags(brute, run);

  auto* gen_cmd = app.add_subcommand("gen", "write a generated instance");
  gen_cmd->add_option("--kind", gen.kind, "transitive, regular, random, planted, anomalous or random-prob")
      ->required();
  gen_cmd->add_option("--n", gen.n, "players");
  gen_cmd->add_option("--ell", gen.ell, "losses of the planted champion");
  gen_cmd->add_option("--k", gen.k, "anomalous: size of the first block");
  gen_cmd->add_option("--m", gen.m, "anomalous: size of the second block");
  gen_cmd->add_option("--seed", gen.seed, "default $TOURNEY_SEED or 0");
  gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

  auto* bench_cmd = app.add_subcommand("bench", "lookup counts over a grid of generated instances");
  bench_cmd->add_option("--suite", bench.suite, "JSON suite file; replaces the grid flags");
  bench_cmd->add_option("--kind", bench.kind, "generator kind (default planted)");
  bench_cmd->add_option("--n", bench.sizes, "sizes, e.g. 30 or 100,500 or 10..20");
  bench_cmd->add_option("--ell", bench.ells, "planted champion losses");
  bench_cmd->add_option("--k", bench.ks, "top-k values, e.g. 1..5");
  bench_cmd->add_option("--batch-size", bench.batch_sizes, "batch sizes, e.g. 2..256*2");
  bench_cmd->add_option("--anomalous", bench.anomalous, "anomalous sizes, e.g. 3x11,5x17");
  bench_cmd->add_option("--algorithms", bench.algorithms,
                        "comma list of brute, champion, champion-ordered, champion-nomemo, topk, batched, prob");
  bench_cmd->add_option("--seeds", bench.seeds, "instances per cell");
  bench_cmd->add_option("--seed", bench.seed, "first seed (default $TOURNEY_SEED or 0)");
  bench_cmd->add_flag("--symmetric", bench.symmetric, "one inference per comparison");
  bench_cmd->add_flag("--memoize,!--no-memoize", bench.memoize, "default on");
  bench_cmd->add_flag("--batch-fill,!--no-batch-fill", bench.batch_fill, "default on");
  bench_cmd->add_flag("--table", bench.table, "print an aligned table instead of CSV");
  bench_cmd->add_option("--out", bench.out, "also write the CSV here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen);
    if (bench_cmd->parsed()) return run_bench_command(bench, *bench_cmd);
    for (auto* sub : {champion, topk, prob, batched, brute}) {
      if (sub->parsed()) return run_algorithm(sub->get_name(), run);
    }
  } catch (const Error& e) {
    std::cerr << "tourney: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "tourney: error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
