#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

/// Runs the tool with `args`; stdout is captured, stderr goes to `err_file`.
Run tourney(const std::string& args, const fs::path& err_file = "/dev/null", const std::string& env = "") {
  const std::string cmd = env + " \"" TOURNEY_BIN "\" " + args + " 2>\"" + err_file.string() + "\"";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("tourney-cli-" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("champion on a file") {
  TempDir dir;
  const fs::path t = dir.path / "t.mat";
  std::ofstream(t) << "4\n0 1 1 1\n0 0 1 1\n0 0 0 1\n0 0 0 0\n";
  const fs::path err = dir.path / "err.txt";
  const Run r = tourney("champion --in " + t.string() + " --order-preserving --memoize", err);
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["format_version"] == 1);
  CHECK(j["command"] == "champion");
  CHECK(j["report"]["champions"] == nlohmann::json::array({0}));
  CHECK(j["report"]["losses"] == 0);
  CHECK(j["flags"]["order_preserving"] == "true");
  CHECK(j["report"]["stats"]["comparisons"].get<int>() > 0);
  CHECK(j["baseline_cost"]["inferences"] == 12);
  CHECK(j["instance_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
  CHECK(slurp(err).find("champion: n = 4") != std::string::npos);

  const Run quiet = tourney("champion --json-only --symmetric --in " + t.string(), err);
  CHECK(quiet.status == 0);
  CHECK(slurp(err).empty());
  CHECK(nlohmann::json::parse(quiet.out)["baseline_cost"]["inferences"] == 6);
}

TEST_CASE("gen then brute on the anomalous construction") {
  TempDir dir;
  const fs::path a = dir.path / "a.mat";
  CHECK(tourney("gen --kind anomalous --k 3 --m 11 --seed 1 --out " + a.string()).status == 0);
  const Run r = tourney("brute --json-only --in " + a.string());
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["report"]["losses"] == 4);
  CHECK(j["report"]["champions"][0].get<int>() < 3);

  // the file parses and matches what champion finds
  const Run c = tourney("champion --json-only --in " + a.string());
  CHECK(nlohmann::json::parse(c.out)["report"]["champions"] == j["report"]["champions"]);
}

TEST_CASE("errors exit nonzero with one line") {
  TempDir dir;
  const fs::path t = dir.path / "t.mat";
  const fs::path err = dir.path / "err.txt";
  std::ofstream(t) << "3\n0 1 1\n0 0 1\n0 0 0\n";

  Run r = tourney("topk --in " + t.string() + " --k 0", err);
  CHECK(r.status != 0);
  std::string msg = slurp(err);
  CHECK(msg.find("invalid-k") != std::string::npos);
  CHECK(std::count(msg.begin(), msg.end(), '\n') == 1);

  r = tourney("champion --in " + (dir.path / "missing.mat").string(), err);
  CHECK(r.status != 0);
  CHECK(slurp(err).find("cannot open") != std::string::npos);

  r = tourney("champion --frobnicate", err);
  CHECK(r.status != 0);

  std::ofstream(t) << "3\n0 1 1\n0 0 1\n";
  r = tourney("champion --in " + t.string(), err);
  CHECK(r.status != 0);
  CHECK(slurp(err).find("rows follow") != std::string::npos);

  r = tourney("gen --kind regular --n 4", err);
  CHECK(r.status != 0);
  r = tourney("bench --n 30 --algorithms teleport", err);
  CHECK(r.status != 0);
}

TEST_CASE("every algorithm subcommand on a generated instance") {
  for (const char* cmd : {"champion", "topk --k 3", "batched --batch-size 8", "batched --batch-size 8 --no-batch-fill",
                          "brute", "champion --no-memoize"}) {
    CAPTURE(cmd);
    const Run r = tourney(std::string(cmd) + " --json-only --gen planted:n=40,ell=3,seed=2");
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    if (j["report"].contains("champions")) {
      CHECK(j["report"]["champions"] == nlohmann::json::array({0}));
      CHECK(j["report"]["losses"] == 3);
    } else {
      CHECK(j["report"]["players"][0] == 0);
      CHECK(j["report"]["losses"][0] == 3);
    }
  }
  const Run p = tourney("prob --json-only --gen random-prob:n=12,seed=3");
  CHECK(p.status == 0);
  CHECK(nlohmann::json::parse(p.out)["report"]["champions"].size() >= 1);
}

TEST_CASE("TOURNEY_SEED is the default seed") {
  const Run a = tourney("gen --kind random --n 9", "/dev/null", "TOURNEY_SEED=5");
  const Run b = tourney("gen --kind random --n 9 --seed 5");
  const Run c = tourney("gen --kind random --n 9 --seed 6");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(tourney("gen --kind random --n 9", "/dev/null", "TOURNEY_SEED=abc").status != 0);
}

TEST_CASE("bench is byte-identical across runs") {
  const std::string args = "bench --kind planted --n 30 --ell 0,2 --k 1..3 --batch-size 2..16*2 "
                           "--algorithms brute,champion,topk,batched --seeds 5 --seed 3";
  const Run a = tourney(args);
  const Run b = tourney(args);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("kind,n,ell,k,B,algorithm,comparisons,inferences,batch_calls,speedup,seeds\n", 0) == 0);

  TempDir dir;
  const fs::path suite = dir.path / "suite.json";
  std::ofstream(suite) << R"({"kind": "transitive", "sizes": [30], "algorithms": ["brute", "champion"], "seeds": 1})";
  const fs::path csv = dir.path / "out.csv";
  const Run t = tourney("bench --table --suite " + suite.string() + " --out " + csv.string());
  CHECK(t.status == 0);
  CHECK(t.out.find("transitive") != std::string::npos);
  CHECK(slurp(csv).find("transitive,30,0,1,,brute,435.000,870.000,,1.000,1") != std::string::npos);
}
