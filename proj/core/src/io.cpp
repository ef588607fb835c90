#include "tourney/io.hpp"

#include <array>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

#include "tourney/error.hpp"

namespace tourney {
namespace {

struct Token {
  std::string_view text;
  std::size_t line = 0;
  std::size_t column = 0;
};

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& what) {
  throw Error(ErrorKind::parse_error,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

/// Non-empty lines split into tokens; blank lines are skipped.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      if (i > start) tokens.push_back({line.substr(start, i - start), line_no, start + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    pos = eol + 1;
  }
  return lines;
}

/// Splits off the header and checks the n x n shape.
std::size_t parse_shape(const std::vector<std::vector<Token>>& lines) {
  if (lines.empty()) parse_fail(1, 1, "empty input, expected the player count n");
  const auto& header = lines.front();
  if (header.size() != 1) parse_fail(header[1].line, header[1].column, "header must hold only n");
  std::size_t n = 0;
  const Token& t = header.front();
  const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), n);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size() || n == 0) {
    parse_fail(t.line, t.column, "expected a positive player count, got '" + std::string(t.text) + "'");
  }
  const std::size_t rows = lines.size() - 1;
  if (rows != n) {
    const std::size_t line = rows > n ? lines[n + 1].front().line : lines.back().front().line + 1;
    throw Error(ErrorKind::parse_error, "line " + std::to_string(line) + ": header says n = " +
                                            std::to_string(n) + " but " + std::to_string(rows) +
                                            " rows follow");
  }
  for (std::size_t r = 1; r <= n; ++r) {
    if (lines[r].size() != n) {
      const Token& last = lines[r].back();
      throw Error(ErrorKind::parse_error, "line " + std::to_string(last.line) + ": expected " +
                                              std::to_string(n) + " entries, found " +
                                              std::to_string(lines[r].size()));
    }
  }
  return n;
}

[[noreturn]] void invalid(const Violation& v) {
  throw Error(ErrorKind::malformed_instance, "invalid tournament at (" + std::to_string(v.row) +
                                                 ", " + std::to_string(v.col) + "): " + v.reason);
}

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  std::string s(buf.data(), ptr);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

}  // namespace

MatrixTournament parse_binary_matrix(std::string_view text) {
  const auto lines = tokenize(text);
  const std::size_t n = parse_shape(lines);
  MatrixTournament m(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const Token& t = lines[u + 1][v];
      if (t.text == "1") {
        m.set_cell(u, v, true);
      } else if (t.text != "0") {
        parse_fail(t.line, t.column, "expected 0 or 1, got '" + std::string(t.text) + "'");
      }
    }
  }
  if (auto violation = validate_matrix(m)) invalid(*violation);
  return m;
}

ProbabilisticTournament parse_probabilistic_matrix(std::string_view text) {
  const auto lines = tokenize(text);
  const std::size_t n = parse_shape(lines);
  ProbabilisticTournament p(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      const Token& t = lines[u + 1][v];
      double x = 0.0;
      const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), x);
      if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        parse_fail(t.line, t.column, "malformed real '" + std::string(t.text) + "'");
      }
      p.set_prob(u, v, x);
    }
  }
  if (auto violation = validate_probabilities(p)) invalid(*violation);
  return p;
}

std::string format_binary_matrix(const MatrixTournament& m) {
  const std::size_t n = m.size();
  std::string out = std::to_string(n) + "\n";
  out.reserve(out.size() + n * 2 * n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (v > 0) out += ' ';
      out += m.wins(u, v) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::string format_probabilistic_matrix(const ProbabilisticTournament& p) {
  const std::size_t n = p.size();
  std::string out = std::to_string(n) + "\n";
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (v > 0) out += ' ';
      out += format_double(p.prob(u, v));
    }
    out += '\n';
  }
  return out;
}

std::string content_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  std::array<char, 17> hex{};
  std::snprintf(hex.data(), hex.size(), "%016llx", static_cast<unsigned long long>(h));
  return "fnv1a64:" + std::string(hex.data());
}

GenKind parse_gen_kind(std::string_view name) {
  if (name == "transitive") return GenKind::transitive;
  if (name == "regular") return GenKind::regular;
  if (name == "random") return GenKind::random;
  if (name == "planted") return GenKind::planted;
  if (name == "anomalous") return GenKind::anomalous;
  if (name == "random-prob") return GenKind::random_prob;
  throw Error(ErrorKind::invalid_spec,
              "unknown generator kind '" + std::string(name) +
                  "' (expected transitive, regular, random, planted, anomalous or random-prob)");
}

GenSpec parse_gen_spec(std::string_view text) {
  GenSpec spec;
  const std::size_t colon = text.find(':');
  spec.kind = parse_gen_kind(text.substr(0, colon));
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::invalid_spec, "expected key=value in generator spec, got '" +
                                               std::string(item) + "'");
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    std::uint64_t number = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), number);
    if (ec != std::errc() || ptr != value.data() + value.size()) {
      throw Error(ErrorKind::invalid_spec, "generator parameter '" + std::string(key) +
                                               "' needs a non-negative integer, got '" +
                                               std::string(value) + "'");
    }
    if (key == "n") {
      spec.n = number;
    } else if (key == "ell") {
      spec.ell = number;
    } else if (key == "k") {
      spec.k = number;
    } else if (key == "m") {
      spec.m = number;
    } else if (key == "seed") {
      spec.seed = number;
    } else {
      throw Error(ErrorKind::invalid_spec, "unknown generator parameter '" + std::string(key) + "'");
    }
  }
  return spec;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::parse_error, "cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

}  // namespace tourney
