#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tourney/generators.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

// Matrix files: the first line holds n, then n lines of n whitespace-separated
// tokens. Binary files use {0, 1}; probabilistic files use reals. The
// diagonal is 0 in both.

/// Throws Error(parse_error) with line and column on bad syntax or a wrong
/// row/column count, and Error(malformed_instance) naming the offending pair
/// when the matrix is not a tournament.
MatrixTournament parse_binary_matrix(std::string_view text);

/// Throws Error(parse_error) on a malformed real and Error(malformed_instance)
/// on a complementarity violation beyond 1e-9.
ProbabilisticTournament parse_probabilistic_matrix(std::string_view text);

/// Canonical text: single spaces, '\n' line ends, trailing newline.
std::string format_binary_matrix(const MatrixTournament& m);

/// Canonical text with the shortest decimal form that reads back to the same
/// double.
std::string format_probabilistic_matrix(const ProbabilisticTournament& p);

/// "fnv1a64:" followed by 16 hex digits of the FNV-1a hash of `bytes`.
std::string content_digest(std::string_view bytes);

/// Parses "kind:key=value,..." such as "planted:n=100,ell=4,seed=7" or
/// "anomalous:k=3,m=11,seed=1". Throws Error(invalid_spec).
GenSpec parse_gen_spec(std::string_view text);

/// Accepts "transitive", "regular", "random", "planted", "anomalous" and
/// "random-prob". Throws Error(invalid_spec).
GenKind parse_gen_kind(std::string_view name);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace tourney
