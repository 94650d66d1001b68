#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace hurwitz::cli {

// Exit codes: 0 success, 1 usage / I/O / schema errors, 2 domain violations.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

struct AnalyzeOptions {
  std::string path;
  bool pretty = false;
  std::optional<int> stabilizer_point;
};

struct DegenerateOptions {
  std::string path;
  bool splits = false;
  bool dihedral = false;
  bool dedup = false;
  bool pretty = false;
  std::optional<int> index;
};

struct CharacterOptions {
  std::string path;
  bool json = false;
};

struct GraphOptions {
  std::string path;
  std::string dot = "-";
  std::string which = "quotient";
};

struct VerifyOptions {
  std::optional<std::string> datum_path;  // replaces the built-in A5 dihedral datum
  bool json = false;
};

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err);
int cmd_degenerate(const DegenerateOptions& options, std::ostream& out, std::ostream& err);
int cmd_character(const CharacterOptions& options, std::ostream& out, std::ostream& err);
int cmd_graph(const GraphOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify_examples(const VerifyOptions& options, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hurwitz::cli
