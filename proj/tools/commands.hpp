#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace sublists::cli {

enum class Command { Run, Verify, Dump, Bench };
enum class AlgoChoice { TopDown, BottomUp, Both };
enum class Format { Text, Json };
enum class Stage { Ch, AfterUp };

struct CliConfig {
  Command command = Command::Run;
  std::string problem;
  std::string input;
  AlgoChoice algo = AlgoChoice::Both;
  std::size_t max_len = 9;
  Format format = Format::Text;
  std::size_t k = 0;
  Stage stage = Stage::Ch;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitLawFailure = 1;
inline constexpr int kExitUsage = 2;

// Longest input accepted by run.
inline constexpr std::size_t kRunMaxLen = 20;
// Longest input any td evaluation is attempted on (run and bench).
inline constexpr std::size_t kTopDownMaxLen = 12;

int cmd_run(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_dump(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_bench(const CliConfig& cfg, std::ostream& out, std::ostream& err);

// Parses args (without the program name) and dispatches.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sublists::cli
