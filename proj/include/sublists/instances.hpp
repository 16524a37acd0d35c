#pragma once

// Built-in recurrences and their golden cases.
//
// None of these come with a known closed form; they exist to exercise the
// two evaluators:
//
//   trace   base x = "x", combine ys = "(" ++ concat ys ++ ")"
//           Shows the whole call structure; sensitive to argument order.
//   modsum  base x = x mod 1000003,
//           combine ys = (1 + sum_i i * ys[i]) mod 1000003, i 1-based.
//           Order-sensitive and numeric.
//   maxmin  base x = x, combine ys = max ys - min ys.
//           Order-insensitive control.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sublists/solver.hpp"

namespace sublists {

inline constexpr std::int64_t kModsumModulus = 1000003;

SublistProblem<char, std::string> trace_problem();
SublistProblem<std::int64_t, std::int64_t> modsum_problem();
SublistProblem<std::int64_t, std::int64_t> maxmin_problem();

// Reads a numeric problem input. A list of integers separated by commas
// and/or blanks ("1,2,3") is taken as is; any other text contributes the
// character code of each of its characters ("abc" -> 97, 98, 99).
std::vector<std::int64_t> parse_numeric_input(std::string_view text);

struct RunOutcome {
  nlohmann::json value;
  RunStats stats;
};

// Type-erased registry entry keyed by name. run() interprets the textual
// input the way the problem expects it and reports the result as JSON.
struct ProblemEntry {
  std::string name;
  std::string summary;
  bool order_sensitive = false;
  std::function<std::size_t(std::string_view)> input_length;
  std::function<RunOutcome(Algorithm, std::string_view)> run;
};

const std::vector<ProblemEntry>& builtin_problems();
const ProblemEntry* find_problem(std::string_view name);

enum class Provenance { Paper, Derived, Trivial };

std::string_view to_string(Provenance p) noexcept;
std::optional<Provenance> provenance_from_string(std::string_view s) noexcept;

// problem_name is either a registered problem (expected is its value under
// `algorithm`, "both" meaning td and bu alike) or one of the structural
// generators "subs", "choose", "upgrade" (k set) and "spine" (k set: the
// spine sizes of ch k input).
struct GoldenCase {
  std::string problem_name;
  std::string input;
  std::optional<std::size_t> k;
  std::string algorithm;
  nlohmann::json expected;
  Provenance provenance = Provenance::Trivial;

  friend bool operator==(const GoldenCase&, const GoldenCase&) = default;
};

const std::vector<GoldenCase>& golden_suite();

nlohmann::json to_json(const GoldenCase& c);
GoldenCase golden_case_from_json(const nlohmann::json& j);

// Relative location under a golden root: <problem>/<input>.jsonl
std::string golden_path(const GoldenCase& c);

// Evaluates a case. Returns the produced value for each algorithm that
// applies ("td"/"bu" for problems, "gen" for generators).
std::vector<std::pair<std::string, nlohmann::json>> evaluate_golden(const GoldenCase& c);

}  // namespace sublists
