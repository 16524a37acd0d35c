#pragma once

// Exhaustive executable checks of the equations relating subs, choose, ch
// and up, plus td/bu agreement for every registered problem. Inputs are the
// alphabet prefixes "ab", "abc", ... up to a maximum length.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace sublists {

struct Counterexample {
  std::string input;
  std::optional<std::size_t> k;
  std::string lhs;  // serialized (TreeDoc for trees, JSON otherwise)
  std::string rhs;
};

struct LawResult {
  std::string law;
  std::size_t cases = 0;  // cases checked, including a failing one
  std::optional<Counterexample> counterexample;

  bool passed() const noexcept { return !counterexample.has_value(); }
};

struct VerifyReport {
  std::size_t max_len = 0;
  std::vector<LawResult> laws;  // sorted by law name

  bool ok() const noexcept;
};

// Largest max_len verify accepts; td on longer inputs is too slow to sweep.
inline constexpr std::size_t kVerifyMaxLen = 10;

// "abc..." of length n (n <= 26).
std::string alphabet_prefix(std::size_t n);

// Throws OutOfRange when max_len exceeds kVerifyMaxLen.
VerifyReport verify_laws(std::size_t max_len);

nlohmann::json to_json(const VerifyReport& report);

}  // namespace sublists
