#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "sublists/instances.hpp"
#include "support/generators.hpp"

using namespace sublists;
namespace fs = std::filesystem;

#ifndef SUBLISTS_GOLDEN_DIR
#error "SUBLISTS_GOLDEN_DIR must point at the golden/ directory"
#endif

TEST_CASE("registry") {
  CHECK(builtin_problems().size() == 3);
  const ProblemEntry* trace = find_problem("trace");
  REQUIRE(trace != nullptr);
  CHECK(trace->order_sensitive);
  CHECK(trace->run(Algorithm::TopDown, "abc").value == "((ab)(ac)(bc))");
  CHECK(find_problem("nope") == nullptr);
  CHECK_FALSE(find_problem("maxmin")->order_sensitive);
  CHECK_THROWS_AS(find_problem("modsum")->run(Algorithm::BottomUp, ""), EmptyInput);
}

TEST_CASE("trace is order-sensitive, maxmin is not") {
  const auto trace = trace_problem();
  CHECK(trace.combine({"a", "b"}) != trace.combine({"b", "a"}));
  const auto modsum = modsum_problem();
  CHECK(modsum.combine({1, 2}) != modsum.combine({2, 1}));
  const auto maxmin = maxmin_problem();
  CHECK(maxmin.combine({1, 5, 3}) == maxmin.combine({5, 3, 1}));
}

TEST_CASE("modsum reduces into [0, modulus) and stays exact near its bounds") {
  const auto modsum = modsum_problem();
  CHECK(modsum.base(-1) == kModsumModulus - 1);
  CHECK(modsum.base(kModsumModulus) == 0);
  const std::int64_t top = kModsumModulus - 1;
  // 12 maximal arguments: the largest combine input a length-13 level can see.
  const std::vector<std::int64_t> ys(12, top);
  std::int64_t expected = 1;
  for (int i = 1; i <= 12; ++i) expected = (expected + i * top) % kModsumModulus;
  CHECK(modsum.combine(ys) == expected);

  auto rng = sublists::testing::make_rng(31);
  std::vector<std::int64_t> xs;
  for (int i = 0; i < 12; ++i) xs.push_back(static_cast<std::int64_t>(rng() >> 2));
  const auto v = bu(11, modsum, xs);
  CHECK(v >= 0);
  CHECK(v < kModsumModulus);
}

TEST_CASE("parse_numeric_input") {
  CHECK(parse_numeric_input("1,2,3") == std::vector<std::int64_t>{1, 2, 3});
  CHECK(parse_numeric_input(" 4 -5,6 ") == std::vector<std::int64_t>{4, -5, 6});
  CHECK(parse_numeric_input("7") == std::vector<std::int64_t>{7});
  CHECK(parse_numeric_input("ab") == std::vector<std::int64_t>{97, 98});
  CHECK(parse_numeric_input("1a") == std::vector<std::int64_t>{'1', 'a'});
  CHECK(parse_numeric_input("").empty());
}

TEST_CASE("golden suite holds under both algorithms") {
  const auto& suite = golden_suite();
  CHECK(suite.size() >= 10);
  for (const auto& c : suite) {
    CAPTURE(c.problem_name);
    CAPTURE(c.input);
    const auto produced = evaluate_golden(c);
    CHECK_FALSE(produced.empty());
    if (c.algorithm == "both") CHECK(produced.size() == 2);
    for (const auto& [algo, value] : produced) {
      CAPTURE(algo);
      CHECK(value == c.expected);
    }
  }
}

TEST_CASE("golden files match the in-code suite byte for byte") {
  std::map<std::string, std::string> expected_files;
  for (const auto& c : golden_suite()) expected_files[golden_path(c)] += to_json(c).dump() + "\n";

  std::map<std::string, std::string> actual_files;
  const fs::path root = SUBLISTS_GOLDEN_DIR;
  for (const auto& entry : fs::recursive_directory_iterator(root)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".jsonl") continue;
    std::ifstream in(entry.path());
    std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    actual_files[fs::relative(entry.path(), root).generic_string()] = body;
  }
  CHECK(actual_files == expected_files);

  // Each stored line parses back into the case it came from.
  for (const auto& c : golden_suite()) CHECK(golden_case_from_json(to_json(c)) == c);
}

TEST_CASE("malformed golden lines are rejected") {
  CHECK_THROWS_AS(golden_case_from_json(nlohmann::json::object()), Error);
  auto j = to_json(golden_suite().front());
  j["provenance"] = "GUESSED";
  CHECK_THROWS_AS(golden_case_from_json(j), Error);
}
