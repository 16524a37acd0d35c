#include "sublists/instances.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "sublists/combinatorics.hpp"
#include "sublists/level.hpp"
#include "sublists/tree.hpp"

namespace sublists {

SublistProblem<char, std::string> trace_problem() {
  return {"trace", [](const char& x) { return std::string(1, x); },
          [](const std::vector<std::string>& ys) {
            std::string out = "(";
            for (const auto& y : ys) out += y;
            out += ')';
            return out;
          }};
}

SublistProblem<std::int64_t, std::int64_t> modsum_problem() {
  return {"modsum",
          [](const std::int64_t& x) {
            const std::int64_t r = x % kModsumModulus;
            return r < 0 ? r + kModsumModulus : r;
          },
          [](const std::vector<std::int64_t>& ys) {
            // Every ys[i] is already reduced, so each product stays below 2^40.
            std::int64_t acc = 1;
            for (std::size_t i = 0; i < ys.size(); ++i) {
              acc = (acc + static_cast<std::int64_t>(i + 1) * ys[i]) % kModsumModulus;
            }
            return acc;
          }};
}

SublistProblem<std::int64_t, std::int64_t> maxmin_problem() {
  return {"maxmin", [](const std::int64_t& x) { return x; },
          [](const std::vector<std::int64_t>& ys) {
            auto [lo, hi] = std::minmax_element(ys.begin(), ys.end());
            return *hi - *lo;
          }};
}

std::vector<std::int64_t> parse_numeric_input(std::string_view text) {
  std::vector<std::int64_t> numbers;
  bool numeric = true;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t'; };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    std::int64_t value = 0;
    const char* first = text.data() + i;
    const char* last = text.data() + j;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
      numeric = false;
      break;
    }
    numbers.push_back(value);
    i = j;
  }
  if (numeric && !numbers.empty()) return numbers;
  std::vector<std::int64_t> codes;
  codes.reserve(text.size());
  for (unsigned char c : text) codes.push_back(c);
  return codes;
}

namespace {

template <class X, class Y>
RunOutcome run_typed(const SublistProblem<X, Y>& p, Algorithm algo, std::vector<X> xs) {
  if (xs.empty()) throw EmptyInput();
  auto [value, stats] = run_with_stats(algo, xs.size() - 1, p, xs);
  return {nlohmann::json(value), stats};
}

std::vector<ProblemEntry> make_registry() {
  std::vector<ProblemEntry> out;
  out.push_back({"trace", "parenthesised call structure over characters", true,
                 [](std::string_view in) { return in.size(); },
                 [](Algorithm algo, std::string_view in) {
                   return run_typed(trace_problem(), algo, std::vector<char>(in.begin(), in.end()));
                 }});
  out.push_back({"modsum", "position-weighted sum modulo 1000003", true,
                 [](std::string_view in) { return parse_numeric_input(in).size(); },
                 [](Algorithm algo, std::string_view in) {
                   return run_typed(modsum_problem(), algo, parse_numeric_input(in));
                 }});
  out.push_back({"maxmin", "max minus min of the sublist results", false,
                 [](std::string_view in) { return parse_numeric_input(in).size(); },
                 [](Algorithm algo, std::string_view in) {
                   return run_typed(maxmin_problem(), algo, parse_numeric_input(in));
                 }});
  return out;
}

}  // namespace

const std::vector<ProblemEntry>& builtin_problems() {
  static const std::vector<ProblemEntry> registry = make_registry();
  return registry;
}

const ProblemEntry* find_problem(std::string_view name) {
  for (const auto& p : builtin_problems()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::Paper:
      return "PAPER";
    case Provenance::Derived:
      return "DERIVED";
    case Provenance::Trivial:
      return "TRIVIAL";
  }
  return "TRIVIAL";
}

std::optional<Provenance> provenance_from_string(std::string_view s) noexcept {
  if (s == "PAPER") return Provenance::Paper;
  if (s == "DERIVED") return Provenance::Derived;
  if (s == "TRIVIAL") return Provenance::Trivial;
  return std::nullopt;
}

namespace {

using nlohmann::json;

GoldenCase make_case(std::string problem, std::string input, std::optional<std::size_t> k,
                     std::string algorithm, json expected, Provenance provenance) {
  return {std::move(problem), std::move(input), k, std::move(algorithm), std::move(expected),
          provenance};
}

std::vector<GoldenCase> make_golden() {
  const std::string gen = "gen";
  std::vector<GoldenCase> out;
  // Problem values. The DERIVED ones were produced by hand expansion and
  // cross-checked with an independent brute-force evaluator.
  out.push_back(make_case("trace", "a", std::nullopt, "both", "a", Provenance::Trivial));
  out.push_back(make_case("trace", "ab", std::nullopt, "both", "(ab)", Provenance::Derived));
  out.push_back(
      make_case("trace", "abc", std::nullopt, "both", "((ab)(ac)(bc))", Provenance::Derived));
  out.push_back(make_case("trace", "abcd", std::nullopt, "both",
                          "(((ab)(ac)(bc))((ab)(ad)(bd))((ac)(ad)(cd))((bc)(bd)(cd)))",
                          Provenance::Derived));
  out.push_back(make_case("modsum", "3,4", std::nullopt, "both", 12, Provenance::Derived));
  out.push_back(make_case("modsum", "1,2,3,4,5", std::nullopt, "both", 11704, Provenance::Derived));
  out.push_back(make_case("modsum", "abcd", std::nullopt, "both", 17918, Provenance::Derived));
  out.push_back(make_case("maxmin", "3,1,4,1,5", std::nullopt, "both", 1, Provenance::Derived));

  // Structural generators.
  out.push_back(make_case("subs", "abcde", std::nullopt, gen,
                          json::array({"abcd", "abce", "abde", "acde", "bcde"}), Provenance::Paper));
  out.push_back(make_case("subs", "ab", std::nullopt, gen, json::array({"a", "b"}),
                          Provenance::Trivial));
  out.push_back(make_case(
      "choose", "abcde", 3, gen,
      json::array({"abc", "abd", "abe", "acd", "ace", "ade", "bcd", "bce", "bde", "cde"}),
      Provenance::Paper));
  out.push_back(make_case("choose", "xyz", 0, gen, json::array({""}), Provenance::Paper));
  out.push_back(make_case(
      "upgrade", "abcde", 2, gen,
      json::array({json::array({"ab", "ac", "bc"}), json::array({"ab", "ad", "bd"}),
                   json::array({"ab", "ae", "be"}), json::array({"ac", "ad", "cd"}),
                   json::array({"ac", "ae", "ce"}), json::array({"ad", "ae", "de"}),
                   json::array({"bc", "bd", "cd"}), json::array({"bc", "be", "ce"}),
                   json::array({"bd", "be", "de"}), json::array({"cd", "ce", "de"})}),
      Provenance::Derived));
  out.push_back(make_case("spine", "abcde", 2, gen, json::array({10, 6, 3, 1}), Provenance::Paper));
  out.push_back(make_case("spine", "abcde", 3, gen, json::array({10, 4, 1}), Provenance::Derived));
  return out;
}

}  // namespace

const std::vector<GoldenCase>& golden_suite() {
  static const std::vector<GoldenCase> suite = make_golden();
  return suite;
}

nlohmann::json to_json(const GoldenCase& c) {
  json j;
  j["problem"] = c.problem_name;
  j["input"] = c.input;
  if (c.k) j["k"] = *c.k;
  j["algorithm"] = c.algorithm;
  j["expected"] = c.expected;
  j["provenance"] = std::string(to_string(c.provenance));
  return j;
}

GoldenCase golden_case_from_json(const nlohmann::json& j) {
  GoldenCase c;
  try {
    c.problem_name = j.at("problem").get<std::string>();
    c.input = j.at("input").get<std::string>();
    if (j.contains("k")) c.k = j.at("k").get<std::size_t>();
    c.algorithm = j.at("algorithm").get<std::string>();
    c.expected = j.at("expected");
    auto prov = provenance_from_string(j.at("provenance").get<std::string>());
    if (!prov) throw Error("unknown provenance " + j.at("provenance").dump());
    c.provenance = *prov;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed golden case: ") + e.what());
  }
  return c;
}

std::string golden_path(const GoldenCase& c) { return c.problem_name + "/" + c.input + ".jsonl"; }

std::vector<std::pair<std::string, nlohmann::json>> evaluate_golden(const GoldenCase& c) {
  const std::string& xs = c.input;
  auto need_k = [&c]() {
    if (!c.k) throw Error("golden case " + c.problem_name + "/" + c.input + " needs k");
    return *c.k;
  };
  if (c.problem_name == "subs") return {{"gen", json(subs(xs))}};
  if (c.problem_name == "choose") return {{"gen", json(choose(need_k(), xs))}};
  if (c.problem_name == "upgrade") return {{"gen", json(upgrade_oracle(need_k(), xs))}};
  if (c.problem_name == "spine") return {{"gen", json(spine_sizes(ch(need_k(), xs)))}};

  const ProblemEntry* p = find_problem(c.problem_name);
  if (!p) throw Error("golden case names unknown problem " + c.problem_name);
  std::vector<std::pair<std::string, json>> out;
  if (c.algorithm == "td" || c.algorithm == "both") {
    out.emplace_back("td", p->run(Algorithm::TopDown, xs).value);
  }
  if (c.algorithm == "bu" || c.algorithm == "both") {
    out.emplace_back("bu", p->run(Algorithm::BottomUp, xs).value);
  }
  return out;
}

}  // namespace sublists
