#include "sublists/laws.hpp"

#include <algorithm>
#include <functional>

#include "sublists/combinatorics.hpp"
#include "sublists/errors.hpp"
#include "sublists/instances.hpp"
#include "sublists/level.hpp"
#include "sublists/tree.hpp"
#include "sublists/tree_doc.hpp"

namespace sublists {

bool VerifyReport::ok() const noexcept {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& r) { return r.passed(); });
}

std::string alphabet_prefix(std::size_t n) {
  if (n > 26) throw OutOfRange("alphabet prefix longer than 26 letters requested");
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(static_cast<char>('a' + i));
  return out;
}

namespace {

using nlohmann::json;

// Runs one law over every case; a case returns a counterexample on failure.
class LawRunner {
 public:
  explicit LawRunner(std::string name) { result_.law = std::move(name); }

  template <class Check>
  void run(Check&& check) {
    if (!result_.passed()) return;
    ++result_.cases;
    try {
      result_.counterexample = check();
    } catch (const Error& e) {
      result_.counterexample = Counterexample{"", std::nullopt, "error", e.what()};
    }
  }

  template <class Check>
  void run(const std::string& input, std::optional<std::size_t> k, Check&& check) {
    run([&]() -> std::optional<Counterexample> {
      try {
        auto found = check();
        if (found) {
          found->input = input;
          found->k = k;
        }
        return found;
      } catch (const Error& e) {
        return Counterexample{input, k, "error", e.what()};
      }
    });
  }

  LawResult take() { return std::move(result_); }

 private:
  LawResult result_;
};

std::optional<Counterexample> differ(std::string lhs, std::string rhs) {
  if (lhs == rhs) return std::nullopt;
  return Counterexample{"", std::nullopt, std::move(lhs), std::move(rhs)};
}

}  // namespace

VerifyReport verify_laws(std::size_t max_len) {
  if (max_len > kVerifyMaxLen) {
    throw OutOfRange("verify: max-len " + std::to_string(max_len) + " exceeds " +
                     std::to_string(kVerifyMaxLen));
  }
  VerifyReport report;
  report.max_len = max_len;

  LawRunner eq1("eq1-tips-bridge");
  LawRunner eq2("eq2-up-ch");
  LawRunner eq5("eq5-unT-up-ch");
  LawRunner pascal("pascal-spine");
  LawRunner shape_ch("shape-ch");
  LawRunner shape_up("shape-advance");

  for (std::size_t n = 2; n <= max_len; ++n) {
    const std::string xs = alphabet_prefix(n);
    for (std::size_t k = 0; k <= n; ++k) {
      shape_ch.run(xs, k, [&]() -> std::optional<Counterexample> {
        const auto t = ch(k, xs);
        if (check_shape(t, ShapeIndex{k, n})) return std::nullopt;
        return Counterexample{"", std::nullopt, dump_tree_doc(t), "shape " + to_string(ShapeIndex{k, n})};
      });
      pascal.run(xs, k, [&]() {
        // ch 0 is a lone tip; otherwise the spine is the k-th diagonal.
        std::vector<std::uint64_t> diagonal{1};
        if (k > 0) {
          diagonal.clear();
          for (std::size_t m = n + 1; m-- > k;) diagonal.push_back(binomial(m, k));
        }
        std::vector<std::uint64_t> sizes;
        for (auto s : spine_sizes(ch(k, xs))) sizes.push_back(s);
        return differ(json(sizes).dump(), json(diagonal).dump());
      });
    }
    for (std::size_t k = 1; k < n; ++k) {
      eq2.run(xs, k, [&]() {
        return differ(dump_tree_doc(up(ch(k, xs))), dump_tree_doc(map_tree(
                                                        [](const std::string& s) { return subs(s); },
                                                        ch(k + 1, xs))));
      });
      eq1.run(xs, k, [&]() {
        return differ(json(tips(up(ch(k, xs)))).dump(), json(upgrade_oracle(k, xs)).dump());
      });
      shape_up.run(xs, k, [&]() -> std::optional<Counterexample> {
        const auto lifted = up(ch(k, xs));
        const auto groups = tips(lifted);
        const bool lengths_ok = std::all_of(
            groups.begin(), groups.end(),
            [&](const std::vector<std::string>& group) { return group.size() == k + 1; });
        if (check_shape(lifted, ShapeIndex{k + 1, n}) && lengths_ok) return std::nullopt;
        return Counterexample{"", std::nullopt, dump_tree_doc(lifted),
                              "shape " + to_string(ShapeIndex{k + 1, n}) + " with tips of length " +
                                  std::to_string(k + 1)};
      });
    }
    eq5.run(xs, n - 1, [&]() {
      return differ(json(un_tip(up(ch(n - 1, xs)))).dump(), json(subs(xs)).dump());
    });
  }

  std::vector<LawResult> laws;
  for (LawRunner* r : {&eq1, &eq2, &eq5, &pascal, &shape_ch, &shape_up}) laws.push_back(r->take());

  for (const auto& problem : builtin_problems()) {
    LawRunner theorem("td-bu/" + problem.name);
    for (std::size_t n = 1; n <= max_len; ++n) {
      const std::string xs = alphabet_prefix(n);
      theorem.run(xs, std::nullopt, [&]() {
        return differ(problem.run(Algorithm::TopDown, xs).value.dump(),
                      problem.run(Algorithm::BottomUp, xs).value.dump());
      });
    }
    laws.push_back(theorem.take());
  }

  std::sort(laws.begin(), laws.end(),
            [](const LawResult& a, const LawResult& b) { return a.law < b.law; });
  report.laws = std::move(laws);
  return report;
}

nlohmann::json to_json(const VerifyReport& report) {
  json laws = json::array();
  for (const auto& r : report.laws) {
    json entry{{"law", r.law}, {"cases", r.cases}, {"passed", r.passed()}};
    if (r.counterexample) {
      const auto& c = *r.counterexample;
      entry["counterexample"] = json{{"input", c.input}, {"lhs", c.lhs}, {"rhs", c.rhs}};
      if (c.k) entry["counterexample"]["k"] = *c.k;
    }
    laws.push_back(std::move(entry));
  }
  return json{{"max_len", report.max_len}, {"ok", report.ok()}, {"laws", std::move(laws)}};
}

}  // namespace sublists
