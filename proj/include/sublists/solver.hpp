#pragma once

// Top-down and bottom-up evaluation of immediate-sublist recurrences
//
//   h [x] = f x
//   h xs  = g (map h (subs xs))
//
// td is the naive recursion; it recomputes every shared sublist. bu builds
// the lattice level by level with up, touching each sublist once:
//
//   bu n = unT . (map g . up)^n . map ex . ch 1 . map f

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sublists/combinatorics.hpp"
#include "sublists/errors.hpp"
#include "sublists/level.hpp"
#include "sublists/tree.hpp"

namespace sublists {

enum class Algorithm { TopDown, BottomUp };

std::string_view to_string(Algorithm algo) noexcept;

template <class X, class Y>
struct SublistProblem {
  std::string name;
  std::function<Y(const X&)> base;
  // Receives the solutions of the immediate sublists in subs order.
  std::function<Y(const std::vector<Y>&)> combine;
};

struct RunStats {
  Algorithm algorithm = Algorithm::TopDown;
  std::uint64_t f_calls = 0;
  std::uint64_t g_calls = 0;
  // Largest tip count of any level tree built by bu; 0 for td.
  std::uint64_t peak_level_tips = 0;
};

namespace detail {

template <class Seq>
void require_length(std::size_t n, const Seq& xs) {
  if (xs.size() != n + 1) throw LengthMismatch(n + 1, xs.size());
}

template <class X, class Y>
Y td_unchecked(std::size_t n, const SublistProblem<X, Y>& p, const std::vector<X>& xs) {
  if (n == 0) return p.base(extract_singleton(xs));
  std::vector<Y> below;
  below.reserve(xs.size());
  for (const auto& s : subs(xs)) below.push_back(td_unchecked(n - 1, p, s));
  return p.combine(below);
}

template <class Y, class G>
Y td_prime_unchecked(std::size_t n, const G& g, const std::vector<Y>& ys) {
  if (n == 0) return extract_singleton(ys);
  std::vector<Y> below;
  below.reserve(ys.size());
  for (const auto& s : subs(ys)) below.push_back(td_prime_unchecked(n - 1, g, s));
  return g(below);
}

}  // namespace detail

// Top-down reference evaluator; xs must have length n+1.
template <class X, class Y>
Y td(std::size_t n, const SublistProblem<X, Y>& p, const std::vector<X>& xs) {
  detail::require_length(n, xs);
  return detail::td_unchecked(n, p, xs);
}

// td with the base function already applied: td n p xs == td_prime n p.combine (map p.base xs).
template <class Y, class G>
Y td_prime(std::size_t n, const G& g, const std::vector<Y>& ys) {
  detail::require_length(n, ys);
  return detail::td_prime_unchecked(n, g, ys);
}

// Called with (i, tree) after the initial level (i = 0) and after each of the n steps.
template <class Y>
using LevelObserver = std::function<void(std::size_t, const BinomialTree<Y>&)>;

template <class X, class Y>
Y bu(std::size_t n, const SublistProblem<X, Y>& p, const std::vector<X>& xs,
     const LevelObserver<Y>& observe = {}) {
  detail::require_length(n, xs);
  std::vector<Y> ys;
  ys.reserve(xs.size());
  for (const X& x : xs) ys.push_back(p.base(x));
  auto level = map_tree([](const std::vector<Y>& s) { return extract_singleton(s); }, ch(1, ys));
  if (observe) observe(0, level);
  for (std::size_t i = 1; i <= n; ++i) {
    level = step(p.combine, level);
    if (observe) observe(i, level);
  }
  return un_tip(level);
}

template <class X, class Y>
std::pair<Y, RunStats> run_with_stats(Algorithm algo, std::size_t n, const SublistProblem<X, Y>& p,
                                      const std::vector<X>& xs) {
  RunStats stats;
  stats.algorithm = algo;
  SublistProblem<X, Y> counted{
      p.name,
      [&](const X& x) {
        ++stats.f_calls;
        return p.base(x);
      },
      [&](const std::vector<Y>& ys) {
        ++stats.g_calls;
        return p.combine(ys);
      }};
  if (algo == Algorithm::TopDown) {
    Y value = td(n, counted, xs);
    return {std::move(value), stats};
  }
  LevelObserver<Y> peak = [&stats](std::size_t, const BinomialTree<Y>& t) {
    stats.peak_level_tips = std::max<std::uint64_t>(stats.peak_level_tips, t.tip_count());
  };
  Y value = bu(n, counted, xs, peak);
  return {std::move(value), stats};
}

// h xs = td (length xs - 1) xs, or its bottom-up equivalent.
template <class X, class Y>
Y solve(const SublistProblem<X, Y>& p, const std::vector<X>& xs, Algorithm algo) {
  if (xs.empty()) throw EmptyInput();
  const std::size_t n = xs.size() - 1;
  return algo == Algorithm::TopDown ? td(n, p, xs) : bu(n, p, xs);
}

}  // namespace sublists
