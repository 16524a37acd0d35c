#pragma once

// Immediate sublists, k-combinations, and their tree-shaped counterpart ch.
//
// Generation order follows the append-based definitions exactly:
//
//   subs []          = []
//   subs (x:xs)      = map (x:) (subs xs) ++ [xs]
//
//   choose 0 _       = [[]]
//   choose k xs | k == length xs = [xs]
//   choose (1+k) (x:xs) = map (x:) (choose k xs) ++ choose (1+k) xs
//
// ch replaces the final ++ by a node, so the left subtree holds every
// combination that keeps x and the right subtree every one that drops it.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

#include "sublists/errors.hpp"
#include "sublists/tree.hpp"

namespace sublists {

// (k, n): choosing k elements out of n. Determines a tree shape uniquely.
struct ShapeIndex {
  std::size_t k = 0;
  std::size_t n = 0;

  friend auto operator<=>(const ShapeIndex&, const ShapeIndex&) = default;
};

std::string to_string(const ShapeIndex& idx);

namespace detail {

template <class Seq>
Seq tail_of(const Seq& xs) {
  return Seq(std::next(xs.begin()), xs.end());
}

template <class Seq>
Seq cons(const typename Seq::value_type& x, const Seq& xs) {
  Seq out;
  out.reserve(xs.size() + 1);
  out.push_back(x);
  out.insert(out.end(), xs.begin(), xs.end());
  return out;
}

template <class Seq>
void require_k_le_length(std::size_t k, const Seq& xs, const char* who) {
  if (k > xs.size()) {
    throw OutOfRange(std::string(who) + ": cannot choose " + std::to_string(k) +
                     " elements from a list of length " + std::to_string(xs.size()));
  }
}

template <class Seq>
std::vector<Seq> choose_unchecked(std::size_t k, const Seq& xs) {
  if (k == 0) return {Seq{}};
  if (k == xs.size()) return {xs};
  const auto& x = *xs.begin();
  const Seq rest = tail_of(xs);
  std::vector<Seq> out;
  for (const Seq& c : choose_unchecked(k - 1, rest)) out.push_back(cons(x, c));
  for (Seq& c : choose_unchecked(k, rest)) out.push_back(std::move(c));
  return out;
}

template <class Seq>
BinomialTree<Seq> ch_unchecked(std::size_t k, const Seq& xs) {
  if (k == 0) return BinomialTree<Seq>::tip(Seq{});
  if (k == xs.size()) return BinomialTree<Seq>::tip(xs);
  const auto& x = *xs.begin();
  const Seq rest = tail_of(xs);
  auto kept = map_tree([&x](const Seq& c) { return cons(x, c); }, ch_unchecked(k - 1, rest));
  return BinomialTree<Seq>::node(std::move(kept), ch_unchecked(k, rest));
}

}  // namespace detail

// All immediate sublists (one element removed), last element dropped first.
template <class Seq>
std::vector<Seq> subs(const Seq& xs) {
  if (xs.size() == 0) return {};
  const auto& x = *xs.begin();
  const Seq rest = detail::tail_of(xs);
  std::vector<Seq> out;
  out.reserve(xs.size());
  for (const Seq& s : subs(rest)) out.push_back(detail::cons(x, s));
  out.push_back(rest);
  return out;
}

template <class Seq>
std::vector<Seq> choose(std::size_t k, const Seq& xs) {
  detail::require_k_le_length(k, xs, "choose");
  return detail::choose_unchecked(k, xs);
}

template <class Seq>
BinomialTree<Seq> ch(std::size_t k, const Seq& xs) {
  detail::require_k_le_length(k, xs, "ch");
  return detail::ch_unchecked(k, xs);
}

// True iff t can be built with indices (k, n) by the rules
//   tip         : (0, n) for any n, or (m+1, m+1)
//   node(l, r)  : (k+1, n+1) when l is (k, n) and r is (k+1, n)
template <class A>
bool check_shape(const BinomialTree<A>& t, ShapeIndex idx) {
  std::vector<std::pair<const BinomialTree<A>*, ShapeIndex>> pending{{&t, idx}};
  while (!pending.empty()) {
    auto [cur, at] = pending.back();
    pending.pop_back();
    if (cur->is_tip()) {
      if (at.k != 0 && at.k != at.n) return false;
      continue;
    }
    if (at.k == 0 || at.n == 0) return false;
    pending.push_back({&cur->right(), ShapeIndex{at.k, at.n - 1}});
    pending.push_back({&cur->left(), ShapeIndex{at.k - 1, at.n - 1}});
  }
  return true;
}

// Any tree of shape (k, n) has k <= n.
bool bounded_holds(ShapeIndex idx) noexcept;

// Tip counts of t, t.right, t.right.right, ... down to the final tip.
template <class A>
std::vector<std::size_t> spine_sizes(const BinomialTree<A>& t) {
  std::vector<std::size_t> out;
  const BinomialTree<A>* cur = &t;
  while (true) {
    out.push_back(cur->tip_count());
    if (cur->is_tip()) break;
    cur = &cur->right();
  }
  return out;
}

// C(n, k), exact. Throws OutOfRange for k > n and Overflow when the
// result does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace sublists
