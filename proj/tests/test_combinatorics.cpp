#include <doctest.h>

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "sublists/combinatorics.hpp"
#include "support/generators.hpp"

using namespace sublists;
using sublists::testing::combinations_by_mask;
using sublists::testing::pascal;
using sublists::testing::sublists_by_removal;

namespace {

using Strings = std::vector<std::string>;

bool is_subsequence(const std::string& sub, const std::string& of) {
  return std::includes(of.begin(), of.end(), sub.begin(), sub.end());  // of is sorted: alphabet prefix
}

}  // namespace

TEST_CASE("subs") {
  CHECK(subs(std::string("abcde")) == Strings{"abcd", "abce", "abde", "acde", "bcde"});
  CHECK(subs(std::string("ab")) == Strings{"a", "b"});
  CHECK(subs(std::string()).empty());
  CHECK(subs(std::string("z")) == Strings{""});
  for (std::size_t n = 1; n <= 10; ++n) {
    const std::string xs = std::string("abcdefghij").substr(0, n);
    CHECK(subs(xs) == sublists_by_removal(xs));
    CHECK(subs(xs) == choose(n - 1, xs));
  }
}

TEST_CASE("choose") {
  CHECK(choose(3, std::string("abcde")) ==
        Strings{"abc", "abd", "abe", "acd", "ace", "ade", "bcd", "bce", "bde", "cde"});
  CHECK(choose(0, std::string("xyz")) == Strings{""});
  CHECK(choose(0, std::string()) == Strings{""});
  CHECK_THROWS_AS(choose(4, std::string("abc")), OutOfRange);
}

TEST_CASE("choose agrees with bitmask enumeration and its invariants") {
  const std::string alphabet = "abcdefghij";
  for (std::size_t n = 0; n <= 10; ++n) {
    const std::string xs = alphabet.substr(0, n);
    for (std::size_t k = 0; k <= n; ++k) {
      const auto combos = choose(k, xs);
      CHECK(combos == combinations_by_mask(k, xs));
      CHECK(combos.size() == binomial(n, k));
      for (const auto& c : combos) {
        CHECK(c.size() == k);
        CHECK(is_subsequence(c, xs));
      }
    }
  }
}

TEST_CASE("ch") {
  using T = BinomialTree<std::string>;
  CHECK(ch(1, std::string("yz")) == T::node(T::tip("y"), T::tip("z")));
  CHECK(ch(2, std::string("ab")) == T::tip("ab"));
  CHECK(ch(0, std::string("abc")) == T::tip(""));
  CHECK_THROWS_AS(ch(4, std::string("abc")), OutOfRange);

  // Left subtree holds the combinations that keep the head.
  const auto t = ch(2, std::string("abcde"));
  for (const auto& s : tips(t.left())) CHECK(s.front() == 'a');
  for (const auto& s : tips(t.right())) CHECK(s.find('a') == std::string::npos);
}

TEST_CASE("ch tips, shape, and spine for every (k, n) with n <= 10") {
  const std::string alphabet = "abcdefghij";
  for (std::size_t n = 0; n <= 10; ++n) {
    const std::string xs = alphabet.substr(0, n);
    for (std::size_t k = 0; k <= n; ++k) {
      const auto t = ch(k, xs);
      CHECK(tips(t) == choose(k, xs));
      CHECK(check_shape(t, ShapeIndex{k, n}));

      // ch 0 is a lone tip; for k >= 1 the spine walks down the k-th diagonal.
      std::vector<std::size_t> diagonal{1};
      if (k > 0) {
        diagonal.clear();
        for (std::size_t m = n; m >= k && m <= n; --m) diagonal.push_back(pascal(m, k));
      }
      CHECK(spine_sizes(t) == diagonal);
    }
  }
}

TEST_CASE("check_shape") {
  using T = BinomialTree<char>;
  CHECK(check_shape(ch(2, std::string("abcde")), ShapeIndex{2, 5}));
  CHECK(check_shape(T::tip('x'), ShapeIndex{0, 7}));
  CHECK(check_shape(T::tip('x'), ShapeIndex{3, 3}));
  CHECK_FALSE(check_shape(T::tip('x'), ShapeIndex{2, 3}));
  CHECK_FALSE(check_shape(T::node(T::tip('x'), T::tip('y')), ShapeIndex{2, 3}));
  CHECK_FALSE(check_shape(T::node(T::tip('x'), T::tip('y')), ShapeIndex{0, 3}));
  CHECK_FALSE(check_shape(ch(2, std::string("abcde")), ShapeIndex{2, 6}));
  CHECK_FALSE(check_shape(ch(2, std::string("abcde")), ShapeIndex{3, 5}));
}

TEST_CASE("check_shape implies bounded") {
  // Every tree of depth <= 4 over a single value, against every index up to 6.
  std::vector<BinomialTree<int>> trees{BinomialTree<int>::tip(0)};
  for (int depth = 1; depth <= 3; ++depth) {
    std::vector<BinomialTree<int>> next = trees;
    for (const auto& l : trees)
      for (const auto& r : trees) next.push_back(BinomialTree<int>::node(l, r));
    trees = std::move(next);
  }
  std::size_t matched = 0;
  for (const auto& t : trees) {
    for (std::size_t k = 0; k <= 6; ++k) {
      for (std::size_t n = 0; n <= 6; ++n) {
        if (check_shape(t, ShapeIndex{k, n})) {
          ++matched;
          CHECK(bounded_holds(ShapeIndex{k, n}));
        }
      }
    }
  }
  CHECK(matched > 0);
}

TEST_CASE("bounded_holds") {
  CHECK(bounded_holds(ShapeIndex{0, 0}));
  CHECK(bounded_holds(ShapeIndex{3, 5}));
  CHECK_FALSE(bounded_holds(ShapeIndex{6, 5}));
}

TEST_CASE("spine_sizes") {
  CHECK(spine_sizes(ch(2, std::string("abcde"))) == std::vector<std::size_t>{10, 6, 3, 1});
  CHECK(spine_sizes(ch(3, std::string("abcde"))) == std::vector<std::size_t>{10, 4, 1});
  CHECK(spine_sizes(BinomialTree<char>::tip('x')) == std::vector<std::size_t>{1});
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(4, 3) == 4);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(3, 4), OutOfRange);
  for (std::size_t n = 0; n <= 60; ++n)
    for (std::size_t k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal(n, k));
  CHECK(binomial(67, 33) == 14226520737620288370ULL);
  CHECK_THROWS_AS(binomial(68, 34), Overflow);
  CHECK(binomial(std::numeric_limits<std::uint64_t>::max(), 1) ==
        std::numeric_limits<std::uint64_t>::max());
}
