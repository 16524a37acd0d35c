#pragma once

// Tip-valued binary trees and their generic combinators.
//
// A BinomialTree<A> is either a tip carrying one A or a node with two
// subtrees. Trees are immutable; subtrees are held through shared pointers
// so copying a tree and building a node out of existing trees are O(1).
//
// Recursive combinators (map_tree, zip_tree_with) recurse once per level.
// Every tree the library builds from a list of length n has depth <= n, so
// recursion depth is bounded by the input length. Traversals that do not
// build a result (equality, tips, tip_count) use an explicit stack.

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "sublists/errors.hpp"

namespace sublists {

template <class A>
class BinomialTree {
 public:
  using value_type = A;

  static BinomialTree tip(A value) { return BinomialTree(std::move(value)); }

  static BinomialTree node(BinomialTree left, BinomialTree right) {
    return BinomialTree(Fork{std::make_shared<const BinomialTree>(std::move(left)),
                             std::make_shared<const BinomialTree>(std::move(right))});
  }

  bool is_tip() const noexcept { return rep_.index() == 0; }
  bool is_node() const noexcept { return rep_.index() == 1; }

  const A& value() const {
    if (!is_tip()) throw NotATip();
    return std::get<0>(rep_);
  }

  const BinomialTree& left() const { return *fork().left; }
  const BinomialTree& right() const { return *fork().right; }

  std::size_t tip_count() const {
    std::size_t count = 0;
    std::vector<const BinomialTree*> pending{this};
    while (!pending.empty()) {
      const BinomialTree* t = pending.back();
      pending.pop_back();
      if (t->is_tip()) {
        ++count;
      } else {
        pending.push_back(&t->right());
        pending.push_back(&t->left());
      }
    }
    return count;
  }

  friend bool operator==(const BinomialTree& a, const BinomialTree& b) {
    std::vector<std::pair<const BinomialTree*, const BinomialTree*>> pending{{&a, &b}};
    while (!pending.empty()) {
      auto [x, y] = pending.back();
      pending.pop_back();
      if (x == y) continue;  // shared subtree
      if (x->is_tip() != y->is_tip()) return false;
      if (x->is_tip()) {
        if (!(x->value() == y->value())) return false;
      } else {
        pending.emplace_back(&x->right(), &y->right());
        pending.emplace_back(&x->left(), &y->left());
      }
    }
    return true;
  }

 private:
  struct Fork {
    std::shared_ptr<const BinomialTree> left;
    std::shared_ptr<const BinomialTree> right;
  };

  explicit BinomialTree(A value) : rep_(std::in_place_index<0>, std::move(value)) {}
  explicit BinomialTree(Fork fork) : rep_(std::in_place_index<1>, std::move(fork)) {}

  const Fork& fork() const {
    if (!is_node()) throw NotANode();
    return std::get<1>(rep_);
  }

  std::variant<A, Fork> rep_;
};

template <class A>
BinomialTree<std::decay_t<A>> make_tip(A&& value) {
  return BinomialTree<std::decay_t<A>>::tip(std::forward<A>(value));
}

template <class A>
BinomialTree<A> make_node(BinomialTree<A> left, BinomialTree<A> right) {
  return BinomialTree<A>::node(std::move(left), std::move(right));
}

// Applies f to every tip, left to right, keeping the shape.
template <class A, class F>
auto map_tree(F&& f, const BinomialTree<A>& t)
    -> BinomialTree<std::decay_t<std::invoke_result_t<F&, const A&>>> {
  using B = std::decay_t<std::invoke_result_t<F&, const A&>>;
  if (t.is_tip()) return BinomialTree<B>::tip(std::invoke(f, t.value()));
  auto left = map_tree(f, t.left());
  auto right = map_tree(f, t.right());
  return BinomialTree<B>::node(std::move(left), std::move(right));
}

namespace detail {

template <class A, class B, class F>
auto zip_at(F& f, const BinomialTree<A>& t, const BinomialTree<B>& u, std::string& path)
    -> BinomialTree<std::decay_t<std::invoke_result_t<F&, const A&, const B&>>> {
  using C = std::decay_t<std::invoke_result_t<F&, const A&, const B&>>;
  if (t.is_tip() && u.is_tip()) return BinomialTree<C>::tip(std::invoke(f, t.value(), u.value()));
  if (t.is_tip() != u.is_tip()) throw ShapeMismatch(path);
  path.push_back('L');
  auto left = zip_at(f, t.left(), u.left(), path);
  path.back() = 'R';
  auto right = zip_at(f, t.right(), u.right(), path);
  path.pop_back();
  return BinomialTree<C>::node(std::move(left), std::move(right));
}

}  // namespace detail

// Combines two trees of identical shape tip by tip. Throws ShapeMismatch
// carrying the path to the first divergence otherwise.
template <class A, class B, class F>
auto zip_tree_with(F&& f, const BinomialTree<A>& t, const BinomialTree<B>& u) {
  std::string path;
  return detail::zip_at(f, t, u, path);
}

template <class A>
A un_tip(const BinomialTree<A>& t) {
  return t.value();
}

// Left-to-right tip values.
template <class A>
std::vector<A> tips(const BinomialTree<A>& t) {
  std::vector<A> out;
  std::vector<const BinomialTree<A>*> pending{&t};
  while (!pending.empty()) {
    const BinomialTree<A>* cur = pending.back();
    pending.pop_back();
    if (cur->is_tip()) {
      out.push_back(cur->value());
    } else {
      pending.push_back(&cur->right());
      pending.push_back(&cur->left());
    }
  }
  return out;
}

template <class Seq>
typename Seq::value_type extract_singleton(const Seq& xs) {
  if (xs.size() != 1) throw NotSingleton(xs.size());
  return *xs.begin();
}

template <class Seq, class Z>
Seq snoc(Seq ys, Z&& z) {
  ys.push_back(std::forward<Z>(z));
  return ys;
}

// f applied k times to x.
template <class A, class F>
A iter_compose(std::size_t k, F&& f, A x) {
  for (std::size_t i = 0; i < k; ++i) x = std::invoke(f, std::move(x));
  return x;
}

}  // namespace sublists
