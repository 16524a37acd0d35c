#pragma once

// One level of the sublist lattice and the transformation that lifts a
// level to the next one.
//
// A level of shape (k, n) stores one value per k-element sublist of an
// n-element input, arranged as ch k would arrange them. up turns it into a
// tree of shape (k+1, n) whose every tip lists, in subs order, the values of
// the k-element sublists of the corresponding (k+1)-element sublist:
//
//   up (ch k xs) == map_tree(subs, ch (k+1) xs)        for 1 <= k < length xs
//
// up is defined by four overlapping clauses tried top to bottom:
//
//   1. up (N (T p) (T q)) = T [p, q]
//   2. up (N t     (T q)) = T (unT (up t) ++ [q])
//   3. up (N (T p) u    ) = N (map (\q -> [p, q]) u) (up u)
//   4. up (N t     u    ) = N (zip snoc (up t) u) (up u)
//
// Trees that cannot arise from ch are reported as MalformedLevel.

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sublists/combinatorics.hpp"
#include "sublists/errors.hpp"
#include "sublists/tree.hpp"

namespace sublists {

template <class A>
BinomialTree<std::vector<A>> up(const BinomialTree<A>& t) {
  using Group = std::vector<A>;
  using Out = BinomialTree<Group>;
  if (t.is_tip()) {
    throw MalformedLevel(MalformedLevel::Clause::BareTip, "up applied to a tip");
  }
  const BinomialTree<A>& l = t.left();
  const BinomialTree<A>& r = t.right();

  if (l.is_tip() && r.is_tip()) return Out::tip(Group{l.value(), r.value()});

  if (r.is_tip()) {
    Out lifted = up(l);
    if (!lifted.is_tip()) {
      throw MalformedLevel(MalformedLevel::Clause::LeftNotSingular,
                           "up of the left subtree is a node but the right subtree is a tip");
    }
    return Out::tip(snoc(un_tip(lifted), r.value()));
  }

  if (l.is_tip()) {
    const A& p = l.value();
    auto paired = map_tree([&p](const A& q) { return Group{p, q}; }, r);
    return Out::node(std::move(paired), up(r));
  }

  Out lifted = up(l);
  try {
#ifdef SUBLISTS_FAULT_UP_CLAUSE4
    // Deliberately wrong variant used to check that the law suites notice.
    auto merged = zip_tree_with(
        [](const Group& ys, const A& z) {
          Group out{z};
          out.insert(out.end(), ys.begin(), ys.end());
          return out;
        },
        lifted, r);
#else
    auto merged = zip_tree_with([](const Group& ys, const A& z) { return snoc(ys, z); }, lifted, r);
#endif
    return Out::node(std::move(merged), up(r));
  } catch (const ShapeMismatch& e) {
    throw MalformedLevel(MalformedLevel::Clause::ZipShapes,
                         "up of the left subtree and the right subtree diverge at path '" +
                             e.path() + "'");
  }
}

// map g . up: advances a level of solutions by one.
template <class Y, class G>
BinomialTree<Y> step(G&& g, const BinomialTree<Y>& t) {
  return map_tree([&g](const std::vector<Y>& ys) -> Y { return std::invoke(g, ys); }, up(t));
}

// Right-hand side of the list-level specification of a level upgrade:
// map subs (choose (k+1) xs). Requires 1 <= k and k+1 <= length xs. With
// k = 0 every input collapses to [[]], so no upgrade could recover the
// length of xs; that case is rejected.
template <class Seq>
std::vector<std::vector<Seq>> upgrade_oracle(std::size_t k, const Seq& xs) {
  if (k == 0 || k + 1 > xs.size()) {
    throw OutOfRange("upgrade_oracle: need 2 <= k+1 <= length xs, got k = " + std::to_string(k) +
                     ", length " + std::to_string(xs.size()));
  }
  std::vector<std::vector<Seq>> out;
  for (const Seq& c : choose(k + 1, xs)) out.push_back(subs(c));
  return out;
}

// A level together with the shape it claims to have.
template <class Y>
class Level {
 public:
  // Throws MalformedLevel unless tree has shape index.
  Level(BinomialTree<Y> tree, ShapeIndex index) : tree_(std::move(tree)), index_(index) {
    if (!bounded_holds(index_) || !check_shape(tree_, index_)) {
      throw MalformedLevel(MalformedLevel::Clause::WrongIndex,
                           "tree does not have shape " + to_string(index_));
    }
  }

  const BinomialTree<Y>& tree() const noexcept { return tree_; }
  ShapeIndex index() const noexcept { return index_; }

  // Level (k, n) -> level (k+1, n). Needs 1 <= k < n.
  template <class G>
  Level advance(G&& g) const {
    if (index_.k == 0 || index_.k >= index_.n) {
      throw OutOfRange("cannot advance level " + to_string(index_));
    }
    return Level(step(std::forward<G>(g), tree_), ShapeIndex{index_.k + 1, index_.n});
  }

 private:
  BinomialTree<Y> tree_;
  ShapeIndex index_;
};

}  // namespace sublists
