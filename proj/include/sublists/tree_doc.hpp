#pragma once

// JSON form of a BinomialTree ("TreeDoc"):
//
//   tip  -> {"tip": <value>}
//   node -> {"node": [<left>, <right>]}
//
// Values go through nlohmann::json's own conversions, so strings stay
// strings, integers stay numbers and lists become arrays. dump_tree_doc
// produces the canonical compact text used by the CLI and golden files.

#include <string>
#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "sublists/errors.hpp"
#include "sublists/tree.hpp"

namespace sublists {

template <class A>
nlohmann::json to_tree_doc(const BinomialTree<A>& t) {
  if (t.is_tip()) return nlohmann::json{{"tip", t.value()}};
  return nlohmann::json{{"node", nlohmann::json::array({to_tree_doc(t.left()), to_tree_doc(t.right())})}};
}

template <class A>
std::string dump_tree_doc(const BinomialTree<A>& t) {
  return to_tree_doc(t).dump();
}

template <class A>
BinomialTree<A> from_tree_doc(const nlohmann::json& doc) {
  if (!doc.is_object() || doc.size() != 1) {
    throw TreeDocError("tree document must be an object with exactly one key: " + doc.dump());
  }
  if (auto it = doc.find("tip"); it != doc.end()) {
    try {
      return BinomialTree<A>::tip(it->template get<A>());
    } catch (const nlohmann::json::exception& e) {
      throw TreeDocError(std::string("bad tip value: ") + e.what());
    }
  }
  if (auto it = doc.find("node"); it != doc.end()) {
    if (!it->is_array() || it->size() != 2) {
      throw TreeDocError("\"node\" must hold an array of two subtrees");
    }
    return BinomialTree<A>::node(from_tree_doc<A>((*it)[0]), from_tree_doc<A>((*it)[1]));
  }
  throw TreeDocError("unknown tree document key in " + doc.dump());
}

template <class A>
BinomialTree<A> parse_tree_doc(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw TreeDocError(std::string("malformed JSON: ") + e.what());
  }
  return from_tree_doc<A>(doc);
}

}  // namespace sublists
