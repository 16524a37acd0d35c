#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sublists {

// Base of every recoverable failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two trees handed to zip_tree_with differ in shape. path() is the sequence
// of 'L'/'R' turns from the root to the first position where they diverge
// (empty when the roots already disagree).
class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(std::string path)
      : Error("shape mismatch at path '" + path + "'"), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class NotATip : public Error {
 public:
  NotATip() : Error("expected a tip, found a node") {}
};

class NotANode : public Error {
 public:
  NotANode() : Error("expected a node, found a tip") {}
};

class NotSingleton : public Error {
 public:
  explicit NotSingleton(std::size_t length)
      : Error("expected a singleton list, got length " + std::to_string(length)),
        length_(length) {}

  std::size_t length() const noexcept { return length_; }

 private:
  std::size_t length_;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t expected, std::size_t actual)
      : Error("expected input of length " + std::to_string(expected) + ", got " +
              std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

class EmptyInput : public Error {
 public:
  EmptyInput() : Error("input must be non-empty") {}
};

// Raised by up() on a tree that no ch-generated level could have produced.
// Each case corresponds to one of the impossible patterns a shape-indexed
// version of up rules out statically.
class MalformedLevel : public Error {
 public:
  enum class Clause {
    BareTip,         // no clause matches a lone tip (k = 0 or k = n)
    LeftNotSingular, // clause 2: up of the left subtree did not yield a tip
    ZipShapes,       // clause 4: up of the left subtree and the right subtree differ in shape
    WrongIndex,      // a level whose tree does not match its claimed (k, n)
  };

  MalformedLevel(Clause clause, std::string detail)
      : Error(std::string("malformed level (") + std::string(name(clause)) + "): " + detail),
        clause_(clause) {}

  Clause clause() const noexcept { return clause_; }

  static std::string_view name(Clause clause) noexcept {
    switch (clause) {
      case Clause::BareTip:
        return "bare-tip";
      case Clause::LeftNotSingular:
        return "clause-2-unT";
      case Clause::ZipShapes:
        return "clause-4-zip";
      case Clause::WrongIndex:
        return "wrong-index";
    }
    return "unknown";
  }

 private:
  Clause clause_;
};

class TreeDocError : public Error {
 public:
  using Error::Error;
};

}  // namespace sublists
