#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gridrig {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (bad graph, unknown id, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Input document does not match its schema. `pointer` is a JSON pointer.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : Error(message + " at '" + pointer + "'"), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

/// Exhaustive scans refuse inputs beyond desk scale.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// Some bar direction lies on a cone boundary of the unit ball.
class IllPositioned : public Error {
 public:
  explicit IllPositioned(std::vector<std::string> edges)
      : Error(describe(edges)), edges_(std::move(edges)) {}
  const std::vector<std::string>& edges() const { return edges_; }

 private:
  static std::string describe(const std::vector<std::string>& edges) {
    std::string text = "framework is not well-positioned; boundary edges:";
    for (const auto& e : edges) text += " " + e;
    return text;
  }
  std::vector<std::string> edges_;
};

/// A search that should always succeed ran out of budget.
class Exhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace gridrig
