#pragma once

// Runtime element representation shared by every carrier.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mvdelta/plfunc.hpp"
#include "mvdelta/rational.hpp"

namespace mvdelta {

/// Element (level, offset) of the unit interval of Z ×lex Z with unit (1,0).
struct ChangElem {
  int level = 0;
  std::int64_t offset = 0;

  friend bool operator==(const ChangElem&, const ChangElem&) = default;
  friend auto operator<=>(const ChangElem&, const ChangElem&) = default;  // lexicographic

  std::string to_string() const;
  /// Parses "(level,offset)".
  static ChangElem parse(std::string_view text);
};

/// Raised when an element is used with a carrier it does not belong to.
class CarrierError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Value;
using Tuple = std::vector<Value>;

class Value {
 public:
  using Variant = std::variant<Q01, ChangElem, PLFunc, Tuple>;

  Value() : v_(Q01()) {}
  Value(Q01 q) : v_(std::move(q)) {}         // NOLINT(google-explicit-constructor)
  Value(ChangElem c) : v_(c) {}               // NOLINT(google-explicit-constructor)
  Value(PLFunc f) : v_(std::move(f)) {}       // NOLINT(google-explicit-constructor)
  Value(Tuple t) : v_(std::move(t)) {}        // NOLINT(google-explicit-constructor)

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(v_);
  }

  template <class T>
  const T& as() const {
    if (const T* p = std::get_if<T>(&v_)) return *p;
    throw CarrierError("element has the wrong kind for this carrier");
  }

  const Variant& variant() const { return v_; }

  friend bool operator==(const Value& a, const Value& b) { return a.v_ == b.v_; }

 private:
  Variant v_;
};

}  // namespace mvdelta
