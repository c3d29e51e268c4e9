#pragma once

// Abstract carrier handle used by the term evaluator and by every generic
// algorithm (good sequences, identity suites, homomorphism checks).

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mvdelta/value.hpp"

namespace mvdelta {

/// The carrier has no series operation (or cannot represent its result).
class DeltaUnsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Carrier {
 public:
  virtual ~Carrier() = default;

  /// Spec string that reproduces this carrier, e.g. "prod(chain:2,chain:3)".
  virtual std::string name() const = 0;

  virtual Value zero() const = 0;
  virtual Value oplus(const Value& x, const Value& y) const = 0;
  virtual Value neg(const Value& x) const = 0;

  /// Throws CarrierError if x is not an element of this carrier.
  virtual void check_member(const Value& x) const = 0;

  virtual bool equal(const Value& x, const Value& y) const { return x == y; }
  /// Default: x ≤ y iff x ⊖ y = 0.
  virtual bool leq(const Value& x, const Value& y) const;

  virtual bool has_delta() const { return false; }
  /// Finite series Σ prefix_i/2^i + tail/2^k.
  virtual Value delta(std::span<const Value> prefix, const Value& tail) const;

  /// Interprets a scalar constant; throws CarrierError when unrepresentable.
  virtual Value from_rational(const Q01& c) const = 0;

  virtual std::string format(const Value& x) const = 0;
  virtual Value parse_element(std::string_view text) const = 0;

  // Derived connectives, all expressed through oplus and neg.
  Value one() const { return neg(zero()); }
  Value odot(const Value& x, const Value& y) const { return neg(oplus(neg(x), neg(y))); }
  Value ominus(const Value& x, const Value& y) const { return odot(x, neg(y)); }
  Value dist(const Value& x, const Value& y) const { return oplus(ominus(x, y), ominus(y, x)); }
  Value join(const Value& x, const Value& y) const { return oplus(neg(oplus(neg(x), y)), y); }
  Value meet(const Value& x, const Value& y) const { return neg(join(neg(x), neg(y))); }
  Value nfold(unsigned n, const Value& x) const;
  Value half(const Value& x) const;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

}  // namespace mvdelta
