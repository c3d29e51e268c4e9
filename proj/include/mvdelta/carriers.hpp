#pragma once

// Concrete carriers: the standard interval, finite Łukasiewicz chains,
// finite direct products, Chang's algebra, and the PL function algebra.

#include <string_view>
#include <vector>

#include "mvdelta/carrier.hpp"

namespace mvdelta {

/// [0,1] with min(x+y,1), 1-x and the series operation.
class UnitInterval final : public Carrier {
 public:
  std::string name() const override { return "unit"; }
  Value zero() const override { return Q01(); }
  Value oplus(const Value& x, const Value& y) const override;
  Value neg(const Value& x) const override;
  void check_member(const Value& x) const override;
  bool leq(const Value& x, const Value& y) const override;
  bool has_delta() const override { return true; }
  Value delta(std::span<const Value> prefix, const Value& tail) const override;
  Value from_rational(const Q01& c) const override { return c; }
  std::string format(const Value& x) const override;
  Value parse_element(std::string_view text) const override;
};

/// Ł_n = {0, 1/n, ..., 1}; elements are stored as Q01 values.
class FiniteChain final : public Carrier {
 public:
  explicit FiniteChain(unsigned n);
  unsigned order() const { return n_; }

  std::string name() const override { return "chain:" + std::to_string(n_); }
  Value zero() const override { return Q01(); }
  Value oplus(const Value& x, const Value& y) const override;
  Value neg(const Value& x) const override;
  void check_member(const Value& x) const override;
  bool leq(const Value& x, const Value& y) const override;
  Value from_rational(const Q01& c) const override;
  std::string format(const Value& x) const override;
  Value parse_element(std::string_view text) const override;

  /// Index k of the element k/n.
  unsigned index_of(const Value& x) const;
  Value element(unsigned k) const;

 private:
  unsigned n_;
};

/// Componentwise operations on tuples. The empty product is the trivial
/// algebra, whose single element is both 0 and 1.
class ProductCarrier final : public Carrier {
 public:
  explicit ProductCarrier(std::vector<CarrierPtr> factors);
  const std::vector<CarrierPtr>& factors() const { return factors_; }

  std::string name() const override;
  Value zero() const override;
  Value oplus(const Value& x, const Value& y) const override;
  Value neg(const Value& x) const override;
  void check_member(const Value& x) const override;
  bool equal(const Value& x, const Value& y) const override;
  bool leq(const Value& x, const Value& y) const override;
  bool has_delta() const override;
  Value delta(std::span<const Value> prefix, const Value& tail) const override;
  Value from_rational(const Q01& c) const override;
  std::string format(const Value& x) const override;
  Value parse_element(std::string_view text) const override;

 private:
  const Tuple& components(const Value& x) const;
  std::vector<CarrierPtr> factors_;
};

ChangElem chang_oplus(const ChangElem& x, const ChangElem& y);
ChangElem chang_neg(const ChangElem& x);
ChangElem chang_odot(const ChangElem& x, const ChangElem& y);
/// Membership in the unit interval [(0,0), (1,0)].
bool is_chang_element(const ChangElem& x);

/// Γ(Z ×lex Z, (1,0)).
class ChangCarrier final : public Carrier {
 public:
  std::string name() const override { return "chang"; }
  Value zero() const override { return ChangElem{}; }
  Value oplus(const Value& x, const Value& y) const override;
  Value neg(const Value& x) const override;
  void check_member(const Value& x) const override;
  bool leq(const Value& x, const Value& y) const override;
  Value from_rational(const Q01& c) const override;
  std::string format(const Value& x) const override;
  Value parse_element(std::string_view text) const override;
};

/// Continuous PL functions on [0,1] with pointwise operations and series.
class PLCarrier final : public Carrier {
 public:
  std::string name() const override { return "pl"; }
  Value zero() const override { return PLFunc(); }
  Value oplus(const Value& x, const Value& y) const override;
  Value neg(const Value& x) const override;
  void check_member(const Value& x) const override;
  bool leq(const Value& x, const Value& y) const override;
  bool has_delta() const override { return true; }
  Value delta(std::span<const Value> prefix, const Value& tail) const override;
  Value from_rational(const Q01& c) const override { return PLFunc::constant(c); }
  std::string format(const Value& x) const override;
  /// Accepts a rational constant or an inline JSON breakpoint list.
  Value parse_element(std::string_view text) const override;
};

/// Parses "unit", "chain:n", "chang", "pl" and "prod(spec,...)".
CarrierPtr parse_carrier_spec(std::string_view spec);

/// Splits on commas at bracket depth zero.
std::vector<std::string> split_top_level(std::string_view text, char sep = ',');

}  // namespace mvdelta
