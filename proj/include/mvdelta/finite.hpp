#pragma once

// Finite MV-algebras (finite chains and finite products of them) with
// elements indexed 0..size-1 in mixed radix over the flattened chain factors.

#include <cstddef>
#include <string>
#include <vector>

#include "mvdelta/carriers.hpp"

namespace mvdelta {

class FiniteAlgebra {
 public:
  static constexpr std::size_t kMaxSize = std::size_t{1} << 20;

  /// Accepts a chain or a (nested) product of chains; throws CarrierError otherwise.
  explicit FiniteAlgebra(CarrierPtr carrier);
  static bool is_finite(const Carrier& c);

  const CarrierPtr& carrier() const { return carrier_; }
  /// Orders n of the flattened chain factors Ł_n.
  const std::vector<unsigned>& orders() const { return orders_; }
  std::size_t size() const { return size_; }
  bool is_trivial() const { return size_ == 1; }

  std::vector<unsigned> digits(std::size_t index) const;
  std::size_t index(const std::vector<unsigned>& digits) const;
  Value element(std::size_t index) const;
  std::size_t index_of(const Value& x) const;
  std::string format(std::size_t index) const { return carrier_->format(element(index)); }

  std::size_t zero() const { return 0; }
  std::size_t one() const { return size_ - 1; }
  std::size_t oplus(std::size_t a, std::size_t b) const;
  std::size_t neg(std::size_t a) const;
  std::size_t odot(std::size_t a, std::size_t b) const { return neg(oplus(neg(a), neg(b))); }
  std::size_t ominus(std::size_t a, std::size_t b) const { return odot(a, neg(b)); }
  std::size_t dist(std::size_t a, std::size_t b) const { return oplus(ominus(a, b), ominus(b, a)); }
  std::size_t nfold(unsigned n, std::size_t a) const;
  bool leq(std::size_t a, std::size_t b) const;

 private:
  CarrierPtr carrier_;
  std::vector<unsigned> orders_;
  std::vector<std::size_t> stride_;
  std::size_t size_ = 1;
};

}  // namespace mvdelta
