#pragma once

// Good sequences over an MV-algebra, their cancellative monoid, the
// Grothendieck group Ξ(A) of formal differences, and desk-scale checks that
// Γ(Ξ(A)) recovers A.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvdelta/finite.hpp"

namespace mvdelta {

struct GoodnessReport {
  bool good = true;
  /// 0-based i with entries[i] ⊕ entries[i+1] ≠ entries[i].
  std::optional<std::size_t> failing_index;
};

GoodnessReport is_good(const Carrier& carrier, std::span<const Value> entries);

/// An eventually zero sequence a with a_i ⊕ a_{i+1} = a_i, stored without
/// trailing zeros.
class GoodSeq {
 public:
  /// Throws std::invalid_argument if the entries are not good.
  GoodSeq(CarrierPtr carrier, std::vector<Value> entries);
  static GoodSeq zero(CarrierPtr carrier) { return GoodSeq(std::move(carrier), {}); }
  /// The sequence (1).
  static GoodSeq unit(CarrierPtr carrier);

  const CarrierPtr& carrier() const { return carrier_; }
  const std::vector<Value>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }
  /// 0-based entry, zero past the end.
  Value at(std::size_t i) const { return i < entries_.size() ? entries_[i] : carrier_->zero(); }
  std::string to_string() const;

  friend bool operator==(const GoodSeq& a, const GoodSeq& b);

 private:
  CarrierPtr carrier_;
  std::vector<Value> entries_;
};

GoodSeq gs_add(const GoodSeq& a, const GoodSeq& b);

enum class GsOrder { kLess, kEqual, kGreater, kIncomparable };

/// Componentwise comparison.
GsOrder gs_order(const GoodSeq& a, const GoodSeq& b);
bool gs_leq(const GoodSeq& a, const GoodSeq& b);
GoodSeq gs_join(const GoodSeq& a, const GoodSeq& b);
GoodSeq gs_meet(const GoodSeq& a, const GoodSeq& b);

/// Formal difference pos − neg.
struct XiElem {
  GoodSeq pos;
  GoodSeq neg;

  std::string to_string() const;
};

XiElem xi_zero(const CarrierPtr& carrier);
XiElem xi_unit(const CarrierPtr& carrier);
/// The embedding a ↦ ((a), ()).
XiElem xi_embed(const CarrierPtr& carrier, const Value& a);
XiElem xi_add(const XiElem& x, const XiElem& y);
XiElem xi_negate(const XiElem& x);
/// Cross-sum test: (a,b) = (c,d) iff a + d = c + b.
bool xi_equal(const XiElem& x, const XiElem& y);
/// (a,b) ≤ (c,d) iff a + d ≤ c + b.
bool xi_leq(const XiElem& x, const XiElem& y);
/// ((a+d) ∨ (c+b), b+d).
XiElem xi_join(const XiElem& x, const XiElem& y);
XiElem xi_meet(const XiElem& x, const XiElem& y);

struct GammaXiReport {
  std::size_t algebra_size = 0;
  /// Number of distinct Ξ(A) elements between 0 and the unit.
  std::size_t interval_size = 0;
  bool bijective = false;
  bool preserves_oplus = false;
  bool preserves_neg = false;
  /// Formatted a for each interval element, in algebra order.
  std::vector<std::string> elements;

  bool ok() const { return bijective && preserves_oplus && preserves_neg; }
};

/// Enumerates formal differences of good sequences of length ≤ 2, keeps those
/// in [0, unit], and checks that a ↦ ((a), ()) is a bijection onto them
/// preserving ⊕ (as truncated sum) and ¬ (as unit minus).
GammaXiReport gamma_of_xi(const FiniteAlgebra& a);

/// All good sequences over a finite algebra with at most max_length entries.
std::vector<GoodSeq> good_sequences(const FiniteAlgebra& a, std::size_t max_length);

struct ChainIsoReport {
  unsigned n = 0;
  unsigned bound = 0;
  /// Good sequences over Ł_n with entry sum at most `bound`.
  std::size_t count = 0;
  bool injective = false;
  bool surjective = false;
  bool additive = false;
  bool order_preserving = false;
  bool unit_to_n = false;

  bool ok() const { return injective && surjective && additive && order_preserving && unit_to_n; }
};

/// Good sequences over Ł_n with entries summing to at most `bound`; the map
/// taking a sequence to n times its entry sum must be a monoid and order
/// isomorphism onto {0, ..., bound·n} sending (1) to n.
ChainIsoReport xi_chain_iso(unsigned n, unsigned bound);

}  // namespace mvdelta
