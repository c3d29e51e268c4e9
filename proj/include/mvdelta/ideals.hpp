#pragma once

// Ideals, maximal ideals and the radical; infinitesimal tests and the
// halving obstruction in Chang's algebra.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mvdelta/finite.hpp"

namespace mvdelta {

/// Sorted element indices of a finite algebra.
using Ideal = std::vector<std::size_t>;

/// Contains 0, is downward closed and is closed under ⊕.
bool is_ideal(const FiniteAlgebra& a, const Ideal& s);

/// The ideal generated by one element: everything below some n·x.
Ideal principal_ideal(const FiniteAlgebra& a, std::size_t x);

/// All ideals, ordered by size and then lexicographically.
std::vector<Ideal> enumerate_ideals(const FiniteAlgebra& a);

/// Proper ideals maximal under inclusion. Empty for the trivial algebra.
std::vector<Ideal> maximal_ideals(const FiniteAlgebra& a);

/// Intersection of the maximal ideals ({0} for the trivial algebra).
Ideal radical_by_ideals(const FiniteAlgebra& a);
/// {x : n·x ≤ ¬x for all n}, with n up to the algebra size.
Ideal radical_by_infinitesimals(const FiniteAlgebra& a);
/// Both characterisations; throws std::logic_error if they disagree.
Ideal radical(const FiniteAlgebra& a);

struct RadicalReport {
  std::string carrier;
  /// Set-builder description, e.g. "{(0,k) : k >= 0}".
  std::string description;
  /// Explicit members when the carrier is finite.
  std::optional<std::vector<Value>> members;
  bool semisimple = false;
};

/// Finite carriers, "chang", "pl" and "unit".
RadicalReport radical_of(const CarrierPtr& carrier);

struct InfinitesimalReport {
  bool infinitesimal = false;
  /// Least n with n·x ≰ ¬x, when x is nonzero and not infinitesimal.
  std::optional<unsigned> failing_n;
  std::string certificate;
};

/// x is infinitesimal when x ≠ 0 and n·x ≤ ¬x for every n. Exact on Chang's
/// algebra (closed form), finite carriers, the unit interval and PL functions.
InfinitesimalReport is_infinitesimal(const Carrier& carrier, const Value& x, unsigned bound);

/// Closed-form membership in Rad of Chang's algebra.
bool chang_in_radical(const ChangElem& x);

/// y with y ⊕ y = x and y ⊙ y = 0 in Chang's algebra, if any.
std::optional<ChangElem> halving_witness(const ChangElem& x);

}  // namespace mvdelta
