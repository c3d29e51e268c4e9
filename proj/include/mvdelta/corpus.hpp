#pragma once

// Named identity suites: the MV laws, the δ-algebra axioms A1–A6 and the
// halving/series identities derived from them, instantiated on eventually
// constant sequences; plus a fixed list of non-theorems.

#include <string>
#include <vector>

#include "mvdelta/term.hpp"

namespace mvdelta {

struct NamedEquation {
  /// Family the instance belongs to, e.g. "A1" or "half-plus-half".
  std::string item;
  /// item plus instance parameters.
  std::string name;
  Equation eq;
  /// True when the equation mentions δ (directly or through halving sugar).
  bool uses_delta = false;
};

/// MV-algebra laws without δ.
std::vector<NamedEquation> mv_laws();
/// A1–A6 on sequence shapes with prefix length 0..3 and tail 0 or a variable.
std::vector<NamedEquation> delta_axioms();
/// Halving and series identities for n = 1..max_n.
std::vector<NamedEquation> halving_identities(unsigned max_n = 4);
/// mv_laws + delta_axioms + halving_identities.
std::vector<NamedEquation> identity_corpus();
/// Twenty equations that fail on the unit interval.
std::vector<NamedEquation> non_theorems();

bool mentions_delta(const Term& t);

}  // namespace mvdelta
