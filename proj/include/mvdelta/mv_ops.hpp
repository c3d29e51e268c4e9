#pragma once

// The standard MV-algebra on [0,1]: truncated addition, negation and the
// connectives derived from them.

#include <string_view>

#include "mvdelta/rational.hpp"

namespace mvdelta {

enum class DerivedOp { kOdot, kOminus, kDist, kJoin, kMeet };

DerivedOp parse_derived_op(std::string_view name);
std::string_view to_string(DerivedOp op);

/// min(x + y, 1)
Q01 oplus(const Q01& x, const Q01& y);
/// 1 - x
Q01 neg(const Q01& x);

// Each derived connective is expressed through oplus and neg only.
Q01 odot(const Q01& x, const Q01& y);
Q01 ominus(const Q01& x, const Q01& y);
Q01 dist(const Q01& x, const Q01& y);
Q01 join(const Q01& x, const Q01& y);
Q01 meet(const Q01& x, const Q01& y);
Q01 derived(DerivedOp op, const Q01& x, const Q01& y);

/// x ⊕ ... ⊕ x (n copies). n >= 1.
Q01 nfold(unsigned n, const Q01& x);

/// Exact product r·x; never leaves [0,1].
Q01 scale(const Q01& r, const Q01& x);
/// Scaling by an arbitrary rational is rejected unless r lies in [0,1].
Q01 scale(const Rat& r, const Q01& x);

}  // namespace mvdelta
