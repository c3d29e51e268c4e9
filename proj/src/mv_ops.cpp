#include "mvdelta/mv_ops.hpp"

#include <string>

namespace mvdelta {

DerivedOp parse_derived_op(std::string_view name) {
  if (name == "odot") return DerivedOp::kOdot;
  if (name == "ominus") return DerivedOp::kOminus;
  if (name == "dist") return DerivedOp::kDist;
  if (name == "join") return DerivedOp::kJoin;
  if (name == "meet") return DerivedOp::kMeet;
  throw std::invalid_argument("unknown derived connective '" + std::string(name) + "'");
}

std::string_view to_string(DerivedOp op) {
  switch (op) {
    case DerivedOp::kOdot: return "odot";
    case DerivedOp::kOminus: return "ominus";
    case DerivedOp::kDist: return "dist";
    case DerivedOp::kJoin: return "join";
    case DerivedOp::kMeet: return "meet";
  }
  return "?";
}

Q01 oplus(const Q01& x, const Q01& y) { return Q01(min(x.value() + y.value(), Rat(1))); }

Q01 neg(const Q01& x) { return Q01(Rat(1) - x.value()); }

Q01 odot(const Q01& x, const Q01& y) { return neg(oplus(neg(x), neg(y))); }

Q01 ominus(const Q01& x, const Q01& y) { return odot(x, neg(y)); }

Q01 dist(const Q01& x, const Q01& y) { return oplus(ominus(x, y), ominus(y, x)); }

Q01 join(const Q01& x, const Q01& y) { return oplus(neg(oplus(neg(x), y)), y); }

Q01 meet(const Q01& x, const Q01& y) { return neg(join(neg(x), neg(y))); }

Q01 derived(DerivedOp op, const Q01& x, const Q01& y) {
  switch (op) {
    case DerivedOp::kOdot: return odot(x, y);
    case DerivedOp::kOminus: return ominus(x, y);
    case DerivedOp::kDist: return dist(x, y);
    case DerivedOp::kJoin: return join(x, y);
    case DerivedOp::kMeet: return meet(x, y);
  }
  throw std::logic_error("unreachable");
}

Q01 nfold(unsigned n, const Q01& x) {
  if (n == 0) throw std::invalid_argument("nfold requires n >= 1");
  return Q01(min(Rat(static_cast<long>(n)) * x.value(), Rat(1)));
}

Q01 scale(const Q01& r, const Q01& x) { return Q01(r.value() * x.value()); }

Q01 scale(const Rat& r, const Q01& x) {
  if (r.sign() < 0 || r > Rat(1))
    throw DomainError("scalar " + r.to_string() + " outside [0,1]");
  return scale(Q01(r), x);
}

}  // namespace mvdelta
