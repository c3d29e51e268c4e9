#include "mvdelta/rational.hpp"

#include <cctype>
#include <optional>

namespace mvdelta {

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw DomainError("malformed rational literal '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw DomainError("rational literal '" + std::string(text) + "' has zero denominator");
  if (negative) n = -n;
  return Rat(n, d);
}

mpz_class Rat::floor() const {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

mpz_class Rat::ceil() const {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

std::string Rat::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return Rat(mpq_class(a.q_ / b.q_));
}

Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

Rat pow2(unsigned k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, k);
  return Rat(p, 1);
}

Rat pow2_inv(unsigned k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, k);
  return Rat(1, p);
}

Q01::Q01(const Rat& value) : v_(value) {
  if (value.sign() < 0 || value > Rat(1))
    throw DomainError("value " + value.to_string() + " lies outside [0,1]");
}

Q01::Q01(long num, long den) : Q01(Rat(mpz_class(num), mpz_class(den))) {}

Q01 Q01::parse(std::string_view text) { return Q01(Rat::parse(text)); }

namespace {

// Simplest rational in a nonempty interval of positive reals; hi may be
// absent (+infinity). Continued-fraction descent on the Stern-Brocot tree.
Rat simplest_positive(const Rat& lo, bool lo_open, const std::optional<Rat>& hi, bool hi_open) {
  const mpz_class fl = lo.floor();
  // Smallest integer admissible on the left.
  mpz_class cand = lo.is_integer() ? (lo_open ? fl + 1 : fl) : fl + 1;
  const Rat c(cand, 1);
  if (!hi || c < *hi || (c == *hi && !hi_open)) return c;
  // No integer inside: the interval sits in (fl, fl+1). Write x = fl + 1/y.
  const Rat base(fl, 1);
  const Rat lo_frac = lo - base;   // >= 0
  const Rat hi_frac = *hi - base;  // in (0, 1]
  const Rat y_lo = Rat(1) / hi_frac;
  std::optional<Rat> y_hi;
  if (!lo_frac.is_zero()) y_hi = Rat(1) / lo_frac;
  const Rat y = simplest_positive(y_lo, hi_open, y_hi, lo_open);
  return base + Rat(1) / y;
}

}  // namespace

Rat simplest_between(const Rat& lo, bool lo_open, const Rat& hi, bool hi_open) {
  if (hi < lo || (lo == hi && (lo_open || hi_open)))
    throw DomainError("simplest_between: empty interval");
  if (lo == hi) return lo;
  const bool zero_above_lo = lo.sign() < 0 || (lo.is_zero() && !lo_open);
  const bool zero_below_hi = hi.sign() > 0 || (hi.is_zero() && !hi_open);
  if (zero_above_lo && zero_below_hi) return Rat(0);
  if (hi.sign() <= 0) return -simplest_positive(-hi, hi_open, -lo, lo_open);
  return simplest_positive(lo, lo_open, hi, hi_open);
}

}  // namespace mvdelta

std::size_t std::hash<mvdelta::Rat>::operator()(const mvdelta::Rat& r) const noexcept {
  return std::hash<std::string>{}(r.to_string());
}
