#pragma once

// Exact rationals. Rat is a signed rational in canonical form; Q01 is a Rat
// constrained to the real unit interval and is the scalar MV carrier.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mvdelta {

/// Thrown when a value violates a domain invariant (e.g. a scalar outside [0,1]).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Rat {
 public:
  Rat() = default;
  Rat(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(int value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Rat(const mpz_class& num, const mpz_class& den);
  explicit Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p/q", "p" or "-p/q" (ASCII, no whitespace).
  static Rat parse(std::string_view text);

  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rat abs() const { return Rat(mpq_class(::abs(q_))); }
  mpz_class floor() const;
  mpz_class ceil() const;

  std::string to_string() const;

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_)); }
  friend Rat operator/(const Rat& a, const Rat& b);
  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

 private:
  mpq_class q_;
};

Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

/// 1/2^k.
Rat pow2_inv(unsigned k);
/// 2^k.
Rat pow2(unsigned k);

/// An exact rational in [0,1].
class Q01 {
 public:
  Q01() = default;
  /// Throws DomainError outside [0,1].
  explicit Q01(const Rat& value);
  Q01(long num, long den);

  static Q01 zero() { return Q01(); }
  static Q01 one() { return Q01(Rat(1)); }
  /// Parses the rational literal syntax and rejects values outside [0,1].
  static Q01 parse(std::string_view text);

  const Rat& value() const { return v_; }
  operator const Rat&() const { return v_; }  // NOLINT(google-explicit-constructor)

  std::string to_string() const { return v_.to_string(); }

  friend bool operator==(const Q01& a, const Q01& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Q01& a, const Q01& b) { return a.v_ <=> b.v_; }
  friend std::ostream& operator<<(std::ostream& os, const Q01& q) { return os << q.v_; }

 private:
  Rat v_;
};

/// Picks the rational with least denominator (then least numerator) inside an
/// interval with the given endpoint closedness. Requires a nonempty interval.
Rat simplest_between(const Rat& lo, bool lo_open, const Rat& hi, bool hi_open);

}  // namespace mvdelta

template <>
struct std::hash<mvdelta::Rat> {
  std::size_t operator()(const mvdelta::Rat& r) const noexcept;
};
