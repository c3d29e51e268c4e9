#pragma once

// Continuous piecewise-linear maps [0,1] -> [0,1] with rational breakpoints,
// under pointwise MV operations and the finite dyadic series operation.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mvdelta/rational.hpp"

namespace mvdelta {

struct Breakpoint {
  Rat x;
  Rat y;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// A breakpoint list that violates the PLFunc invariants.
class PLFormatError : public std::invalid_argument {
 public:
  PLFormatError(std::size_t index, const std::string& what)
      : std::invalid_argument("breakpoint " + std::to_string(index) + ": " + what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class PLFunc {
 public:
  /// The zero function.
  PLFunc();

  static PLFunc constant(const Q01& c);
  static PLFunc identity();
  /// Validates (x strictly increasing from 0 to 1, every coordinate in [0,1])
  /// and drops collinear interior breakpoints.
  static PLFunc from_points(std::vector<Breakpoint> points);

  const std::vector<Breakpoint>& points() const { return pts_; }

  Rat operator()(const Rat& x) const;
  Q01 at(const Q01& x) const { return Q01((*this)(x.value())); }

  /// Maximum value and a point where it is attained.
  Breakpoint argmax() const;
  Rat max_value() const { return argmax().y; }
  bool is_zero() const;

  /// JSON-style rendering: [["0","0"],["1/2","1"],["1","1"]].
  std::string to_string() const;

  friend bool operator==(const PLFunc&, const PLFunc&) = default;

 private:
  explicit PLFunc(std::vector<Breakpoint> canonical) : pts_(std::move(canonical)) {}
  friend PLFunc make_canonical(std::vector<Breakpoint> pts);

  std::vector<Breakpoint> pts_;
};

/// Builds a PLFunc from points already known to satisfy the invariants.
PLFunc make_canonical(std::vector<Breakpoint> pts);

enum class PLOp { kOplus, kNeg, kOdot, kOminus, kDist, kJoin, kMeet };

PLOp parse_pl_op(std::string_view name);

/// Pointwise operation; `g` is ignored for kNeg.
PLFunc pl_op(PLOp op, const PLFunc& f, const PLFunc& g);
PLFunc pl_oplus(const PLFunc& f, const PLFunc& g);
PLFunc pl_neg(const PLFunc& f);
PLFunc pl_nfold(unsigned n, const PLFunc& f);

/// Σ prefix_i / 2^i + tail / 2^k, which stays inside [0,1] without truncation.
PLFunc pl_delta(std::span<const PLFunc> prefix, const PLFunc& tail);
/// δ(f, 0, 0, ...) iterated n times.
PLFunc pl_halfn(unsigned n, const PLFunc& f);

/// Pointwise order.
bool pl_leq(const PLFunc& f, const PLFunc& g);

/// sup |f - g|.
Q01 uniform_dist(const PLFunc& f, const PLFunc& g);

/// r·f.
PLFunc pl_scale(const Q01& r, const PLFunc& f);
/// r·f for dyadic r, computed as a series δ(d_1 f, d_2 f, ...; 0) over the
/// binary digits of r. Throws DomainError if r is not dyadic.
PLFunc pl_scale_dyadic(const Q01& r, const PLFunc& f);

/// f ∘ phi.
PLFunc pl_precompose(const PLFunc& f, const PLFunc& phi);

struct ArchimedeanCertificate {
  unsigned n;  // nf is not below ¬f
  Rat at;      // a point where nf(at) > ¬f(at)
};

/// For f != 0 returns n = ceil(1/max f) + 1 together with a verified point
/// where nf exceeds ¬f. Returns nothing for f = 0.
std::optional<ArchimedeanCertificate> pl_archimedean_certificate(const PLFunc& f);

/// Increasing sequence s_1 <= ... <= s_n below target with
/// ||s_i - target|| <= 3/2^(i+2), obtained by shifting target down by
/// 3/2^(i+2) and clamping at 0.
std::vector<PLFunc> increasing_approx(const PLFunc& target, unsigned depth);

/// Thrown when a sequence fails the reconstruction hypotheses.
class IsbellHypothesisError : public std::invalid_argument {
 public:
  IsbellHypothesisError(std::size_t index, Rat norm, const std::string& what)
      : std::invalid_argument(what), index_(index), norm_(std::move(norm)) {}
  /// 1-based index of the first offending term.
  std::size_t index() const { return index_; }
  const Rat& norm() const { return norm_; }

 private:
  std::size_t index_;
  Rat norm_;
};

struct IsbellResult {
  PLFunc value;
  /// Proven bound on the distance from `value` to the limit of the sequence.
  Rat error_bound;
};

/// Truncated series δ(2 s_1, 4 (s_2 ⊖ s_1), ..., 2^n (s_n ⊖ s_{n-1}); tail)
/// with the tail repeating the last increment. Requires s increasing,
/// ||s_1|| <= 1/2 and ||s_i - s_{i-1}|| <= 1/2^i.
IsbellResult isbell_reconstruct(std::span<const PLFunc> s);

PLFunc plfunc_from_json(std::string_view json_text);
std::string plfunc_to_json(const PLFunc& f);

}  // namespace mvdelta
