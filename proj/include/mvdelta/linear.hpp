#pragma once

// Affine forms over named rational variables and exact Fourier–Motzkin
// feasibility with witness extraction.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mvdelta/rational.hpp"

namespace mvdelta {

class AffineForm {
 public:
  AffineForm() = default;
  explicit AffineForm(Rat constant) : constant_(std::move(constant)) {}
  static AffineForm variable(const std::string& name);

  /// Nonzero coefficients only.
  const std::map<std::string, Rat>& coeffs() const { return coeffs_; }
  const Rat& constant() const { return constant_; }
  Rat coeff(const std::string& name) const;
  bool is_constant() const { return coeffs_.empty(); }

  Rat evaluate(const std::map<std::string, Rat>& point) const;
  std::string to_string() const;

  friend AffineForm operator+(const AffineForm& a, const AffineForm& b);
  friend AffineForm operator-(const AffineForm& a, const AffineForm& b);
  friend AffineForm operator*(const Rat& k, const AffineForm& a);
  AffineForm operator-() const;
  friend bool operator==(const AffineForm&, const AffineForm&) = default;

 private:
  std::map<std::string, Rat> coeffs_;
  Rat constant_;
};

/// form ≥ 0, or form > 0 when strict.
struct Constraint {
  AffineForm form;
  bool strict = false;

  bool holds(const std::map<std::string, Rat>& point) const;
  std::string to_string() const;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Box constraints 0 ≤ v ≤ 1 for each variable.
std::vector<Constraint> unit_box(const std::vector<std::string>& vars);

/// Decides feasibility of a conjunction over ℚ by Fourier–Motzkin elimination
/// in reverse lexicographic variable order. On success returns a satisfying
/// point, choosing at each back-substitution step the simplest rational in
/// the admissible interval. Every variable in `vars` receives a value; the
/// system must bound each of them (the box does).
std::optional<std::map<std::string, Rat>> fm_solve(std::vector<Constraint> system,
                                                   const std::vector<std::string>& vars);

inline bool fm_feasible(std::vector<Constraint> system, const std::vector<std::string>& vars) {
  return fm_solve(std::move(system), vars).has_value();
}

}  // namespace mvdelta
