#pragma once

// Decision procedure for MV/finite-δ equations and inequations: terms are
// compiled to guarded affine pieces over [0,1]^n, and every pair of pieces is
// checked for a point where the inequality fails.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "mvdelta/linear.hpp"
#include "mvdelta/term.hpp"

namespace mvdelta {

inline constexpr std::size_t kDefaultPieceBudget = 65536;

struct Piece {
  std::vector<Constraint> guard;
  AffineForm value;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t required, std::size_t budget)
      : std::runtime_error("piece budget exceeded: needed more than " + std::to_string(budget) + " (reached " +
                           std::to_string(required) + ")"),
        required_(required),
        budget_(budget) {}
  std::size_t required() const { return required_; }
  std::size_t budget() const { return budget_; }

 private:
  std::size_t required_;
  std::size_t budget_;
};

/// Pieces covering [0,1]^n on which the core term is affine. Pieces whose
/// guard region has empty interior are discarded. Throws BudgetExceeded.
std::vector<Piece> compile(const Term& core, std::size_t budget = kDefaultPieceBudget);

struct Valid {};

struct Counterexample {
  std::map<std::string, Q01> assign;
  Q01 lhs;
  Q01 rhs;
};

struct LimitExceeded {
  std::size_t required;
  std::size_t budget;
};

using Verdict = std::variant<Valid, Counterexample, LimitExceeded>;

/// lhs ≤ rhs on every MV-algebra (δ-terms: on the unit interval with its series).
Verdict decide_leq(const Term& lhs, const Term& rhs, std::size_t budget = kDefaultPieceBudget);
/// Decided as lhs ≤ rhs followed by rhs ≤ lhs.
Verdict decide_eq(const Term& lhs, const Term& rhs, std::size_t budget = kDefaultPieceBudget);
Verdict decide(const Equation& eq, std::size_t budget = kDefaultPieceBudget);

/// Whether the relation holds between two unit-interval values.
bool relation_holds(Relation rel, const Q01& lhs, const Q01& rhs);

/// Evaluates both sides at seeded uniform points k/2^depth and returns the
/// first violation found.
std::optional<Counterexample> sample_falsify(const Equation& eq, std::size_t trials, std::uint64_t seed,
                                             unsigned depth = 8);

/// Evaluates both sides on the unit interval at the given point.
Counterexample replay(const Equation& eq, const std::map<std::string, Q01>& assign);

std::string format_assignment(const std::map<std::string, Q01>& assign);

}  // namespace mvdelta
