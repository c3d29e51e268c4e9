#include "mvdelta/decide.hpp"

#include <algorithm>
#include <random>

#include "mvdelta/carriers.hpp"

namespace mvdelta {

namespace {

std::vector<std::string> sorted_vars(const std::set<std::string>& vs) { return {vs.begin(), vs.end()}; }

void append_unique(std::vector<Constraint>& guard, const Constraint& c) {
  if (std::find(guard.begin(), guard.end(), c) == guard.end()) guard.push_back(c);
}

std::vector<Constraint> merge(const std::vector<Constraint>& a, const std::vector<Constraint>& b) {
  std::vector<Constraint> out = a;
  for (const auto& c : b) append_unique(out, c);
  return out;
}

bool has_interior(const std::vector<Constraint>& guard, const std::vector<std::string>& vars) {
  std::vector<Constraint> open;
  open.reserve(guard.size());
  for (const auto& c : guard) open.push_back({c.form, true});
  for (const auto& v : vars) {
    open.push_back({AffineForm::variable(v), true});
    open.push_back({AffineForm(Rat(1)) - AffineForm::variable(v), true});
  }
  return fm_feasible(std::move(open), vars);
}

class Compiler {
 public:
  Compiler(std::vector<std::string> vars, std::size_t budget) : vars_(std::move(vars)), budget_(budget) {}

  std::vector<Piece> run(const Term& t) {
    switch (t.kind()) {
      case TermKind::kVar: return {Piece{{}, AffineForm::variable(t.name())}};
      case TermKind::kConst: return {Piece{{}, AffineForm(t.value().value())}};
      case TermKind::kNeg: {
        auto pieces = run(t.children()[0]);
        for (auto& p : pieces) p.value = AffineForm(Rat(1)) - p.value;
        return pieces;
      }
      case TermKind::kOplus: return oplus(run(t.children()[0]), run(t.children()[1]));
      case TermKind::kDelta: return delta(t);
      default: throw std::invalid_argument("compile expects a core term; call expand first");
    }
  }

 private:
  void push(std::vector<Piece>& out, Piece p, bool check) {
    if (check && !has_interior(p.guard, vars_)) return;
    out.push_back(std::move(p));
    if (out.size() > budget_) throw BudgetExceeded(out.size(), budget_);
  }

  std::vector<Piece> oplus(const std::vector<Piece>& left, const std::vector<Piece>& right) {
    std::vector<Piece> out;
    for (const auto& l : left) {
      for (const auto& r : right) {
        const std::vector<Constraint> g = merge(l.guard, r.guard);
        const bool combined = !l.guard.empty() && !r.guard.empty();
        const AffineForm sum = l.value + r.value;
        if (sum.is_constant()) {
          push(out, Piece{g, sum.constant() <= Rat(1) ? sum : AffineForm(Rat(1))}, combined);
          continue;
        }
        std::vector<Constraint> below = g;
        append_unique(below, {AffineForm(Rat(1)) - sum, false});
        push(out, Piece{std::move(below), sum}, true);
        std::vector<Constraint> above = g;
        append_unique(above, {sum - AffineForm(Rat(1)), false});
        push(out, Piece{std::move(above), AffineForm(Rat(1))}, true);
      }
    }
    return out;
  }

  std::vector<Piece> delta(const Term& t) {
    const std::size_t k = t.delta_prefix_size();
    std::vector<Piece> acc{Piece{{}, AffineForm()}};
    for (std::size_t i = 0; i <= k; ++i) {
      const Rat weight = pow2_inv(static_cast<unsigned>(i < k ? i + 1 : k));
      const std::vector<Piece> child = run(t.children()[i]);
      std::vector<Piece> next;
      for (const auto& a : acc) {
        for (const auto& c : child) {
          const bool combined = !a.guard.empty() && !c.guard.empty();
          push(next, Piece{merge(a.guard, c.guard), a.value + weight * c.value}, combined);
        }
      }
      acc = std::move(next);
    }
    return acc;
  }

  std::vector<std::string> vars_;
  std::size_t budget_;
};

// First point (in piece enumeration order) where lhs > rhs.
std::variant<std::monostate, std::map<std::string, Rat>, LimitExceeded> find_violation(
    const std::vector<Piece>& lhs, const std::vector<Piece>& rhs, const std::vector<std::string>& vars,
    std::size_t budget) {
  const std::size_t pairs = lhs.size() * rhs.size();
  if (pairs > budget) return LimitExceeded{pairs, budget};
  for (const auto& l : lhs) {
    for (const auto& r : rhs) {
      const AffineForm diff = l.value - r.value;
      if (diff.is_constant() && diff.constant().sign() <= 0) continue;
      std::vector<Constraint> system = merge(l.guard, r.guard);
      system.push_back({diff, true});
      if (auto point = fm_solve(std::move(system), vars)) return *point;
    }
  }
  return std::monostate{};
}

Verdict check(const Equation& eq, std::size_t budget) {
  std::set<std::string> vs = free_vars(eq.lhs);
  for (const auto& v : free_vars(eq.rhs)) vs.insert(v);
  const std::vector<std::string> vars = sorted_vars(vs);

  std::vector<Piece> lp;
  std::vector<Piece> rp;
  try {
    Compiler c(vars, budget);
    lp = c.run(expand(eq.lhs));
    rp = c.run(expand(eq.rhs));
  } catch (const BudgetExceeded& e) {
    return LimitExceeded{e.required(), e.budget()};
  }

  const auto to_verdict = [&](std::map<std::string, Rat> point) -> Verdict {
    std::map<std::string, Q01> assign;
    for (auto& [v, x] : point) assign.emplace(v, Q01(x));
    Counterexample cx = replay(eq, assign);
    if (relation_holds(eq.rel, cx.lhs, cx.rhs))
      throw std::logic_error("decision witness does not replay: " + format_assignment(assign));
    return cx;
  };

  auto first = find_violation(lp, rp, vars, budget);
  if (auto* lim = std::get_if<LimitExceeded>(&first)) return *lim;
  if (auto* pt = std::get_if<std::map<std::string, Rat>>(&first)) return to_verdict(std::move(*pt));
  if (eq.rel == Relation::kLeq) return Valid{};

  auto second = find_violation(rp, lp, vars, budget);
  if (auto* lim = std::get_if<LimitExceeded>(&second)) return *lim;
  if (auto* pt = std::get_if<std::map<std::string, Rat>>(&second)) return to_verdict(std::move(*pt));
  return Valid{};
}

}  // namespace

std::vector<Piece> compile(const Term& core, std::size_t budget) {
  if (!core.is_core()) throw std::invalid_argument("compile expects a core term; call expand first");
  return Compiler(sorted_vars(free_vars(core)), budget).run(core);
}

Verdict decide_leq(const Term& lhs, const Term& rhs, std::size_t budget) {
  return check(Equation{lhs, Relation::kLeq, rhs}, budget);
}

Verdict decide_eq(const Term& lhs, const Term& rhs, std::size_t budget) {
  return check(Equation{lhs, Relation::kEq, rhs}, budget);
}

Verdict decide(const Equation& eq, std::size_t budget) { return check(eq, budget); }

bool relation_holds(Relation rel, const Q01& lhs, const Q01& rhs) {
  return rel == Relation::kEq ? lhs == rhs : lhs <= rhs;
}

Counterexample replay(const Equation& eq, const std::map<std::string, Q01>& assign) {
  static const UnitInterval unit;
  Assignment env;
  for (const auto& [v, q] : assign) env.emplace(v, q);
  return Counterexample{assign, evaluate(eq.lhs, env, unit).as<Q01>(), evaluate(eq.rhs, env, unit).as<Q01>()};
}

std::optional<Counterexample> sample_falsify(const Equation& eq, std::size_t trials, std::uint64_t seed,
                                             unsigned depth) {
  if (trials == 0) throw std::invalid_argument("sample_falsify requires at least one trial");
  if (depth > 62) throw std::invalid_argument("dyadic depth must be at most 62");
  std::set<std::string> vs = free_vars(eq.lhs);
  for (const auto& v : free_vars(eq.rhs)) vs.insert(v);
  std::mt19937_64 rng(seed);
  const std::uint64_t top = std::uint64_t{1} << depth;
  std::uniform_int_distribution<std::uint64_t> dist(0, top);
  const Rat den = pow2(depth);
  for (std::size_t t = 0; t < trials; ++t) {
    std::map<std::string, Q01> assign;
    for (const auto& v : vs) {
      const Rat k(mpz_class(static_cast<unsigned long>(dist(rng))), mpz_class(1));
      assign.emplace(v, Q01(k / den));
    }
    Counterexample cx = replay(eq, assign);
    if (!relation_holds(eq.rel, cx.lhs, cx.rhs)) return cx;
  }
  return std::nullopt;
}

std::string format_assignment(const std::map<std::string, Q01>& assign) {
  std::string out;
  for (const auto& [v, q] : assign) {
    if (!out.empty()) out += ",";
    out += v + "=" + q.to_string();
  }
  return out;
}

}  // namespace mvdelta
