#include <gtest/gtest.h>

#include <random>

#include "mvdelta/corpus.hpp"
#include "mvdelta/decide.hpp"
#include "oracles.hpp"

using namespace mvdelta;

namespace {

AffineForm v(const char* n) { return AffineForm::variable(n); }
AffineForm c(long k) { return AffineForm(Rat(k)); }

std::vector<Constraint> with_box(std::vector<Constraint> s, const std::vector<std::string>& vars) {
  for (auto& b : unit_box(vars)) s.push_back(b);
  return s;
}

// Nonempty bounded polyhedra have a vertex; try every pair of boundary lines.
bool vertex_feasible(const std::vector<Constraint>& sys) {
  for (std::size_t i = 0; i < sys.size(); ++i) {
    for (std::size_t j = i + 1; j < sys.size(); ++j) {
      const auto& f = sys[i].form;
      const auto& g = sys[j].form;
      const Rat a1 = f.coeff("x"), b1 = f.coeff("y"), c1 = f.constant();
      const Rat a2 = g.coeff("x"), b2 = g.coeff("y"), c2 = g.constant();
      const Rat det = a1 * b2 - a2 * b1;
      if (det.is_zero()) continue;
      const Rat x = (b1 * c2 - b2 * c1) / det;
      const Rat y = (a2 * c1 - a1 * c2) / det;
      bool ok = true;
      for (const auto& k : sys) ok = ok && k.holds({{"x", x}, {"y", y}});
      if (ok) return true;
    }
  }
  return false;
}

std::map<std::string, Rat> to_rat(const std::map<std::string, Q01>& a) {
  std::map<std::string, Rat> out;
  for (const auto& [k, x] : a) out.emplace(k, x.value());
  return out;
}

}  // namespace

TEST(Linear, AffineArithmetic) {
  const AffineForm f = Rat(2) * v("x") - v("y") + c(3);
  EXPECT_EQ(f.coeff("x"), Rat(2));
  EXPECT_EQ(f.coeff("z"), Rat(0));
  EXPECT_EQ(f.evaluate({{"x", Rat(1)}, {"y", Rat(5)}}), Rat(0));
  EXPECT_TRUE((f - f).is_constant());
  EXPECT_TRUE((f - f).coeffs().empty());
}

TEST(Linear, OneVariableIntervals) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> k(-6, 6);
  std::uniform_int_distribution<int> strict(0, 1);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Constraint> sys;
    Rat lo = 0, hi = 1;
    bool lo_open = false, hi_open = false;
    for (int i = 0; i < 3; ++i) {
      long a = k(rng);
      if (a == 0) a = 1;
      const long b = k(rng);
      const bool s = strict(rng) != 0;
      sys.push_back({Rat(a) * v("x") + c(b), s});
      const Rat bound = Rat(-b) / Rat(a);
      if (a > 0 && (bound > lo || (bound == lo && s))) lo = bound, lo_open = s;
      if (a < 0 && (bound < hi || (bound == hi && s))) hi = bound, hi_open = s;
    }
    const bool expect = lo < hi || (lo == hi && !lo_open && !hi_open);
    const auto sol = fm_solve(with_box(sys, {"x"}), {"x"});
    ASSERT_EQ(sol.has_value(), expect);
    if (sol) {
      for (const auto& con : sys) EXPECT_TRUE(con.holds(*sol));
    }
  }
}

TEST(Linear, TwoVariablesAgainstVertexOracle) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> k(-4, 4);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Constraint> sys;
    for (int i = 0; i < 4; ++i) sys.push_back({Rat(k(rng)) * v("x") + Rat(k(rng)) * v("y") + c(k(rng)), false});
    sys = with_box(sys, {"x", "y"});
    const auto sol = fm_solve(sys, {"x", "y"});
    ASSERT_EQ(sol.has_value(), vertex_feasible(sys));
    if (sol) {
      for (const auto& con : sys) EXPECT_TRUE(con.holds(*sol));
    }
  }
}

TEST(Compile, PieceShapes) {
  const auto p = compile(expand(parse_term("oplus(x,y)")));
  ASSERT_EQ(p.size(), 2u);
  const auto n = compile(expand(parse_term("neg(x)")));
  ASSERT_EQ(n.size(), 1u);
  EXPECT_EQ(n[0].value, c(1) - v("x"));
  const auto h = compile(expand(parse_term("half(x)")));
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0].value, Rat(mpz_class(1), mpz_class(2)) * v("x"));
}

TEST(Decide, Examples) {
  EXPECT_TRUE(std::holds_alternative<Valid>(decide(parse_equation("oplus(half(x), half(x)) = x"))));
  EXPECT_TRUE(std::holds_alternative<Valid>(
      decide(parse_equation("oplus(neg(oplus(neg(x), y)), y) = oplus(neg(oplus(neg(y), x)), x)"))));
  EXPECT_TRUE(std::holds_alternative<Valid>(decide(parse_equation("half(ominus(x, y)) = ominus(half(x), half(y))"))));
  for (unsigned n = 1; n <= 3; ++n)
    EXPECT_TRUE(std::holds_alternative<Valid>(
        decide(parse_equation("halfn(" + std::to_string(n) + ", x) <= x"))));

  const Verdict v1 = decide(parse_equation("oplus(x,x) = x"));
  const auto* cx = std::get_if<Counterexample>(&v1);
  ASSERT_NE(cx, nullptr);
  EXPECT_EQ(format_assignment(cx->assign), "x=1/2");
  EXPECT_EQ(cx->lhs, Q01::one());
  EXPECT_EQ(cx->rhs, Q01(1, 2));

  const Verdict v2 = decide(parse_equation("x <= half(x)"));
  const auto* cx2 = std::get_if<Counterexample>(&v2);
  ASSERT_NE(cx2, nullptr);
  EXPECT_EQ(format_assignment(cx2->assign), "x=1");
  EXPECT_EQ(cx2->lhs, Q01::one());
  EXPECT_EQ(cx2->rhs, Q01(1, 2));
}

TEST(Decide, BudgetExceeded) {
  const Equation e =
      parse_equation("meet(dist(x1,y1),meet(dist(x2,y2),meet(dist(x3,y3),dist(x4,y4)))) <= x1");
  const Verdict v = decide(e, 50);
  ASSERT_TRUE(std::holds_alternative<LimitExceeded>(v));
  EXPECT_EQ(std::get<LimitExceeded>(v).budget, 50u);
  EXPECT_FALSE(std::holds_alternative<LimitExceeded>(decide(e)));
}

TEST(Decide, CounterexamplesReplayUnderOracle) {
  for (const auto& ne : non_theorems()) {
    const Verdict v = decide(ne.eq);
    const auto* cx = std::get_if<Counterexample>(&v);
    ASSERT_NE(cx, nullptr) << ne.name;
    auto env = to_rat(cx->assign);
    for (const auto& name : free_vars(ne.eq.lhs)) env.emplace(name, Rat(0));
    for (const auto& name : free_vars(ne.eq.rhs)) env.emplace(name, Rat(0));
    EXPECT_FALSE(oracle::holds(ne.eq, env)) << ne.name;
    EXPECT_EQ(oracle::eval(ne.eq.lhs, env), cx->lhs.value()) << ne.name;
    EXPECT_EQ(oracle::eval(ne.eq.rhs, env), cx->rhs.value()) << ne.name;
  }
}

TEST(Decide, RandomEquationsAgreeWithGridOracle) {
  // Terms with constants in {0,1} and two variables have breakpoints on a
  // grid of denominator dividing 2^k * small; a Valid verdict must hold on a
  // fine grid, a counterexample must fail under the oracle.
  std::mt19937_64 rng(13);
  const std::vector<std::string> shapes = {
      "oplus(x, y) = oplus(y, x)", "meet(x, y) = x", "join(x, half(y)) <= oplus(x, y)",
      "odot(x, y) <= meet(x, y)", "dist(x, y) = dist(half(x), half(y))", "nfold(3, half(x)) = x",
      "ominus(oplus(x, y), y) <= x", "oplus(odot(x, y), dist(x, y)) = join(x, y)",
      "halfn(2, oplus(x, y)) <= oplus(halfn(2, x), halfn(2, y))", "delta(x, y; 0) = half(oplus(x, half(y)))"};
  for (const auto& s : shapes) {
    const Equation e = parse_equation(s);
    const Verdict v = decide(e);
    if (const auto* cx = std::get_if<Counterexample>(&v)) {
      auto env = to_rat(cx->assign);
      env.emplace("x", Rat(0));
      env.emplace("y", Rat(0));
      EXPECT_FALSE(oracle::holds(e, env)) << s;
      continue;
    }
    ASSERT_TRUE(std::holds_alternative<Valid>(v)) << s;
    for (long i = 0; i <= 48; ++i)
      for (long j = 0; j <= 48; ++j)
        EXPECT_TRUE(oracle::holds(e, {{"x", Rat(mpz_class(i), mpz_class(48))}, {"y", Rat(mpz_class(j), mpz_class(48))}}))
            << s;
  }
}

TEST(Sampling, FalsifierBehaviour) {
  EXPECT_TRUE(sample_falsify(parse_equation("oplus(x,x) = x"), 100, 0).has_value());
  const auto cx = sample_falsify(parse_equation("oplus(x,x) = x"), 100, 0);
  EXPECT_NE(cx->assign.at("x"), Q01::zero());
  EXPECT_NE(cx->assign.at("x"), Q01::one());
  EXPECT_FALSE(sample_falsify(parse_equation("oplus(neg(oplus(neg(x), y)), y) = oplus(neg(oplus(neg(y), x)), x)"),
                              2000, 1)
                   .has_value());
  EXPECT_FALSE(sample_falsify(parse_equation("x = x"), 100, 2).has_value());
  const auto a = sample_falsify(parse_equation("x <= half(oplus(x, y))"), 200, 9);
  const auto b = sample_falsify(parse_equation("x <= half(oplus(x, y))"), 200, 9);
  ASSERT_TRUE(a && b);
  EXPECT_EQ(format_assignment(a->assign), format_assignment(b->assign));
}

TEST(Corpus, Shape) {
  const auto corpus = identity_corpus();
  EXPECT_GE(corpus.size(), 200u);
  EXPECT_EQ(non_theorems().size(), 20u);
  std::set<std::string> names;
  for (const auto& ne : corpus) EXPECT_TRUE(names.insert(ne.name).second) << ne.name;
  for (const auto& item : {"A1", "A2", "A3", "A4", "A5", "A6"}) {
    EXPECT_TRUE(std::any_of(corpus.begin(), corpus.end(), [&](const NamedEquation& ne) { return ne.item == item; }))
        << item;
  }
}
