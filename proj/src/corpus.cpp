#include "mvdelta/corpus.hpp"

#include <functional>

namespace mvdelta {

namespace {

Term v(const std::string& name) { return Term::var(name); }

struct Shape {
  unsigned k;
  bool tail_var;

  std::string label() const { return "k=" + std::to_string(k) + ",tail=" + (tail_var ? "var" : "0"); }

  EvSeq seq(const std::string& base) const {
    EvSeq s{{}, tail_var ? v(base + "t") : Term::zero()};
    for (unsigned i = 1; i <= k; ++i) s.prefix.push_back(v(base + std::to_string(i)));
    return s;
  }
};

std::vector<Shape> shapes() {
  std::vector<Shape> out;
  for (unsigned k = 0; k <= 3; ++k)
    for (bool t : {false, true}) out.push_back({k, t});
  return out;
}

EvSeq map_seq(const EvSeq& s, const std::function<Term(const Term&)>& f) {
  EvSeq out{{}, f(s.tail)};
  for (const auto& p : s.prefix) out.prefix.push_back(f(p));
  return out;
}

EvSeq shift_n(EvSeq s, unsigned n) {
  for (unsigned i = 0; i < n; ++i) s = s.shift();
  return s;
}

EvSeq zeros_then(const EvSeq& s, unsigned n) {
  EvSeq out = s;
  for (unsigned i = 0; i < n; ++i) out = out.cons(Term::zero());
  return out;
}

/// δ(s_1, ..., s_n, 0⃗)
Term truncation(const EvSeq& s, unsigned n) {
  std::vector<Term> p;
  for (unsigned i = 1; i <= n; ++i) p.push_back(s.at(i));
  return Term::delta(std::move(p), Term::zero());
}

/// δ(0, ..., 0, x, 0⃗) with x in position i.
Term single(const Term& x, unsigned i) {
  std::vector<Term> p(i - 1, Term::zero());
  p.push_back(x);
  return Term::delta(std::move(p), Term::zero());
}

Term oplus_all(const std::vector<Term>& ts) {
  Term acc = ts.front();
  for (std::size_t i = 1; i < ts.size(); ++i) acc = Term::oplus(acc, ts[i]);
  return acc;
}

NamedEquation make(std::string item, const std::string& params, Term lhs, Relation rel, Term rhs) {
  NamedEquation out{item, params.empty() ? item : item + " [" + params + "]", Equation{std::move(lhs), rel, std::move(rhs)}};
  out.uses_delta = mentions_delta(out.eq.lhs) || mentions_delta(out.eq.rhs);
  return out;
}

NamedEquation eq(std::string item, const std::string& params, Term lhs, Term rhs) {
  return make(std::move(item), params, std::move(lhs), Relation::kEq, std::move(rhs));
}

NamedEquation leq(std::string item, const std::string& params, Term lhs, Term rhs) {
  return make(std::move(item), params, std::move(lhs), Relation::kLeq, std::move(rhs));
}

std::string n_label(unsigned n) { return "n=" + std::to_string(n); }

}  // namespace

bool mentions_delta(const Term& t) {
  if (t.kind() == TermKind::kDelta || t.kind() == TermKind::kHalf || t.kind() == TermKind::kHalfN) return true;
  for (const auto& c : t.children())
    if (mentions_delta(c)) return true;
  return false;
}

std::vector<NamedEquation> mv_laws() {
  const Term x = v("x");
  const Term y = v("y");
  const Term z = v("z");
  std::vector<NamedEquation> out;
  out.push_back(eq("oplus-associative", "", Term::oplus(x, Term::oplus(y, z)), Term::oplus(Term::oplus(x, y), z)));
  out.push_back(eq("oplus-commutative", "", Term::oplus(x, y), Term::oplus(y, x)));
  out.push_back(eq("oplus-unit", "", Term::oplus(x, Term::zero()), x));
  out.push_back(eq("neg-involutive", "", Term::neg(Term::neg(x)), x));
  out.push_back(eq("oplus-absorbing-one", "", Term::oplus(x, Term::neg(Term::zero())), Term::neg(Term::zero())));
  out.push_back(eq("characteristic-law", "", Term::oplus(Term::neg(Term::oplus(Term::neg(x), y)), y),
                   Term::oplus(Term::neg(Term::oplus(Term::neg(y), x)), x)));
  out.push_back(eq("oplus-absorbs-odot", "", Term::oplus(Term::oplus(x, y), Term::odot(x, y)), Term::oplus(x, y)));
  out.push_back(eq("ominus-decomposition", "",
                   Term::oplus(Term::ominus(x, y), Term::odot(Term::oplus(x, Term::neg(y)), y)), x));
  out.push_back(eq("join-commutative", "", Term::join(x, y), Term::join(y, x)));
  out.push_back(eq("meet-commutative", "", Term::meet(x, y), Term::meet(y, x)));
  out.push_back(eq("join-absorbs-meet", "", Term::join(x, Term::meet(x, y)), x));
  out.push_back(eq("dist-symmetric", "", Term::dist(x, y), Term::dist(y, x)));
  out.push_back(leq("meet-below-join", "", Term::meet(x, y), Term::join(x, y)));
  out.push_back(leq("odot-below-oplus", "", Term::odot(x, y), Term::oplus(x, y)));
  out.push_back(eq("odot-distributes-over-join", "", Term::odot(x, Term::join(y, z)),
                   Term::join(Term::odot(x, y), Term::odot(x, z))));
  return out;
}

std::vector<NamedEquation> delta_axioms() {
  std::vector<NamedEquation> out;
  const auto half_of = [](const Term& t) { return Term::half(t); };
  for (const Shape& sh : shapes()) {
    const EvSeq xs = sh.seq("x");
    const std::string p = sh.label();
    out.push_back(eq("A1", p, Term::dist(xs.apply(), Term::delta({xs.at(1)}, Term::zero())),
                     xs.shift().cons(Term::zero()).apply()));
    out.push_back(eq("A2", p, Term::half(xs.apply()), map_seq(xs, half_of).apply()));
    out.push_back(eq("A4", p, xs.cons(Term::zero()).apply(), Term::half(xs.apply())));
    const EvSeq ys = sh.seq("y");
    EvSeq sum{{}, Term::oplus(xs.tail, ys.tail)};
    for (unsigned i = 0; i < sh.k; ++i) sum.prefix.push_back(Term::oplus(xs.prefix[i], ys.prefix[i]));
    out.push_back(leq("A5", p, xs.apply(), sum.apply()));
  }
  for (unsigned k = 0; k <= 3; ++k) {
    const Term x = v("x");
    out.push_back(eq("A3", "k=" + std::to_string(k), Term::delta(std::vector<Term>(k, x), x), x));
  }
  out.push_back(eq("A6", "", Term::half(Term::ominus(v("x"), v("y"))),
                   Term::ominus(Term::half(v("x")), Term::half(v("y")))));
  return out;
}

std::vector<NamedEquation> halving_identities(unsigned max_n) {
  std::vector<NamedEquation> out;
  const Term x = v("x");
  const Term y = v("y");
  const Term one = Term::one();
  for (unsigned n = 1; n <= max_n; ++n) {
    const auto hn = [n](const Term& t) { return Term::halfn(n, t); };
    for (const Shape& sh : shapes()) {
      const EvSeq xs = sh.seq("x");
      const std::string p = n_label(n) + "," + sh.label();
      out.push_back(eq("iterated-halving-distributes-over-series", p, hn(xs.apply()), map_seq(xs, hn).apply()));
      out.push_back(eq("iterated-halving-shifts-series", p, hn(xs.apply()), zeros_then(xs, n).apply()));
      out.push_back(leq("series-dominates-truncation", p, truncation(xs, n), xs.apply()));
      out.push_back(eq("series-splits-at-n", p, xs.apply(),
                       Term::oplus(truncation(xs, n), zeros_then(shift_n(xs, n), n).apply())));
    }
    out.push_back(eq("iterated-halving-preserves-ominus", n_label(n), hn(Term::ominus(x, y)),
                     Term::ominus(hn(x), hn(y))));
    out.push_back(leq("iterated-halving-decreases", n_label(n), hn(x), x));
    out.push_back(leq("iterated-halving-monotone", n_label(n), hn(Term::meet(x, y)), hn(y)));

    std::vector<Term> singles;
    std::vector<Term> halvings;
    std::vector<Term> vars;
    for (unsigned i = 1; i <= n; ++i) {
      const Term xi = v("x" + std::to_string(i));
      vars.push_back(xi);
      singles.push_back(single(xi, i));
      halvings.push_back(Term::halfn(i, xi));
    }
    const Term finite = Term::delta(vars, Term::zero());
    out.push_back(eq("finite-series-sum-of-singletons", n_label(n), oplus_all(singles), finite));
    out.push_back(eq("finite-series-sum-of-halvings", n_label(n), finite, oplus_all(halvings)));
  }
  for (const Shape& sh : shapes()) {
    const EvSeq xs = sh.seq("x");
    out.push_back(eq("series-splits-off-first-term", sh.label(), xs.apply(),
                     Term::oplus(Term::delta({xs.at(1)}, Term::zero()), xs.shift().cons(Term::zero()).apply())));
  }
  out.push_back(eq("half-of-one-self-negating", "", Term::neg(Term::half(one)), Term::half(one)));
  out.push_back(eq("half-square-vanishes", "", Term::odot(Term::half(x), Term::half(x)), Term::zero()));
  out.push_back(eq("two-term-series", "", Term::delta({x}, y), Term::oplus(Term::half(x), Term::half(y))));
  out.push_back(eq("half-plus-half", "", Term::oplus(Term::half(x), Term::half(x)), x));
  for (unsigned n = 1; n <= 3; ++n) {
    out.push_back(eq("halving-powers-of-one", n_label(n), Term::nfold(1u << n, Term::halfn(n + 1, one)),
                     Term::half(one)));
  }
  for (unsigned n = 2; n <= max_n; ++n) {
    for (unsigned m = 1; m < n; ++m) {
      out.push_back(eq("halving-powers", n_label(n) + ",m=" + std::to_string(m),
                       Term::nfold(1u << m, Term::halfn(n, x)), Term::halfn(n - m, x)));
    }
  }
  return out;
}

std::vector<NamedEquation> identity_corpus() {
  std::vector<NamedEquation> out = mv_laws();
  for (auto& e : delta_axioms()) out.push_back(std::move(e));
  for (auto& e : halving_identities()) out.push_back(std::move(e));
  return out;
}

std::vector<NamedEquation> non_theorems() {
  const Term x = v("x");
  const Term y = v("y");
  std::vector<NamedEquation> out;
  out.push_back(eq("oplus-idempotent", "", Term::oplus(x, x), x));
  out.push_back(leq("below-own-half", "", x, Term::half(x)));
  out.push_back(eq("odot-idempotent", "", Term::odot(x, x), x));
  out.push_back(eq("half-identity", "", Term::half(x), x));
  out.push_back(eq("half-distributes-over-oplus", "", Term::half(Term::oplus(x, y)),
                   Term::oplus(Term::half(x), Term::half(y))));
  out.push_back(eq("oplus-left-projection", "", Term::oplus(x, y), x));
  out.push_back(eq("neg-fixed", "", Term::neg(x), x));
  out.push_back(eq("join-left-projection", "", Term::join(x, y), x));
  out.push_back(eq("meet-right-projection", "", Term::meet(x, y), y));
  out.push_back(eq("odot-is-meet", "", Term::odot(x, y), Term::meet(x, y)));
  out.push_back(eq("oplus-is-join", "", Term::oplus(x, y), Term::join(x, y)));
  out.push_back(eq("dist-vanishes", "", Term::dist(x, y), Term::zero()));
  out.push_back(eq("half-is-odot-half", "", Term::half(x), Term::odot(x, Term::half(Term::one()))));
  out.push_back(eq("two-term-series-untruncated", "", Term::delta({x}, y), Term::half(Term::oplus(x, y))));
  out.push_back(eq("ominus-commutative", "", Term::ominus(x, y), Term::ominus(y, x)));
  out.push_back(eq("oplus-neg-total", "", Term::oplus(x, Term::neg(y)), Term::one()));
  out.push_back(eq("quarter-is-half", "", Term::halfn(2, x), Term::half(x)));
  out.push_back(eq("double-half-is-double", "", Term::nfold(2, Term::half(x)), Term::nfold(2, x)));
  out.push_back(eq("series-symmetric", "", Term::delta({x, y}, Term::zero()), Term::delta({y, x}, Term::zero())));
  out.push_back(leq("below-own-square", "", x, Term::odot(x, x)));
  return out;
}

}  // namespace mvdelta
