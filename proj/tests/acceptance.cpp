// Acceptance gate: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "mvdelta/corpus.hpp"
#include "mvdelta/decide.hpp"
#include "mvdelta/gamma_xi.hpp"
#include "mvdelta/spectrum.hpp"
#include "oracles.hpp"

using namespace mvdelta;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string fmt(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s;
  return o.str();
}

std::set<std::string> vars_of(const Equation& e) {
  std::set<std::string> vs = free_vars(e.lhs);
  for (const auto& v : free_vars(e.rhs)) vs.insert(v);
  return vs;
}

Outcome decide_corpus() {
  Outcome o;
  const auto corpus = identity_corpus();
  const auto t0 = Clock::now();
  std::size_t valid = 0;
  for (const auto& ne : corpus) {
    const Verdict v = decide(ne.eq);
    if (std::holds_alternative<Valid>(v))
      ++valid;
    else
      o.fail(ne.name + " not decided valid");
  }
  const double t = seconds_since(t0);
  if (t >= 60) o.fail("took " + fmt(t) + " s");
  if (o.pass) o.detail = std::to_string(valid) + "/" + std::to_string(corpus.size()) + " valid in " + fmt(t) + " s";
  return o;
}

Outcome soundness() {
  Outcome o;
  const auto corpus = identity_corpus();
  std::uint64_t seed = 1000;
  for (const auto& ne : corpus) {
    if (const auto cx = sample_falsify(ne.eq, 10000, seed++)) o.fail(ne.name + " violated at " + format_assignment(cx->assign));
  }
  const auto nts = non_theorems();
  std::size_t replayed = 0;
  for (const auto& ne : nts) {
    const Verdict v = decide(ne.eq);
    const auto* cx = std::get_if<Counterexample>(&v);
    if (!cx) {
      o.fail(ne.name + " has no counterexample");
      continue;
    }
    const Counterexample again = replay(ne.eq, cx->assign);
    std::map<std::string, Rat> env;
    for (const auto& name : vars_of(ne.eq)) env.emplace(name, cx->assign.count(name) ? cx->assign.at(name).value() : Rat(0));
    const bool exact = again.lhs == cx->lhs && again.rhs == cx->rhs && !relation_holds(ne.eq.rel, cx->lhs, cx->rhs) &&
                       oracle::eval(ne.eq.lhs, env) == cx->lhs.value() &&
                       oracle::eval(ne.eq.rhs, env) == cx->rhs.value();
    if (exact)
      ++replayed;
    else
      o.fail(ne.name + " counterexample does not replay");
  }
  if (o.pass)
    o.detail = std::to_string(corpus.size()) + " identities x 10000 samples clean; " + std::to_string(replayed) + "/" +
               std::to_string(nts.size()) + " counterexamples replay";
  return o;
}

Outcome chang_radical() {
  Outcome o;
  const auto chang = parse_carrier_spec("chang");
  if (radical_of(chang).description != "{(0,k) : k >= 0}") o.fail("radical description");
  std::size_t checked = 0;
  for (std::int64_t k = 0; k <= 1000; ++k) {
    for (const ChangElem x : {ChangElem{0, k}, ChangElem{1, -k}}) {
      const bool closed_form = x.level == 0 && x.offset > 0;
      if (is_infinitesimal(*chang, x, 64).infinitesimal != closed_form) o.fail("is_infinitesimal at " + x.to_string());
      if (chang_in_radical(x) != (x.level == 0)) o.fail("radical membership at " + x.to_string());
      ++checked;
    }
  }
  if (halving_witness(ChangElem{0, 1})) o.fail("(0,1) has a halving witness");
  if (halving_witness(ChangElem{0, 2}) != ChangElem{0, 1}) o.fail("(0,2) witness is not (0,1)");
  if (o.pass) o.detail = std::to_string(checked) + " elements agree with closed form; halving witnesses exact";
  return o;
}

Outcome pl_axioms() {
  Outcome o;
  static const std::set<std::string> kFamilies = {
      "A1", "A2", "A3", "A4", "A5", "A6", "iterated-halving-distributes-over-series",
      "iterated-halving-shifts-series", "series-dominates-truncation", "series-splits-at-n",
      "iterated-halving-preserves-ominus", "iterated-halving-decreases", "iterated-halving-monotone",
      "finite-series-sum-of-singletons", "finite-series-sum-of-halvings",
      "series-splits-off-first-term", "half-of-one-self-negating", "half-square-vanishes", "two-term-series",
      "half-plus-half", "halving-powers-of-one", "halving-powers"};
  std::vector<NamedEquation> items = delta_axioms();
  for (auto& ne : halving_identities(4)) items.push_back(std::move(ne));
  const PLCarrier pl;
  Rng rng(4);
  std::set<std::string> seen;
  std::size_t instances = 0;
  for (const auto& ne : items) {
    if (!kFamilies.count(ne.item)) continue;
    seen.insert(ne.item);
    const auto vars = vars_of(ne.eq);
    for (int t = 0; t < 1000; ++t) {
      Assignment a;
      for (const auto& v : vars) a.emplace(v, random_plfunc(rng));
      const PLFunc l = evaluate(ne.eq.lhs, a, pl).as<PLFunc>();
      const PLFunc r = evaluate(ne.eq.rhs, a, pl).as<PLFunc>();
      const bool ok = ne.eq.rel == Relation::kEq ? l == r : pl_leq(l, r);
      if (!ok) o.fail(ne.name);
      ++instances;
    }
  }
  if (seen.size() != kFamilies.size()) o.fail("missing identity families");
  if (o.pass)
    o.detail = std::to_string(seen.size()) + " families, " + std::to_string(instances) +
               " instantiations, exact canonical equality";
  return o;
}

Outcome isbell() {
  Outcome o;
  const std::vector<std::pair<std::string, PLFunc>> targets = {
      {"id", PLFunc::identity()},
      {"1-x", pl_neg(PLFunc::identity())},
      {"tent", PLFunc::from_points({{Rat(0), Rat(0)}, {Rat::parse("1/2"), Rat(1)}, {Rat(1), Rat(0)}})},
      {"const 1/3", PLFunc::constant(Q01(1, 3))}};
  Rat worst_ratio = 0;
  for (const auto& [name, target] : targets) {
    const PLFunc half = pl_halfn(1, target);
    for (unsigned n = 1; n <= 8; ++n) {
      try {
        const auto s = increasing_approx(half, n);
        const IsbellResult r = isbell_reconstruct(s);
        const Rat d = uniform_dist(r.value, half).value();
        if (d > pow2_inv(n)) o.fail(name + " n=" + std::to_string(n) + " distance " + d.to_string());
        worst_ratio = max(worst_ratio, d * pow2(n));
      } catch (const std::exception& e) {
        o.fail(name + " n=" + std::to_string(n) + ": " + e.what());
      }
    }
  }
  if (o.pass) o.detail = "4 targets x n=1..8 within 2^-n (worst distance/2^-n = " + worst_ratio.to_string() + ")";
  return o;
}

Outcome gamma_xi() {
  Outcome o;
  for (unsigned n = 1; n <= 6; ++n) {
    const ChainIsoReport r = xi_chain_iso(n, 2 * n);
    const auto brute = oracle::good_sequences(n, 2 * n * n);
    std::set<unsigned> sums;
    for (const auto& s : brute) sums.insert(std::accumulate(s.begin(), s.end(), 0u));
    if (!r.ok()) o.fail("chain iso n=" + std::to_string(n));
    if (r.count != brute.size() || sums.size() != brute.size() || sums.size() != 2 * n * n + 1)
      o.fail("enumeration oracle disagrees at n=" + std::to_string(n));
    const GammaXiReport g = gamma_of_xi(FiniteAlgebra(parse_carrier_spec("chain:" + std::to_string(n))));
    if (!g.bijective || !g.preserves_oplus || !g.preserves_neg || g.interval_size != n + 1)
      o.fail("unit interval of Xi at n=" + std::to_string(n));
  }
  if (gamma_of_xi(FiniteAlgebra(parse_carrier_spec("chain:1"))).interval_size != 2) o.fail("two-element case");
  if (o.pass) o.detail = "n=1..6 iso and round trip confirmed; two-element chain gives 2";
  return o;
}

unsigned lcm_of(const std::vector<unsigned>& orders) {
  return std::accumulate(orders.begin(), orders.end(), 1u, [](unsigned a, unsigned b) { return std::lcm(a, b); });
}

Outcome duality() {
  Outcome o;
  const std::vector<std::string> algebras = {"chain:1", "chain:2", "chain:3", "chain:5", "prod(chain:2,chain:3)",
                                             "prod(chain:1,chain:1)", "prod(chain:1,chain:2,chain:1)",
                                             "prod(chain:2,chain:2)", "prod(chain:4,chain:3)", "prod()"};
  for (const auto& spec : algebras) {
    const FiniteAlgebra a(parse_carrier_spec(spec));
    const auto homs = enumerate_homs(a);
    const auto max = maximal_ideals(a);
    const auto brute = oracle::all_homs(oracle::Digits{a.orders()}, lcm_of(a.orders()));
    if (brute.size() != max.size() || homs.size() != max.size()) o.fail("hom count for " + spec);
    std::set<std::vector<std::size_t>> brute_kernels;
    for (const auto& t : brute) {
      std::vector<std::size_t> k;
      for (std::size_t i = 0; i < t.size(); ++i)
        if (t[i].is_zero()) k.push_back(i);
      brute_kernels.insert(k);
    }
    if (brute_kernels != std::set<std::vector<std::size_t>>(max.begin(), max.end())) o.fail("kernels for " + spec);
    for (std::size_t i = 0; i < homs.size(); ++i)
      if (kernel(homs[i]) != max[i]) o.fail("kernel mismatch for " + spec);
    const EtaReport e = eta(a);
    if (e.injective != e.semisimple) o.fail("eta injectivity for " + spec);
  }
  if (enumerate_homs(FiniteAlgebra(parse_carrier_spec("prod(chain:2,chain:3)"))).size() != 2) o.fail("two homs");
  const ChangEtaReport c = chang_eta();
  if (c.injective != c.semisimple || c.injective) o.fail("Chang eta");
  for (unsigned points = 1; points <= 5; ++points) {
    std::string spec = "prod(";
    for (unsigned p = 0; p < points; ++p) spec += (p ? ",chain:" : "chain:") + std::to_string(1 + p % 3);
    spec += ")";
    const EpsilonReport r = epsilon_finite(FiniteAlgebra(parse_carrier_spec(spec)));
    if (!r.bijection || !r.discrete || r.maximal_ideals != points) o.fail("epsilon for " + spec);
  }
  if (o.pass) o.detail = std::to_string(algebras.size()) + " algebras match brute-force hom search; epsilon |X|<=5; eta";
  return o;
}

Outcome delta_preservation() {
  Outcome o;
  Rng rng(8);
  std::size_t samples = 0;
  std::size_t equalities = 0;
  for (int i = 0; i < 100; ++i) {
    PLHom h;
    if (i % 2 == 0) h.point = random_dyadic(rng, 6);
    if (i % 4 != 0) h.phi = random_plfunc(rng);
    const auto r = delta_preservation_check(h, 5, 100 + static_cast<std::uint64_t>(i));
    samples += 5;
    equalities += r.checks;
    if (!r.ok()) o.fail(r.first_failure);
  }
  if (o.pass)
    o.detail = std::to_string(samples) + " seeded samples, " + std::to_string(equalities) + " exact equalities";
  return o;
}

Outcome archimedean() {
  Outcome o;
  Rng rng(9);
  for (int i = 0; i < 500; ++i) {
    const PLFunc f = random_nonzero_plfunc(rng);
    const auto c = pl_archimedean_certificate(f);
    if (!c) {
      o.fail("no certificate");
      continue;
    }
    Rat m = 0;
    for (const auto& p : f.points()) m = max(m, p.y);
    const Rat fa = f(c->at);
    const Rat n(static_cast<long>(c->n));
    if (!(min(n * fa, Rat(1)) > Rat(1) - fa)) o.fail("certificate point does not witness");
    if (c->n != (Rat(1) / m).ceil().get_ui() + 1) o.fail("certificate n");
  }
  if (o.pass) o.detail = "500 nonzero functions certified";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"decision procedure decides the identity corpus valid", decide_corpus},
      {"sampling finds no violations; non-theorem counterexamples replay", soundness},
      {"Chang radical and infinitesimals match the closed form", chang_radical},
      {"series axioms and halving identities hold on PL functions", pl_axioms},
      {"series reconstruction meets the 2^-n bound", isbell},
      {"good-sequence group recovers finite chains", gamma_xi},
      {"finite spectra: homs, kernels, point kernels, evaluation map", duality},
      {"homomorphisms from PL functions preserve series", delta_preservation},
      {"archimedean certificates for nonzero PL functions", archimedean},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << o.detail << ") [" << fmt(seconds_since(t0)) << " s]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
