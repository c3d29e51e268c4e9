#include <gtest/gtest.h>

#include <numeric>

#include "mvdelta/spectrum.hpp"
#include "oracles.hpp"

using namespace mvdelta;

namespace {

const std::vector<std::string> kAlgebras = {"chain:1", "chain:2", "chain:4", "chain:6", "prod(chain:2,chain:3)",
                                            "prod(chain:1,chain:1)", "prod(chain:1,chain:1,chain:1)",
                                            "prod(chain:2,chain:2)", "prod(chain:4,chain:1)", "prod()"};

unsigned lcm_of(const std::vector<unsigned>& orders) {
  unsigned l = 1;
  for (unsigned n : orders) l = std::lcm(l, n);
  return l;
}

std::vector<std::vector<Rat>> tables(const std::vector<Hom>& homs) {
  std::vector<std::vector<Rat>> out;
  for (const auto& h : homs) {
    std::vector<Rat> t;
    for (const auto& q : h.table) t.push_back(q.value());
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Homs, MatchBruteForceSearch) {
  for (const auto& spec : kAlgebras) {
    const FiniteAlgebra a(parse_carrier_spec(spec));
    auto brute = oracle::all_homs(oracle::Digits{a.orders()}, lcm_of(a.orders()));
    std::sort(brute.begin(), brute.end());
    const auto homs = enumerate_homs(a);
    EXPECT_EQ(tables(homs), brute) << spec;
    const auto max = maximal_ideals(a);
    ASSERT_EQ(homs.size(), max.size());
    for (std::size_t i = 0; i < homs.size(); ++i) {
      EXPECT_EQ(kernel(homs[i]), max[i]);
      EXPECT_TRUE(is_hom(a, homs[i].table));
    }
  }
}

TEST(Homs, Examples) {
  const FiniteAlgebra p(parse_carrier_spec("prod(chain:2,chain:3)"));
  EXPECT_EQ(enumerate_homs(p).size(), 2u);
  for (unsigned n = 1; n <= 6; ++n) {
    const FiniteAlgebra c(parse_carrier_spec("chain:" + std::to_string(n)));
    const auto h = enumerate_homs(c);
    ASSERT_EQ(h.size(), 1u);
    for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(h[0].table[k], Q01(k, n));
  }
  EXPECT_TRUE(enumerate_homs(FiniteAlgebra(parse_carrier_spec("prod()"))).empty());
}

TEST(Homs, PreimagesOfMaximalIdealsAreMaximal) {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"prod(chain:2,chain:3)", "chain:6"}, {"prod(chain:2,chain:3)", "prod(chain:2,chain:3)"},
      {"chain:2", "chain:4"},               {"prod(chain:1,chain:1)", "prod(chain:1,chain:2)"},
      {"chain:2", "prod(chain:2,chain:4)"}, {"prod(chain:2,chain:2)", "chain:2"}};
  for (const auto& [sa, sb] : pairs) {
    const FiniteAlgebra a(parse_carrier_spec(sa));
    const FiniteAlgebra b(parse_carrier_spec(sb));
    const auto homs = homs_between(a, b);
    EXPECT_FALSE(homs.empty()) << sa << " -> " << sb;
    const auto max_a = maximal_ideals(a);
    for (const auto& h : homs) {
      for (std::size_t x = 0; x < a.size(); ++x) {
        EXPECT_EQ(h[a.neg(x)], b.neg(h[x]));
        for (std::size_t y = 0; y < a.size(); ++y) EXPECT_EQ(h[a.oplus(x, y)], b.oplus(h[x], h[y]));
      }
      for (const auto& m : maximal_ideals(b)) {
        Ideal pre;
        for (std::size_t x = 0; x < a.size(); ++x)
          if (std::binary_search(m.begin(), m.end(), h[x])) pre.push_back(x);
        EXPECT_NE(std::find(max_a.begin(), max_a.end(), pre), max_a.end()) << sa << " -> " << sb;
      }
    }
  }
  const FiniteAlgebra l2(parse_carrier_spec("chain:2"));
  const FiniteAlgebra l3(parse_carrier_spec("chain:3"));
  EXPECT_TRUE(homs_between(l2, l3).empty());
}

TEST(Stone, ClosedSetsAndBasis) {
  for (const auto& spec : kAlgebras) {
    const FiniteAlgebra a(parse_carrier_spec(spec));
    const SpectrumResult s = spectrum(a);
    EXPECT_TRUE(s.kernels_match) << spec;
    EXPECT_TRUE(s.basis_generates) << spec;
    EXPECT_TRUE(s.discrete) << spec;
    EXPECT_EQ(s.closed_sets.size(), std::size_t{1} << s.ideals.size());
    for (std::size_t j = 0; j < s.ideals.size(); ++j)
      EXPECT_NE(std::find(s.basis.begin(), s.basis.end(), std::vector<std::size_t>{j}), s.basis.end()) << spec;
  }
}

TEST(Stone, VOfExamples) {
  const FiniteAlgebra p(parse_carrier_spec("prod(chain:2,chain:3)"));
  EXPECT_EQ(v_of(p, {p.zero()}), (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(v_of(p, {p.one()}).empty());
  const std::size_t x = p.index_of(p.carrier()->parse_element("(1/2,0)"));
  const auto v = v_of(p, {x});
  ASSERT_EQ(v.size(), 1u);
  const auto m = maximal_ideals(p)[v[0]];
  EXPECT_TRUE(std::binary_search(m.begin(), m.end(), x));
}

TEST(Eta, InjectiveIffRadicalTrivial) {
  for (const auto& spec : kAlgebras) {
    const FiniteAlgebra a(parse_carrier_spec(spec));
    const EtaReport e = eta(a);
    EXPECT_EQ(e.injective, e.semisimple) << spec;
    EXPECT_TRUE(e.injective) << spec;
    EXPECT_TRUE(e.onto_product_of_images) << spec;
  }
  const ChangEtaReport c = chang_eta();
  EXPECT_EQ(c.injective, c.semisimple);
  EXPECT_FALSE(c.injective);
  EXPECT_EQ(c.kernel, radical_of(parse_carrier_spec("chang")).description);
}

TEST(Eta, ChangHomomorphism) {
  const ChangCarrier chang;
  Rng rng(41);
  for (int i = 0; i < 5000; ++i) {
    const ChangElem x = random_element(chang, rng, 4, 1000).as<ChangElem>();
    const ChangElem y = random_element(chang, rng, 4, 1000).as<ChangElem>();
    EXPECT_EQ(chang_hom(chang_oplus(x, y)).value(), oracle::oplus(chang_hom(x), chang_hom(y)));
    EXPECT_EQ(chang_hom(chang_neg(x)).value(), oracle::neg(chang_hom(x)));
    EXPECT_EQ(chang_hom(x) == Q01::zero(), chang_in_radical(x));
  }
  EXPECT_EQ(chang_hom(ChangElem{0, 7}), chang_hom(ChangElem{0, 3}));
}

TEST(Epsilon, PointKernels) {
  const auto r3 = epsilon_finite(FiniteAlgebra(parse_carrier_spec("prod(chain:4,chain:4,chain:4)")));
  EXPECT_EQ(r3.maximal_ideals, 3u);
  EXPECT_TRUE(r3.bijection && r3.discrete);
  const auto r1 = epsilon_finite(FiniteAlgebra(parse_carrier_spec("prod(chain:3)")));
  EXPECT_EQ(r1.maximal_ideals, 1u);
  EXPECT_TRUE(r1.bijection);
  const auto r2 = epsilon_finite(FiniteAlgebra(parse_carrier_spec("prod(chain:2,chain:3)")));
  EXPECT_EQ(r2.maximal_ideals, 2u);
  EXPECT_TRUE(r2.bijection);
  EXPECT_THROW(epsilon_finite(FiniteAlgebra(parse_carrier_spec("chain:3"))), CarrierError);
}

TEST(DeltaPreservation, HomsFromPL) {
  PLHom point;
  point.point = Q01(1, 3);
  EXPECT_TRUE(delta_preservation_check(point, 50, 1).ok());
  EXPECT_TRUE(delta_preservation_check(PLHom{}, 50, 2).ok());
  PLHom pre;
  pre.phi = PLFunc::from_points({{Rat(0), Rat(1)}, {Rat::parse("1/2"), Rat(0)}, {Rat(1), Rat::parse("1/3")}});
  EXPECT_TRUE(delta_preservation_check(pre, 50, 3).ok());
  pre.point = Q01(3, 4);
  const auto r = delta_preservation_check(pre, 50, 4);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.checks, 250u);
}
