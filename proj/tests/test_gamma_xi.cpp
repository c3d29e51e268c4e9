#include <gtest/gtest.h>

#include <numeric>

#include "mvdelta/gamma_xi.hpp"
#include "oracles.hpp"

using namespace mvdelta;

namespace {

CarrierPtr chain(unsigned n) { return parse_carrier_spec("chain:" + std::to_string(n)); }

GoodSeq seq(unsigned n, std::vector<long> nums) {
  std::vector<Value> v;
  for (long k : nums) v.push_back(Q01(k, n));
  return GoodSeq(chain(n), std::move(v));
}

std::vector<unsigned> numerators(const GoodSeq& s, unsigned n) {
  std::vector<unsigned> out;
  for (const auto& v : s.entries()) out.push_back(static_cast<unsigned>((v.as<Q01>().value() * Rat(static_cast<long>(n))).num().get_ui()));
  return out;
}

}  // namespace

TEST(GoodSeq, Goodness) {
  const FiniteChain l2(2);
  const std::vector<Value> a{Q01::one(), Q01(1, 2)};
  EXPECT_TRUE(is_good(l2, a).good);
  const std::vector<Value> b{Q01(1, 2), Q01(1, 2)};
  const auto r = is_good(l2, b);
  EXPECT_FALSE(r.good);
  EXPECT_EQ(r.failing_index, 0u);
  EXPECT_TRUE(is_good(l2, std::vector<Value>{}).good);
  EXPECT_THROW(seq(2, {1, 1}), std::invalid_argument);
  EXPECT_EQ(seq(2, {2, 1, 0, 0}).length(), 2u);
}

TEST(GoodSeq, Addition) {
  EXPECT_EQ(gs_add(seq(2, {2, 1}), seq(2, {1})), seq(2, {2, 2}));
  EXPECT_EQ(gs_add(seq(2, {2, 1}), GoodSeq::zero(chain(2))), seq(2, {2, 1}));
  EXPECT_EQ(gs_add(seq(1, {1}), seq(1, {1})), seq(1, {1, 1}));
}

TEST(GoodSeq, Order) {
  EXPECT_TRUE(gs_leq(seq(2, {2}), seq(2, {2, 1})));
  EXPECT_TRUE(gs_leq(seq(2, {1}), seq(2, {2, 1})));
  EXPECT_EQ(gs_order(seq(2, {2, 1}), seq(2, {2, 1})), GsOrder::kEqual);
  const auto p = parse_carrier_spec("prod(chain:1,chain:1)");
  const GoodSeq x(p, {p->parse_element("(1,0)")});
  const GoodSeq y(p, {p->parse_element("(0,1)")});
  EXPECT_EQ(gs_order(x, y), GsOrder::kIncomparable);
  EXPECT_EQ(gs_join(x, y), GoodSeq(p, {p->parse_element("(1,1)")}));
  EXPECT_EQ(gs_meet(x, y), GoodSeq::zero(p));
}

TEST(GoodSeq, EnumerationMatchesTupleOracle) {
  for (unsigned n = 1; n <= 6; ++n) {
    const unsigned len = n <= 3 ? 5 : 3;
    const FiniteAlgebra a(chain(n));
    std::set<std::vector<unsigned>> got;
    for (const auto& s : good_sequences(a, len)) got.insert(numerators(s, n));
    const auto expected = oracle::good_tuples(n, len);
    EXPECT_EQ(got, std::set<std::vector<unsigned>>(expected.begin(), expected.end())) << n;
  }
}

TEST(Xi, GroupLaws) {
  const auto c = chain(3);
  const XiElem a{seq(3, {3, 1}), seq(3, {2})};
  const XiElem b{seq(3, {1}), seq(3, {3, 3, 2})};
  EXPECT_TRUE(xi_equal(xi_add(a, xi_negate(a)), xi_zero(c)));
  EXPECT_TRUE(xi_equal(xi_add(XiElem{a.pos, b.pos}, XiElem{b.pos, a.pos}), xi_zero(c)));
  EXPECT_TRUE(xi_leq(xi_negate(xi_unit(c)), xi_zero(c)));
  EXPECT_TRUE(xi_equal(xi_add(a, b), xi_add(b, a)));
  EXPECT_TRUE(xi_leq(a, xi_join(a, b)));
  EXPECT_TRUE(xi_leq(b, xi_join(a, b)));
  EXPECT_TRUE(xi_leq(xi_meet(a, b), a));
  EXPECT_TRUE(xi_equal(xi_add(xi_join(a, b), xi_meet(a, b)), xi_add(a, b)));
}

TEST(Xi, ChainIsomorphismAgainstOracle) {
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned bound : {0u, 1u, 3u, 2 * n}) {
      const ChainIsoReport r = xi_chain_iso(n, bound);
      const auto seqs = oracle::good_sequences(n, bound * n);
      EXPECT_EQ(r.count, seqs.size()) << n << " " << bound;
      std::set<unsigned> sums;
      for (const auto& s : seqs) sums.insert(std::accumulate(s.begin(), s.end(), 0u));
      EXPECT_EQ(sums.size(), seqs.size());
      EXPECT_EQ(sums.size(), bound * n + 1);
      EXPECT_TRUE(r.ok()) << n << " " << bound;
    }
  }
  EXPECT_EQ(xi_chain_iso(2, 4).count, 9u);
  EXPECT_EQ(xi_chain_iso(1, 3).count, 4u);
  EXPECT_EQ(xi_chain_iso(1, 0).count, 1u);
}

TEST(Xi, UnitIntervalRecoversAlgebra) {
  for (unsigned n = 1; n <= 6; ++n) {
    const GammaXiReport g = gamma_of_xi(FiniteAlgebra(chain(n)));
    EXPECT_EQ(g.interval_size, n + 1);
    EXPECT_TRUE(g.bijective && g.preserves_oplus && g.preserves_neg) << n;
  }
  EXPECT_EQ(gamma_of_xi(FiniteAlgebra(chain(1))).interval_size, 2u);
  const GammaXiReport l2 = gamma_of_xi(FiniteAlgebra(chain(2)));
  EXPECT_EQ(l2.elements, (std::vector<std::string>{"0", "1/2", "1"}));
  EXPECT_EQ(gamma_of_xi(FiniteAlgebra(parse_carrier_spec("prod()"))).interval_size, 1u);
  const GammaXiReport p = gamma_of_xi(FiniteAlgebra(parse_carrier_spec("prod(chain:1,chain:2)")));
  EXPECT_EQ(p.interval_size, 6u);
  EXPECT_TRUE(p.bijective && p.preserves_oplus && p.preserves_neg);
}
