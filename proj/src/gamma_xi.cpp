#include "mvdelta/gamma_xi.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace mvdelta {

namespace {

void same_carrier(const GoodSeq& a, const GoodSeq& b) {
  if (a.carrier()->name() != b.carrier()->name())
    throw CarrierError("good sequences over " + a.carrier()->name() + " and " + b.carrier()->name());
}

GoodSeq pointwise(const GoodSeq& a, const GoodSeq& b, bool join) {
  same_carrier(a, b);
  const Carrier& c = *a.carrier();
  std::vector<Value> out;
  for (std::size_t i = 0; i < std::max(a.length(), b.length()); ++i)
    out.push_back(join ? c.join(a.at(i), b.at(i)) : c.meet(a.at(i), b.at(i)));
  return GoodSeq(a.carrier(), std::move(out));
}

}  // namespace

GoodnessReport is_good(const Carrier& carrier, std::span<const Value> entries) {
  for (std::size_t i = 0; i + 1 < entries.size(); ++i)
    if (!carrier.equal(carrier.oplus(entries[i], entries[i + 1]), entries[i])) return GoodnessReport{false, i};
  return GoodnessReport{};
}

GoodSeq::GoodSeq(CarrierPtr carrier, std::vector<Value> entries) : carrier_(std::move(carrier)) {
  for (const auto& e : entries) carrier_->check_member(e);
  const Value z = carrier_->zero();
  while (!entries.empty() && carrier_->equal(entries.back(), z)) entries.pop_back();
  const GoodnessReport r = is_good(*carrier_, entries);
  if (!r.good) throw std::invalid_argument("not a good sequence: fails at index " + std::to_string(*r.failing_index));
  entries_ = std::move(entries);
}

GoodSeq GoodSeq::unit(CarrierPtr carrier) {
  Value one = carrier->one();
  return GoodSeq(std::move(carrier), {std::move(one)});
}

std::string GoodSeq::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ", ";
    out += carrier_->format(entries_[i]);
  }
  return out + ")";
}

bool operator==(const GoodSeq& a, const GoodSeq& b) {
  if (a.carrier_->name() != b.carrier_->name() || a.length() != b.length()) return false;
  for (std::size_t i = 0; i < a.length(); ++i)
    if (!a.carrier_->equal(a.entries_[i], b.entries_[i])) return false;
  return true;
}

GoodSeq gs_add(const GoodSeq& a, const GoodSeq& b) {
  same_carrier(a, b);
  const Carrier& c = *a.carrier();
  const std::size_t len = a.length() + b.length();
  std::vector<Value> out;
  out.reserve(len);
  // 1-based: c_i = a_i ⊕ (a_{i-1} ⊙ b_1) ⊕ ... ⊕ (a_1 ⊙ b_{i-1}) ⊕ b_i
  for (std::size_t i = 1; i <= len; ++i) {
    Value acc = a.at(i - 1);
    for (std::size_t j = 1; j < i; ++j) acc = c.oplus(acc, c.odot(a.at(i - j - 1), b.at(j - 1)));
    out.push_back(c.oplus(acc, b.at(i - 1)));
  }
  const GoodnessReport r = is_good(c, out);
  if (!r.good) throw std::logic_error("sum of good sequences is not good");
  return GoodSeq(a.carrier(), std::move(out));
}

GsOrder gs_order(const GoodSeq& a, const GoodSeq& b) {
  same_carrier(a, b);
  const Carrier& c = *a.carrier();
  bool le = true;
  bool ge = true;
  for (std::size_t i = 0; i < std::max(a.length(), b.length()); ++i) {
    le = le && c.leq(a.at(i), b.at(i));
    ge = ge && c.leq(b.at(i), a.at(i));
  }
  if (le && ge) return GsOrder::kEqual;
  if (le) return GsOrder::kLess;
  if (ge) return GsOrder::kGreater;
  return GsOrder::kIncomparable;
}

bool gs_leq(const GoodSeq& a, const GoodSeq& b) {
  const GsOrder o = gs_order(a, b);
  return o == GsOrder::kLess || o == GsOrder::kEqual;
}

GoodSeq gs_join(const GoodSeq& a, const GoodSeq& b) { return pointwise(a, b, true); }
GoodSeq gs_meet(const GoodSeq& a, const GoodSeq& b) { return pointwise(a, b, false); }

std::string XiElem::to_string() const { return pos.to_string() + " - " + neg.to_string(); }

XiElem xi_zero(const CarrierPtr& carrier) { return XiElem{GoodSeq::zero(carrier), GoodSeq::zero(carrier)}; }
XiElem xi_unit(const CarrierPtr& carrier) { return XiElem{GoodSeq::unit(carrier), GoodSeq::zero(carrier)}; }

XiElem xi_embed(const CarrierPtr& carrier, const Value& a) {
  return XiElem{GoodSeq(carrier, {a}), GoodSeq::zero(carrier)};
}

XiElem xi_add(const XiElem& x, const XiElem& y) { return XiElem{gs_add(x.pos, y.pos), gs_add(x.neg, y.neg)}; }
XiElem xi_negate(const XiElem& x) { return XiElem{x.neg, x.pos}; }

bool xi_equal(const XiElem& x, const XiElem& y) { return gs_add(x.pos, y.neg) == gs_add(y.pos, x.neg); }
bool xi_leq(const XiElem& x, const XiElem& y) { return gs_leq(gs_add(x.pos, y.neg), gs_add(y.pos, x.neg)); }

XiElem xi_join(const XiElem& x, const XiElem& y) {
  return XiElem{gs_join(gs_add(x.pos, y.neg), gs_add(y.pos, x.neg)), gs_add(x.neg, y.neg)};
}

XiElem xi_meet(const XiElem& x, const XiElem& y) { return xi_negate(xi_join(xi_negate(x), xi_negate(y))); }

std::vector<GoodSeq> good_sequences(const FiniteAlgebra& a, std::size_t max_length) {
  std::vector<GoodSeq> out;
  std::vector<Value> current;
  const std::function<void()> extend = [&] {
    out.emplace_back(a.carrier(), current);
    if (current.size() == max_length) return;
    const std::size_t prev = current.empty() ? a.one() : a.index_of(current.back());
    for (std::size_t e = 1; e < a.size(); ++e) {
      if (a.oplus(prev, e) != prev) continue;
      current.push_back(a.element(e));
      extend();
      current.pop_back();
    }
  };
  extend();
  return out;
}

GammaXiReport gamma_of_xi(const FiniteAlgebra& a) {
  const CarrierPtr& c = a.carrier();
  GammaXiReport r;
  r.algebra_size = a.size();

  const XiElem zero = xi_zero(c);
  const XiElem unit = xi_unit(c);
  const std::vector<GoodSeq> seqs = good_sequences(a, 2);
  std::vector<XiElem> interval;
  for (const auto& p : seqs) {
    for (const auto& q : seqs) {
      XiElem x{p, q};
      if (!xi_leq(zero, x) || !xi_leq(x, unit)) continue;
      const bool seen = std::any_of(interval.begin(), interval.end(), [&](const XiElem& y) { return xi_equal(x, y); });
      if (!seen) interval.push_back(std::move(x));
    }
  }
  r.interval_size = interval.size();

  std::vector<XiElem> image;
  for (std::size_t i = 0; i < a.size(); ++i) image.push_back(xi_embed(c, a.element(i)));

  bool injective = true;
  for (std::size_t i = 0; i < image.size(); ++i)
    for (std::size_t j = i + 1; j < image.size(); ++j)
      if (xi_equal(image[i], image[j])) injective = false;
  bool onto = true;
  for (const auto& x : interval) {
    const auto hits = std::count_if(image.begin(), image.end(), [&](const XiElem& y) { return xi_equal(x, y); });
    if (hits != 1) onto = false;
  }
  r.bijective = injective && onto && interval.size() == a.size();

  r.preserves_oplus = true;
  r.preserves_neg = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const XiElem complement = xi_add(unit, xi_negate(image[i]));
    if (!xi_equal(complement, image[a.neg(i)])) r.preserves_neg = false;
    for (std::size_t j = 0; j < a.size(); ++j) {
      const XiElem truncated = xi_meet(xi_add(image[i], image[j]), unit);
      if (!xi_equal(truncated, image[a.oplus(i, j)])) r.preserves_oplus = false;
    }
  }
  for (std::size_t i = 0; i < a.size(); ++i) r.elements.push_back(a.format(i));
  return r;
}

ChainIsoReport xi_chain_iso(unsigned n, unsigned bound) {
  if (n == 0) throw std::invalid_argument("chain order must be positive");
  ChainIsoReport r;
  r.n = n;
  r.bound = bound;
  const CarrierPtr chain = std::make_shared<FiniteChain>(n);
  const FiniteAlgebra a(chain);
  const unsigned limit = bound * n;

  std::vector<GoodSeq> seqs;
  std::vector<unsigned> sums;
  std::vector<Value> current;
  const std::function<void(std::size_t, unsigned)> extend = [&](std::size_t prev, unsigned sum) {
    seqs.emplace_back(chain, current);
    sums.push_back(sum);
    for (std::size_t e = 1; e <= n && sum + e <= limit; ++e) {
      if (a.oplus(prev, e) != prev) continue;
      current.push_back(a.element(e));
      extend(e, sum + static_cast<unsigned>(e));
      current.pop_back();
    }
  };
  extend(a.one(), 0);
  r.count = seqs.size();

  const std::set<unsigned> image(sums.begin(), sums.end());
  r.injective = image.size() == sums.size();
  r.surjective = image.size() == limit + 1 && *image.rbegin() == limit;

  const auto sum_of = [&](const GoodSeq& s) {
    unsigned total = 0;
    for (const auto& v : s.entries()) total += a.index_of(v);
    return total;
  };
  r.additive = true;
  r.order_preserving = true;
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    for (std::size_t j = 0; j < seqs.size(); ++j) {
      if (gs_leq(seqs[i], seqs[j]) != (sums[i] <= sums[j])) r.order_preserving = false;
      if (sums[i] + sums[j] <= limit && sum_of(gs_add(seqs[i], seqs[j])) != sums[i] + sums[j]) r.additive = false;
    }
  }
  r.unit_to_n = sum_of(GoodSeq::unit(chain)) == n;
  return r;
}

}  // namespace mvdelta
