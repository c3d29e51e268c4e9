#include "mvdelta/ideals.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mvdelta {

namespace {

unsigned saturation(const FiniteAlgebra& a) {
  unsigned n = 1;
  for (unsigned o : a.orders()) n = std::max(n, o);
  return n;
}

bool ideal_less(const Ideal& x, const Ideal& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

bool includes(const Ideal& big, const Ideal& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<Value> to_values(const FiniteAlgebra& a, const Ideal& s) {
  std::vector<Value> out;
  for (std::size_t i : s) out.push_back(a.element(i));
  return out;
}

}  // namespace

bool is_ideal(const FiniteAlgebra& a, const Ideal& s) {
  std::vector<bool> member(a.size(), false);
  for (std::size_t i : s) {
    if (i >= a.size()) return false;
    member[i] = true;
  }
  if (!member[a.zero()]) return false;
  for (std::size_t x : s) {
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.leq(y, x) && !member[y]) return false;
    for (std::size_t y : s)
      if (!member[a.oplus(x, y)]) return false;
  }
  return true;
}

Ideal principal_ideal(const FiniteAlgebra& a, std::size_t x) {
  const std::size_t e = a.nfold(saturation(a), x);
  Ideal out;
  for (std::size_t y = 0; y < a.size(); ++y)
    if (a.leq(y, e)) out.push_back(y);
  return out;
}

std::vector<Ideal> enumerate_ideals(const FiniteAlgebra& a) {
  std::set<Ideal> seen;
  for (std::size_t x = 0; x < a.size(); ++x) seen.insert(principal_ideal(a, x));
  std::vector<Ideal> out(seen.begin(), seen.end());
  for (const auto& s : out)
    if (!is_ideal(a, s)) throw std::logic_error("generated set is not an ideal");
  std::sort(out.begin(), out.end(), ideal_less);
  return out;
}

std::vector<Ideal> maximal_ideals(const FiniteAlgebra& a) {
  std::vector<Ideal> proper;
  for (auto& s : enumerate_ideals(a))
    if (!std::binary_search(s.begin(), s.end(), a.one())) proper.push_back(std::move(s));
  std::vector<Ideal> out;
  for (const auto& s : proper) {
    const bool maximal = std::none_of(proper.begin(), proper.end(), [&](const Ideal& t) {
      return t.size() > s.size() && includes(t, s);
    });
    if (maximal) out.push_back(s);
  }
  return out;
}

Ideal radical_by_ideals(const FiniteAlgebra& a) {
  const std::vector<Ideal> max = maximal_ideals(a);
  if (max.empty()) return Ideal{a.zero()};
  Ideal acc = max.front();
  for (std::size_t i = 1; i < max.size(); ++i) {
    Ideal next;
    std::set_intersection(acc.begin(), acc.end(), max[i].begin(), max[i].end(), std::back_inserter(next));
    acc = std::move(next);
  }
  return acc;
}

Ideal radical_by_infinitesimals(const FiniteAlgebra& a) {
  Ideal out;
  const auto bound = static_cast<unsigned>(std::min<std::size_t>(a.size(), saturation(a) + 1));
  for (std::size_t x = 0; x < a.size(); ++x) {
    bool ok = true;
    std::size_t nx = x;
    for (unsigned n = 1; n <= bound && ok; ++n) {
      if (n > 1) nx = a.oplus(nx, x);
      ok = a.leq(nx, a.neg(x));
    }
    if (ok) out.push_back(x);
  }
  return out;
}

Ideal radical(const FiniteAlgebra& a) {
  Ideal by_ideals = radical_by_ideals(a);
  if (by_ideals != radical_by_infinitesimals(a))
    throw std::logic_error("radical characterisations disagree on " + a.carrier()->name());
  return by_ideals;
}

RadicalReport radical_of(const CarrierPtr& carrier) {
  RadicalReport r;
  r.carrier = carrier->name();
  if (FiniteAlgebra::is_finite(*carrier)) {
    const FiniteAlgebra a(carrier);
    const Ideal rad = radical(a);
    r.members = to_values(a, rad);
    r.description = "{";
    for (std::size_t i = 0; i < rad.size(); ++i) r.description += (i ? ", " : "") + a.format(rad[i]);
    r.description += "}";
    r.semisimple = rad.size() == 1;
    return r;
  }
  if (carrier->name() == "chang") {
    r.description = "{(0,k) : k >= 0}";
    r.semisimple = false;
    return r;
  }
  if (carrier->name() == "pl" || carrier->name() == "unit") {
    r.description = "{0}";
    r.members = std::vector<Value>{carrier->zero()};
    r.semisimple = true;
    return r;
  }
  throw CarrierError("no radical computation for carrier " + carrier->name());
}

bool chang_in_radical(const ChangElem& x) {
  if (!is_chang_element(x)) throw CarrierError(x.to_string() + " is not an element of Chang's algebra");
  return x.level == 0;
}

namespace {

// Least n with (n+1)·m > 1, i.e. n·x ≰ ¬x at a point of value m > 0.
unsigned first_failure(const Rat& m) { return static_cast<unsigned>(((Rat(1) - m) / m).floor().get_ui()) + 1; }

InfinitesimalReport not_infinitesimal(unsigned n, std::string why) {
  return InfinitesimalReport{false, n, std::move(why)};
}

InfinitesimalReport zero_report() { return InfinitesimalReport{false, std::nullopt, "0 is not infinitesimal"}; }

}  // namespace

InfinitesimalReport is_infinitesimal(const Carrier& carrier, const Value& x, unsigned bound) {
  if (bound == 0) throw std::invalid_argument("bound must be positive");
  carrier.check_member(x);
  if (carrier.equal(x, carrier.zero())) return zero_report();

  if (x.is<ChangElem>()) {
    const ChangElem c = x.as<ChangElem>();
    if (c.level == 0) {
      const std::string k = std::to_string(c.offset);
      return InfinitesimalReport{true, std::nullopt,
                                 "n*(0," + k + ") = (0,n*" + k + ") <= (1,-" + k + ") = neg x for every n"};
    }
    return not_infinitesimal(1, "1*x = " + c.to_string() + " > " + chang_neg(c).to_string() + " = neg x");
  }

  if (FiniteAlgebra::is_finite(carrier)) {
    const FiniteAlgebra a(std::shared_ptr<const Carrier>(&carrier, [](const Carrier*) {}));
    const std::size_t i = a.index_of(x);
    std::size_t nx = i;
    for (unsigned n = 1; n <= a.size(); ++n) {
      if (n > 1) nx = a.oplus(nx, i);
      if (!a.leq(nx, a.neg(i)))
        return not_infinitesimal(n, std::to_string(n) + "*x = " + a.format(nx) + " is not below neg x = " +
                                        a.format(a.neg(i)));
    }
    return InfinitesimalReport{true, std::nullopt, "n*x <= neg x for all n up to the algebra size"};
  }

  if (x.is<Q01>()) {
    const Rat q = x.as<Q01>().value();
    const unsigned n = first_failure(q);
    const Q01 nx = Q01(min(Rat(static_cast<long>(n)) * q, Rat(1)));
    return not_infinitesimal(n, std::to_string(n) + "*x = " + nx.to_string() + " > " +
                                    (Rat(1) - q).to_string() + " = neg x");
  }

  if (x.is<PLFunc>()) {
    const PLFunc& f = x.as<PLFunc>();
    const Rat m = f.max_value();
    const unsigned n = first_failure(m);
    if (pl_leq(pl_nfold(n, f), pl_neg(f)) || (n > 1 && !pl_leq(pl_nfold(n - 1, f), pl_neg(f))))
      throw std::logic_error("archimedean bound failed verification");
    return not_infinitesimal(n, std::to_string(n) + "*f exceeds neg f at x = " + f.argmax().x.to_string());
  }

  throw CarrierError("no infinitesimal test for carrier " + carrier.name());
}

std::optional<ChangElem> halving_witness(const ChangElem& x) {
  if (!is_chang_element(x)) throw CarrierError(x.to_string() + " is not an element of Chang's algebra");
  // Level-one candidates (1,m) square to (1,2m), never 0.
  if (x.level != 0 || x.offset % 2 != 0) return std::nullopt;
  const ChangElem y{0, x.offset / 2};
  if (chang_oplus(y, y) != x || chang_odot(y, y) != ChangElem{}) return std::nullopt;
  return y;
}

}  // namespace mvdelta
