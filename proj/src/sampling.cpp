#include "mvdelta/sampling.hpp"

#include <set>

namespace mvdelta {

Q01 random_dyadic(Rng& rng, unsigned depth) {
  if (depth > 62) throw std::invalid_argument("dyadic depth must be at most 62");
  std::uniform_int_distribution<std::uint64_t> dist(0, std::uint64_t{1} << depth);
  return Q01(Rat(mpz_class(static_cast<unsigned long>(dist(rng))), mpz_class(1)) * pow2_inv(depth));
}

PLFunc random_plfunc(Rng& rng, unsigned max_interior, unsigned depth) {
  std::uniform_int_distribution<unsigned> count(0, max_interior);
  std::set<Rat> xs;
  const unsigned k = count(rng);
  for (unsigned i = 0; i < k; ++i) {
    const Rat x = random_dyadic(rng, depth).value();
    if (x.sign() > 0 && x < Rat(1)) xs.insert(x);
  }
  std::vector<Breakpoint> pts;
  pts.push_back({Rat(0), random_dyadic(rng, depth).value()});
  for (const auto& x : xs) pts.push_back({x, random_dyadic(rng, depth).value()});
  pts.push_back({Rat(1), random_dyadic(rng, depth).value()});
  return PLFunc::from_points(std::move(pts));
}

PLFunc random_nonzero_plfunc(Rng& rng, unsigned max_interior, unsigned depth) {
  for (;;) {
    PLFunc f = random_plfunc(rng, max_interior, depth);
    if (!f.is_zero()) return f;
  }
}

Value random_element(const Carrier& carrier, Rng& rng, unsigned depth, std::int64_t chang_range) {
  if (const auto* chain = dynamic_cast<const FiniteChain*>(&carrier)) {
    std::uniform_int_distribution<unsigned> d(0, chain->order());
    return chain->element(d(rng));
  }
  if (const auto* prod = dynamic_cast<const ProductCarrier*>(&carrier)) {
    Tuple t;
    for (const auto& f : prod->factors()) t.push_back(random_element(*f, rng, depth, chang_range));
    return t;
  }
  if (dynamic_cast<const ChangCarrier*>(&carrier)) {
    std::uniform_int_distribution<int> level(0, 1);
    std::uniform_int_distribution<std::int64_t> off(0, chang_range);
    const int l = level(rng);
    return ChangElem{l, l == 0 ? off(rng) : -off(rng)};
  }
  if (dynamic_cast<const PLCarrier*>(&carrier)) return random_plfunc(rng, 4, depth);
  if (dynamic_cast<const UnitInterval*>(&carrier)) return random_dyadic(rng, depth);
  throw CarrierError("cannot sample elements of " + carrier.name());
}

}  // namespace mvdelta
