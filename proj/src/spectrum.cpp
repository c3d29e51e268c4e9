#include "mvdelta/spectrum.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "mvdelta/mv_ops.hpp"

namespace mvdelta {

namespace {

std::vector<bool> mask(const FiniteAlgebra& a, const Ideal& s) {
  std::vector<bool> m(a.size(), false);
  for (std::size_t i : s) m[i] = true;
  return m;
}

bool subset(const Ideal& small, const Ideal& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

using IndexSet = std::vector<std::size_t>;

IndexSet intersect(const IndexSet& x, const IndexSet& y) {
  IndexSet out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

}  // namespace

bool is_hom(const FiniteAlgebra& a, const std::vector<Q01>& table) {
  if (table.size() != a.size()) return false;
  if (table[a.zero()] != Q01::zero()) return false;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (table[a.neg(x)] != neg(table[x])) return false;
    for (std::size_t y = x; y < a.size(); ++y)
      if (table[a.oplus(x, y)] != oplus(table[x], table[y])) return false;
  }
  return true;
}

Ideal kernel(const Hom& h) {
  Ideal out;
  for (std::size_t i = 0; i < h.table.size(); ++i)
    if (h.table[i] == Q01::zero()) out.push_back(i);
  return out;
}

Hom holder_hom(const FiniteAlgebra& a, const Ideal& maximal) {
  const std::vector<bool> in = mask(a, maximal);
  if (in[a.one()]) throw std::invalid_argument("ideal is not proper");
  std::vector<std::size_t> reps;
  std::vector<std::size_t> cls(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) {
    auto it = std::find_if(reps.begin(), reps.end(), [&](std::size_t r) { return in[a.dist(x, r)]; });
    if (it == reps.end()) {
      cls[x] = reps.size();
      reps.push_back(x);
    } else {
      cls[x] = static_cast<std::size_t>(it - reps.begin());
    }
  }
  const auto below = [&](std::size_t r, std::size_t s) { return in[a.ominus(r, s)] && !in[a.ominus(s, r)]; };
  const long k = static_cast<long>(reps.size()) - 1;
  std::vector<long> rank(reps.size(), 0);
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (std::size_t d = 0; d < reps.size(); ++d)
      if (below(reps[d], reps[c])) ++rank[c];

  Hom h{a.carrier(), {}};
  h.table.reserve(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) h.table.emplace_back(rank[cls[x]], k);
  if (!is_hom(a, h.table)) throw std::logic_error("quotient by a maximal ideal is not a chain embedding");
  return h;
}

std::vector<Hom> enumerate_homs(const FiniteAlgebra& a) {
  std::vector<Hom> out;
  for (const auto& m : maximal_ideals(a)) out.push_back(holder_hom(a, m));
  return out;
}

std::vector<std::vector<std::size_t>> homs_between(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  const std::size_t m = a.orders().size();
  double combos = 1;
  for (std::size_t i = 0; i < m; ++i) combos *= static_cast<double>(b.size());
  if (combos > 1e6) throw std::invalid_argument("homomorphism search space too large");

  std::vector<std::size_t> generator(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<unsigned> d(m, 0);
    d[i] = 1;
    generator[i] = a.index(d);
  }

  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> image(m, 0);
  const std::function<void(std::size_t)> search = [&](std::size_t pos) {
    if (pos < m) {
      for (std::size_t y = 0; y < b.size(); ++y) {
        image[pos] = y;
        search(pos + 1);
      }
      return;
    }
    std::vector<std::size_t> table(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
      const std::vector<unsigned> d = a.digits(x);
      std::size_t acc = b.zero();
      for (std::size_t i = 0; i < m; ++i)
        if (d[i] > 0) acc = b.oplus(acc, b.nfold(d[i], image[i]));
      table[x] = acc;
    }
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (table[a.neg(x)] != b.neg(table[x])) return;
      for (std::size_t y = x; y < a.size(); ++y)
        if (table[a.oplus(x, y)] != b.oplus(table[x], table[y])) return;
    }
    out.push_back(std::move(table));
  };
  search(0);
  return out;
}

std::vector<std::size_t> v_of(const FiniteAlgebra& a, const std::vector<std::size_t>& s) {
  Ideal sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::vector<Ideal> max = maximal_ideals(a);
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < max.size(); ++j)
    if (subset(sorted, max[j])) out.push_back(j);
  return out;
}

SpectrumResult spectrum(const FiniteAlgebra& a) {
  SpectrumResult r;
  r.ideals = maximal_ideals(a);
  r.homs = enumerate_homs(a);
  r.kernels_match = r.homs.size() == r.ideals.size();
  for (std::size_t i = 0; i < r.homs.size() && r.kernels_match; ++i)
    r.kernels_match = kernel(r.homs[i]) == r.ideals[i];

  const auto v = [&](const Ideal& s) {
    IndexSet out;
    for (std::size_t j = 0; j < r.ideals.size(); ++j)
      if (subset(s, r.ideals[j])) out.push_back(j);
    return out;
  };
  std::set<IndexSet> closed;
  for (const auto& i : enumerate_ideals(a)) closed.insert(v(i));
  std::set<IndexSet> basis;
  for (std::size_t x = 0; x < a.size(); ++x) basis.insert(v(Ideal{x}));
  r.closed_sets.assign(closed.begin(), closed.end());
  r.basis.assign(basis.begin(), basis.end());

  std::set<IndexSet> generated = basis;
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<IndexSet> current(generated.begin(), generated.end());
    for (const auto& x : current)
      for (const auto& y : current) grew = generated.insert(intersect(x, y)).second || grew;
  }
  r.basis_generates = generated == closed;
  r.discrete = r.ideals.size() < 63 && closed.size() == (std::size_t{1} << r.ideals.size());
  return r;
}

EtaReport eta(const FiniteAlgebra& a) {
  EtaReport r;
  const std::vector<Hom> homs = enumerate_homs(a);
  for (std::size_t x = 0; x < a.size(); ++x) {
    std::vector<Q01> t;
    for (const auto& h : homs) t.push_back(h.table[x]);
    r.images.push_back(std::move(t));
  }
  const std::set<std::vector<Q01>> distinct(r.images.begin(), r.images.end());
  r.injective = distinct.size() == a.size();
  r.semisimple = radical(a).size() == 1;
  std::size_t product = 1;
  for (const auto& h : homs) product *= std::set<Q01>(h.table.begin(), h.table.end()).size();
  r.onto_product_of_images = distinct.size() == product;
  return r;
}

ChangEtaReport chang_eta() { return ChangEtaReport{}; }

Q01 chang_hom(const ChangElem& x) {
  if (!is_chang_element(x)) throw CarrierError(x.to_string() + " is not an element of Chang's algebra");
  return x.level == 0 ? Q01::zero() : Q01::one();
}

EpsilonReport epsilon_finite(const FiniteAlgebra& a) {
  const auto* prod = dynamic_cast<const ProductCarrier*>(a.carrier().get());
  if (prod == nullptr) throw CarrierError("epsilon_finite expects a product of finite chains");
  for (const auto& f : prod->factors())
    if (!dynamic_cast<const FiniteChain*>(f.get())) throw CarrierError("factor " + f->name() + " is not a finite chain");

  EpsilonReport r;
  r.points = prod->factors().size();
  const std::vector<Ideal> max = maximal_ideals(a);
  r.maximal_ideals = max.size();
  std::set<Ideal> hit;
  bool all_maximal = true;
  for (std::size_t p = 0; p < r.points; ++p) {
    Ideal k;
    for (std::size_t x = 0; x < a.size(); ++x)
      if (a.digits(x)[p] == 0) k.push_back(x);
    all_maximal = all_maximal && std::find(max.begin(), max.end(), k) != max.end();
    hit.insert(std::move(k));
  }
  r.bijection = all_maximal && hit.size() == r.points && hit.size() == max.size();
  r.discrete = spectrum(a).discrete;
  return r;
}

Value PLHom::apply(const PLFunc& f) const {
  const PLFunc g = phi ? pl_precompose(f, *phi) : f;
  if (point) return g.at(*point);
  return g;
}

const Carrier& PLHom::target() const {
  static const UnitInterval unit;
  static const PLCarrier pl;
  if (point) return unit;
  return pl;
}

std::string PLHom::describe() const {
  std::string out = "f";
  if (phi) out = "f o " + plfunc_to_json(*phi);
  if (point) out = "(" + out + ")(" + point->to_string() + ")";
  return out;
}

DeltaPreservationReport delta_preservation_check(const PLHom& h, std::size_t samples, std::uint64_t seed) {
  DeltaPreservationReport r;
  Rng rng(seed);
  std::uniform_int_distribution<unsigned> len(0, 3);
  const Carrier& target = h.target();
  const auto record = [&](bool ok, const std::string& what) {
    ++r.checks;
    if (ok) return;
    if (r.failures++ == 0) r.first_failure = what;
  };
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<PLFunc> prefix(len(rng));
    for (auto& f : prefix) f = random_plfunc(rng);
    const PLFunc tail = random_plfunc(rng);
    std::vector<Value> mapped;
    for (const auto& f : prefix) mapped.push_back(h.apply(f));
    const Value lhs = h.apply(pl_delta(prefix, tail));
    const Value rhs = target.delta(mapped, h.apply(tail));
    record(target.equal(lhs, rhs), "series with prefix length " + std::to_string(prefix.size()) + " under " +
                                       h.describe());
    for (unsigned n = 1; n <= 4; ++n) {
      Value iterated = h.apply(tail);
      for (unsigned i = 0; i < n; ++i) iterated = target.half(iterated);
      record(target.equal(h.apply(pl_halfn(n, tail)), iterated), "halving n=" + std::to_string(n) + " under " +
                                                                     h.describe());
    }
  }
  return r;
}

}  // namespace mvdelta
