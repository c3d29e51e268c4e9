#include "mvdelta/plfunc.hpp"

#include <algorithm>
#include <functional>
#include <nlohmann/json.hpp>

namespace mvdelta {

namespace {

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

std::vector<Rat> merged_xs(std::span<const PLFunc* const> fs) {
  std::vector<Rat> xs;
  for (const PLFunc* f : fs)
    for (const auto& p : f->points()) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

// Samples a function that is affine between consecutive abscissae.
PLFunc sample(const std::vector<Rat>& xs, const std::function<Rat(const Rat&)>& value_at) {
  std::vector<Breakpoint> pts;
  pts.reserve(xs.size());
  for (const auto& x : xs) pts.push_back({x, value_at(x)});
  return make_canonical(std::move(pts));
}

// Adds the zeros of `h` lying strictly inside each segment; h must be
// affine on every segment of xs.
void add_crossings(std::vector<Rat>& xs, const std::function<Rat(const Rat&)>& h) {
  std::vector<Rat> extra;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rat ha = h(xs[i]);
    const Rat hb = h(xs[i + 1]);
    if (ha.sign() * hb.sign() < 0) extra.push_back(xs[i] + (xs[i + 1] - xs[i]) * ha / (ha - hb));
  }
  if (extra.empty()) return;
  xs.insert(xs.end(), extra.begin(), extra.end());
  std::sort(xs.begin(), xs.end());
}

}  // namespace

PLFunc make_canonical(std::vector<Breakpoint> pts) {
  std::vector<Breakpoint> out;
  out.reserve(pts.size());
  for (auto& p : pts) {
    while (out.size() >= 2 && collinear(out[out.size() - 2], out.back(), p)) out.pop_back();
    out.push_back(std::move(p));
  }
  return PLFunc(std::move(out));
}

PLFunc::PLFunc() : pts_{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}} {}

PLFunc PLFunc::constant(const Q01& c) { return PLFunc({{Rat(0), c.value()}, {Rat(1), c.value()}}); }

PLFunc PLFunc::identity() { return PLFunc({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}}); }

PLFunc PLFunc::from_points(std::vector<Breakpoint> points) {
  if (points.size() < 2) throw PLFormatError(points.size(), "at least two breakpoints are required");
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (p.x.sign() < 0 || p.x > Rat(1)) throw PLFormatError(i, "x outside [0,1]");
    if (p.y.sign() < 0 || p.y > Rat(1)) throw PLFormatError(i, "y outside [0,1]");
    if (i == 0 && !p.x.is_zero()) throw PLFormatError(i, "first x must be 0");
    if (i > 0 && !(points[i - 1].x < p.x)) throw PLFormatError(i, "x not strictly increasing");
  }
  if (points.back().x != Rat(1)) throw PLFormatError(points.size() - 1, "last x must be 1");
  return make_canonical(std::move(points));
}

Rat PLFunc::operator()(const Rat& x) const {
  if (x.sign() < 0 || x > Rat(1)) throw DomainError("evaluation point outside [0,1]");
  auto it = std::lower_bound(pts_.begin(), pts_.end(), x,
                             [](const Breakpoint& p, const Rat& v) { return p.x < v; });
  if (it->x == x) return it->y;
  const auto& b = *it;
  const auto& a = *(it - 1);
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

Breakpoint PLFunc::argmax() const {
  return *std::max_element(pts_.begin(), pts_.end(),
                           [](const Breakpoint& a, const Breakpoint& b) { return a.y < b.y; });
}

bool PLFunc::is_zero() const { return pts_.size() == 2 && pts_[0].y.is_zero() && pts_[1].y.is_zero(); }

std::string PLFunc::to_string() const { return plfunc_to_json(*this); }

PLOp parse_pl_op(std::string_view name) {
  if (name == "oplus") return PLOp::kOplus;
  if (name == "neg") return PLOp::kNeg;
  if (name == "odot") return PLOp::kOdot;
  if (name == "ominus") return PLOp::kOminus;
  if (name == "dist") return PLOp::kDist;
  if (name == "join") return PLOp::kJoin;
  if (name == "meet") return PLOp::kMeet;
  throw std::invalid_argument("unknown operation '" + std::string(name) + "'");
}

PLFunc pl_op(PLOp op, const PLFunc& f, const PLFunc& g) {
  if (op == PLOp::kNeg) return pl_neg(f);
  const PLFunc* both[] = {&f, &g};
  std::vector<Rat> xs = merged_xs(both);
  const auto sum_minus_one = [&](const Rat& x) { return f(x) + g(x) - Rat(1); };
  const auto difference = [&](const Rat& x) { return f(x) - g(x); };
  switch (op) {
    case PLOp::kOplus:
    case PLOp::kOdot:
      add_crossings(xs, sum_minus_one);
      break;
    default:
      add_crossings(xs, difference);
      break;
  }
  return sample(xs, [&](const Rat& x) -> Rat {
    const Rat a = f(x);
    const Rat b = g(x);
    switch (op) {
      case PLOp::kOplus: return min(a + b, Rat(1));
      case PLOp::kOdot: return max(a + b - Rat(1), Rat(0));
      case PLOp::kOminus: return max(a - b, Rat(0));
      case PLOp::kDist: return (a - b).abs();
      case PLOp::kJoin: return max(a, b);
      case PLOp::kMeet: return min(a, b);
      case PLOp::kNeg: break;
    }
    throw std::logic_error("unreachable");
  });
}

PLFunc pl_oplus(const PLFunc& f, const PLFunc& g) { return pl_op(PLOp::kOplus, f, g); }

PLFunc pl_neg(const PLFunc& f) {
  std::vector<Breakpoint> pts = f.points();
  for (auto& p : pts) p.y = Rat(1) - p.y;
  return make_canonical(std::move(pts));
}

PLFunc pl_nfold(unsigned n, const PLFunc& f) {
  if (n == 0) throw std::invalid_argument("nfold requires n >= 1");
  std::vector<Rat> xs;
  for (const auto& p : f.points()) xs.push_back(p.x);
  const Rat k(static_cast<long>(n));
  add_crossings(xs, [&](const Rat& x) { return k * f(x) - Rat(1); });
  return sample(xs, [&](const Rat& x) { return min(k * f(x), Rat(1)); });
}

PLFunc pl_delta(std::span<const PLFunc> prefix, const PLFunc& tail) {
  std::vector<const PLFunc*> all;
  for (const auto& p : prefix) all.push_back(&p);
  all.push_back(&tail);
  const std::vector<Rat> xs = merged_xs(all);
  const auto k = static_cast<unsigned>(prefix.size());
  return sample(xs, [&](const Rat& x) {
    Rat acc(0);
    for (unsigned i = 0; i < k; ++i) acc += prefix[i](x) * pow2_inv(i + 1);
    acc += tail(x) * pow2_inv(k);
    return acc;
  });
}

PLFunc pl_halfn(unsigned n, const PLFunc& f) {
  PLFunc out = f;
  const PLFunc zero;
  for (unsigned i = 0; i < n; ++i) out = pl_delta(std::span<const PLFunc>(&out, 1), zero);
  return out;
}

bool pl_leq(const PLFunc& f, const PLFunc& g) {
  const PLFunc* both[] = {&f, &g};
  for (const auto& x : merged_xs(both))
    if (f(x) > g(x)) return false;
  return true;
}

Q01 uniform_dist(const PLFunc& f, const PLFunc& g) {
  const PLFunc* both[] = {&f, &g};
  Rat best(0);
  for (const auto& x : merged_xs(both)) best = max(best, (f(x) - g(x)).abs());
  return Q01(best);
}

PLFunc pl_scale(const Q01& r, const PLFunc& f) {
  std::vector<Breakpoint> pts = f.points();
  for (auto& p : pts) p.y = r.value() * p.y;
  return make_canonical(std::move(pts));
}

PLFunc pl_scale_dyadic(const Q01& r, const PLFunc& f) {
  const mpz_class den = r.value().den();
  if (mpz_popcount(den.get_mpz_t()) != 1) throw DomainError(r.to_string() + " is not dyadic");
  if (r.value() == Rat(1)) return pl_delta({}, f);
  const auto depth = static_cast<unsigned>(mpz_sizeinbase(den.get_mpz_t(), 2) - 1);
  // r = num / 2^depth; digit i (1-based) is bit (depth - i) of num.
  const mpz_class num = r.value().num();
  std::vector<PLFunc> digits;
  for (unsigned i = 1; i <= depth; ++i)
    digits.push_back(mpz_tstbit(num.get_mpz_t(), depth - i) ? f : PLFunc());
  return pl_delta(digits, PLFunc());
}

PLFunc pl_precompose(const PLFunc& f, const PLFunc& phi) {
  std::vector<Rat> xs;
  const auto& ph = phi.points();
  for (std::size_t i = 0; i < ph.size(); ++i) {
    xs.push_back(ph[i].x);
    if (i + 1 == ph.size()) break;
    const auto& a = ph[i];
    const auto& b = ph[i + 1];
    if (a.y == b.y) continue;
    const Rat lo = min(a.y, b.y);
    const Rat hi = max(a.y, b.y);
    for (const auto& u : f.points()) {
      if (lo < u.x && u.x < hi) xs.push_back(a.x + (u.x - a.y) * (b.x - a.x) / (b.y - a.y));
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return sample(xs, [&](const Rat& x) { return f(phi(x)); });
}

std::optional<ArchimedeanCertificate> pl_archimedean_certificate(const PLFunc& f) {
  if (f.is_zero()) return std::nullopt;
  const Breakpoint top = f.argmax();
  const Rat n_rat = Rat((Rat(1) / top.y).ceil() + 1, 1);
  const auto n = static_cast<unsigned>(n_rat.num().get_ui());
  const PLFunc nf = pl_nfold(n, f);
  const PLFunc not_f = pl_neg(f);
  if (pl_leq(nf, not_f) || !(nf(top.x) > not_f(top.x)))
    throw std::logic_error("archimedean certificate failed verification");
  return ArchimedeanCertificate{n, top.x};
}

std::vector<PLFunc> increasing_approx(const PLFunc& target, unsigned depth) {
  if (depth == 0) throw std::invalid_argument("increasing_approx requires depth >= 1");
  std::vector<PLFunc> out;
  out.reserve(depth);
  for (unsigned i = 1; i <= depth; ++i) {
    // g_i = target - shift lies within t_i = 1/2^(i+2) of target - shift
    // (distance zero), so f_i = g_i ∨ 0.
    const Rat shift = Rat(3) * pow2_inv(i + 2);
    std::vector<Rat> xs;
    for (const auto& p : target.points()) xs.push_back(p.x);
    add_crossings(xs, [&](const Rat& x) { return target(x) - shift; });
    out.push_back(sample(xs, [&](const Rat& x) { return max(target(x) - shift, Rat(0)); }));
  }
  return out;
}

IsbellResult isbell_reconstruct(std::span<const PLFunc> s) {
  if (s.empty()) throw std::invalid_argument("isbell_reconstruct requires a nonempty sequence");
  if (s.size() > 30) throw std::invalid_argument("isbell_reconstruct supports at most 30 terms");
  const Rat first_norm = s[0].max_value();
  if (first_norm > Rat(1, 2))
    throw IsbellHypothesisError(1, first_norm, "||s_1|| = " + first_norm.to_string() + " exceeds 1/2");
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!pl_leq(s[i - 1], s[i]))
      throw IsbellHypothesisError(i + 1, Rat(0), "sequence not increasing at index " + std::to_string(i + 1));
    const Rat gap = uniform_dist(s[i], s[i - 1]).value();
    if (gap > pow2_inv(static_cast<unsigned>(i + 1)))
      throw IsbellHypothesisError(i + 1, gap,
                                  "||s_" + std::to_string(i + 1) + " - s_" + std::to_string(i) + "|| = " +
                                      gap.to_string() + " exceeds 1/2^" + std::to_string(i + 1));
  }
  std::vector<PLFunc> terms;
  terms.reserve(s.size());
  PLFunc previous;
  for (std::size_t i = 0; i < s.size(); ++i) {
    // 2^i (s_i ⊖ s_{i-1}) never truncates because the gap is at most 1/2^i.
    terms.push_back(pl_nfold(1u << (i + 1), pl_op(PLOp::kOminus, s[i], previous)));
    previous = s[i];
  }
  const PLFunc tail = terms.back();
  return IsbellResult{pl_delta(terms, tail), pow2_inv(static_cast<unsigned>(s.size()))};
}

PLFunc plfunc_from_json(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("PL function JSON must be an array of [x, y] pairs");
  std::vector<Breakpoint> pts;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& item = doc[i];
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
      throw PLFormatError(i, "expected a pair of rational strings");
    try {
      pts.push_back({Rat::parse(item[0].get<std::string>()), Rat::parse(item[1].get<std::string>())});
    } catch (const DomainError& e) {
      throw PLFormatError(i, e.what());
    }
  }
  return PLFunc::from_points(std::move(pts));
}

std::string plfunc_to_json(const PLFunc& f) {
  std::string out = "[";
  for (std::size_t i = 0; i < f.points().size(); ++i) {
    const auto& p = f.points()[i];
    if (i) out += ",";
    out += "[\"" + p.x.to_string() + "\",\"" + p.y.to_string() + "\"]";
  }
  return out + "]";
}

}  // namespace mvdelta
