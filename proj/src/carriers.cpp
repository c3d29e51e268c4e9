#include "mvdelta/carriers.hpp"

#include <cctype>
#include <charconv>

#include "mvdelta/mv_ops.hpp"

namespace mvdelta {

// ---------------------------------------------------------------------------
// UnitInterval

Value UnitInterval::oplus(const Value& x, const Value& y) const {
  return mvdelta::oplus(x.as<Q01>(), y.as<Q01>());
}

Value UnitInterval::neg(const Value& x) const { return mvdelta::neg(x.as<Q01>()); }

void UnitInterval::check_member(const Value& x) const { (void)x.as<Q01>(); }

bool UnitInterval::leq(const Value& x, const Value& y) const { return x.as<Q01>() <= y.as<Q01>(); }

Value UnitInterval::delta(std::span<const Value> prefix, const Value& tail) const {
  Rat acc(0);
  for (std::size_t i = 0; i < prefix.size(); ++i)
    acc += prefix[i].as<Q01>().value() * pow2_inv(static_cast<unsigned>(i + 1));
  acc += tail.as<Q01>().value() * pow2_inv(static_cast<unsigned>(prefix.size()));
  return Q01(acc);
}

std::string UnitInterval::format(const Value& x) const { return x.as<Q01>().to_string(); }

Value UnitInterval::parse_element(std::string_view text) const {
  try {
    return Q01::parse(text);
  } catch (const DomainError& e) {
    throw CarrierError(e.what());
  }
}

// ---------------------------------------------------------------------------
// FiniteChain

FiniteChain::FiniteChain(unsigned n) : n_(n) {
  if (n == 0) throw std::invalid_argument("chain order must be positive");
}

Value FiniteChain::oplus(const Value& x, const Value& y) const {
  check_member(x);
  check_member(y);
  return mvdelta::oplus(x.as<Q01>(), y.as<Q01>());
}

Value FiniteChain::neg(const Value& x) const {
  check_member(x);
  return mvdelta::neg(x.as<Q01>());
}

void FiniteChain::check_member(const Value& x) const {
  const Q01& q = x.as<Q01>();
  if (mpz_class(n_) % q.value().den() != 0)
    throw CarrierError(q.to_string() + " is not an element of " + name());
}

bool FiniteChain::leq(const Value& x, const Value& y) const { return x.as<Q01>() <= y.as<Q01>(); }

Value FiniteChain::from_rational(const Q01& c) const {
  Value v = c;
  check_member(v);
  return v;
}

std::string FiniteChain::format(const Value& x) const { return x.as<Q01>().to_string(); }

Value FiniteChain::parse_element(std::string_view text) const {
  Value v;
  try {
    v = Q01::parse(text);
  } catch (const DomainError& e) {
    throw CarrierError(e.what());
  }
  check_member(v);
  return v;
}

unsigned FiniteChain::index_of(const Value& x) const {
  check_member(x);
  const Rat k = x.as<Q01>().value() * Rat(static_cast<long>(n_));
  return static_cast<unsigned>(k.num().get_ui());
}

Value FiniteChain::element(unsigned k) const {
  if (k > n_) throw CarrierError("chain index out of range");
  return Q01(static_cast<long>(k), static_cast<long>(n_));
}

// ---------------------------------------------------------------------------
// ProductCarrier

ProductCarrier::ProductCarrier(std::vector<CarrierPtr> factors) : factors_(std::move(factors)) {}

std::string ProductCarrier::name() const {
  std::string out = "prod(";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ",";
    out += factors_[i]->name();
  }
  return out + ")";
}

const Tuple& ProductCarrier::components(const Value& x) const {
  const Tuple& t = x.as<Tuple>();
  if (t.size() != factors_.size())
    throw CarrierError("tuple of arity " + std::to_string(t.size()) + " used with " + name());
  return t;
}

Value ProductCarrier::zero() const {
  Tuple t;
  for (const auto& f : factors_) t.push_back(f->zero());
  return t;
}

Value ProductCarrier::oplus(const Value& x, const Value& y) const {
  const Tuple& a = components(x);
  const Tuple& b = components(y);
  Tuple out;
  for (std::size_t i = 0; i < factors_.size(); ++i) out.push_back(factors_[i]->oplus(a[i], b[i]));
  return out;
}

Value ProductCarrier::neg(const Value& x) const {
  const Tuple& a = components(x);
  Tuple out;
  for (std::size_t i = 0; i < factors_.size(); ++i) out.push_back(factors_[i]->neg(a[i]));
  return out;
}

void ProductCarrier::check_member(const Value& x) const {
  const Tuple& a = components(x);
  for (std::size_t i = 0; i < factors_.size(); ++i) factors_[i]->check_member(a[i]);
}

bool ProductCarrier::equal(const Value& x, const Value& y) const {
  const Tuple& a = components(x);
  const Tuple& b = components(y);
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (!factors_[i]->equal(a[i], b[i])) return false;
  return true;
}

bool ProductCarrier::leq(const Value& x, const Value& y) const {
  const Tuple& a = components(x);
  const Tuple& b = components(y);
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (!factors_[i]->leq(a[i], b[i])) return false;
  return true;
}

bool ProductCarrier::has_delta() const {
  for (const auto& f : factors_)
    if (!f->has_delta()) return false;
  return true;
}

Value ProductCarrier::delta(std::span<const Value> prefix, const Value& tail) const {
  if (!has_delta()) return Carrier::delta(prefix, tail);
  Tuple out;
  const Tuple& t = components(tail);
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    std::vector<Value> column;
    for (const auto& p : prefix) column.push_back(components(p)[i]);
    out.push_back(factors_[i]->delta(column, t[i]));
  }
  return out;
}

Value ProductCarrier::from_rational(const Q01& c) const {
  Tuple out;
  for (const auto& f : factors_) out.push_back(f->from_rational(c));
  return out;
}

std::string ProductCarrier::format(const Value& x) const {
  const Tuple& a = components(x);
  std::string out = "(";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ",";
    out += factors_[i]->format(a[i]);
  }
  return out + ")";
}

Value ProductCarrier::parse_element(std::string_view text) const {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw CarrierError("expected a parenthesised tuple for " + name());
  const std::string_view body = text.substr(1, text.size() - 2);
  std::vector<std::string> parts = split_top_level(body);
  if (body.empty()) parts.clear();
  if (parts.size() != factors_.size())
    throw CarrierError("tuple '" + std::string(text) + "' has the wrong arity for " + name());
  Tuple out;
  for (std::size_t i = 0; i < factors_.size(); ++i) out.push_back(factors_[i]->parse_element(parts[i]));
  return out;
}

// ---------------------------------------------------------------------------
// Chang

namespace {
constexpr ChangElem kChangUnit{1, 0};
}

bool is_chang_element(const ChangElem& x) {
  return ChangElem{} <= x && x <= kChangUnit;
}

ChangElem chang_oplus(const ChangElem& x, const ChangElem& y) {
  const ChangElem sum{x.level + y.level, x.offset + y.offset};
  return std::min(sum, kChangUnit);
}

ChangElem chang_neg(const ChangElem& x) { return ChangElem{kChangUnit.level - x.level, kChangUnit.offset - x.offset}; }

ChangElem chang_odot(const ChangElem& x, const ChangElem& y) {
  return chang_neg(chang_oplus(chang_neg(x), chang_neg(y)));
}

Value ChangCarrier::oplus(const Value& x, const Value& y) const {
  check_member(x);
  check_member(y);
  return chang_oplus(x.as<ChangElem>(), y.as<ChangElem>());
}

Value ChangCarrier::neg(const Value& x) const {
  check_member(x);
  return chang_neg(x.as<ChangElem>());
}

void ChangCarrier::check_member(const Value& x) const {
  const ChangElem& c = x.as<ChangElem>();
  if (!is_chang_element(c)) throw CarrierError(c.to_string() + " lies outside [(0,0),(1,0)]");
}

bool ChangCarrier::leq(const Value& x, const Value& y) const { return x.as<ChangElem>() <= y.as<ChangElem>(); }

Value ChangCarrier::from_rational(const Q01& c) const {
  if (c == Q01::zero()) return ChangElem{0, 0};
  if (c == Q01::one()) return kChangUnit;
  throw CarrierError("constant " + c.to_string() + " has no image in Chang's algebra");
}

std::string ChangCarrier::format(const Value& x) const { return x.as<ChangElem>().to_string(); }

Value ChangCarrier::parse_element(std::string_view text) const {
  if (text == "0") return ChangElem{0, 0};
  if (text == "1") return kChangUnit;
  Value v = ChangElem::parse(text);
  check_member(v);
  return v;
}

// ---------------------------------------------------------------------------
// PL functions

Value PLCarrier::oplus(const Value& x, const Value& y) const { return pl_oplus(x.as<PLFunc>(), y.as<PLFunc>()); }

Value PLCarrier::neg(const Value& x) const { return pl_neg(x.as<PLFunc>()); }

void PLCarrier::check_member(const Value& x) const { (void)x.as<PLFunc>(); }

bool PLCarrier::leq(const Value& x, const Value& y) const { return pl_leq(x.as<PLFunc>(), y.as<PLFunc>()); }

Value PLCarrier::delta(std::span<const Value> prefix, const Value& tail) const {
  std::vector<PLFunc> fs;
  fs.reserve(prefix.size());
  for (const auto& p : prefix) fs.push_back(p.as<PLFunc>());
  return pl_delta(fs, tail.as<PLFunc>());
}

std::string PLCarrier::format(const Value& x) const { return plfunc_to_json(x.as<PLFunc>()); }

Value PLCarrier::parse_element(std::string_view text) const {
  if (!text.empty() && text.front() == '[') {
    try {
      return plfunc_from_json(text);
    } catch (const std::invalid_argument& e) {
      throw CarrierError(e.what());
    }
  }
  try {
    return PLFunc::constant(Q01::parse(text));
  } catch (const DomainError& e) {
    throw CarrierError(e.what());
  }
}

// ---------------------------------------------------------------------------
// Spec strings

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string current;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

CarrierPtr parse_carrier_spec(std::string_view spec) {
  while (!spec.empty() && std::isspace(static_cast<unsigned char>(spec.front()))) spec.remove_prefix(1);
  while (!spec.empty() && std::isspace(static_cast<unsigned char>(spec.back()))) spec.remove_suffix(1);
  if (spec == "unit") return std::make_shared<UnitInterval>();
  if (spec == "chang") return std::make_shared<ChangCarrier>();
  if (spec == "pl") return std::make_shared<PLCarrier>();
  if (spec.starts_with("chain:")) {
    const std::string_view digits = spec.substr(6);
    unsigned n = 0;
    auto r = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (digits.empty() || r.ec != std::errc() || r.ptr != digits.data() + digits.size() || n == 0)
      throw CarrierError("bad chain order in '" + std::string(spec) + "'");
    return std::make_shared<FiniteChain>(n);
  }
  if (spec.starts_with("prod(") && spec.ends_with(")")) {
    const std::string_view body = spec.substr(5, spec.size() - 6);
    std::vector<CarrierPtr> factors;
    if (!body.empty())
      for (const auto& part : split_top_level(body)) factors.push_back(parse_carrier_spec(part));
    return std::make_shared<ProductCarrier>(std::move(factors));
  }
  throw CarrierError("unknown carrier spec '" + std::string(spec) + "'");
}

}  // namespace mvdelta
