#include "mvdelta/finite.hpp"

namespace mvdelta {

namespace {

void flatten(const Carrier& c, std::vector<unsigned>& orders) {
  if (const auto* chain = dynamic_cast<const FiniteChain*>(&c)) {
    orders.push_back(chain->order());
    return;
  }
  if (const auto* prod = dynamic_cast<const ProductCarrier*>(&c)) {
    for (const auto& f : prod->factors()) flatten(*f, orders);
    return;
  }
  throw CarrierError("carrier " + c.name() + " is not finite");
}

Value build(const Carrier& c, const std::vector<unsigned>& digits, std::size_t& pos) {
  if (const auto* chain = dynamic_cast<const FiniteChain*>(&c)) return chain->element(digits[pos++]);
  const auto& prod = dynamic_cast<const ProductCarrier&>(c);
  Tuple out;
  for (const auto& f : prod.factors()) out.push_back(build(*f, digits, pos));
  return out;
}

void read(const Carrier& c, const Value& x, std::vector<unsigned>& digits) {
  if (const auto* chain = dynamic_cast<const FiniteChain*>(&c)) {
    digits.push_back(chain->index_of(x));
    return;
  }
  const auto& prod = dynamic_cast<const ProductCarrier&>(c);
  const Tuple& t = x.as<Tuple>();
  if (t.size() != prod.factors().size()) throw CarrierError("tuple arity does not match " + c.name());
  for (std::size_t i = 0; i < t.size(); ++i) read(*prod.factors()[i], t[i], digits);
}

}  // namespace

bool FiniteAlgebra::is_finite(const Carrier& c) {
  if (dynamic_cast<const FiniteChain*>(&c)) return true;
  if (const auto* prod = dynamic_cast<const ProductCarrier*>(&c)) {
    for (const auto& f : prod->factors())
      if (!is_finite(*f)) return false;
    return true;
  }
  return false;
}

FiniteAlgebra::FiniteAlgebra(CarrierPtr carrier) : carrier_(std::move(carrier)) {
  flatten(*carrier_, orders_);
  for (unsigned n : orders_) {
    stride_.push_back(size_);
    if (size_ > kMaxSize / (n + 1)) throw CarrierError("finite algebra " + carrier_->name() + " is too large");
    size_ *= n + 1;
  }
}

std::vector<unsigned> FiniteAlgebra::digits(std::size_t index) const {
  std::vector<unsigned> out(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    out[i] = static_cast<unsigned>(index % (orders_[i] + 1));
    index /= orders_[i] + 1;
  }
  return out;
}

std::size_t FiniteAlgebra::index(const std::vector<unsigned>& digits) const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) out += digits[i] * stride_[i];
  return out;
}

Value FiniteAlgebra::element(std::size_t index) const {
  if (index >= size_) throw CarrierError("element index out of range");
  std::size_t pos = 0;
  return build(*carrier_, digits(index), pos);
}

std::size_t FiniteAlgebra::index_of(const Value& x) const {
  std::vector<unsigned> d;
  read(*carrier_, x, d);
  return index(d);
}

std::size_t FiniteAlgebra::oplus(std::size_t a, std::size_t b) const {
  std::size_t out = 0;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    const std::size_t base = orders_[i] + 1;
    const std::size_t s = (a % base) + (b % base);
    out += std::min<std::size_t>(s, orders_[i]) * stride_[i];
    a /= base;
    b /= base;
  }
  return out;
}

std::size_t FiniteAlgebra::neg(std::size_t a) const { return size_ - 1 - a; }

std::size_t FiniteAlgebra::nfold(unsigned n, std::size_t a) const {
  std::size_t acc = a;
  for (unsigned i = 1; i < n; ++i) acc = oplus(acc, a);
  return acc;
}

bool FiniteAlgebra::leq(std::size_t a, std::size_t b) const {
  for (unsigned n : orders_) {
    if (a % (n + 1) > b % (n + 1)) return false;
    a /= n + 1;
    b /= n + 1;
  }
  return true;
}

}  // namespace mvdelta
