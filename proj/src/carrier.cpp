#include "mvdelta/carrier.hpp"

#include <charconv>

namespace mvdelta {

std::string ChangElem::to_string() const {
  return "(" + std::to_string(level) + "," + std::to_string(offset) + ")";
}

ChangElem ChangElem::parse(std::string_view text) {
  const auto fail = [&] { return CarrierError("malformed Chang element '" + std::string(text) + "'"); };
  if (text.size() < 5 || text.front() != '(' || text.back() != ')') throw fail();
  const std::string_view body = text.substr(1, text.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) throw fail();
  ChangElem out;
  const std::string_view a = body.substr(0, comma);
  const std::string_view b = body.substr(comma + 1);
  auto r1 = std::from_chars(a.data(), a.data() + a.size(), out.level);
  auto r2 = std::from_chars(b.data(), b.data() + b.size(), out.offset);
  if (r1.ec != std::errc() || r1.ptr != a.data() + a.size() || r2.ec != std::errc() ||
      r2.ptr != b.data() + b.size())
    throw fail();
  return out;
}

bool Carrier::leq(const Value& x, const Value& y) const { return equal(ominus(x, y), zero()); }

Value Carrier::delta(std::span<const Value>, const Value&) const {
  throw DeltaUnsupported("carrier " + name() + " has no series operation");
}

Value Carrier::nfold(unsigned n, const Value& x) const {
  if (n == 0) throw std::invalid_argument("nfold requires n >= 1");
  Value acc = x;
  for (unsigned i = 1; i < n; ++i) acc = oplus(acc, x);
  return acc;
}

Value Carrier::half(const Value& x) const { return delta(std::span<const Value>(&x, 1), zero()); }

}  // namespace mvdelta
