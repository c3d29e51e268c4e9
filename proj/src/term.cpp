#include "mvdelta/term.hpp"

#include <cctype>
#include <optional>

namespace mvdelta {

Term Term::make(TermKind kind, std::vector<Term> children, unsigned count) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->children = std::move(children);
  n->count = count;
  return Term(std::move(n));
}

Term Term::var(std::string name) {
  if (name.empty() || !std::islower(static_cast<unsigned char>(name.front())))
    throw std::invalid_argument("invalid variable name '" + name + "'");
  for (char c : name)
    if (!(std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_'))
      throw std::invalid_argument("invalid variable name '" + name + "'");
  auto n = std::make_shared<Node>();
  n->kind = TermKind::kVar;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::constant(Q01 value) {
  auto n = std::make_shared<Node>();
  n->kind = TermKind::kConst;
  n->value = std::move(value);
  return Term(std::move(n));
}

Term Term::neg(Term t) { return make(TermKind::kNeg, {std::move(t)}); }
Term Term::oplus(Term l, Term r) { return make(TermKind::kOplus, {std::move(l), std::move(r)}); }
Term Term::odot(Term l, Term r) { return make(TermKind::kOdot, {std::move(l), std::move(r)}); }
Term Term::ominus(Term l, Term r) { return make(TermKind::kOminus, {std::move(l), std::move(r)}); }
Term Term::dist(Term l, Term r) { return make(TermKind::kDist, {std::move(l), std::move(r)}); }
Term Term::join(Term l, Term r) { return make(TermKind::kJoin, {std::move(l), std::move(r)}); }
Term Term::meet(Term l, Term r) { return make(TermKind::kMeet, {std::move(l), std::move(r)}); }
Term Term::half(Term t) { return make(TermKind::kHalf, {std::move(t)}); }

Term Term::delta(std::vector<Term> prefix, Term tail) {
  prefix.push_back(std::move(tail));
  return make(TermKind::kDelta, std::move(prefix));
}

Term Term::halfn(unsigned n, Term t) {
  if (n == 0) throw std::invalid_argument("halfn requires a positive count");
  return make(TermKind::kHalfN, {std::move(t)}, n);
}

Term Term::nfold(unsigned n, Term t) {
  if (n == 0) throw std::invalid_argument("nfold requires a positive count");
  return make(TermKind::kNFold, {std::move(t)}, n);
}

bool Term::is_core() const {
  switch (kind()) {
    case TermKind::kVar:
    case TermKind::kConst:
      return true;
    case TermKind::kNeg:
    case TermKind::kOplus:
    case TermKind::kDelta:
      for (const auto& c : children())
        if (!c.is_core()) return false;
      return true;
    default:
      return false;
  }
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.count() != b.count()) return false;
  if (a.kind() == TermKind::kVar) return a.name() == b.name();
  if (a.kind() == TermKind::kConst) return a.value() == b.value();
  return a.children() == b.children();
}

EvSeq EvSeq::shift() const {
  if (prefix.empty()) return *this;
  return EvSeq{std::vector<Term>(prefix.begin() + 1, prefix.end()), tail};
}

EvSeq EvSeq::cons(Term head) const {
  std::vector<Term> p;
  p.reserve(prefix.size() + 1);
  p.push_back(std::move(head));
  p.insert(p.end(), prefix.begin(), prefix.end());
  return EvSeq{std::move(p), tail};
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { kIdent, kInt, kSlash, kLParen, kRParen, kComma, kSemi, kEq, kLeq, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  const auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t tl = line;
    const std::size_t tc = col;
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && (std::islower(static_cast<unsigned char>(src[j])) ||
                                std::isdigit(static_cast<unsigned char>(src[j])) || src[j] == '_'))
        ++j;
      out.push_back({Tok::kIdent, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::kInt, std::string(src.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (c == '<' && i + 1 < src.size() && src[i + 1] == '=') {
      out.push_back({Tok::kLeq, "<=", tl, tc});
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case '/': kind = Tok::kSlash; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case ',': kind = Tok::kComma; break;
      case ';': kind = Tok::kSemi; break;
      case '=': kind = Tok::kEq; break;
      default:
        throw ParseError(tl, tc, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), tl, tc});
    advance(1);
  }
  out.push_back({Tok::kEnd, "", line, col});
  return out;
}

const char* describe(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kInt: return "integer";
    case Tok::kSlash: return "'/'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kComma: return "','";
    case Tok::kSemi: return "';'";
    case Tok::kEq: return "'='";
    case Tok::kLeq: return "'<='";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  Term term() {
    const Token& t = peek();
    if (t.kind == Tok::kInt) return rational();
    if (t.kind != Tok::kIdent) throw error(t, std::string("expected a term, found ") + describe(t.kind));
    const std::string& id = t.text;
    if (!is_keyword(id)) {
      ++pos_;
      return Term::var(id);
    }
    ++pos_;
    expect(Tok::kLParen);
    Term result = application(id, t);
    expect(Tok::kRParen);
    return result;
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  void expect(Tok k) {
    const Token& t = peek();
    if (t.kind != k) throw error(t, std::string("expected ") + describe(k) + ", found " + describe(t.kind));
    ++pos_;
  }

  ParseError error(const Token& t, const std::string& what) const { return ParseError(t.line, t.column, what); }

 private:
  static bool is_keyword(const std::string& id) {
    static const std::set<std::string> kw = {"neg",  "oplus", "odot", "ominus", "dist", "join", "meet",
                                             "delta", "half", "halfn", "nfold"};
    return kw.count(id) != 0;
  }

  Term rational() {
    const Token& num = next();
    std::string text = num.text;
    if (peek().kind == Tok::kSlash) {
      ++pos_;
      const Token& den = peek();
      if (den.kind != Tok::kInt) throw error(den, "expected denominator");
      ++pos_;
      text += "/" + den.text;
    }
    try {
      return Term::constant(Q01::parse(text));
    } catch (const DomainError& e) {
      throw error(num, e.what());
    }
  }

  unsigned count_arg() {
    const Token& t = peek();
    if (t.kind != Tok::kInt) throw error(t, "expected a positive integer count");
    ++pos_;
    unsigned long v = 0;
    try {
      v = std::stoul(t.text);
    } catch (const std::exception&) {
      throw error(t, "count out of range");
    }
    if (v == 0 || v > 4096) throw error(t, "count must lie in [1, 4096]");
    return static_cast<unsigned>(v);
  }

  Term application(const std::string& id, const Token& at) {
    if (id == "neg") return Term::neg(term());
    if (id == "half") return Term::half(term());
    if (id == "halfn" || id == "nfold") {
      const unsigned n = count_arg();
      expect(Tok::kComma);
      Term t = term();
      return id == "halfn" ? Term::halfn(n, std::move(t)) : Term::nfold(n, std::move(t));
    }
    if (id == "delta") {
      if (peek().kind == Tok::kRParen) throw error(at, "delta requires an argument list 'prefix; tail'");
      std::vector<Term> prefix;
      if (peek().kind != Tok::kSemi) {
        prefix.push_back(term());
        while (peek().kind == Tok::kComma) {
          ++pos_;
          prefix.push_back(term());
        }
      }
      expect(Tok::kSemi);
      Term tail = term();
      return Term::delta(std::move(prefix), std::move(tail));
    }
    Term l = term();
    expect(Tok::kComma);
    Term r = term();
    if (id == "oplus") return Term::oplus(std::move(l), std::move(r));
    if (id == "odot") return Term::odot(std::move(l), std::move(r));
    if (id == "ominus") return Term::ominus(std::move(l), std::move(r));
    if (id == "dist") return Term::dist(std::move(l), std::move(r));
    if (id == "join") return Term::join(std::move(l), std::move(r));
    return Term::meet(std::move(l), std::move(r));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

void print_to(const Term& t, std::string& out) {
  const auto binary = [&](const char* name) {
    out += name;
    out += "(";
    print_to(t.children()[0], out);
    out += ", ";
    print_to(t.children()[1], out);
    out += ")";
  };
  switch (t.kind()) {
    case TermKind::kVar: out += t.name(); return;
    case TermKind::kConst: out += t.value().to_string(); return;
    case TermKind::kNeg:
      out += "neg(";
      print_to(t.children()[0], out);
      out += ")";
      return;
    case TermKind::kHalf:
      out += "half(";
      print_to(t.children()[0], out);
      out += ")";
      return;
    case TermKind::kHalfN:
    case TermKind::kNFold:
      out += t.kind() == TermKind::kHalfN ? "halfn(" : "nfold(";
      out += std::to_string(t.count()) + ", ";
      print_to(t.children()[0], out);
      out += ")";
      return;
    case TermKind::kDelta: {
      out += "delta(";
      for (std::size_t i = 0; i < t.delta_prefix_size(); ++i) {
        if (i) out += ", ";
        print_to(t.children()[i], out);
      }
      out += t.delta_prefix_size() ? "; " : ";";
      print_to(t.delta_tail(), out);
      out += ")";
      return;
    }
    case TermKind::kOplus: return binary("oplus");
    case TermKind::kOdot: return binary("odot");
    case TermKind::kOminus: return binary("ominus");
    case TermKind::kDist: return binary("dist");
    case TermKind::kJoin: return binary("join");
    case TermKind::kMeet: return binary("meet");
  }
}

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind() == TermKind::kVar) {
    out.insert(t.name());
    return;
  }
  for (const auto& c : t.children()) collect_vars(c, out);
}

}  // namespace

Term parse_term(std::string_view text) {
  Parser p(text);
  Term t = p.term();
  if (p.peek().kind != Tok::kEnd) throw p.error(p.peek(), "trailing input after term");
  return t;
}

std::string print_term(const Term& t) {
  std::string out;
  print_to(t, out);
  return out;
}

Equation parse_equation(std::string_view text) {
  Parser p(text);
  Term lhs = p.term();
  const Token& op = p.peek();
  Relation rel;
  if (op.kind == Tok::kEq) {
    rel = Relation::kEq;
  } else if (op.kind == Tok::kLeq) {
    rel = Relation::kLeq;
  } else {
    throw p.error(op, std::string("expected '=' or '<=', found ") + describe(op.kind));
  }
  p.next();
  Term rhs = p.term();
  if (p.peek().kind != Tok::kEnd) throw p.error(p.peek(), "trailing input after equation");
  return Equation{std::move(lhs), rel, std::move(rhs)};
}

std::string print_equation(const Equation& e) {
  return print_term(e.lhs) + (e.rel == Relation::kEq ? " = " : " <= ") + print_term(e.rhs);
}

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  collect_vars(t, out);
  return out;
}

Term expand(const Term& t) {
  const auto kids = [&] {
    std::vector<Term> out;
    for (const auto& c : t.children()) out.push_back(expand(c));
    return out;
  };
  switch (t.kind()) {
    case TermKind::kVar:
    case TermKind::kConst:
      return t;
    case TermKind::kNeg: return Term::neg(expand(t.children()[0]));
    case TermKind::kOplus: {
      auto k = kids();
      return Term::oplus(k[0], k[1]);
    }
    case TermKind::kDelta: {
      auto k = kids();
      Term tail = k.back();
      k.pop_back();
      return Term::delta(std::move(k), std::move(tail));
    }
    case TermKind::kOdot: {
      auto k = kids();
      return Term::neg(Term::oplus(Term::neg(k[0]), Term::neg(k[1])));
    }
    case TermKind::kOminus: {
      // x ⊙ ¬y = ¬(¬x ⊕ ¬¬y) = ¬(¬x ⊕ y)
      auto k = kids();
      return Term::neg(Term::oplus(Term::neg(k[0]), k[1]));
    }
    case TermKind::kDist: {
      auto k = kids();
      return Term::oplus(Term::neg(Term::oplus(Term::neg(k[0]), k[1])),
                         Term::neg(Term::oplus(Term::neg(k[1]), k[0])));
    }
    case TermKind::kJoin: {
      auto k = kids();
      return Term::oplus(Term::neg(Term::oplus(Term::neg(k[0]), k[1])), k[1]);
    }
    case TermKind::kMeet: {
      auto k = kids();
      const Term nx = Term::neg(k[0]);
      const Term ny = Term::neg(k[1]);
      return Term::neg(Term::oplus(Term::neg(Term::oplus(Term::neg(nx), ny)), ny));
    }
    case TermKind::kHalf: return Term::delta({expand(t.children()[0])}, Term::zero());
    case TermKind::kHalfN: {
      Term acc = expand(t.children()[0]);
      for (unsigned i = 0; i < t.count(); ++i) acc = Term::delta({acc}, Term::zero());
      return acc;
    }
    case TermKind::kNFold: {
      const Term x = expand(t.children()[0]);
      Term acc = x;
      for (unsigned i = 1; i < t.count(); ++i) acc = Term::oplus(acc, x);
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

Value evaluate(const Term& t, const Assignment& assign, const Carrier& carrier) {
  const auto arg = [&](std::size_t i) { return evaluate(t.children()[i], assign, carrier); };
  switch (t.kind()) {
    case TermKind::kVar: {
      auto it = assign.find(t.name());
      if (it == assign.end()) throw UnboundVariable(t.name());
      carrier.check_member(it->second);
      return it->second;
    }
    case TermKind::kConst: return carrier.from_rational(t.value());
    case TermKind::kNeg: return carrier.neg(arg(0));
    case TermKind::kOplus: return carrier.oplus(arg(0), arg(1));
    case TermKind::kOdot: return carrier.odot(arg(0), arg(1));
    case TermKind::kOminus: return carrier.ominus(arg(0), arg(1));
    case TermKind::kDist: return carrier.dist(arg(0), arg(1));
    case TermKind::kJoin: return carrier.join(arg(0), arg(1));
    case TermKind::kMeet: return carrier.meet(arg(0), arg(1));
    case TermKind::kNFold: return carrier.nfold(t.count(), arg(0));
    case TermKind::kDelta: {
      if (!carrier.has_delta()) throw DeltaUnsupported("carrier " + carrier.name() + " has no series operation");
      std::vector<Value> prefix;
      for (std::size_t i = 0; i < t.delta_prefix_size(); ++i) prefix.push_back(arg(i));
      return carrier.delta(prefix, evaluate(t.delta_tail(), assign, carrier));
    }
    case TermKind::kHalf:
    case TermKind::kHalfN: {
      if (!carrier.has_delta()) throw DeltaUnsupported("carrier " + carrier.name() + " has no series operation");
      Value v = arg(0);
      const unsigned n = t.kind() == TermKind::kHalf ? 1 : t.count();
      for (unsigned i = 0; i < n; ++i) v = carrier.half(v);
      return v;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace mvdelta
