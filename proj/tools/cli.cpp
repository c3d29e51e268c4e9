#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "mvdelta/corpus.hpp"
#include "mvdelta/decide.hpp"
#include "mvdelta/gamma_xi.hpp"
#include "mvdelta/spectrum.hpp"

namespace mvdelta::cli {

namespace {

constexpr unsigned kInfinitesimalBound = 4096;

struct Options {
  std::string text;
  bool sample_only = false;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  std::size_t budget = kDefaultPieceBudget;
  unsigned depth = 8;
  std::string carrier = "unit";
  std::string assign;
  std::string algebra;
  bool json = false;
  unsigned chain = 0;
  unsigned bound = 0;
  std::string target;
  std::string out_path;
  std::string element;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Assignment parse_assignment(const std::string& text, const Carrier& carrier) {
  Assignment out;
  if (text.empty()) return out;
  for (const auto& item : split_top_level(text)) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("assignment item '" + item + "' is not name=value");
    const std::string name = item.substr(0, eq);
    if (out.count(name)) throw UsageError("variable " + name + " assigned twice");
    out.emplace(name, carrier.parse_element(item.substr(eq + 1)));
  }
  return out;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Equation eq = parse_equation(o.text);
  out << "equation: " << print_equation(eq) << "\n";
  const auto print_cx = [&](const Counterexample& c) {
    out << "Counterexample\n";
    out << "assign: " << format_assignment(c.assign) << "\n";
    out << "lhs: " << c.lhs.to_string() << "\n";
    out << "rhs: " << c.rhs.to_string() << "\n";
    return kObstruction;
  };
  if (o.sample_only) {
    const auto cx = sample_falsify(eq, o.trials, o.seed, o.depth);
    if (cx) return print_cx(*cx);
    out << "No counterexample in " << o.trials << " samples (seed " << o.seed << ", depth " << o.depth << ")\n";
    return kOk;
  }
  const Verdict v = decide(eq, o.budget);
  if (std::holds_alternative<Valid>(v)) {
    out << "Valid\n";
    return kOk;
  }
  if (const auto* c = std::get_if<Counterexample>(&v)) return print_cx(*c);
  const auto& lim = std::get<LimitExceeded>(v);
  out << "Budget exceeded: " << lim.required << " cases needed, budget " << lim.budget << "\n";
  return kBudget;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const CarrierPtr carrier = parse_carrier_spec(o.carrier);
  const Assignment assign = parse_assignment(o.assign, *carrier);
  if (o.text.find('=') != std::string::npos) {
    const Equation eq = parse_equation(o.text);
    const Value lhs = evaluate(eq.lhs, assign, *carrier);
    const Value rhs = evaluate(eq.rhs, assign, *carrier);
    const bool holds = eq.rel == Relation::kEq ? carrier->equal(lhs, rhs) : carrier->leq(lhs, rhs);
    out << "lhs: " << carrier->format(lhs) << "\n";
    out << "rhs: " << carrier->format(rhs) << "\n";
    out << "holds: " << yes_no(holds) << "\n";
    return holds ? kOk : kObstruction;
  }
  out << carrier->format(evaluate(parse_term(o.text), assign, *carrier)) << "\n";
  return kOk;
}

int cmd_axioms(const Options& o, std::ostream& out) {
  const CarrierPtr carrier = parse_carrier_spec(o.carrier);
  Rng rng(o.seed);
  std::size_t items = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  out << "carrier: " << carrier->name() << "\n";
  for (const auto& ne : identity_corpus()) {
    if (ne.uses_delta && !carrier->has_delta()) {
      ++skipped;
      continue;
    }
    ++items;
    std::set<std::string> vars = free_vars(ne.eq.lhs);
    for (const auto& v : free_vars(ne.eq.rhs)) vars.insert(v);
    std::size_t passed = 0;
    std::string failure;
    for (std::size_t t = 0; t < o.trials; ++t) {
      Assignment assign;
      for (const auto& v : vars) assign.emplace(v, random_element(*carrier, rng, o.depth));
      const Value lhs = evaluate(ne.eq.lhs, assign, *carrier);
      const Value rhs = evaluate(ne.eq.rhs, assign, *carrier);
      const bool holds = ne.eq.rel == Relation::kEq ? carrier->equal(lhs, rhs) : carrier->leq(lhs, rhs);
      if (holds) {
        ++passed;
      } else if (failure.empty()) {
        std::string a;
        for (const auto& [k, x] : assign) a += (a.empty() ? "" : ", ") + k + "=" + carrier->format(x);
        failure = a + "; lhs=" + carrier->format(lhs) + "; rhs=" + carrier->format(rhs);
      }
    }
    out << ne.name << ": " << passed << "/" << o.trials << "\n";
    if (!failure.empty()) {
      ++failed;
      out << "  first failure: " << failure << "\n";
    }
  }
  out << "items: " << items << ", failed: " << failed;
  if (skipped) out << ", skipped (no series operation): " << skipped;
  out << "\n";
  return failed ? kObstruction : kOk;
}

std::string set_to_string(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + ("M" + std::to_string(s[i]));
  return out + "}";
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const FiniteAlgebra a(parse_carrier_spec(o.algebra));
  const SpectrumResult s = spectrum(a);
  const bool ok = s.kernels_match && s.basis_generates && s.discrete;
  if (o.json) {
    nlohmann::ordered_json j;
    j["algebra"] = a.carrier()->name();
    j["size"] = a.size();
    auto& ideals = j["maximal_ideals"] = nlohmann::ordered_json::array();
    for (const auto& m : s.ideals) {
      auto members = nlohmann::ordered_json::array();
      for (std::size_t i : m) members.push_back(a.format(i));
      ideals.push_back(members);
    }
    auto& homs = j["homs"] = nlohmann::ordered_json::array();
    for (const auto& h : s.homs) {
      nlohmann::ordered_json table;
      for (std::size_t i = 0; i < a.size(); ++i) table[a.format(i)] = h.table[i].to_string();
      homs.push_back(table);
    }
    j["closed_sets"] = s.closed_sets;
    j["kernels_match"] = s.kernels_match;
    j["basis_generates"] = s.basis_generates;
    j["discrete"] = s.discrete;
    out << j.dump(2) << "\n";
    return ok ? kOk : kObstruction;
  }
  out << "algebra: " << a.carrier()->name() << " (" << a.size() << " elements)\n";
  out << "maximal ideals: " << s.ideals.size() << "\n";
  for (std::size_t j = 0; j < s.ideals.size(); ++j) {
    out << "  M" << j << " = {";
    for (std::size_t i = 0; i < s.ideals[j].size(); ++i) out << (i ? ", " : "") << a.format(s.ideals[j][i]);
    out << "}\n";
  }
  out << "homomorphisms to [0,1]:\n  element";
  for (std::size_t j = 0; j < s.homs.size(); ++j) out << " | h" << j;
  out << "\n";
  for (std::size_t i = 0; i < a.size(); ++i) {
    out << "  " << a.format(i);
    for (const auto& h : s.homs) out << " | " << h.table[i].to_string();
    out << "\n";
  }
  out << "closed sets:";
  for (const auto& c : s.closed_sets) out << " " << set_to_string(c);
  out << "\n";
  out << "kernels match ideals: " << yes_no(s.kernels_match) << "\n";
  out << "basis generates closed sets: " << yes_no(s.basis_generates) << "\n";
  out << "discrete: " << yes_no(s.discrete) << "\n";
  return ok ? kOk : kObstruction;
}

int cmd_gammaxi(const Options& o, std::ostream& out) {
  const ChainIsoReport r = xi_chain_iso(o.chain, o.bound);
  out << "chain: " << r.n << ", bound: " << r.bound << "\n";
  out << "good sequences with entry sum <= " << r.bound * r.n << ": " << r.count << "\n";
  out << "injective: " << yes_no(r.injective) << "\n";
  out << "surjective onto 0.." << r.bound * r.n << ": " << yes_no(r.surjective) << "\n";
  out << "additive: " << yes_no(r.additive) << "\n";
  out << "order preserving: " << yes_no(r.order_preserving) << "\n";
  out << "unit maps to " << r.n << ": " << yes_no(r.unit_to_n) << "\n";
  const GammaXiReport g = gamma_of_xi(FiniteAlgebra(parse_carrier_spec("chain:" + std::to_string(o.chain))));
  out << "unit interval of Xi: " << g.interval_size << " elements (algebra has " << g.algebra_size << ")\n";
  out << "embedding bijective: " << yes_no(g.bijective) << "\n";
  out << "preserves oplus: " << yes_no(g.preserves_oplus) << "\n";
  out << "preserves neg: " << yes_no(g.preserves_neg) << "\n";
  const bool ok = r.ok() && g.bijective && g.preserves_oplus && g.preserves_neg;
  return ok ? kOk : kObstruction;
}

int cmd_isbell(const Options& o, std::ostream& out) {
  std::ifstream in(o.target);
  if (!in) throw UsageError("cannot read " + o.target);
  std::stringstream buf;
  buf << in.rdbuf();
  const PLFunc target = plfunc_from_json(buf.str());
  const PLFunc limit = pl_halfn(1, target);
  const std::vector<PLFunc> s = increasing_approx(limit, o.depth);
  const IsbellResult r = isbell_reconstruct(s);
  const Q01 dist = uniform_dist(r.value, limit);
  const Rat tolerance = pow2_inv(o.depth);
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path);
    if (!f) throw UsageError("cannot write " + o.out_path);
    f << plfunc_to_json(r.value) << "\n";
  }
  out << "depth: " << o.depth << "\n";
  out << "reconstruction: " << plfunc_to_json(r.value) << "\n";
  out << "distance to target/2: " << dist.to_string() << "\n";
  out << "tolerance 2^-" << o.depth << ": " << tolerance.to_string() << "\n";
  out << "error bound: " << r.error_bound.to_string() << "\n";
  const bool ok = dist.value() <= tolerance;
  out << (ok ? "within tolerance" : "outside tolerance") << "\n";
  return ok ? kOk : kObstruction;
}

int cmd_radical(const Options& o, std::ostream& out) {
  const CarrierPtr carrier = parse_carrier_spec(o.carrier);
  const RadicalReport r = radical_of(carrier);
  out << "carrier: " << r.carrier << "\n";
  out << "radical: " << r.description << "\n";
  out << "semisimple: " << yes_no(r.semisimple) << "\n";
  if (o.element.empty()) return kOk;
  const Value x = carrier->parse_element(o.element);
  const InfinitesimalReport inf = is_infinitesimal(*carrier, x, kInfinitesimalBound);
  out << "element: " << carrier->format(x) << "\n";
  out << "infinitesimal: " << yes_no(inf.infinitesimal) << "\n";
  if (inf.failing_n) out << "least failing n: " << *inf.failing_n << "\n";
  if (!inf.certificate.empty()) out << "certificate: " << inf.certificate << "\n";
  if (x.is<ChangElem>()) {
    const auto w = halving_witness(x.as<ChangElem>());
    out << "halving witness: " << (w ? w->to_string() : "none") << "\n";
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact MV-algebra and series-algebra toolkit", "mvdelta"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Decide an equation or inequation over [0,1]");
  check->add_option("equation", o.text, "e.g. \"oplus(x,x) = x\" or \"x <= half(x)\"")->required();
  check->add_flag("--sample-only", o.sample_only, "Search seeded dyadic points instead of deciding");
  check->add_option("--trials", o.trials, "Sample count")->check(CLI::PositiveNumber);
  check->add_option("--seed", o.seed, "Sampling seed");
  check->add_option("--budget", o.budget, "Case-split budget")->check(CLI::PositiveNumber);
  check->add_option("--depth", o.depth, "Samples are k/2^depth")->check(CLI::Range(1u, 62u));

  auto* eval = app.add_subcommand("eval", "Evaluate a term or equation in a carrier");
  eval->add_option("term", o.text)->required();
  eval->add_option("--carrier", o.carrier, "chain:n, prod(...), chang, pl or unit");
  eval->add_option("--assign", o.assign, "x=p/q,y=p/q,...");

  auto* axioms = app.add_subcommand("axioms", "Check the identity suites on random elements");
  axioms->add_option("--carrier", o.carrier)->required();
  axioms->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  axioms->add_option("--seed", o.seed);
  axioms->add_option("--depth", o.depth, "Random elements use k/2^depth")->check(CLI::Range(1u, 62u));

  auto* spec = app.add_subcommand("spectrum", "Maximal spectrum of a finite algebra");
  spec->add_option("--algebra", o.algebra)->required();
  spec->add_flag("--json", o.json, "Machine-readable output");

  auto* gx = app.add_subcommand("gammaxi", "Good sequences and the unit interval of Xi for a chain");
  gx->add_option("--chain", o.chain)->required()->check(CLI::Range(1u, 64u));
  gx->add_option("--bound", o.bound)->required()->check(CLI::Range(0u, 256u));

  auto* isb = app.add_subcommand("isbell", "Series reconstruction of target/2");
  isb->add_option("--target", o.target, "PL function as JSON [[\"x\",\"y\"],...]")->required();
  isb->add_option("--depth", o.depth)->required()->check(CLI::Range(1u, 30u));
  isb->add_option("--out", o.out_path);

  auto* rad = app.add_subcommand("radical", "Radical of a carrier and infinitesimal test");
  rad->add_option("--carrier", o.carrier)->required();
  rad->add_option("--element", o.element);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*eval) return cmd_eval(o, out);
    if (*axioms) return cmd_axioms(o, out);
    if (*spec) return cmd_spectrum(o, out);
    if (*gx) return cmd_gammaxi(o, out);
    if (*isb) return cmd_isbell(o, out);
    if (*rad) return cmd_radical(o, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const IsbellHypothesisError& e) {
    err << "error: " << e.what() << "\n";
    return kObstruction;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DeltaUnsupported& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"mvdelta"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace mvdelta::cli
