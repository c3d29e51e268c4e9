#include "mvdelta/linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvdelta {

AffineForm AffineForm::variable(const std::string& name) {
  AffineForm f;
  f.coeffs_.emplace(name, Rat(1));
  return f;
}

Rat AffineForm::coeff(const std::string& name) const {
  auto it = coeffs_.find(name);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

Rat AffineForm::evaluate(const std::map<std::string, Rat>& point) const {
  Rat acc = constant_;
  for (const auto& [v, c] : coeffs_) {
    auto it = point.find(v);
    if (it == point.end()) throw std::invalid_argument("no value for variable '" + v + "'");
    acc += c * it->second;
  }
  return acc;
}

std::string AffineForm::to_string() const {
  std::string out;
  for (const auto& [v, c] : coeffs_) {
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    const Rat a = c.abs();
    if (a != Rat(1)) out += a.to_string() + "*";
    out += v;
  }
  if (out.empty()) return constant_.to_string();
  if (!constant_.is_zero()) out += (constant_.sign() < 0 ? " - " : " + ") + constant_.abs().to_string();
  return out;
}

AffineForm operator+(const AffineForm& a, const AffineForm& b) {
  AffineForm out = a;
  out.constant_ += b.constant_;
  for (const auto& [v, c] : b.coeffs_) {
    Rat& slot = out.coeffs_[v];
    slot += c;
    if (slot.is_zero()) out.coeffs_.erase(v);
  }
  return out;
}

AffineForm AffineForm::operator-() const {
  AffineForm out;
  out.constant_ = -constant_;
  for (const auto& [v, c] : coeffs_) out.coeffs_.emplace(v, -c);
  return out;
}

AffineForm operator-(const AffineForm& a, const AffineForm& b) { return a + (-b); }

AffineForm operator*(const Rat& k, const AffineForm& a) {
  AffineForm out;
  if (k.is_zero()) return out;
  out.constant_ = k * a.constant_;
  for (const auto& [v, c] : a.coeffs_) out.coeffs_.emplace(v, k * c);
  return out;
}

bool Constraint::holds(const std::map<std::string, Rat>& point) const {
  const int s = form.evaluate(point).sign();
  return strict ? s > 0 : s >= 0;
}

std::string Constraint::to_string() const { return form.to_string() + (strict ? " > 0" : " >= 0"); }

std::vector<Constraint> unit_box(const std::vector<std::string>& vars) {
  std::vector<Constraint> out;
  for (const auto& v : vars) {
    out.push_back({AffineForm::variable(v), false});
    out.push_back({AffineForm(Rat(1)) - AffineForm::variable(v), false});
  }
  return out;
}

namespace {

struct Row {
  std::vector<Rat> c;
  Rat k;
  bool strict = false;
};

enum class Status { kKeep, kTrivial, kContradiction };

// Scales so that the first nonzero coefficient has absolute value 1.
Status normalize(Row& r) {
  auto lead = std::find_if(r.c.begin(), r.c.end(), [](const Rat& x) { return !x.is_zero(); });
  if (lead == r.c.end()) {
    const int s = r.k.sign();
    return (s > 0 || (s == 0 && !r.strict)) ? Status::kTrivial : Status::kContradiction;
  }
  const Rat scale = Rat(1) / lead->abs();
  if (scale != Rat(1)) {
    for (auto& x : r.c) x *= scale;
    r.k *= scale;
  }
  return Status::kKeep;
}

// Over the box, a row with several variables is implied when its minimum
// already satisfies it.
bool implied_by_box(const Row& r) {
  int nonzero = 0;
  Rat low = r.k;
  for (const auto& x : r.c) {
    if (x.is_zero()) continue;
    ++nonzero;
    if (x.sign() < 0) low += x;
  }
  if (nonzero < 2) return false;
  const int s = low.sign();
  return s > 0 || (s == 0 && !r.strict);
}

// Normalises, drops trivial and box-implied rows, and keeps only the tightest
// of parallel rows. Returns false on a contradiction.
bool prune(std::vector<Row>& rows) {
  std::map<std::vector<Rat>, std::pair<Rat, bool>> best;
  for (auto& r : rows) {
    switch (normalize(r)) {
      case Status::kContradiction: return false;
      case Status::kTrivial: continue;
      case Status::kKeep: break;
    }
    if (implied_by_box(r)) continue;
    auto [it, inserted] = best.try_emplace(r.c, r.k, r.strict);
    if (inserted) continue;
    auto& [k, strict] = it->second;
    if (r.k < k || (r.k == k && r.strict)) {
      k = r.k;
      strict = r.strict;
    }
  }
  rows.clear();
  for (auto& [c, ks] : best) rows.push_back(Row{c, ks.first, ks.second});
  return true;
}

}  // namespace

std::optional<std::map<std::string, Rat>> fm_solve(std::vector<Constraint> system,
                                                   const std::vector<std::string>& vars_in) {
  std::vector<std::string> vars = vars_in;
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  const std::size_t n = vars.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(vars[i], i);

  for (auto& b : unit_box(vars)) system.push_back(std::move(b));

  std::vector<Row> rows;
  rows.reserve(system.size());
  for (const auto& con : system) {
    Row r{std::vector<Rat>(n), con.form.constant(), con.strict};
    for (const auto& [v, c] : con.form.coeffs()) {
      auto it = index.find(v);
      if (it == index.end()) throw std::invalid_argument("constraint mentions undeclared variable '" + v + "'");
      r.c[it->second] = c;
    }
    rows.push_back(std::move(r));
  }
  if (!prune(rows)) return std::nullopt;

  std::vector<std::vector<Row>> levels(n);
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t j = n - 1 - step;
    std::vector<Row> keep;
    std::vector<Row> lower;
    std::vector<Row> upper;
    for (auto& r : rows) {
      const int s = r.c[j].sign();
      if (s == 0) keep.push_back(std::move(r));
      else (s > 0 ? lower : upper).push_back(std::move(r));
    }
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        const Rat a = -up.c[j];
        const Rat b = lo.c[j];
        Row comb{std::vector<Rat>(n), a * lo.k + b * up.k, lo.strict || up.strict};
        for (std::size_t i = 0; i < j; ++i) comb.c[i] = a * lo.c[i] + b * up.c[i];
        keep.push_back(std::move(comb));
      }
    }
    levels[j] = std::move(lower);
    levels[j].insert(levels[j].end(), std::make_move_iterator(upper.begin()), std::make_move_iterator(upper.end()));
    rows = std::move(keep);
    if (!prune(rows)) return std::nullopt;
  }

  std::vector<Rat> value(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::optional<Rat> lo;
    std::optional<Rat> hi;
    bool lo_open = false;
    bool hi_open = false;
    for (const auto& r : levels[j]) {
      Rat rest = r.k;
      for (std::size_t i = 0; i < j; ++i)
        if (!r.c[i].is_zero()) rest += r.c[i] * value[i];
      const Rat bound = -rest / r.c[j];
      if (r.c[j].sign() > 0) {
        if (!lo || bound > *lo) {
          lo = bound;
          lo_open = r.strict;
        } else if (bound == *lo) {
          lo_open = lo_open || r.strict;
        }
      } else {
        if (!hi || bound < *hi) {
          hi = bound;
          hi_open = r.strict;
        } else if (bound == *hi) {
          hi_open = hi_open || r.strict;
        }
      }
    }
    if (!lo) lo = Rat(0);
    if (!hi) hi = Rat(1);
    if (*lo > *hi || (*lo == *hi && (lo_open || hi_open)))
      throw std::logic_error("Fourier-Motzkin back-substitution found an empty interval");
    value[j] = simplest_between(*lo, lo_open, *hi, hi_open);
  }

  std::map<std::string, Rat> point;
  for (std::size_t i = 0; i < n; ++i) point.emplace(vars[i], value[i]);
  for (const auto& con : system)
    if (!con.holds(point)) throw std::logic_error("Fourier-Motzkin witness violates " + con.to_string());
  return point;
}

}  // namespace mvdelta
