#include "relpoly/patterns.hpp"

#include <algorithm>

#include "relpoly/error.hpp"

namespace relpoly {

Symbol Symbol::sqrt(std::string name, const Rational& radicand, int bits) {
  if (radicand < 0) throw Error(ErrorCode::InvalidArgument, "sqrt of a negative number");
  Rational lo = 0;
  Rational hi = radicand > 1 ? radicand : Rational(1);
  Rational width;
  mpq_set_ui(width.get_mpq_t(), 1, 1);
  mpq_div_2exp(width.get_mpq_t(), width.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    if (mid * mid <= radicand)
      lo = mid;
    else
      hi = mid;
  }
  return Symbol{std::move(name), Interval{lo, hi}};
}

const Rational& Entry::rational() const {
  if (symbol_)
    throw Error(ErrorCode::LabeledEntryUnsupported,
                "entry " + to_string() + " is labeled; a rational value is required");
  return offset_;
}

Interval Entry::enclosure() const {
  if (!symbol_) return {offset_, offset_};
  return {symbol_->enclosure.lo + offset_, symbol_->enclosure.hi + offset_};
}

std::optional<Rational> Entry::exact_difference(const Entry& other) const {
  if (label() != other.label()) return std::nullopt;
  return Rational(offset_ - other.offset_);
}

bool Entry::differs_by_integer(const Entry& other) const {
  auto d = exact_difference(other);
  return d && is_integer(*d);
}

std::string Entry::to_string() const {
  if (!symbol_) return relpoly::to_string(offset_);
  if (offset_ == 0) return symbol_->name;
  if (offset_ > 0) return symbol_->name + "+" + relpoly::to_string(offset_);
  return symbol_->name + relpoly::to_string(offset_);
}

std::strong_ordering compare_values(const Entry& a, const Entry& b) {
  if (auto d = a.exact_difference(b)) return sgn(*d) <=> 0;
  Interval ea = a.enclosure(), eb = b.enclosure();
  if (ea.lo > eb.hi) return std::strong_ordering::greater;
  if (ea.hi < eb.lo) return std::strong_ordering::less;
  throw Error(ErrorCode::IncomparableEntries,
              "cannot order " + a.to_string() + " and " + b.to_string() + " from their enclosures");
}

Rational separation_lower_bound(const Entry& a, const Entry& b) {
  if (auto d = a.exact_difference(b)) {
    if (*d == 0) throw Error(ErrorCode::InvalidArgument, "entries are equal");
    return abs(*d);
  }
  Interval ea = a.enclosure(), eb = b.enclosure();
  if (ea.lo > eb.hi) return ea.lo - eb.hi;
  if (eb.lo > ea.hi) return eb.lo - ea.hi;
  throw Error(ErrorCode::IncomparableEntries,
              "cannot separate " + a.to_string() + " and " + b.to_string() + " from their enclosures");
}

void SymbolicSum::add(const Entry& e, long sign) {
  constant += sign * e.offset();
  if (e.is_rational()) return;
  std::string key(e.label());
  long& coeff = symbols[key];
  coeff += sign;
  if (coeff == 0) symbols.erase(key);
}

std::string SymbolicSum::to_string() const {
  std::string out;
  for (const auto& [name, coeff] : symbols) {
    if (!out.empty() && coeff > 0) out += "+";
    if (coeff == -1)
      out += "-";
    else if (coeff != 1)
      out += std::to_string(coeff) + "*";
    out += name;
  }
  if (out.empty()) return relpoly::to_string(constant);
  if (constant > 0) out += "+" + relpoly::to_string(constant);
  if (constant < 0) out += relpoly::to_string(constant);
  return out;
}

Pattern::Pattern(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "pattern height must be >= 1");
  entries_.assign(triangle_size(n), Entry());
}

Pattern::Pattern(int n, std::vector<Entry> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "pattern height must be >= 1");
  if (entries_.size() != triangle_size(n))
    throw Error(ErrorCode::DimensionMismatch, "pattern of height " + std::to_string(n) + " needs " +
                                                  std::to_string(triangle_size(n)) + " entries, got " +
                                                  std::to_string(entries_.size()));
}

Pattern Pattern::from_rows(const std::vector<std::vector<Entry>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Entry> flat;
  for (int t = 0; t < n; ++t) {
    if (static_cast<int>(rows[t].size()) != n - t)
      throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(n - t) + " must have " +
                                                    std::to_string(n - t) + " entries");
    flat.insert(flat.end(), rows[t].begin(), rows[t].end());
  }
  return Pattern(n, std::move(flat));
}

std::span<const Entry> Pattern::row(int k) const {
  if (k < 1 || k > n_) throw Error(ErrorCode::InvalidArgument, "row index out of range");
  return std::span<const Entry>(entries_).subspan(row_offset(n_, k), static_cast<std::size_t>(k));
}

bool Pattern::is_rational() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.is_rational(); });
}

bool operator<(const Pattern& a, const Pattern& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                      b.entries_.end(), structurally_less);
}

Pattern add(const Pattern& x, const Pattern& y, int sign) {
  if (x.n() != y.n()) throw Error(ErrorCode::DimensionMismatch, "patterns of different height");
  std::vector<Entry> out;
  out.reserve(x.entries().size());
  for (std::size_t i = 0; i < x.entries().size(); ++i) {
    const Rational& dy = y.entries()[i].rational();
    out.push_back(sign > 0 ? x.entries()[i] + dy : x.entries()[i] - dy);
  }
  return Pattern(x.n(), std::move(out));
}

namespace {

void require_same_height(const RelationSet& c, const Pattern& x) {
  if (c.n() != x.n())
    throw Error(ErrorCode::DimensionMismatch, "relation set has n=" + std::to_string(c.n()) +
                                                  " but pattern has n=" + std::to_string(x.n()));
}

}  // namespace

bool is_c_pattern(const RelationSet& c, const Pattern& x) {
  require_same_height(c, x);
  for (const auto& r : c.relations())
    if (compare_values(x.at(r.src), x.at(r.dst)) < 0) return false;
  return true;
}

bool satisfies(const RelationSet& c, const Pattern& l) {
  require_same_height(c, l);
  for (const auto& r : c.relations()) {
    auto d = l.at(r.src).exact_difference(l.at(r.dst));
    if (!d || !is_integer(*d) || *d < 0) return false;
  }
  return true;
}

bool is_realization(const RelationSet& c, const Pattern& l) {
  if (!satisfies(c, l)) return false;
  const auto parts = connected_components(c);
  for (int k = 1; k <= c.n() - 1; ++k)
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j)
        if (l.at({k, i}).differs_by_integer(l.at({k, j})) != parts.same_block({k, i}, {k, j})) return false;
  return true;
}

bool noncritical_at(const RelationSet& c, const Pattern& m) {
  require_same_height(c, m);
  const auto parts = connected_components(c);
  for (int k = 1; k <= c.n() - 1; ++k)
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= k; ++j) {
        if (i == j || !parts.same_block({k, i}, {k, j})) continue;
        if (compare_values(m.at({k, i}) + Rational(j - i), m.at({k, j})) == 0) return false;
      }
  return true;
}

SymbolicSum row_sum_form(const Pattern& x, int k) {
  SymbolicSum s;
  for (const Entry& e : x.row(k)) s.add(e, 1);
  return s;
}

SymbolicSum weight_form(const Pattern& x, int k) {
  SymbolicSum s = row_sum_form(x, k);
  if (k > 1)
    for (const Entry& e : x.row(k - 1)) s.add(e, -1);
  return s;
}

namespace {

Rational require_rational(const SymbolicSum& s, const char* what, int k) {
  if (!s.is_rational())
    throw Error(ErrorCode::NonRationalWeight,
                std::string(what) + " " + std::to_string(k) + " is " + s.to_string() + ", not rational");
  return s.constant;
}

}  // namespace

Rational row_sum(const Pattern& x, int k) { return require_rational(row_sum_form(x, k), "row sum", k); }

Rational weight(const Pattern& x, int k) { return require_rational(weight_form(x, k), "weight", k); }

WeightVector weight_vector(const Pattern& x) {
  WeightVector mu;
  for (int k = 1; k <= x.n(); ++k) mu.components.push_back(weight(x, k));
  return mu;
}

}  // namespace relpoly
