#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relpoly/rational.hpp"
#include "relpoly/relations.hpp"
#include "relpoly/vertex.hpp"

namespace relpoly {

// Closed interval [lo, hi] with rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// An irrational base value known by name plus a certified enclosure.
// Distinct names stand for values in distinct Z-cosets.
struct Symbol {
  std::string name;
  Interval enclosure;

  // Enclosure of sqrt(radicand) of width at most 2^-bits.
  static Symbol sqrt(std::string name, const Rational& radicand, int bits = 64);

  friend bool operator==(const Symbol&, const Symbol&) = default;
};

// base(symbol) + offset, base(none) = 0. Equality and integrality are decided
// from the symbol name and offset; ordering across different symbols goes
// through the enclosures.
class Entry {
 public:
  Entry() = default;
  Entry(Rational value) : offset_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Entry(long value) : offset_(value) {}                 // NOLINT(google-explicit-constructor)
  Entry(int value) : offset_(value) {}                  // NOLINT(google-explicit-constructor)
  Entry(Symbol base, Rational offset) : symbol_(std::move(base)), offset_(std::move(offset)) {}

  bool is_rational() const { return !symbol_.has_value(); }
  const std::optional<Symbol>& symbol() const { return symbol_; }
  std::string_view label() const { return symbol_ ? std::string_view(symbol_->name) : std::string_view(); }
  const Rational& offset() const { return offset_; }

  // Throws LabeledEntryUnsupported for labeled entries.
  const Rational& rational() const;

  Interval enclosure() const;

  // this - other when both share the same base, nullopt otherwise.
  std::optional<Rational> exact_difference(const Entry& other) const;
  bool differs_by_integer(const Entry& other) const;

  Entry operator+(const Rational& delta) const { return Entry(symbol_, offset_ + delta); }
  Entry operator-(const Rational& delta) const { return Entry(symbol_, offset_ - delta); }

  friend bool operator==(const Entry& a, const Entry& b) {
    return a.label() == b.label() && a.offset_ == b.offset_;
  }

  std::string to_string() const;

 private:
  Entry(std::optional<Symbol> s, Rational offset) : symbol_(std::move(s)), offset_(std::move(offset)) {}

  std::optional<Symbol> symbol_;
  Rational offset_;
};

// Structural order (label, offset) for use as container keys. Not numeric
// across different labels.
inline bool structurally_less(const Entry& a, const Entry& b) {
  if (a.label() != b.label()) return a.label() < b.label();
  return a.offset() < b.offset();
}

// Numeric comparison. Exact when the bases agree, interval-certified
// otherwise; throws IncomparableEntries when the enclosures overlap.
std::strong_ordering compare_values(const Entry& a, const Entry& b);

// A certified lower bound on |a - b| for a != b (exact for equal bases).
// Throws IncomparableEntries when it cannot be certified positive.
Rational separation_lower_bound(const Entry& a, const Entry& b);

// Z-linear combination of symbols plus a rational part; used for row sums
// of labeled patterns.
struct SymbolicSum {
  Rational constant;
  std::map<std::string, long> symbols;  // zero coefficients never stored

  bool is_rational() const { return symbols.empty(); }
  void add(const Entry& e, long sign);
  std::string to_string() const;

  friend bool operator==(const SymbolicSum&, const SymbolicSum&) = default;
};

// A point of R^{n(n+1)/2} indexed by the triangle, stored in serialization
// order (row n first).
class Pattern {
 public:
  Pattern() : Pattern(1) {}
  explicit Pattern(int n);
  Pattern(int n, std::vector<Entry> entries);

  // Rows listed top (row n) first.
  static Pattern from_rows(const std::vector<std::vector<Entry>>& rows);

  int n() const { return n_; }
  std::span<const Entry> entries() const { return entries_; }
  std::span<const Entry> row(int k) const;
  const Entry& at(VertexId v) const { return entries_[flat_index(n_, v)]; }
  void set(VertexId v, Entry e) { entries_[flat_index(n_, v)] = std::move(e); }

  bool is_rational() const;

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend bool operator<(const Pattern& a, const Pattern& b);

 private:
  int n_;
  std::vector<Entry> entries_;
};

// X + Y for a rational Y of the same height.
Pattern add(const Pattern& x, const Pattern& y, int sign = 1);

struct WeightVector {
  std::vector<Rational> components;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector& a, const WeightVector& b) {
    return std::lexicographical_compare_three_way(
        a.components.begin(), a.components.end(), b.components.begin(), b.components.end(),
        [](const Rational& x, const Rational& y) { return cmp(x, y) <=> 0; });
  }
};

// x_src >= x_dst for every relation.
bool is_c_pattern(const RelationSet& c, const Pattern& x);

// x_src - x_dst in Z>=0 for every relation.
bool satisfies(const RelationSet& c, const Pattern& l);

bool is_realization(const RelationSet& c, const Pattern& l);

// m_ki - m_kj + j - i != 0 for same-component pairs in rows k < n.
bool noncritical_at(const RelationSet& c, const Pattern& m);

SymbolicSum row_sum_form(const Pattern& x, int k);
SymbolicSum weight_form(const Pattern& x, int k);

// R_k, w_k and (w_1..w_n); throw NonRationalWeight when labels do not cancel.
Rational row_sum(const Pattern& x, int k);
Rational weight(const Pattern& x, int k);
WeightVector weight_vector(const Pattern& x);

}  // namespace relpoly
