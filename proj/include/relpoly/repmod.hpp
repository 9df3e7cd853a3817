#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "relpoly/patterns.hpp"
#include "relpoly/relations.hpp"

namespace relpoly {

// Finite rational combination of tableaux T(M); zero coefficients are never
// stored.
class LinComb {
 public:
  LinComb() = default;
  static LinComb basis(Pattern m) {
    LinComb v;
    v.add(std::move(m), Rational(1));
    return v;
  }

  const std::map<Pattern, Rational>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Pattern& m) const;

  void add(const Pattern& m, const Rational& c);
  LinComb& operator+=(const LinComb& other);
  LinComb& operator-=(const LinComb& other);
  LinComb& operator*=(const Rational& c);

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Rational& c, LinComb a) { return a *= c; }
  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  std::map<Pattern, Rational> terms_;
};

enum class GeneratorKind {
  Raise,   // E_{k,k+1}
  Lower,   // E_{k+1,k}
  Cartan,  // E_{kk}
};

struct GeneratorId {
  GeneratorKind kind = GeneratorKind::Cartan;
  int k = 1;

  // E_{k,l} with |k - l| <= 1. Throws InvalidArgument.
  static GeneratorId from_matrix_unit(int k, int l, int n);
  std::string to_string() const;

  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

// Single-tableau action on rational patterns. Raise and Lower throw
// CriticalDenominator and LabeledEntryUnsupported.
LinComb act_raise(int k, const Pattern& m);
LinComb act_lower(int k, const Pattern& m);
LinComb act_cartan(int k, const Pattern& m);
LinComb act(const GeneratorId& g, const Pattern& m);

// M ∈ B_C(T(L)): same top row as L, M - L integral, M satisfies C.
bool in_basis(const RelationSet& c, const Pattern& l, const Pattern& m);

enum class LeakPolicy {
  Truncate,  // tableaux outside the basis are zero; nonzero ones are reported
  Strict,    // a nonzero coefficient outside the basis throws OutOfBasisLeak
};

struct ActOptions {
  bool require_admissible = true;
  LeakPolicy leak = LeakPolicy::Truncate;
};

struct ActResult {
  LinComb value;
  std::vector<std::pair<Pattern, Rational>> dropped;  // out-of-basis, nonzero
};

// Throws NotAdmissible (unless overridden), NotInBasis, OutOfBasisLeak and
// CriticalDenominator.
ActResult act_in_basis(const RelationSet& c, const Pattern& l, const GeneratorId& g, const LinComb& v,
                       const ActOptions& options = {});

struct CommutatorFailure {
  std::string identity;
  Pattern vector;
  LinComb residual;
};

struct CommutatorReport {
  std::size_t checks = 0;
  std::vector<CommutatorFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Checks the gl_n bracket relations on every sample tableau, using the
// truncated action. Throws NotInBasis for samples outside the basis.
CommutatorReport check_commutators(const RelationSet& c, const Pattern& l, const std::vector<Pattern>& sample);

// dim L(λ) for integral dominant λ. Throws NotDominant.
Integer weyl_dim(const WeightVector& lambda);

}  // namespace relpoly
