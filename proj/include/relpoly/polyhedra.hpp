#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "relpoly/patterns.hpp"
#include "relpoly/relations.hpp"

namespace relpoly {

// Explicit description of P_C, P_C(λ), P_C(λ,μ) and their nonnegative
// variants.
struct ConstraintSystem {
  int n = 1;
  std::vector<std::pair<VertexId, VertexId>> inequalities;  // x_src - x_dst >= 0
  std::vector<VertexId> nonneg;                              // x_v >= 0
  std::optional<std::vector<Entry>> eq_top;                  // x_{n,j} = λ_j
  std::optional<std::vector<SymbolicSum>> eq_weights;        // w_k(X) = μ_k
};

// μ requires λ. With plus, nonnegativity is imposed exactly on V(C).
ConstraintSystem assemble(const RelationSet& c, std::optional<std::vector<Entry>> lambda,
                          std::optional<std::vector<SymbolicSum>> mu, bool plus);
ConstraintSystem assemble(const RelationSet& c, const std::optional<WeightVector>& lambda,
                          const std::optional<WeightVector>& mu, bool plus);

enum class Slice {
  Full,      // P_C
  Top,       // P_C(λ)
  TopWeight  // P_C(λ, μ)
};

// The system whose λ and μ are read from x itself.
ConstraintSystem system_at(const RelationSet& c, const Pattern& x, Slice slice, bool plus = false);

// Dimension of the minimal face containing x: nullity of the equality rows
// stacked with the inequality rows tight at x. Throws Infeasible.
std::size_t face_dim_oracle(const ConstraintSystem& system, const Pattern& x);

struct BoundednessReport {
  bool bounded = true;
  std::vector<VertexId> unbounded_coordinates;
};

// P_C(λ) is bounded iff each vertex below the top row is squeezed between
// top-row vertices in the preorder.
BoundednessReport is_polytope(const RelationSet& c);

struct IntegralPointSet {
  Pattern base;
  std::vector<Pattern> points;  // lexicographic in serialization order
  std::size_t count = 0;        // exact, independent of the limit
};

struct EnumerateOptions {
  std::optional<std::size_t> limit;  // cap on stored points
};

// L-integral points of P_C(λ), λ the top row of L. Throws NotSatisfying and
// Unbounded.
IntegralPointSet enumerate_integral(const RelationSet& c, const Pattern& l, const EnumerateOptions& options = {});

// L-integral points of P_C(λ, μ). Throws NotSatisfying, WeightMismatch and
// UnboundedWeightSlice.
IntegralPointSet enumerate_integral_weight(const RelationSet& c, const Pattern& l, const WeightVector& mu,
                                           const EnumerateOptions& options = {});

// T(Λ): the height-n tableau with entries λ_i in every row.
Pattern constant_column_pattern(const WeightVector& lambda);

}  // namespace relpoly
