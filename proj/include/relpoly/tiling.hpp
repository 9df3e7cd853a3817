#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "relpoly/linalg.hpp"
#include "relpoly/patterns.hpp"
#include "relpoly/relations.hpp"

namespace relpoly {

// M_C(X): vertices joined by a walk of G(C) through equal entries share a
// tile. Tiles are stored with the Lambda1-free ones first; inside each group
// tiles are ordered by least member under (row, col).
struct Tiling {
  int n = 1;
  std::vector<std::vector<VertexId>> tiles;
  std::vector<std::size_t> tile_of;  // indexed by flat_index(n, v)
  std::size_t lambda1_free_count = 0;

  std::size_t size() const { return tiles.size(); }
};

// Rows of the triangle a tile must avoid to be Lambda-free.
enum class Lambda {
  None,       // ∅: every tile is free
  Top,        // Λ1 = {n}
  TopBottom,  // Λ2 = {1, n}
};

bool is_lambda_free(const std::vector<VertexId>& tile, int n, Lambda lambda);

// Throws NotACPattern.
Tiling compute_tiling(const RelationSet& c, const Pattern& x);

std::vector<std::vector<VertexId>> lambda_free(const Tiling& tiling, Lambda lambda);

// (n-1) x s counts a_ik = |{j : (i,j) in M_k}| over the Lambda1-free tiles;
// the identity of order n-1 when s = 0.
struct TilingMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<long>> a;
  bool identity_fallback = false;
};

TilingMatrix tiling_matrix(const Tiling& tiling);
TilingMatrix tiling_matrix(const RelationSet& c, const Pattern& x);

struct KernelBasis {
  std::vector<std::vector<Rational>> vectors;
  std::vector<std::size_t> pivot_columns;  // complement used to extend to a basis of R^s

  std::size_t dimension() const { return vectors.size(); }
};

KernelBasis kernel(const TilingMatrix& a);

using KernelRoutine = std::function<KernelBasis(const TilingMatrix&)>;

struct FaceDims {
  std::size_t d = 0;  // minimal face of P_C
  std::size_t s = 0;  // minimal face of P_C(λ)
  std::size_t r = 0;  // minimal face of P_C(λ, μ)

  friend bool operator==(const FaceDims&, const FaceDims&) = default;
};

// Dimensions read off the tiling; λ and μ are those of X itself.
FaceDims min_face_dims(const RelationSet& c, const Pattern& x);
FaceDims min_face_dims(const RelationSet& c, const Pattern& x, const KernelRoutine& kernel_routine);

struct PlusFaceDims {
  std::size_t s = 0;  // minimal face of P+_C(λ)
  std::size_t r = 0;  // minimal face of P+_C(λ, μ)

  friend bool operator==(const PlusFaceDims&, const PlusFaceDims&) = default;
};

struct PlusInapplicable {
  std::string reason;
};

// The tile formulas for the nonnegative variants, valid for top-connected C
// when the tiling has a Lambda1-free tile. Throws NotACPattern and
// NegativeEntryOnSupport.
std::variant<PlusFaceDims, PlusInapplicable> min_face_dims_plus(const RelationSet& c, const Pattern& x);

struct PerturbationBasis {
  std::vector<Pattern> vectors;  // Y^(1..d)
  std::size_t d = 0;
  std::size_t s = 0;
  std::size_t r = 0;
};

// Y^(m) = ψ(ε^(m)) scaled so that every coordinate is below half the least
// gap between distinct entries of X. The first r lie in ker A, the first s
// vanish on the top row.
PerturbationBasis build_perturbation_basis(const RelationSet& c, const Pattern& x);

}  // namespace relpoly
