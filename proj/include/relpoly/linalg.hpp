#pragma once

#include <cstddef>
#include <vector>

#include "relpoly/rational.hpp"

namespace relpoly::linalg {

// Dense row-major matrix over T.
template <typename T>
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  T& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

struct Echelon {
  RationalMatrix reduced;            // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon rref(RationalMatrix m);

// Basis of the right null space, one vector per free column in ascending
// order; the vector for free column f has a 1 at f and 0 at the other free
// columns.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

// Rank by fraction-free (Bareiss) elimination over the integers.
std::size_t bareiss_rank(IntegerMatrix m);

RationalMatrix to_rational(const IntegerMatrix& m);

}  // namespace relpoly::linalg
