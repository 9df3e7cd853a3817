#include "relpoly/linalg.hpp"

#include <utility>

namespace relpoly::linalg {

Echelon rref(RationalMatrix m) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(pivot, j), m(row, j));
    Rational inv = 1 / Rational(m(row, col));
    for (std::size_t j = col; j < m.cols; ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m(i, j) -= factor * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t bareiss_rank(IntegerMatrix m) {
  std::size_t rank = 0;
  Integer previous = 1;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(pivot, j), m(rank, j));
    for (std::size_t i = rank + 1; i < m.rows; ++i) {
      for (std::size_t j = col + 1; j < m.cols; ++j) {
        Integer t = m(rank, col) * m(i, j) - m(i, col) * m(rank, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      m(i, col) = 0;
    }
    previous = m(rank, col);
    ++rank;
  }
  return rank;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.data.size(); ++i) out.data[i] = Rational(m.data[i]);
  return out;
}

}  // namespace relpoly::linalg
