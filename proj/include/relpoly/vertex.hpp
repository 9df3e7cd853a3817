#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace relpoly {

// A position (row, col) of the height-n triangle, 1 <= col <= row <= n.
// Row n is the top row. Ordered by (row, col).
struct VertexId {
  int row = 1;
  int col = 1;

  auto operator<=>(const VertexId&) const = default;
};

std::string to_string(VertexId v);

constexpr std::size_t triangle_size(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2;
}

constexpr bool in_triangle(int n, VertexId v) {
  return v.row >= 1 && v.row <= n && v.col >= 1 && v.col <= v.row;
}

// Position of row k's first entry in the serialization
// (m_n1..m_nn | m_{n-1,1}.. | ... | m_11).
constexpr std::size_t row_offset(int n, int k) {
  return triangle_size(n) - triangle_size(k);
}

constexpr std::size_t flat_index(int n, VertexId v) {
  return row_offset(n, v.row) + static_cast<std::size_t>(v.col - 1);
}

VertexId vertex_at(int n, std::size_t index);

// All vertices sorted by (row, col).
std::vector<VertexId> all_vertices(int n);

}  // namespace relpoly
