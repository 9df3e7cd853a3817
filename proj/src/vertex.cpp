#include "relpoly/vertex.hpp"

#include "relpoly/error.hpp"

namespace relpoly {

std::string to_string(VertexId v) {
  return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

VertexId vertex_at(int n, std::size_t index) {
  if (index >= triangle_size(n))
    throw Error(ErrorCode::InvalidArgument, "vertex index out of range");
  for (int k = n; k >= 1; --k) {
    std::size_t start = row_offset(n, k);
    if (index < start + static_cast<std::size_t>(k))
      return VertexId{k, static_cast<int>(index - start) + 1};
  }
  throw Error(ErrorCode::InvalidArgument, "vertex index out of range");
}

std::vector<VertexId> all_vertices(int n) {
  std::vector<VertexId> out;
  out.reserve(triangle_size(n));
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= k; ++i) out.push_back({k, i});
  return out;
}

}  // namespace relpoly
