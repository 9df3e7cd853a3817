#include "relpoly/tiling.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "relpoly/error.hpp"

namespace relpoly {

namespace {

void require_c_pattern(const RelationSet& c, const Pattern& x) {
  if (!is_c_pattern(c, x)) throw Error(ErrorCode::NotACPattern, "pattern is not a C-pattern");
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

}  // namespace

bool is_lambda_free(const std::vector<VertexId>& tile, int n, Lambda lambda) {
  return std::none_of(tile.begin(), tile.end(), [&](VertexId v) {
    switch (lambda) {
      case Lambda::None: return false;
      case Lambda::Top: return v.row == n;
      case Lambda::TopBottom: return v.row == n || v.row == 1;
    }
    return false;
  });
}

Tiling compute_tiling(const RelationSet& c, const Pattern& x) {
  require_c_pattern(c, x);
  const int n = c.n();
  const std::size_t count = triangle_size(n);
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& r : c.relations()) {
    if (!(x.at(r.src) == x.at(r.dst))) continue;
    std::size_t a = find_root(parent, flat_index(n, r.src));
    std::size_t b = find_root(parent, flat_index(n, r.dst));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  std::vector<std::vector<VertexId>> groups;
  std::vector<std::size_t> group_of_root(count, count);
  for (VertexId v : all_vertices(n)) {
    std::size_t root = find_root(parent, flat_index(n, v));
    if (group_of_root[root] == count) {
      group_of_root[root] = groups.size();
      groups.emplace_back();
    }
    groups[group_of_root[root]].push_back(v);
  }
  // groups are already sorted by least member; stable_partition keeps that order.
  std::stable_partition(groups.begin(), groups.end(),
                        [n](const std::vector<VertexId>& t) { return is_lambda_free(t, n, Lambda::Top); });

  Tiling tiling;
  tiling.n = n;
  tiling.tile_of.assign(count, 0);
  for (std::size_t t = 0; t < groups.size(); ++t) {
    for (VertexId v : groups[t]) tiling.tile_of[flat_index(n, v)] = t;
    if (is_lambda_free(groups[t], n, Lambda::Top)) ++tiling.lambda1_free_count;
  }
  tiling.tiles = std::move(groups);
  return tiling;
}

std::vector<std::vector<VertexId>> lambda_free(const Tiling& tiling, Lambda lambda) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& t : tiling.tiles)
    if (is_lambda_free(t, tiling.n, lambda)) out.push_back(t);
  return out;
}

TilingMatrix tiling_matrix(const Tiling& tiling) {
  const int n = tiling.n;
  TilingMatrix m;
  m.rows = static_cast<std::size_t>(n - 1);
  if (tiling.lambda1_free_count == 0) {
    m.cols = m.rows;
    m.identity_fallback = true;
    m.a.assign(m.rows, std::vector<long>(m.cols, 0));
    for (std::size_t i = 0; i < m.rows; ++i) m.a[i][i] = 1;
    return m;
  }
  m.cols = tiling.lambda1_free_count;
  m.a.assign(m.rows, std::vector<long>(m.cols, 0));
  for (std::size_t k = 0; k < m.cols; ++k)
    for (VertexId v : tiling.tiles[k]) ++m.a[static_cast<std::size_t>(v.row - 1)][k];
  return m;
}

TilingMatrix tiling_matrix(const RelationSet& c, const Pattern& x) { return tiling_matrix(compute_tiling(c, x)); }

KernelBasis kernel(const TilingMatrix& a) {
  KernelBasis out;
  if (a.identity_fallback) return out;
  linalg::RationalMatrix m(a.rows, a.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) m(i, j) = a.a[i][j];
  out.vectors = linalg::kernel_basis(m);
  out.pivot_columns = linalg::rref(m).pivots;
  return out;
}

FaceDims min_face_dims(const RelationSet& c, const Pattern& x) {
  return min_face_dims(c, x, [](const TilingMatrix& a) { return kernel(a); });
}

FaceDims min_face_dims(const RelationSet& c, const Pattern& x, const KernelRoutine& kernel_routine) {
  Tiling t = compute_tiling(c, x);
  FaceDims dims;
  dims.d = t.size();
  dims.s = t.lambda1_free_count;
  dims.r = dims.s == 0 ? 0 : kernel_routine(tiling_matrix(t)).dimension();
  return dims;
}

std::variant<PlusFaceDims, PlusInapplicable> min_face_dims_plus(const RelationSet& c, const Pattern& x) {
  require_c_pattern(c, x);
  for (VertexId v : support(c))
    if (compare_values(x.at(v), Entry(0)) < 0)
      throw Error(ErrorCode::NegativeEntryOnSupport,
                  "entry at " + to_string(v) + " is negative but the vertex is in V(C)");
  if (!is_top_connected(c)) return PlusInapplicable{"not top-connected"};
  FaceDims dims = min_face_dims(c, x);
  if (dims.s == 0) return PlusInapplicable{"no Lambda1-free tile"};
  return PlusFaceDims{dims.s, dims.r};
}

namespace {

// Least certified gap between distinct entry values; nullopt when all
// entries coincide.
std::optional<Rational> least_gap(const Pattern& x) {
  std::vector<Entry> values(x.entries().begin(), x.entries().end());
  std::sort(values.begin(), values.end(), structurally_less);
  values.erase(std::unique(values.begin(), values.end()), values.end());
  std::optional<Rational> gap;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      Rational g = separation_lower_bound(values[i], values[j]);
      if (!gap || g < *gap) gap = g;
    }
  return gap;
}

void clear_denominators(std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  Integer g = 0;
  for (auto& q : v) {
    q *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
  }
  if (g > 1)
    for (auto& q : v) q /= g;
}

}  // namespace

PerturbationBasis build_perturbation_basis(const RelationSet& c, const Pattern& x) {
  Tiling t = compute_tiling(c, x);
  const std::size_t d = t.size();
  const std::size_t s = t.lambda1_free_count;
  KernelBasis k = s == 0 ? KernelBasis{} : kernel(tiling_matrix(t));

  std::vector<std::vector<Rational>> eps;
  for (const auto& v : k.vectors) {
    std::vector<Rational> e(d);
    std::copy(v.begin(), v.end(), e.begin());
    clear_denominators(e);
    eps.push_back(std::move(e));
  }
  auto unit = [d](std::size_t i) {
    std::vector<Rational> e(d);
    e[i] = 1;
    return e;
  };
  for (std::size_t p : k.pivot_columns) eps.push_back(unit(p));
  for (std::size_t i = s; i < d; ++i) eps.push_back(unit(i));

  std::optional<Rational> gap = least_gap(x);
  Rational margin = x.is_rational() ? Rational(1, 4) : Rational(1, 8);

  PerturbationBasis out;
  out.d = d;
  out.s = s;
  out.r = k.dimension();
  for (const auto& e : eps) {
    Rational largest = 0;
    for (const auto& q : e) largest = std::max(largest, Rational(abs(q)));
    Rational scale = gap ? Rational(margin * *gap / largest) : Rational(1 / largest);
    Pattern y(x.n());
    for (VertexId v : all_vertices(x.n())) y.set(v, Entry(Rational(e[t.tile_of[flat_index(x.n(), v)]] * scale)));
    out.vectors.push_back(std::move(y));
  }
  return out;
}

}  // namespace relpoly
