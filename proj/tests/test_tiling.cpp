#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "relpoly/error.hpp"
#include "relpoly/polyhedra.hpp"
#include "relpoly/selftest.hpp"
#include "relpoly/tiling.hpp"

using namespace relpoly;
using testing::rows;

namespace {

Pattern fig1() { return rows({{9, 8, 6, 5, 3}, {8, 5, 5, 4}, {3, 3, 0}, {3, -1}, {-2}}); }
RelationSet c1plus(int n) { return standard_set(n, 1, StandardVariant::Plus); }

Pattern constant(int n, long v) {
  Pattern p(n);
  for (VertexId x : all_vertices(n)) p.set(x, Entry(v));
  return p;
}

std::size_t oracle(const RelationSet& c, const Pattern& x, Slice slice, bool plus = false) {
  return face_dim_oracle(system_at(c, x, slice, plus), x);
}

}  // namespace

TEST_CASE("Figure 1 tiling") {
  auto t = compute_tiling(c1plus(5), fig1());
  CHECK(t.size() == 14);
  CHECK(t.lambda1_free_count == 9);
  std::size_t big = 0;
  for (const auto& tile : t.tiles)
    if (tile.size() > 1) {
      ++big;
      CHECK(tile == std::vector<VertexId>{{2, 1}, {3, 1}});
    }
  CHECK(big == 1);
  CHECK(lambda_free(t, Lambda::Top).size() == 9);
  CHECK(lambda_free(t, Lambda::TopBottom).size() == 8);
  CHECK(lambda_free(t, Lambda::None).size() == 14);
}

TEST_CASE("Figure 1 tiling matrix and kernel") {
  auto a = tiling_matrix(c1plus(5), fig1());
  std::vector<std::vector<long>> expected = {{1, 0, 0, 0, 0, 0, 0, 0, 0},
                                             {0, 1, 1, 0, 0, 0, 0, 0, 0},
                                             {0, 1, 0, 1, 1, 0, 0, 0, 0},
                                             {0, 0, 0, 0, 0, 1, 1, 1, 1}};
  CHECK(a.a == expected);
  CHECK_FALSE(a.identity_fallback);
  auto k = kernel(a);
  CHECK(k.dimension() == 5);
  for (const auto& v : k.vectors)
    for (const auto& row : a.a) {
      Rational dot = 0;
      for (std::size_t j = 0; j < row.size(); ++j) dot += v[j] * row[j];
      CHECK(dot == 0);
    }
  CHECK(min_face_dims(c1plus(5), fig1()) == FaceDims{14, 9, 5});
}

TEST_CASE("Figure 1 dimensions agree with the active-constraint oracle") {
  auto c = c1plus(5);
  auto x = fig1();
  CHECK(oracle(c, x, Slice::Full) == 14);
  CHECK(oracle(c, x, Slice::Top) == 9);
  CHECK(oracle(c, x, Slice::TopWeight) == 5);
}

TEST_CASE("constant C1 pattern is a vertex of the constrained polyhedra") {
  for (int n = 2; n <= 5; ++n) {
    auto c = standard_set(n, 1, StandardVariant::Both);
    auto x = constant(n, 3);
    auto t = compute_tiling(c, x);
    CHECK(t.size() == 1);
    CHECK(lambda_free(t, Lambda::Top).empty());
    auto a = tiling_matrix(t);
    CHECK(a.identity_fallback);
    CHECK(a.rows == static_cast<std::size_t>(n - 1));
    CHECK(kernel(a).dimension() == 0);
    CHECK(min_face_dims(c, x) == FaceDims{1, 0, 0});
    CHECK(oracle(c, x, Slice::Top) == 0);
    CHECK(oracle(c, x, Slice::TopWeight) == 0);
    CHECK(oracle(c, x, Slice::Full) == 1);
  }
}

TEST_CASE("empty relation set gives singleton tiles") {
  auto c = standard_set(3, 3, StandardVariant::Empty);
  auto x = rows({{5, 5, 5}, {5, 5}, {5}});
  auto t = compute_tiling(c, x);
  CHECK(t.size() == 6);
  auto a = tiling_matrix(t);
  CHECK(a.a == std::vector<std::vector<long>>{{1, 0, 0}, {0, 1, 1}});
  CHECK(min_face_dims(c, x) == FaceDims{6, 3, 1});
}

TEST_CASE("kernel examples") {
  TilingMatrix single{1, 2, {{1, 1}}, false};
  auto k = kernel(single);
  REQUIRE(k.dimension() == 1);
  CHECK(k.vectors[0] == std::vector<Rational>{-1, 1});
  TilingMatrix id{3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, true};
  CHECK(kernel(id).dimension() == 0);
}

TEST_CASE("non C-patterns are rejected") {
  auto c = standard_set(2, 1, StandardVariant::Both);
  try {
    (void)compute_tiling(c, rows({{0, 1}, {0}}));
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotACPattern);
  }
}

TEST_CASE("nonnegative variants") {
  auto c1 = standard_set(3, 1, StandardVariant::Both);
  // Tiles {(2,1),(3,1)}, {(1,1),(2,2),(3,2)}, {(3,3)}: nothing is Lambda1-free.
  auto merged = rows({{2, 1, 0}, {2, 1}, {1}});
  auto none_free = min_face_dims_plus(c1, merged);
  REQUIRE(std::holds_alternative<PlusInapplicable>(none_free));
  CHECK(compute_tiling(c1, merged).size() == 3);
  CHECK(oracle(c1, merged, Slice::Top, true) == 0);

  auto x = rows({{2, 1, 0}, {2, 0}, {1}});
  auto plus = min_face_dims_plus(c1, x);
  REQUIRE(std::holds_alternative<PlusFaceDims>(plus));
  auto p = std::get<PlusFaceDims>(plus);
  CHECK(p.s == oracle(c1, x, Slice::Top, true));
  CHECK(p.r == oracle(c1, x, Slice::TopWeight, true));
  CHECK(p.s == 1);
  CHECK(p.r == 0);

  auto zero = constant(3, 0);
  auto none = min_face_dims_plus(c1, zero);
  REQUIRE(std::holds_alternative<PlusInapplicable>(none));
  CHECK(std::get<PlusInapplicable>(none).reason == "no Lambda1-free tile");
  // The zero pattern is a vertex of P+_C although it has a single tile.
  CHECK(compute_tiling(c1, zero).size() == 1);
  CHECK(face_dim_oracle(assemble(c1, std::optional<WeightVector>(), std::optional<WeightVector>(), true), zero) == 0);
  CHECK(face_dim_oracle(assemble(c1, std::optional<WeightVector>(), std::optional<WeightVector>(), false), zero) == 1);

  auto notop = min_face_dims_plus(c1plus(3), rows({{2, 1, 0}, {1, 0}, {0}}));
  REQUIRE(std::holds_alternative<PlusInapplicable>(notop));
  CHECK(std::get<PlusInapplicable>(notop).reason == "not top-connected");

  try {
    (void)min_face_dims_plus(c1plus(5), fig1());
    FAIL("negative support entry accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeEntryOnSupport);
  }
}

TEST_CASE("perturbation basis") {
  SUBCASE("Figure 1") {
    auto b = build_perturbation_basis(c1plus(5), fig1());
    CHECK(b.vectors.size() == 14);
    CHECK(b.r == 5);
    CHECK(b.s == 9);
    for (std::size_t m = 0; m < b.r; ++m) {
      for (const Entry& e : b.vectors[m].row(5)) CHECK(e == Entry(0));
      for (int k = 1; k <= 5; ++k) CHECK(row_sum(b.vectors[m], k) == 0);
    }
  }
  SUBCASE("empty set, n = 2") {
    auto x = rows({{1, 0}, {5}});
    auto b = build_perturbation_basis(standard_set(2, 2, StandardVariant::Empty), x);
    REQUIRE(b.vectors.size() == 3);
    for (const auto& y : b.vectors) {
      int nonzero = 0;
      for (const Entry& e : y.entries()) {
        if (e == Entry(0)) continue;
        ++nonzero;
        CHECK(abs(e.rational()) < Rational(1, 2));
      }
      CHECK(nonzero == 1);
    }
  }
  SUBCASE("constant C1 pattern") {
    auto b = build_perturbation_basis(standard_set(3, 1, StandardVariant::Both), constant(3, 2));
    REQUIRE(b.vectors.size() == 1);
    auto first = b.vectors[0].entries()[0];
    CHECK_FALSE(first == Entry(0));
    for (const Entry& e : b.vectors[0].entries()) CHECK(e == first);
  }
  SUBCASE("X plus and minus Y stay in the polyhedra") {
    for (const auto& inst : random_instances(21, 80)) {
      auto b = build_perturbation_basis(inst.c, inst.x);
      for (std::size_t m = 0; m < b.vectors.size(); ++m) {
        auto up = add(inst.x, b.vectors[m]);
        auto down = add(inst.x, b.vectors[m], -1);
        CHECK(is_c_pattern(inst.c, up));
        CHECK(is_c_pattern(inst.c, down));
        if (m < b.s)
          for (int j = 1; j <= inst.c.n(); ++j) CHECK(up.at({inst.c.n(), j}) == inst.x.at({inst.c.n(), j}));
        if (m < b.r) CHECK(weight_vector(up) == weight_vector(inst.x));
      }
    }
  }
}

TEST_CASE("feasible directions are constant on tiles") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> step(-1, 1);
  int tested = 0;
  for (const auto& inst : random_instances(8, 60)) {
    auto t = compute_tiling(inst.c, inst.x);
    for (int trial = 0; trial < 30; ++trial) {
      Pattern y(inst.c.n());
      for (VertexId v : all_vertices(inst.c.n())) y.set(v, Entry(Rational(step(rng), 4)));
      if (!is_c_pattern(inst.c, add(inst.x, y)) || !is_c_pattern(inst.c, add(inst.x, y, -1))) continue;
      ++tested;
      for (const auto& tile : t.tiles)
        for (VertexId v : tile) CHECK(y.at(v) == y.at(tile.front()));
    }
  }
  CHECK(tested > 0);
}

TEST_CASE("kernel dimension does not depend on the column order") {
  std::mt19937_64 rng(6);
  for (const auto& inst : random_instances(13, 50)) {
    auto a = tiling_matrix(inst.c, inst.x);
    if (a.identity_fallback) continue;
    std::vector<std::size_t> perm(a.cols);
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    TilingMatrix b = a;
    for (std::size_t i = 0; i < a.rows; ++i)
      for (std::size_t j = 0; j < a.cols; ++j) b.a[i][j] = a.a[i][perm[j]];
    CHECK(kernel(a).dimension() == kernel(b).dimension());
  }
}

TEST_CASE("no free tiles forces vertices") {
  for (const auto& inst : random_instances(17, 120)) {
    auto dims = min_face_dims(inst.c, inst.x);
    if (dims.s == 0) CHECK(dims.r == 0);
    CHECK(dims.r <= dims.s);
    CHECK(dims.s <= dims.d);
  }
}

TEST_CASE("mutated kernel routine is caught by the oracle") {
  KernelRoutine broken = [](const TilingMatrix& a) {
    KernelBasis k = kernel(a);
    if (!k.vectors.empty()) k.vectors.pop_back();
    return k;
  };
  CHECK_FALSE(check_instance({"C1+", c1plus(5), fig1()}, broken).empty());
  CHECK(check_instance({"C1+", c1plus(5), fig1()}, kernel).empty());
}
