#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "helpers.hpp"
#include "relpoly/error.hpp"
#include "relpoly/polyhedra.hpp"
#include "relpoly/repmod.hpp"

using namespace relpoly;
using testing::rows;

namespace {

WeightVector wv(std::initializer_list<Rational> xs) { return WeightVector{std::vector<Rational>(xs)}; }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

RelationSet c1(int n) { return standard_set(n, 1, StandardVariant::Both); }

// C2-realization for n = 3 with top row (1/2, 1, 0).
Pattern c2_base() {
  return Pattern::from_rows({{Rational(1, 2), 1, 0}, {Rational(1, 3), 0}, {Rational(1, 5)}});
}

// The bijection from B_{C1}(λ~) (n = 2) onto the C2 weight slice.
Pattern psi(const Pattern& small, const WeightVector& mu) {
  const auto& m = mu.components;
  Pattern s(3);
  s.set({3, 2}, small.at({2, 1}));
  s.set({3, 3}, small.at({2, 2}));
  s.set({2, 2}, small.at({1, 1}));
  s.set({3, 1}, Entry(m[0] + m[1] + m[2] - small.at({2, 1}).rational() - small.at({2, 2}).rational()));
  s.set({2, 1}, Entry(m[0] + m[1] - small.at({1, 1}).rational()));
  s.set({1, 1}, Entry(m[0]));
  return s;
}

}  // namespace

TEST_CASE("assembling constraint systems") {
  auto c = c1(3);
  auto sys = assemble(c, wv({2, 1, 0}), wv({1, 1, 1}), false);
  CHECK(sys.inequalities.size() == c.size());
  CHECK(sys.nonneg.empty());
  CHECK(sys.eq_top->size() == 3);
  CHECK(assemble(c, wv({2, 1, 0}), std::nullopt, true).nonneg.size() == 6);
  CHECK(code_of([&] { assemble(c, std::nullopt, wv({1, 1, 1}), false); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { assemble(c, wv({1, 0}), std::nullopt, false); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("face oracle rejects infeasible points") {
  auto c = c1(2);
  CHECK(code_of([&] { face_dim_oracle(assemble(c, std::optional<WeightVector>(), std::nullopt, false), rows({{0, 1}, {0}})); }) ==
        ErrorCode::Infeasible);
  CHECK(code_of([&] { face_dim_oracle(assemble(c, wv({1, 0}), std::nullopt, true), rows({{0, -1}, {-1}})); }) ==
        ErrorCode::Infeasible);
  CHECK(code_of([&] { face_dim_oracle(assemble(c, wv({2, 0}), std::nullopt, false), rows({{1, 0}, {0}})); }) ==
        ErrorCode::Infeasible);
}

TEST_CASE("face oracle on hand-computed points") {
  // Interior point of the C1 polytope for λ = (2, 0): one free coordinate.
  auto c = c1(2);
  auto x = rows({{2, 0}, {1}});
  CHECK(face_dim_oracle(system_at(c, x, Slice::Full), x) == 3);
  CHECK(face_dim_oracle(system_at(c, x, Slice::Top), x) == 1);
  CHECK(face_dim_oracle(system_at(c, x, Slice::TopWeight), x) == 0);
  // On the wall x11 = x21 the free coordinate is pinned.
  auto wall = rows({{2, 0}, {2}});
  CHECK(face_dim_oracle(system_at(c, wall, Slice::Top), wall) == 0);
  CHECK(face_dim_oracle(system_at(c, wall, Slice::Full), wall) == 2);
}

TEST_CASE("boundedness") {
  CHECK(is_polytope(c1(4)).bounded);
  auto plus = is_polytope(standard_set(3, 1, StandardVariant::Plus));
  CHECK_FALSE(plus.bounded);
  CHECK(plus.unbounded_coordinates == std::vector<VertexId>{{1, 1}, {2, 1}, {2, 2}});
  auto empty = is_polytope(standard_set(3, 3, StandardVariant::Empty));
  CHECK(empty.unbounded_coordinates.size() == 3);
  CHECK(is_polytope(standard_set(1, 1, StandardVariant::Empty)).bounded);
}

TEST_CASE("enumeration errors") {
  CHECK(code_of([] { enumerate_integral(standard_set(3, 1, StandardVariant::Plus), rows({{2, 1, 0}, {1, 0}, {0}})); }) ==
        ErrorCode::Unbounded);
  CHECK(code_of([] { enumerate_integral(c1(2), rows({{1, 0}, {2}})); }) == ErrorCode::NotSatisfying);
  auto base = rows({{2, 1, 0}, {1, 0}, {0}});
  CHECK(code_of([&] { enumerate_integral_weight(c1(3), base, wv({1, 1, 2})); }) == ErrorCode::WeightMismatch);
  CHECK(code_of([&] {
          enumerate_integral_weight(standard_set(3, 3, StandardVariant::Empty), base, wv({0, 1, 2}));
        }) == ErrorCode::UnboundedWeightSlice);
}

TEST_CASE("enumeration agrees with brute force") {
  struct Case {
    RelationSet c;
    Pattern l;
    long lo, hi;  // brute-force box for the offsets
  };
  std::vector<Case> cases = {
      {c1(2), rows({{3, 0}, {1}}), -5, 5},
      {c1(3), rows({{2, 1, 0}, {1, 0}, {0}}), -5, 5},
      {c1(3), rows({{3, 1, -1}, {2, 0}, {1}}), -5, 5},
      {c1(4), rows({{3, 1, 0, 0}, {1, 0, 0}, {0, 0}, {0}}), -1, 4},
      {testing::relations(3, {{3, 1, 2, 1}, {2, 1, 3, 3}, {3, 2, 2, 2}, {2, 2, 3, 3}, {2, 1, 1, 1}, {1, 1, 2, 2}}),
       rows({{4, 2, 0}, {3, 1}, {2}}), -5, 5},
      {testing::relations(2, {{2, 1, 1, 1}, {1, 1, 2, 2}, {2, 1, 2, 2}}), rows({{3, 0}, {1}}), -5, 5},
  };
  for (const auto& [c, l, lo, hi] : cases) {
    auto brute = testing::brute_force_points(c, l, lo, hi);
    auto result = enumerate_integral(c, l);
    CHECK(result.count == brute.size());
    CHECK(result.points.size() == brute.size());
    auto sorted = brute;
    std::sort(sorted.begin(), sorted.end(), [](const Pattern& a, const Pattern& b) { return a < b; });
    auto got = result.points;
    // Points come out in lexicographic order of the serialization.
    CHECK(std::is_sorted(got.begin(), got.end(), [](const Pattern& a, const Pattern& b) { return a < b; }));
    CHECK(got == sorted);
  }
}

TEST_CASE("limit caps stored points but not the count") {
  auto l = rows({{2, 1, 0}, {1, 0}, {0}});
  auto result = enumerate_integral(c1(3), l, EnumerateOptions{3});
  CHECK(result.count == 8);
  CHECK(result.points.size() == 3);
}

TEST_CASE("point counts match the Weyl dimension") {
  const std::vector<std::vector<long>> lambdas = {{1, 0}, {2, 0}, {2, 1, 0}, {1, 1, 0}, {2, 1, 1, 0}, {3, 1, 0, 0}};
  for (const auto& lam : lambdas) {
    WeightVector w;
    for (long v : lam) w.components.emplace_back(v);
    auto n = static_cast<int>(lam.size());
    CHECK(enumerate_integral(c1(n), constant_column_pattern(w)).count == weyl_dim(w).get_ui());
  }
  CHECK(weyl_dim(wv({2, 1, 0})) == 8);
  CHECK(weyl_dim(wv({0, 0, 0, 0})) == 1);
  CHECK(weyl_dim(wv({1, 0})) == 2);
  CHECK(weyl_dim(wv({2, 1, 1, 0})) == 15);
  CHECK(code_of([] { weyl_dim(wv({0, 1})); }) == ErrorCode::NotDominant);
  CHECK(code_of([] { weyl_dim(wv({Rational(1, 2), 0})); }) == ErrorCode::NotDominant);
}

TEST_CASE("weight slices partition the integral points") {
  auto l = rows({{2, 1, 0}, {2, 1}, {2}});
  auto all = enumerate_integral(c1(3), l);
  std::map<WeightVector, std::size_t> by_weight;
  for (const auto& p : all.points) ++by_weight[weight_vector(p)];
  std::size_t total = 0;
  for (const auto& [mu, count] : by_weight) {
    auto slice = enumerate_integral_weight(c1(3), l, mu);
    CHECK(slice.count == count);
    for (const auto& p : slice.points) CHECK(weight_vector(p) == mu);
    total += slice.count;
  }
  CHECK(total == 8);
  CHECK(enumerate_integral_weight(c1(3), l, wv({1, 1, 1})).count == 2);
  CHECK(enumerate_integral_weight(c1(3), l, wv({3, 0, 0})).count == 0);
  // A non-integral shift has no L-integral points.
  CHECK(enumerate_integral_weight(c1(3), l, wv({Rational(1, 2), Rational(1, 2), 2})).count == 0);
}

TEST_CASE("weight slices of an unbounded polyhedron") {
  auto c = standard_set(3, 1, StandardVariant::Plus);
  auto l = rows({{2, 1, 0}, {1, 0}, {0}});
  auto brute = testing::brute_force_points(c, l, -7, 7);
  for (const auto& mu : {wv({0, 1, 2}), wv({-1, 2, 2}), wv({1, 1, 1}), wv({3, -1, 1})}) {
    auto slice = enumerate_integral_weight(c, l, mu);
    std::size_t expected = 0;
    for (const auto& p : brute) expected += weight_vector(p) == mu;
    CHECK(slice.count == expected);
    for (const auto& p : slice.points)
      for (const Entry& e : p.entries()) CHECK(abs(e.rational()) < 7);
  }
}

TEST_CASE("C2 weight slices are copies of the gl2 module") {
  auto c = standard_set(3, 2, StandardVariant::Both);
  auto l = c2_base();
  REQUIRE(is_realization(c, l));
  auto small = enumerate_integral(standard_set(2, 1, StandardVariant::Both), rows({{1, 0}, {0}}));
  REQUIRE(small.count == 2);
  const std::vector<std::pair<long, long>> shifts = {{0, 0}, {1, 0}, {0, 1}, {-2, 3}, {5, -4}, {3, 3}};
  for (auto [a, b] : shifts) {
    WeightVector mu = wv({Rational(1, 5) + a, Rational(1, 3) + b - Rational(1, 5) - a, Rational(7, 6) - b});
    auto slice = enumerate_integral_weight(c, l, mu);
    std::vector<Pattern> image;
    for (const auto& s : small.points) image.push_back(psi(s, mu));
    std::sort(image.begin(), image.end());
    CHECK(slice.count == 2);
    CHECK(slice.points == image);
  }
}
