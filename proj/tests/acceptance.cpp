// One PASS/FAIL line per acceptance criterion; nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>

#include "relpoly/error.hpp"
#include "relpoly/polyhedra.hpp"
#include "relpoly/repmod.hpp"
#include "relpoly/selftest.hpp"
#include "relpoly/tiling.hpp"

using namespace relpoly;

namespace {

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0: no runtime bound
  std::function<std::string()> body;  // empty string on success
};

Pattern from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<std::vector<Entry>> out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return Pattern::from_rows(out);
}

Pattern fig1() { return from_rows({{9, 8, 6, 5, 3}, {8, 5, 5, 4}, {3, 3, 0}, {3, -1}, {-2}}); }

WeightVector weight_of(std::initializer_list<long> xs) {
  WeightVector w;
  for (long v : xs) w.components.emplace_back(v);
  return w;
}

std::size_t oracle(const RelationSet& c, const Pattern& x, Slice slice, bool plus = false) {
  return face_dim_oracle(system_at(c, x, slice, plus), x);
}

std::string criterion_tiling_matrix() {
  auto a = tiling_matrix(standard_set(5, 1, StandardVariant::Plus), fig1());
  std::vector<std::vector<long>> expected = {{1, 0, 0, 0, 0, 0, 0, 0, 0},
                                             {0, 1, 1, 0, 0, 0, 0, 0, 0},
                                             {0, 1, 0, 1, 1, 0, 0, 0, 0},
                                             {0, 0, 0, 0, 0, 1, 1, 1, 1}};
  return a.a == expected ? "" : "matrix differs";
}

std::string criterion_figure_dims() {
  auto c = standard_set(5, 1, StandardVariant::Plus);
  auto x = fig1();
  auto dims = min_face_dims(c, x);
  if (!(dims == FaceDims{14, 9, 5}))
    return "got (" + std::to_string(dims.d) + "," + std::to_string(dims.s) + "," + std::to_string(dims.r) + ")";
  if (oracle(c, x, Slice::Full) != 14 || oracle(c, x, Slice::Top) != 9 || oracle(c, x, Slice::TopWeight) != 5)
    return "oracle disagrees";
  return "";
}

std::string criterion_oracle_equivalence() {
  std::size_t total = 0, failures = 0;
  std::map<std::string, std::size_t> per_family;
  for (std::uint64_t seed : {0u, 1u}) {
    for (const auto& inst : random_instances(seed, 150)) {
      ++total;
      ++per_family[inst.family];
      if (!check_instance(inst, kernel).empty()) ++failures;
    }
  }
  if (per_family.size() != 5) return "not every family was sampled";
  if (failures) return std::to_string(failures) + "/" + std::to_string(total) + " instances disagree";
  return total >= 200 ? "" : "too few instances";
}

std::string criterion_weyl_counts() {
  for (auto lam : {weight_of({1, 0}), weight_of({2, 0}), weight_of({2, 1, 0}), weight_of({1, 1, 0}),
                   weight_of({2, 1, 1, 0})}) {
    const int n = static_cast<int>(lam.components.size());
    auto count = enumerate_integral(standard_set(n, 1, StandardVariant::Both), constant_column_pattern(lam)).count;
    if (count != weyl_dim(lam).get_ui()) return "count " + std::to_string(count) + " for n=" + std::to_string(n);
  }
  auto eight = enumerate_integral(standard_set(3, 1, StandardVariant::Both), constant_column_pattern(weight_of({2, 1, 0})));
  return eight.count == 8 ? "" : "(2,1,0) does not give 8";
}

std::string criterion_weight_counts() {
  auto c = standard_set(3, 1, StandardVariant::Both);
  auto l = constant_column_pattern(weight_of({2, 1, 0}));
  if (enumerate_integral_weight(c, l, weight_of({1, 1, 1})).count != 2) return "μ=(1,1,1) does not give 2";
  // Group the 8 basis points by weight and re-enumerate each slice.
  std::map<WeightVector, std::size_t> brute;
  for (const auto& p : enumerate_integral(c, l).points) ++brute[weight_vector(p)];
  std::size_t sum = 0;
  for (const auto& [mu, count] : brute) {
    auto slice = enumerate_integral_weight(c, l, mu).count;
    if (slice != count) return "slice count mismatch";
    sum += slice;
  }
  return sum == 8 ? "" : "slices sum to " + std::to_string(sum);
}

std::string criterion_c2_slices() {
  auto c = standard_set(3, 2, StandardVariant::Both);
  auto l = from_rows({{Rational(1, 2), 1, 0}, {Rational(1, 3), 0}, {Rational(1, 5)}});
  if (!is_realization(c, l)) return "base is not a realization";
  auto small = enumerate_integral(standard_set(2, 1, StandardVariant::Both), constant_column_pattern(weight_of({1, 0})));
  const auto dim = weyl_dim(weight_of({1, 0})).get_ui();
  std::size_t checked = 0;
  for (auto [a, b] : std::vector<std::pair<long, long>>{{0, 0}, {1, 0}, {0, 1}, {-2, 3}, {5, -4}, {3, 3}}) {
    WeightVector mu{{Rational(1, 5) + a, Rational(1, 3) + b - Rational(1, 5) - a, Rational(7, 6) - b}};
    auto slice = enumerate_integral_weight(c, l, mu);
    if (slice.count != dim) return "μ slice has " + std::to_string(slice.count) + " points";
    // Image of the gl2 basis under the bijection onto the slice.
    std::vector<Pattern> image;
    for (const auto& s : small.points) {
      const auto& m = mu.components;
      Pattern p(3);
      p.set({3, 2}, s.at({2, 1}));
      p.set({3, 3}, s.at({2, 2}));
      p.set({2, 2}, s.at({1, 1}));
      p.set({3, 1}, Entry(m[0] + m[1] + m[2] - s.at({2, 1}).rational() - s.at({2, 2}).rational()));
      p.set({2, 1}, Entry(m[0] + m[1] - s.at({1, 1}).rational()));
      p.set({1, 1}, Entry(m[0]));
      image.push_back(p);
    }
    std::sort(image.begin(), image.end());
    if (image != slice.points) return "slice differs from the bijection image";
    ++checked;
  }
  return checked >= 5 ? "" : "too few weights";
}

std::string criterion_commutators() {
  std::size_t checks = 0;
  for (auto lam : {weight_of({1, 0}), weight_of({2, 0}), weight_of({2, 1, 0}), weight_of({1, 1, 0}),
                   weight_of({2, 1, 1, 0})}) {
    const int n = static_cast<int>(lam.components.size());
    auto c = standard_set(n, 1, StandardVariant::Both);
    auto l = constant_column_pattern(lam);
    auto report = check_commutators(c, l, enumerate_integral(c, l).points);
    if (!report.ok()) return report.failures.front().identity + " fails";
    checks += report.checks;
  }
  for (int n = 2; n <= 3; ++n) {
    const std::vector<Rational> generic = {Rational(1, 2), Rational(1, 3), Rational(-1, 5),
                                           Rational(2, 7), Rational(-3, 11), Rational(5, 13)};
    Pattern l(n);
    for (std::size_t i = 0; i < triangle_size(n); ++i) l.set(vertex_at(n, i), Entry(generic[i]));
    std::vector<Pattern> sample = {l};
    for (std::size_t i = static_cast<std::size_t>(n); i < triangle_size(n); ++i)
      for (long shift : {-1L, 1L, 2L}) {
        Pattern m = l;
        m.set(vertex_at(n, i), l.at(vertex_at(n, i)) + Rational(shift));
        sample.push_back(m);
      }
    auto report = check_commutators(standard_set(n, n, StandardVariant::Empty), l, sample);
    if (!report.ok()) return "empty set: " + report.failures.front().identity + " fails";
    checks += report.checks;
  }
  return checks > 0 ? "" : "nothing checked";
}

std::string criterion_admissibility() {
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n; ++k) {
      for (auto v : {StandardVariant::Plus, StandardVariant::Minus, StandardVariant::Both})
        if (check_admissible(standard_set(n, k, v)).status != AdmissibilityStatus::Admissible)
          return "standard set n=" + std::to_string(n) + " k=" + std::to_string(k) + " not admissible";
      if (is_top_connected(standard_set(n, k, StandardVariant::Plus)) != (k == n)) return "C_k^+ top-connectedness";
      if (!is_top_connected(standard_set(n, k, StandardVariant::Both)) ||
          !is_top_connected(standard_set(n, k, StandardVariant::Minus)))
        return "C_k / C_k^- top-connectedness";
    }
  auto bad = check_admissible(RelationSet(3, {{{2, 1}, {1, 1}}, {{1, 1}, {2, 2}}}));
  if (bad.status != AdmissibilityStatus::NotAdmissible) return "counterexample classified " + std::string(to_string(bad.status));
  if (!bad.witness || *bad.witness != VertexPair{{2, 1}, {2, 2}}) return "wrong witness";
  return "";
}

std::string criterion_vertices() {
  for (int n = 2; n <= 5; ++n) {
    auto c = standard_set(n, 1, StandardVariant::Both);
    Pattern constant(n), zero(n);
    for (VertexId v : all_vertices(n)) constant.set(v, Entry(7));
    if (!(min_face_dims(c, constant) == FaceDims{1, 0, 0})) return "constant pattern dims";
    if (oracle(c, constant, Slice::Top) != 0 || oracle(c, constant, Slice::TopWeight) != 0) return "oracle on constant";
    // V(C1) is the whole triangle; zero is a vertex of P+ with one tile.
    if (compute_tiling(c, zero).size() != 1) return "zero pattern tiling";
    auto none = assemble(c, std::optional<WeightVector>(), std::optional<WeightVector>(), true);
    if (face_dim_oracle(none, zero) != 0) return "zero pattern is not a vertex of P+";
    if (!std::holds_alternative<PlusInapplicable>(min_face_dims_plus(c, zero))) return "plus formula applied";
  }
  return "";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "tiling matrix of the Figure 1 pattern", 1.0, criterion_tiling_matrix},
      {2, "face dimensions (14, 9, 5) at Figure 1", 0.0, criterion_figure_dims},
      {3, "tile formulas equal the active-constraint oracle (300 random instances)", 60.0,
       criterion_oracle_equivalence},
      {4, "integral point counts equal Weyl dimensions", 5.0, criterion_weyl_counts},
      {5, "weight-space counts for lambda = (2,1,0)", 0.0, criterion_weight_counts},
      {6, "C2 weight slices are copies of L(1,0)", 0.0, criterion_c2_slices},
      {7, "gl_n bracket relations on C1 and generic modules", 30.0, criterion_commutators},
      {8, "admissibility and top-connectedness classification", 0.0, criterion_admissibility},
      {9, "vertex detection", 0.0, criterion_vertices},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = c.body();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (problem.empty() && c.limit_seconds > 0 && seconds >= c.limit_seconds)
      problem = "took " + std::to_string(seconds) + " s";
    if (!problem.empty()) ++failed;
    std::printf("%s %d %s (%.3f s)%s%s\n", problem.empty() ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                problem.empty() ? "" : ": ", problem.c_str());
  }
  return failed == 0 ? 0 : 1;
}
