#include "relpoly/polyhedra.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "relpoly/error.hpp"
#include "relpoly/linalg.hpp"

namespace relpoly {

ConstraintSystem assemble(const RelationSet& c, std::optional<std::vector<Entry>> lambda,
                          std::optional<std::vector<SymbolicSum>> mu, bool plus) {
  const int n = c.n();
  if (mu && !lambda) throw Error(ErrorCode::InvalidArgument, "a weight μ requires a top row λ");
  if (lambda && static_cast<int>(lambda->size()) != n)
    throw Error(ErrorCode::DimensionMismatch, "λ must have n=" + std::to_string(n) + " components");
  if (mu && static_cast<int>(mu->size()) != n)
    throw Error(ErrorCode::DimensionMismatch, "μ must have n=" + std::to_string(n) + " components");
  ConstraintSystem sys;
  sys.n = n;
  for (const auto& r : c.relations()) sys.inequalities.emplace_back(r.src, r.dst);
  if (plus) sys.nonneg = support(c);
  sys.eq_top = std::move(lambda);
  sys.eq_weights = std::move(mu);
  return sys;
}

ConstraintSystem assemble(const RelationSet& c, const std::optional<WeightVector>& lambda,
                          const std::optional<WeightVector>& mu, bool plus) {
  std::optional<std::vector<Entry>> top;
  std::optional<std::vector<SymbolicSum>> weights;
  if (lambda) top.emplace(lambda->components.begin(), lambda->components.end());
  if (mu) {
    weights.emplace();
    for (const auto& q : mu->components) weights->push_back(SymbolicSum{q, {}});
  }
  return assemble(c, std::move(top), std::move(weights), plus);
}

ConstraintSystem system_at(const RelationSet& c, const Pattern& x, Slice slice, bool plus) {
  std::optional<std::vector<Entry>> top;
  std::optional<std::vector<SymbolicSum>> weights;
  if (slice != Slice::Full) top.emplace(x.row(x.n()).begin(), x.row(x.n()).end());
  if (slice == Slice::TopWeight) {
    weights.emplace();
    for (int k = 1; k <= x.n(); ++k) weights->push_back(weight_form(x, k));
  }
  return assemble(c, std::move(top), std::move(weights), plus);
}

std::size_t face_dim_oracle(const ConstraintSystem& system, const Pattern& x) {
  const int n = system.n;
  if (x.n() != n) throw Error(ErrorCode::DimensionMismatch, "pattern height differs from the system");
  const std::size_t cols = triangle_size(n);
  std::vector<std::vector<std::pair<std::size_t, long>>> rows;

  for (const auto& [src, dst] : system.inequalities) {
    auto order = compare_values(x.at(src), x.at(dst));
    if (order < 0)
      throw Error(ErrorCode::Infeasible, "x" + to_string(src) + " < x" + to_string(dst));
    if (order == 0) rows.push_back({{flat_index(n, src), 1}, {flat_index(n, dst), -1}});
  }
  for (VertexId v : system.nonneg) {
    auto order = compare_values(x.at(v), Entry(0));
    if (order < 0) throw Error(ErrorCode::Infeasible, "x" + to_string(v) + " < 0");
    if (order == 0) rows.push_back({{flat_index(n, v), 1}});
  }
  if (system.eq_top) {
    for (int j = 1; j <= n; ++j) {
      if (!(x.at({n, j}) == (*system.eq_top)[j - 1]))
        throw Error(ErrorCode::Infeasible, "top row differs from λ at column " + std::to_string(j));
      rows.push_back({{flat_index(n, {n, j}), 1}});
    }
  }
  if (system.eq_weights) {
    for (int k = 1; k <= n; ++k) {
      if (!(weight_form(x, k) == (*system.eq_weights)[k - 1]))
        throw Error(ErrorCode::Infeasible, "weight " + std::to_string(k) + " differs from μ");
      std::vector<std::pair<std::size_t, long>> row;
      for (int i = 1; i <= k; ++i) row.emplace_back(flat_index(n, {k, i}), 1);
      for (int i = 1; i < k; ++i) row.emplace_back(flat_index(n, {k - 1, i}), -1);
      rows.push_back(std::move(row));
    }
  }

  linalg::IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, v] : rows[i]) m(i, j) += v;
  return cols - linalg::bareiss_rank(std::move(m));
}

BoundednessReport is_polytope(const RelationSet& c) {
  const int n = c.n();
  BoundednessReport report;
  for (VertexId v : all_vertices(n)) {
    if (v.row == n) continue;
    bool upper = false, lower = false;
    for (int r = 1; r <= n; ++r) {
      upper = upper || c.reaches({n, r}, v);
      lower = lower || c.reaches(v, {n, r});
    }
    if (!upper || !lower) report.unbounded_coordinates.push_back(v);
  }
  report.bounded = report.unbounded_coordinates.empty();
  return report;
}

Pattern constant_column_pattern(const WeightVector& lambda) {
  const int n = static_cast<int>(lambda.components.size());
  Pattern p(n);
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= k; ++i) p.set({k, i}, Entry(lambda.components[i - 1]));
  return p;
}

namespace {

using Bound = std::optional<std::int64_t>;

// Backtracking over integer offsets z = X - L, row n-1 down to row 1, left to
// right; that is the serialization order, so points come out sorted.
class Enumerator {
 public:
  Enumerator(const RelationSet& c, const Pattern& l, const EnumerateOptions& options)
      : c_(c), l_(l), n_(c.n()), size_(triangle_size(c.n())), options_(options) {
    z_.assign(size_, 0);
    above_.resize(size_);
    below_.resize(size_);
    for (std::size_t a = 0; a < size_; ++a) {
      VertexId va = vertex_at(n_, a);
      for (std::size_t b = 0; b < size_; ++b) {
        if (a == b) continue;
        VertexId vb = vertex_at(n_, b);
        if (!c.reaches(va, vb)) continue;
        // x_a >= x_b  <=>  z_b <= z_a + (l_a - l_b)
        std::int64_t delta = to_int64_exact(*l.at(va).exact_difference(l.at(vb)));
        above_[b].push_back({a, delta});
        below_[a].push_back({b, -delta});
      }
    }
  }

  void set_row_targets(std::vector<std::int64_t> targets) { row_targets_ = std::move(targets); }

  IntegralPointSet run() {
    IntegralPointSet out;
    out.base = l_;
    result_ = &out;
    if (!infeasible_) visit(static_cast<std::size_t>(n_));
    return out;
  }

  void mark_infeasible() { infeasible_ = true; }

 private:
  struct Link {
    std::size_t other;
    std::int64_t delta;
  };

  // Bounds on z at index idx implied by vertices with index < limit.
  std::pair<Bound, Bound> certificate_bounds(std::size_t idx, std::size_t limit) const {
    Bound lo, hi;
    for (const auto& [u, delta] : above_[idx])
      if (u < limit) hi = hi ? std::min(*hi, z_[u] + delta) : z_[u] + delta;
    for (const auto& [w, delta] : below_[idx])
      if (w < limit) lo = lo ? std::max(*lo, z_[w] + delta) : z_[w] + delta;
    return {lo, hi};
  }

  void visit(std::size_t idx) {
    if (idx == size_) {
      record();
      return;
    }
    VertexId v = vertex_at(n_, idx);
    auto [lo, hi] = certificate_bounds(idx, idx);
    if (!row_targets_.empty()) {
      if (!slice_bounds(idx, v, lo, hi)) return;
    } else if (!lo || !hi) {
      throw Error(ErrorCode::Unbounded, "coordinate " + to_string(v) + " is unbounded");
    }
    for (std::int64_t value = *lo; value <= *hi; ++value) {
      z_[idx] = value;
      visit(idx + 1);
    }
    z_[idx] = 0;
  }

  // Tightens [lo, hi] with the fixed row sum; false if the branch is empty.
  bool slice_bounds(std::size_t idx, VertexId v, Bound& lo, Bound& hi) {
    const int k = v.row;
    const std::size_t first = row_offset(n_, k);
    std::int64_t remaining = row_targets_[static_cast<std::size_t>(k - 1)];
    for (std::size_t j = first; j < idx; ++j) remaining -= z_[j];
    const std::size_t last = first + static_cast<std::size_t>(k);

    if (idx + 1 == last) {
      if ((lo && remaining < *lo) || (hi && remaining > *hi)) return false;
      lo = hi = remaining;
      return true;
    }
    // Box ∩ {sum = remaining}, projected on this coordinate.
    Bound others_lo = 0, others_hi = 0;
    for (std::size_t j = idx + 1; j < last; ++j) {
      auto [l, h] = certificate_bounds(j, idx);
      others_lo = (others_lo && l) ? Bound(*others_lo + *l) : std::nullopt;
      others_hi = (others_hi && h) ? Bound(*others_hi + *h) : std::nullopt;
    }
    if (others_hi) lo = lo ? std::max(*lo, remaining - *others_hi) : remaining - *others_hi;
    if (others_lo) hi = hi ? std::min(*hi, remaining - *others_lo) : remaining - *others_lo;
    if (!lo || !hi)
      throw Error(ErrorCode::UnboundedWeightSlice,
                  "coordinate " + to_string(v) + " has no finite range in the weight slice");
    return *lo <= *hi;
  }

  void record() {
    ++result_->count;
    if (options_.limit && result_->points.size() >= *options_.limit) return;
    Pattern p = l_;
    for (std::size_t idx = static_cast<std::size_t>(n_); idx < size_; ++idx) {
      VertexId v = vertex_at(n_, idx);
      p.set(v, l_.at(v) + Rational(static_cast<long>(z_[idx])));
    }
    result_->points.push_back(std::move(p));
  }

  const RelationSet& c_;
  const Pattern& l_;
  int n_;
  std::size_t size_;
  EnumerateOptions options_;
  std::vector<std::int64_t> z_;
  std::vector<std::vector<Link>> above_, below_;
  std::vector<std::int64_t> row_targets_;
  bool infeasible_ = false;
  IntegralPointSet* result_ = nullptr;
};

void require_satisfying(const RelationSet& c, const Pattern& l) {
  if (!satisfies(c, l)) throw Error(ErrorCode::NotSatisfying, "base pattern does not satisfy C");
}

}  // namespace

IntegralPointSet enumerate_integral(const RelationSet& c, const Pattern& l, const EnumerateOptions& options) {
  require_satisfying(c, l);
  if (auto report = is_polytope(c); !report.bounded) {
    std::string coords;
    for (VertexId v : report.unbounded_coordinates) coords += (coords.empty() ? "" : " ") + to_string(v);
    throw Error(ErrorCode::Unbounded, "P_C(λ) is unbounded along " + coords);
  }
  return Enumerator(c, l, options).run();
}

IntegralPointSet enumerate_integral_weight(const RelationSet& c, const Pattern& l, const WeightVector& mu,
                                           const EnumerateOptions& options) {
  require_satisfying(c, l);
  const int n = c.n();
  if (static_cast<int>(mu.components.size()) != n)
    throw Error(ErrorCode::DimensionMismatch, "μ must have n=" + std::to_string(n) + " components");
  Rational total = 0;
  for (const auto& q : mu.components) total += q;
  SymbolicSum top = row_sum_form(l, n);
  if (!top.is_rational() || top.constant != total)
    throw Error(ErrorCode::WeightMismatch, "sum of μ is " + to_string(total) + " but the top row sums to " +
                                               top.to_string());

  Enumerator e(c, l, options);
  std::vector<std::int64_t> targets;
  Rational partial = 0;
  for (int k = 1; k <= n; ++k) {
    partial += mu.components[k - 1];
    SymbolicSum base = row_sum_form(l, k);
    Rational shift = partial - base.constant;
    // No L-integral point has this row sum.
    if (!base.is_rational() || !is_integer(shift)) {
      e.mark_infeasible();
      targets.push_back(0);
      continue;
    }
    targets.push_back(to_int64_exact(shift));
  }
  e.set_row_targets(std::move(targets));
  return e.run();
}

}  // namespace relpoly
