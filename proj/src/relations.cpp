#include "relpoly/relations.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "relpoly/error.hpp"

namespace relpoly {

std::string to_string(const Relation& r) {
  return "(" + std::to_string(r.src.row) + "," + std::to_string(r.src.col) + ";" +
         std::to_string(r.dst.row) + "," + std::to_string(r.dst.col) + ")";
}

std::optional<RelationClass> classify(int n, const Relation& r) {
  if (!in_triangle(n, r.src) || !in_triangle(n, r.dst)) return std::nullopt;
  if (r.dst.row == r.src.row - 1) return RelationClass::Plus;
  if (r.dst.row == r.src.row + 1) return RelationClass::Minus;
  if (r.src.row == n && r.dst.row == n && r.src.col != r.dst.col) return RelationClass::Zero;
  return std::nullopt;
}

RelationSet::RelationSet(int n, std::vector<Relation> relations)
    : n_(n), relations_(std::move(relations)) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  std::sort(relations_.begin(), relations_.end());
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    if (!classify(n, relations_[i]))
      throw Error(ErrorCode::InvalidRelation,
                  "relation " + to_string(relations_[i]) + " is not in R for n=" + std::to_string(n));
    if (i > 0 && relations_[i] == relations_[i - 1])
      throw Error(ErrorCode::InvalidRelation, "duplicate relation " + to_string(relations_[i]));
  }

  const std::size_t count = triangle_size(n);
  out_.assign(count, {});
  in_.assign(count, {});
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    out_[index(relations_[i].src)].push_back(i);
    in_[index(relations_[i].dst)].push_back(i);
  }

  strict_reach_.assign(count * count, 0);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < count; ++s) {
    std::uint8_t* row = &strict_reach_[s * count];
    stack.assign(1, s);
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t e : out_[u]) {
        std::size_t w = index(relations_[e].dst);
        if (!row[w]) {
          row[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
}

bool RelationSet::contains(VertexId src, VertexId dst) const {
  return std::binary_search(relations_.begin(), relations_.end(), Relation{src, dst});
}

bool RelationSet::reaches_strictly(VertexId a, VertexId b) const {
  if (!in_triangle(n_, a) || !in_triangle(n_, b)) return false;
  return strict_reach_[index(a) * triangle_size(n_) + index(b)] != 0;
}

bool RelationSet::reaches(VertexId a, VertexId b) const {
  if (!in_triangle(n_, a) || !in_triangle(n_, b)) return false;
  return a == b || reaches_strictly(a, b);
}

std::span<const std::size_t> RelationSet::out_arrows(VertexId v) const { return out_[index(v)]; }

std::span<const std::size_t> RelationSet::in_arrows(VertexId v) const { return in_[index(v)]; }

RelationSet standard_set(int n, int k, StandardVariant variant) {
  if (n < 1 || k < 1 || k > n)
    throw Error(ErrorCode::InvalidArgument,
                "standard set needs 1 <= k <= n (got n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  std::vector<Relation> rel;
  const bool plus = variant == StandardVariant::Plus || variant == StandardVariant::Both;
  const bool minus = variant == StandardVariant::Minus || variant == StandardVariant::Both;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = k; j <= i; ++j) {
      if (plus) rel.push_back({{i + 1, j}, {i, j}});
      if (minus) rel.push_back({{i, j}, {i + 1, j + 1}});
    }
  }
  return RelationSet(n, std::move(rel));
}

std::vector<VertexId> support(const RelationSet& c) {
  std::vector<VertexId> out;
  for (const auto& r : c.relations()) {
    out.push_back(r.src);
    out.push_back(r.dst);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool reaches(const RelationSet& c, VertexId a, VertexId b) { return c.reaches(a, b); }

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ComponentPartition connected_components(const RelationSet& c) {
  const int n = c.n();
  const std::size_t count = triangle_size(n);
  DisjointSets sets(count);
  for (const auto& r : c.relations()) sets.unite(flat_index(n, r.src), flat_index(n, r.dst));

  ComponentPartition out;
  out.n = n;
  out.block_of.assign(count, 0);
  std::vector<std::size_t> block_of_root(count, count);
  // all_vertices is (row, col) sorted, so blocks come out sorted by least member.
  for (VertexId v : all_vertices(n)) {
    std::size_t root = sets.find(flat_index(n, v));
    if (block_of_root[root] == count) {
      block_of_root[root] = out.blocks.size();
      out.blocks.emplace_back();
    }
    out.blocks[block_of_root[root]].push_back(v);
    out.block_of[flat_index(n, v)] = block_of_root[root];
  }
  return out;
}

std::string_view to_string(ReducedRule rule) {
  switch (rule) {
    case ReducedRule::AtMostOneOutToRowAbove: return "at most one i such that ((k,j);(k+1,i)) in C";
    case ReducedRule::AtMostOneInFromRowAbove: return "at most one i such that ((k+1,i);(k,j)) in C";
    case ReducedRule::AtMostOneOutToRowBelow: return "at most one i such that ((k,j);(k-1,i)) in C";
    case ReducedRule::AtMostOneInFromRowBelow: return "at most one i such that ((k-1,i);(k,j)) in C";
    case ReducedRule::TopRowRelationImplied: return "top-row relation follows from other relations";
  }
  return "";
}

namespace {

// Directed reachability in G(C \ {skip}).
bool reaches_without(const RelationSet& c, VertexId from, VertexId to, std::size_t skip) {
  const int n = c.n();
  std::vector<std::uint8_t> seen(triangle_size(n), 0);
  std::deque<VertexId> queue{from};
  seen[flat_index(n, from)] = 1;
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    if (u == to) return true;
    for (std::size_t e : c.out_arrows(u)) {
      if (e == skip) continue;
      VertexId w = c.relations()[e].dst;
      if (!seen[flat_index(n, w)]) {
        seen[flat_index(n, w)] = 1;
        queue.push_back(w);
      }
    }
  }
  return false;
}

}  // namespace

ReducedReport is_reduced(const RelationSet& c) {
  ReducedReport report;
  const auto rel = c.relations();
  for (VertexId v : support(c)) {
    std::vector<Relation> out_up, in_up, out_down, in_down;
    for (std::size_t e : c.out_arrows(v)) {
      if (rel[e].dst.row == v.row + 1) out_up.push_back(rel[e]);
      if (rel[e].dst.row == v.row - 1) out_down.push_back(rel[e]);
    }
    for (std::size_t e : c.in_arrows(v)) {
      if (rel[e].src.row == v.row + 1) in_up.push_back(rel[e]);
      if (rel[e].src.row == v.row - 1) in_down.push_back(rel[e]);
    }
    auto check = [&](ReducedRule rule, std::vector<Relation>& arrows) {
      if (arrows.size() > 1) report.violations.push_back({rule, v, std::move(arrows)});
    };
    check(ReducedRule::AtMostOneOutToRowAbove, out_up);
    check(ReducedRule::AtMostOneInFromRowAbove, in_up);
    check(ReducedRule::AtMostOneOutToRowBelow, out_down);
    check(ReducedRule::AtMostOneInFromRowBelow, in_down);
  }
  for (std::size_t e = 0; e < rel.size(); ++e) {
    if (classify(c.n(), rel[e]) != RelationClass::Zero) continue;
    if (reaches_without(c, rel[e].src, rel[e].dst, e))
      report.violations.push_back({ReducedRule::TopRowRelationImplied, rel[e].src, {rel[e]}});
  }
  report.reduced = report.violations.empty();
  return report;
}

std::vector<VertexPair> adjoining_pairs(const RelationSet& c) {
  std::vector<VertexPair> out;
  for (int k = 1; k <= c.n() - 1; ++k) {
    for (int i = 1; i <= k; ++i) {
      for (int j = i + 1; j <= k; ++j) {
        VertexId a{k, i}, b{k, j};
        if (!c.reaches(a, b)) continue;
        bool intermediate = false;
        for (int t = 1; t <= k && !intermediate; ++t) {
          if (t == i || t == j) continue;
          VertexId m{k, t};
          intermediate = c.reaches(a, m) && c.reaches(m, b);
        }
        if (!intermediate) out.emplace_back(a, b);
      }
    }
  }
  return out;
}

std::string_view to_string(AdmissibilityStatus status) {
  switch (status) {
    case AdmissibilityStatus::Admissible: return "Admissible";
    case AdmissibilityStatus::NotAdmissible: return "NotAdmissible";
    case AdmissibilityStatus::Inapplicable: return "Inapplicable";
  }
  return "";
}

std::string_view to_string(AdmissibilityHypothesis hypothesis) {
  switch (hypothesis) {
    case AdmissibilityHypothesis::None: return "none";
    case AdmissibilityHypothesis::NotReduced: return "not reduced";
    case AdmissibilityHypothesis::HasLoop: return "contains a loop";
    case AdmissibilityHypothesis::SameRowOrderReversed: return "(k,i) reaches (k,j) with i > j";
    case AdmissibilityHypothesis::CrossingArrows: return "crossing arrows between consecutive rows";
    case AdmissibilityHypothesis::NoncriticalityUnknown: return "noncriticality not certified";
  }
  return "";
}

namespace {

Admissibility inapplicable(AdmissibilityHypothesis h, std::string detail) {
  Admissibility a;
  a.status = AdmissibilityStatus::Inapplicable;
  a.failed = h;
  a.reason = std::string(to_string(h));
  if (!detail.empty()) a.reason += ": " + detail;
  return a;
}

// Endpoints of an arrow between rows k and k+1, as (col in row k, col in row k+1).
std::optional<std::pair<int, int>> between_rows(const Relation& r, int k) {
  if (r.src.row == k && r.dst.row == k + 1) return std::pair{r.src.col, r.dst.col};
  if (r.src.row == k + 1 && r.dst.row == k) return std::pair{r.dst.col, r.src.col};
  return std::nullopt;
}

}  // namespace

Admissibility check_admissible(const RelationSet& c) {
  const int n = c.n();
  if (auto red = is_reduced(c); !red.reduced) {
    const auto& v = red.violations.front();
    return inapplicable(AdmissibilityHypothesis::NotReduced,
                        std::string(to_string(v.rule)) + " at " + to_string(v.at));
  }
  for (VertexId v : all_vertices(n))
    if (c.reaches_strictly(v, v)) return inapplicable(AdmissibilityHypothesis::HasLoop, "through " + to_string(v));
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j < i; ++j)
        if (c.reaches({k, i}, {k, j}))
          return inapplicable(AdmissibilityHypothesis::SameRowOrderReversed,
                              to_string(VertexId{k, i}) + " reaches " + to_string(VertexId{k, j}));
  for (int k = 1; k <= n - 1; ++k) {
    std::vector<std::pair<int, int>> arrows;
    for (const auto& r : c.relations())
      if (auto e = between_rows(r, k)) arrows.push_back(*e);
    for (auto [i, t] : arrows)
      for (auto [j, s] : arrows)
        if (i < j && s < t)
          return inapplicable(AdmissibilityHypothesis::CrossingArrows,
                              to_string(VertexId{k, i}) + "-" + to_string(VertexId{k + 1, t}) + " crosses " +
                                  to_string(VertexId{k, j}) + "-" + to_string(VertexId{k + 1, s}));
  }
  if (structural_noncritical(c) == Certainty::Unknown)
    return inapplicable(AdmissibilityHypothesis::NoncriticalityUnknown, "");

  for (const auto& [a, b] : adjoining_pairs(c)) {
    const int k = a.row, i = a.col, j = b.col;
    bool covered = false;
    // E1: (k,i) -> (k+1,p) -> (k,j) and (k,i) -> (k-1,q) -> (k,j).
    bool up = false, down = false;
    for (int p = 1; p <= k + 1 && k + 1 <= n && !up; ++p)
      up = c.contains({k, i}, {k + 1, p}) && c.contains({k + 1, p}, {k, j});
    for (int q = 1; q <= k - 1 && !down; ++q)
      down = c.contains({k, i}, {k - 1, q}) && c.contains({k - 1, q}, {k, j});
    covered = up && down;
    // E2: (k,i) -> (k+1,s) and (k+1,t) -> (k,j) with s < t.
    for (int s = 1; s <= k + 1 && k + 1 <= n && !covered; ++s) {
      if (!c.contains({k, i}, {k + 1, s})) continue;
      for (int t = s + 1; t <= k + 1 && !covered; ++t) covered = c.contains({k + 1, t}, {k, j});
    }
    if (!covered) {
      Admissibility result;
      result.status = AdmissibilityStatus::NotAdmissible;
      result.witness = VertexPair{a, b};
      result.reason = "adjoining pair " + to_string(a) + ";" + to_string(b) + " embeds neither E1 nor E2";
      return result;
    }
  }
  return {};
}

bool is_top_connected(const RelationSet& c) {
  const int n = c.n();
  for (VertexId v : support(c)) {
    if (v.row == n) continue;
    bool found = false;
    for (int r = 1; r <= n && !found; ++r) found = c.reaches(v, {n, r});
    if (!found) return false;
  }
  return true;
}

Certainty structural_noncritical(const RelationSet& c) {
  const auto parts = connected_components(c);
  for (int k = 1; k <= c.n() - 1; ++k)
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j)
        if (parts.same_block({k, i}, {k, j}) && !c.reaches({k, i}, {k, j})) return Certainty::Unknown;
  return Certainty::Yes;
}

}  // namespace relpoly
