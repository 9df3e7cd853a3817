#pragma once

#include <initializer_list>
#include <set>
#include <vector>

#include "relpoly/patterns.hpp"
#include "relpoly/relations.hpp"

namespace testing {

using relpoly::Entry;
using relpoly::Pattern;
using relpoly::Rational;
using relpoly::RelationSet;
using relpoly::VertexId;

// Integer pattern from rows listed top first.
inline Pattern rows(std::initializer_list<std::initializer_list<long>> r) {
  std::vector<std::vector<Entry>> out;
  for (const auto& row : r) {
    std::vector<Entry> entries;
    for (long v : row) entries.emplace_back(v);
    out.push_back(std::move(entries));
  }
  return Pattern::from_rows(out);
}

inline RelationSet relations(int n, std::initializer_list<std::initializer_list<int>> arrows) {
  std::vector<relpoly::Relation> out;
  for (const auto& a : arrows) {
    auto it = a.begin();
    int i = it[0], j = it[1], r = it[2], s = it[3];
    out.push_back({{i, j}, {r, s}});
  }
  return RelationSet(n, std::move(out));
}

// Every pair (src;dst) in R for this n.
inline std::vector<relpoly::Relation> all_admissible_pairs(int n) {
  std::vector<relpoly::Relation> out;
  for (VertexId a : relpoly::all_vertices(n))
    for (VertexId b : relpoly::all_vertices(n))
      if (relpoly::classify(n, {a, b})) out.push_back({a, b});
  return out;
}

// Brute force over a box of integer offsets around L for the vertices below
// the top row; keeps those satisfying C. Independent of the backtracker.
inline std::vector<Pattern> brute_force_points(const RelationSet& c, const Pattern& l, long lo, long hi) {
  const int n = c.n();
  const std::size_t lower = relpoly::triangle_size(n) - static_cast<std::size_t>(n);
  std::vector<long> z(lower, lo);
  std::vector<Pattern> out;
  while (true) {
    Pattern m = l;
    for (std::size_t i = 0; i < lower; ++i) {
      VertexId v = relpoly::vertex_at(n, static_cast<std::size_t>(n) + i);
      m.set(v, l.at(v) + Rational(z[i]));
    }
    if (relpoly::satisfies(c, m)) out.push_back(m);
    std::size_t pos = 0;
    while (pos < lower && z[pos] == hi) z[pos++] = lo;
    if (pos == lower) break;
    ++z[pos];
  }
  return out;
}

}  // namespace testing
