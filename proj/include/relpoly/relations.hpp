#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relpoly/vertex.hpp"

namespace relpoly {

enum class RelationClass { Plus, Minus, Zero };

// An arrow src -> dst of G(C). Order and equality ignore the class, which is
// determined by the endpoints.
struct Relation {
  VertexId src;
  VertexId dst;

  auto operator<=>(const Relation&) const = default;
};

std::string to_string(const Relation& r);

// Membership in R+ (one row down), R- (one row up) or R0 (two distinct
// top-row vertices). nullopt when (src;dst) is not in R for this n.
std::optional<RelationClass> classify(int n, const Relation& r);

// A set of relations C on the height-n triangle, together with its
// reachability preorder. Relations are kept sorted; duplicates and pairs
// outside R are rejected at construction.
class RelationSet {
 public:
  RelationSet() : RelationSet(1, {}) {}
  RelationSet(int n, std::vector<Relation> relations);

  int n() const { return n_; }
  std::span<const Relation> relations() const { return relations_; }
  std::size_t size() const { return relations_.size(); }
  bool empty() const { return relations_.empty(); }

  bool contains(VertexId src, VertexId dst) const;

  // a ⪰_C b: directed path of length >= 0.
  bool reaches(VertexId a, VertexId b) const;
  // Directed path of length >= 1.
  bool reaches_strictly(VertexId a, VertexId b) const;

  // Arrow endpoints incident to v, as indices into relations().
  std::span<const std::size_t> out_arrows(VertexId v) const;
  std::span<const std::size_t> in_arrows(VertexId v) const;

  friend bool operator==(const RelationSet& a, const RelationSet& b) {
    return a.n_ == b.n_ && a.relations_ == b.relations_;
  }

 private:
  std::size_t index(VertexId v) const { return flat_index(n_, v); }

  int n_;
  std::vector<Relation> relations_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::vector<std::uint8_t> strict_reach_;  // N x N, row = source
};

enum class StandardVariant { Plus, Minus, Both, Empty };

// C_k^+, C_k^-, C_k = C_k^+ ∪ C_k^- and the empty (generic) set.
RelationSet standard_set(int n, int k, StandardVariant variant);

// V(C), sorted.
std::vector<VertexId> support(const RelationSet& c);

bool reaches(const RelationSet& c, VertexId a, VertexId b);

struct ComponentPartition {
  // Blocks sorted internally and by least member.
  std::vector<std::vector<VertexId>> blocks;
  // block_of[flat_index(n, v)] is the block containing v.
  std::vector<std::size_t> block_of;
  int n = 1;

  bool same_block(VertexId a, VertexId b) const {
    return block_of[flat_index(n, a)] == block_of[flat_index(n, b)];
  }
};

// Components of G(C) with orientation forgotten.
ComponentPartition connected_components(const RelationSet& c);

enum class ReducedRule {
  AtMostOneOutToRowAbove,    // ((k,j);(k+1,i))
  AtMostOneInFromRowAbove,   // ((k+1,i);(k,j))
  AtMostOneOutToRowBelow,    // ((k,j);(k-1,i))
  AtMostOneInFromRowBelow,   // ((k-1,i);(k,j))
  TopRowRelationImplied,
};

std::string_view to_string(ReducedRule rule);

struct ReducedViolation {
  ReducedRule rule;
  VertexId at;
  std::vector<Relation> witnesses;
};

struct ReducedReport {
  bool reduced = true;
  std::vector<ReducedViolation> violations;
};

ReducedReport is_reduced(const RelationSet& c);

using VertexPair = std::pair<VertexId, VertexId>;

// Same-row pairs ((k,i);(k,j)), k != n, i < j, with (k,i) ⪰ (k,j) and no
// same-row vertex strictly between them in the preorder.
std::vector<VertexPair> adjoining_pairs(const RelationSet& c);

enum class AdmissibilityStatus { Admissible, NotAdmissible, Inapplicable };

enum class AdmissibilityHypothesis {
  None,
  NotReduced,
  HasLoop,
  SameRowOrderReversed,
  CrossingArrows,
  NoncriticalityUnknown,
};

std::string_view to_string(AdmissibilityStatus status);
std::string_view to_string(AdmissibilityHypothesis hypothesis);

struct Admissibility {
  AdmissibilityStatus status = AdmissibilityStatus::Admissible;
  // NotAdmissible: the uncovered adjoining pair.
  std::optional<VertexPair> witness;
  AdmissibilityHypothesis failed = AdmissibilityHypothesis::None;
  std::string reason;
};

// Structural admissibility criterion via the E1/E2 subgraph patterns at
// adjoining pairs, applied only when the structural hypotheses hold.
Admissibility check_admissible(const RelationSet& c);

bool is_top_connected(const RelationSet& c);

enum class Certainty { Yes, Unknown };

// Sufficient test: every same-component pair (k,i),(k,j), i<j, k<n, has
// (k,i) ⪰ (k,j).
Certainty structural_noncritical(const RelationSet& c);

}  // namespace relpoly
