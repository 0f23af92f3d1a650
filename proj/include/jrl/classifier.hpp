#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "jrl/algebra.hpp"
#include "jrl/nilpotency.hpp"

namespace jrl {

/// Structural facts about (R, G) that the characterization consumes.
struct ClassificationFacts {
  std::size_t characteristic = 0;
  bool ring_commutative = false;
  bool group_abelian = false;
  std::size_t derived_order = 0;
  IsoClass derived_class;
  bool derived_central = false;
  RingConditions ring;
};

/**
 * Which characterizing clause fired. Tags are stable strings used in reports:
 *
 *   index 2  commutative-char2-abelian
 *   index 3  commutative-char4-abelian, commutative-char2-derived-C2,
 *            noncommutative-abelian-ring-index3
 *   index 4  commutative-char8-abelian, commutative-char4-derived-C2,
 *            commutative-char2-derived-C2xC2-central,
 *            noncommutative-abelian-ring-index4,
 *            noncommutative-char4-derived-C2, noncommutative-char2-derived-C2
 */
enum class Clause {
  None,
  CommutativeChar2Abelian,
  CommutativeChar4Abelian,
  CommutativeChar2DerivedC2,
  NoncommutativeAbelianRingIndex3,
  CommutativeChar8Abelian,
  CommutativeChar4DerivedC2,
  CommutativeChar2DerivedKleinCentral,
  NoncommutativeAbelianRingIndex4,
  NoncommutativeChar4DerivedC2,
  NoncommutativeChar2DerivedC2,
};

std::string_view to_string(Clause clause);

struct ClassificationResult {
  /// Predicted minimal Jordan index in {2, 3, 4}; nullopt means not within four.
  std::optional<int> index;
  Clause clause = Clause::None;
  ClassificationFacts facts;
};

/// Predicts the minimal Jordan nilpotency index of RG (when at most 4) from
/// the structure of R and G alone; RG itself is never formed.
ClassificationResult classify(const FiniteRing& ring, const FiniteGroup& group);

/// Facts only; classify() is evaluate_facts() followed by clause selection.
ClassificationFacts evaluate_facts(const FiniteRing& ring, const FiniteGroup& group);
ClassificationResult classify(const ClassificationFacts& facts);

std::string verdict_text(const ClassificationResult& result);
/// Multi-line listing of every evaluated predicate and the deciding clause.
std::string explain(const ClassificationResult& result);

}  // namespace jrl
