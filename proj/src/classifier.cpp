#include "jrl/classifier.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <vector>

namespace jrl {

std::string_view to_string(Clause clause) {
  switch (clause) {
    case Clause::None: return "none";
    case Clause::CommutativeChar2Abelian: return "commutative-char2-abelian";
    case Clause::CommutativeChar4Abelian: return "commutative-char4-abelian";
    case Clause::CommutativeChar2DerivedC2: return "commutative-char2-derived-C2";
    case Clause::NoncommutativeAbelianRingIndex3: return "noncommutative-abelian-ring-index3";
    case Clause::CommutativeChar8Abelian: return "commutative-char8-abelian";
    case Clause::CommutativeChar4DerivedC2: return "commutative-char4-derived-C2";
    case Clause::CommutativeChar2DerivedKleinCentral: return "commutative-char2-derived-C2xC2-central";
    case Clause::NoncommutativeAbelianRingIndex4: return "noncommutative-abelian-ring-index4";
    case Clause::NoncommutativeChar4DerivedC2: return "noncommutative-char4-derived-C2";
    case Clause::NoncommutativeChar2DerivedC2: return "noncommutative-char2-derived-C2";
  }
  return "?";
}

namespace {

struct Condition {
  std::string label;
  bool holds;
};

struct ClauseRank {
  int index;
  Clause clause;
};

// Checked in this order; the first clause whose conditions all hold decides.
constexpr std::array<ClauseRank, 10> clause_order{{
    {2, Clause::CommutativeChar2Abelian},
    {3, Clause::CommutativeChar4Abelian},
    {3, Clause::CommutativeChar2DerivedC2},
    {3, Clause::NoncommutativeAbelianRingIndex3},
    {4, Clause::CommutativeChar8Abelian},
    {4, Clause::CommutativeChar4DerivedC2},
    {4, Clause::CommutativeChar2DerivedKleinCentral},
    {4, Clause::NoncommutativeAbelianRingIndex4},
    {4, Clause::NoncommutativeChar4DerivedC2},
    {4, Clause::NoncommutativeChar2DerivedC2},
}};

std::vector<Condition> conditions(Clause clause, const ClassificationFacts& f) {
  const std::size_t ch = f.characteristic;
  const Condition commutative{"R commutative", f.ring_commutative};
  const Condition noncommutative{"R non-commutative", !f.ring_commutative};
  const Condition abelian{"G abelian", f.group_abelian};
  const Condition derived_c2{"G' = C2", f.derived_class.tag == IsoClass::Tag::C2};
  const auto char_is = [ch](std::size_t c) { return Condition{"Char(R) = " + std::to_string(c), ch == c}; };
  const auto ring_index_at_most = [&](int n) {
    return Condition{"R Jordan nilpotent of index " + std::to_string(n),
                     f.ring.jordan_index_upper && *f.ring.jordan_index_upper <= n};
  };
  const Condition two_circle{"2(R∘R) = 0", f.ring.two_circle_zero};
  const Condition circle_circle{"(R∘R)∘R = 0", f.ring.circle_circle_zero};
  const Condition circle_square{"(R∘R)(R∘R) = 0", f.ring.circle_square_zero};

  switch (clause) {
    case Clause::None: return {};
    case Clause::CommutativeChar2Abelian: return {commutative, char_is(2), abelian};
    case Clause::CommutativeChar4Abelian: return {commutative, char_is(4), abelian};
    case Clause::CommutativeChar2DerivedC2: return {commutative, char_is(2), derived_c2};
    case Clause::NoncommutativeAbelianRingIndex3:
      return {noncommutative, abelian, ring_index_at_most(3), {"Char(R) in {2, 4}", ch == 2 || ch == 4}};
    case Clause::CommutativeChar8Abelian: return {commutative, char_is(8), abelian};
    case Clause::CommutativeChar4DerivedC2: return {commutative, char_is(4), derived_c2};
    case Clause::CommutativeChar2DerivedKleinCentral:
      return {commutative, char_is(2), {"G' = C2xC2", f.derived_class.tag == IsoClass::Tag::C2xC2},
              {"G' central", f.derived_central}};
    case Clause::NoncommutativeAbelianRingIndex4:
      return {noncommutative, abelian, ring_index_at_most(4), {"Char(R) in {2, 4, 8}", ch == 2 || ch == 4 || ch == 8}};
    case Clause::NoncommutativeChar4DerivedC2:
      return {noncommutative, char_is(4), two_circle, circle_circle, circle_square, derived_c2};
    case Clause::NoncommutativeChar2DerivedC2:
      return {noncommutative, char_is(2), circle_circle, circle_square, derived_c2};
  }
  return {};
}

bool holds(Clause clause, const ClassificationFacts& facts) {
  const auto conds = conditions(clause, facts);
  return std::all_of(conds.begin(), conds.end(), [](const Condition& c) { return c.holds; });
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

ClassificationFacts evaluate_facts(const FiniteRing& ring, const FiniteGroup& group) {
  ClassificationFacts f;
  f.characteristic = characteristic(ring);
  f.ring_commutative = is_commutative(ring);
  f.group_abelian = is_abelian(group);
  const Subgroup derived = derived_subgroup(group);
  f.derived_order = derived.order();
  f.derived_class = iso_class(derived);
  f.derived_central = is_subset(derived, center(group));
  f.ring = ring_conditions(ring);
  return f;
}

ClassificationResult classify(const ClassificationFacts& facts) {
  ClassificationResult result;
  result.facts = facts;
  for (const auto& rank : clause_order) {
    if (holds(rank.clause, facts)) {
      result.index = rank.index;
      result.clause = rank.clause;
      break;
    }
  }
  return result;
}

ClassificationResult classify(const FiniteRing& ring, const FiniteGroup& group) {
  return classify(evaluate_facts(ring, group));
}

std::string verdict_text(const ClassificationResult& result) {
  return result.index ? std::to_string(*result.index) : "NotWithinFour";
}

std::string explain(const ClassificationResult& result) {
  const ClassificationFacts& f = result.facts;
  std::ostringstream out;
  out << "Char(R) = " << f.characteristic << '\n';
  out << "R commutative: " << yes_no(f.ring_commutative) << '\n';
  out << "G abelian: " << yes_no(f.group_abelian) << '\n';
  out << "G' order " << f.derived_order << ", G' = " << to_string(f.derived_class) << '\n';
  out << "G' central: " << yes_no(f.derived_central) << '\n';
  out << "2(R∘R) = 0: " << yes_no(f.ring.two_circle_zero) << '\n';
  out << "(R∘R)∘R = 0: " << yes_no(f.ring.circle_circle_zero) << '\n';
  out << "(R∘R)(R∘R) = 0: " << yes_no(f.ring.circle_square_zero) << '\n';
  out << "Jordan index of R: "
      << (f.ring.jordan_index_upper ? std::to_string(*f.ring.jordan_index_upper) : std::string("none within bound"))
      << '\n';

  if (result.index) {
    out << "verdict: RG is Jordan nilpotent of minimal index " << *result.index << " by clause "
        << to_string(result.clause) << '\n';
    for (const auto& c : conditions(result.clause, f)) out << "  holds: " << c.label << '\n';
    return out.str();
  }

  out << "verdict: RG is not Jordan nilpotent of index <= 4; no clause applies";
  if (f.derived_class.tag == IsoClass::Tag::Cyclic || f.derived_class.tag == IsoClass::Tag::C4 ||
      f.derived_class.tag == IsoClass::Tag::Other) {
    out << " (G' = " << to_string(f.derived_class) << " blocks every clause)";
  }
  out << '\n';
  for (const auto& rank : clause_order) {
    const auto conds = conditions(rank.clause, f);
    // Clauses for the other commutativity branch are not worth listing.
    if (!conds.front().holds) continue;
    out << "  " << to_string(rank.clause) << " fails on:";
    for (const auto& c : conds)
      if (!c.holds) out << ' ' << c.label << ';';
    out << '\n';
  }
  return out.str();
}

}  // namespace jrl
