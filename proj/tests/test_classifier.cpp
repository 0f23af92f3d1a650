#include <doctest.h>

#include "jrl/builtins.hpp"
#include "jrl/classifier.hpp"

using namespace jrl;

namespace {

ClassificationResult run(const char* ring, const char* group) { return classify(builtin_ring(ring), builtin_group(group)); }

bool contains(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

ClassificationFacts noncommutative_abelian(std::size_t ch, std::optional<int> ring_index) {
  ClassificationFacts f;
  f.characteristic = ch;
  f.ring_commutative = false;
  f.group_abelian = true;
  f.derived_order = 1;
  f.derived_class = {IsoClass::Tag::Trivial, 1};
  f.derived_central = true;
  f.ring.jordan_index_upper = ring_index;
  return f;
}

}  // namespace

TEST_CASE("named classifications") {
  struct Case {
    const char* ring;
    const char* group;
    std::optional<int> index;
    Clause clause;
  };
  const Case cases[] = {
      {"Z2", "C2", 2, Clause::CommutativeChar2Abelian},
      {"Z4", "D4", 4, Clause::CommutativeChar4DerivedC2},
      {"Z2", "D4", 3, Clause::CommutativeChar2DerivedC2},
      {"Z8", "C4", 4, Clause::CommutativeChar8Abelian},
      {"Z4", "C1", 3, Clause::CommutativeChar4Abelian},
      {"Z2", "D4xD4", 4, Clause::CommutativeChar2DerivedKleinCentral},
      {"H16", "D4", 4, Clause::NoncommutativeChar2DerivedC2},
      {"H16", "C4", 3, Clause::NoncommutativeAbelianRingIndex3},
      {"H32", "Q8", 4, Clause::NoncommutativeChar4DerivedC2},
      {"M2(F2)", "D4", std::nullopt, Clause::None},
      {"M2(F2)", "C2", std::nullopt, Clause::None},
      {"Z2", "S3", std::nullopt, Clause::None},
      {"Z16", "C2", std::nullopt, Clause::None},
      {"Z8", "D4", std::nullopt, Clause::None},
  };
  for (const auto& c : cases) {
    CAPTURE(c.ring);
    CAPTURE(c.group);
    const auto result = run(c.ring, c.group);
    CHECK(result.index == c.index);
    CHECK(result.clause == c.clause);
  }
}

TEST_CASE("facts record") {
  const auto f = run("Z2", "D4xD4").facts;
  CHECK(f.characteristic == 2);
  CHECK(f.ring_commutative);
  CHECK_FALSE(f.group_abelian);
  CHECK(f.derived_order == 4);
  CHECK(f.derived_class.tag == IsoClass::Tag::C2xC2);
  CHECK(f.derived_central);
  const auto s3 = run("Z4", "S3").facts;
  CHECK(s3.derived_class == IsoClass{IsoClass::Tag::Cyclic, 3});
  CHECK_FALSE(s3.derived_central);
}

TEST_CASE("smaller indices take precedence") {
  // Z2 with an abelian group also meets the index-3 and index-4 shapes.
  for (const char* g : {"C1", "C2", "C4", "C8", "C2xC2"}) CHECK(run("Z2", g).index == 2);

  // A non-commutative ring of Jordan index 3 over an abelian group is index 3,
  // even though the index-4 clause would also accept it.
  const auto r3 = classify(noncommutative_abelian(2, 3));
  CHECK(r3.index == 3);
  CHECK(r3.clause == Clause::NoncommutativeAbelianRingIndex3);
  const auto r4 = classify(noncommutative_abelian(8, 4));
  CHECK(r4.index == 4);
  CHECK(r4.clause == Clause::NoncommutativeAbelianRingIndex4);
  // Char 8 rules out the index-3 clause.
  CHECK(classify(noncommutative_abelian(8, 3)).clause == Clause::NoncommutativeAbelianRingIndex4);
  CHECK_FALSE(classify(noncommutative_abelian(16, 4)).index.has_value());
  CHECK_FALSE(classify(noncommutative_abelian(2, 5)).index.has_value());
  CHECK_FALSE(classify(noncommutative_abelian(2, std::nullopt)).index.has_value());
}

TEST_CASE("the characteristic-2 clause implies its unstated conditions") {
  for (const auto& r : builtin_ring_names())
    for (const auto& g : builtin_group_names()) {
      const auto result = classify(builtin_ring(r), builtin_group(g));
      if (result.clause != Clause::NoncommutativeChar2DerivedC2) continue;
      CAPTURE(r);
      CAPTURE(g);
      CHECK(result.facts.ring.two_circle_zero);
      CHECK(result.facts.derived_central);
    }
}

TEST_CASE("verdict text and clause tags") {
  CHECK(verdict_text(run("Z2", "C2")) == "2");
  CHECK(verdict_text(run("Z2", "S3")) == "NotWithinFour");
  CHECK(to_string(Clause::None) == "none");
  CHECK(to_string(Clause::NoncommutativeChar4DerivedC2) == "noncommutative-char4-derived-C2");
}

TEST_CASE("explain") {
  const std::string two = explain(run("Z2", "C2"));
  CHECK(contains(two, "R commutative: yes"));
  CHECK(contains(two, "Char(R) = 2"));
  CHECK(contains(two, "G abelian: yes"));
  CHECK(contains(two, "commutative-char2-abelian"));

  const std::string s3 = explain(run("Z2", "S3"));
  CHECK(contains(s3, "G' = C3 blocks every clause"));
  CHECK(contains(s3, "commutative-char2-derived-C2 fails on: G' = C2;"));
  CHECK_FALSE(contains(s3, "noncommutative"));

  const std::string h32 = explain(run("H32", "D4"));
  for (const char* line : {"holds: Char(R) = 4", "holds: 2(R∘R) = 0", "holds: (R∘R)∘R = 0", "holds: (R∘R)(R∘R) = 0",
                           "holds: G' = C2"})
    CHECK(contains(h32, line));
  CHECK(contains(h32, "noncommutative-char4-derived-C2"));
}
