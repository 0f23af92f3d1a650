#include <doctest.h>

#include <algorithm>
#include <map>

#include "jrl/algebra.hpp"
#include "jrl/builtins.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace jrl;

namespace {

Table mod_table(std::size_t n, bool multiply) {
  Table t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>((multiply ? a * b : a + b) % n);
  return t;
}

Table xor_table(std::size_t n) {
  Table t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<Elem>(a ^ b);
  return t;
}

std::vector<FiniteGroup> catalog_groups() {
  std::vector<FiniteGroup> out;
  for (const auto& name : builtin_group_names()) out.push_back(builtin_group(name));
  for (const char* extra : {"C3", "C6", "C2xC2xC2", "C2xD4", "Q8xC2", "S3xC2", "C4xC2", "D4xQ8"})
    out.push_back(builtin_group(extra));
  return out;
}

std::vector<FiniteRing> catalog_rings() {
  std::vector<FiniteRing> out;
  for (const auto& name : builtin_ring_names()) out.push_back(builtin_ring(name));
  return out;
}

}  // namespace

TEST_CASE("validate_ring accepts Z4 and exposes its tables") {
  const FiniteRing z4 = validate_ring(4, mod_table(4, false), mod_table(4, true), 0, 1, "Z4");
  CHECK(z4.order() == 4);
  CHECK(z4.add(3, 3) == 2);
  CHECK(z4.mul(3, 3) == 1);
  CHECK(z4.neg(1) == 3);
  CHECK(z4.circle(2, 3) == 0);
  CHECK(z4.times(3, 3) == 1);
  CHECK(z4 == builtin_ring("Z4"));
}

TEST_CASE("validate_ring rejects broken tables with the right kind") {
  SUBCASE("shape") {
    expect_error(ErrorKind::InvalidTable, [] { validate_ring(2, Table(3, 0), mod_table(2, true), 0, 1); });
    expect_error(ErrorKind::InvalidTable, [] { validate_ring(2, mod_table(2, false), mod_table(2, true), 0, 2); });
    expect_error(ErrorKind::InvalidTable, [] {
      Table bad = mod_table(2, true);
      bad[3] = 7;
      validate_ring(2, mod_table(2, false), bad, 0, 1);
    });
  }
  SUBCASE("additive group") {
    // add(a, b) = b has no neutral element on the right.
    const std::string msg =
        expect_error(ErrorKind::NotAbelianGroup, [] { validate_ring(2, {0, 1, 0, 1}, mod_table(2, true), 0, 1); });
    CHECK(!msg.empty());
  }
  SUBCASE("multiplicative associativity") {
    // Klein addition, identity 1, and 2·2 = 3, 3·3 = 2, 2·3 = 2, 3·2 = 3.
    const Table mul{0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 3, 2, 0, 3, 3, 2};
    expect_error(ErrorKind::NotAssociative, [&] { validate_ring(4, xor_table(4), mul, 0, 1); });
  }
  SUBCASE("identity") {
    expect_error(ErrorKind::NoIdentity, [] { validate_ring(4, mod_table(4, false), mod_table(4, true), 0, 2); });
    // The zero ring has 1 = 0.
    expect_error(ErrorKind::NoIdentity, [] { validate_ring(1, {0}, {0}, 0, 0); });
  }
  SUBCASE("distributivity") {
    // Z2 multiplication relabelled so that 0·0 = 1: associative, unital, not distributive.
    expect_error(ErrorKind::NotDistributive, [] { validate_ring(2, xor_table(2), {1, 0, 0, 1}, 0, 1); });
  }
}

TEST_CASE("validate_group rejects broken tables") {
  expect_error(ErrorKind::InvalidTable, [] { validate_group(2, {0, 1, 1}, 0); });
  expect_error(ErrorKind::InvalidTable, [] { validate_group(2, {0, 1, 1, 0}, 5); });
  expect_error(ErrorKind::NotAssociative, [] { validate_group(3, {0, 1, 2, 1, 2, 2, 2, 0, 1}, 0); });
  expect_error(ErrorKind::NoIdentity, [] { validate_group(2, {0, 1, 1, 0}, 1); });
  expect_error(ErrorKind::NoInverse, [] { validate_group(2, {0, 1, 1, 1}, 0); });
  const FiniteGroup c2 = validate_group(2, {0, 1, 1, 0}, 0, "C2");
  CHECK(c2 == builtin_group("C2"));
  CHECK(c2.inv(1) == 1);
}

TEST_CASE("M2(F2) agrees with matrix arithmetic") {
  const auto mats = oracle::m2_f2();
  const FiniteRing lib = builtin_ring("M2(F2)");
  REQUIRE(lib.order() == 16);
  for (int a = 0; a < 16; ++a)
    for (int b = 0; b < 16; ++b) {
      const Elem ea = oracle::m2_f2_library_index(mats.mats[a]);
      const Elem eb = oracle::m2_f2_library_index(mats.mats[b]);
      CHECK(lib.add(ea, eb) == oracle::m2_f2_library_index(mats.mats[mats.add(a, b)]));
      CHECK(lib.mul(ea, eb) == oracle::m2_f2_library_index(mats.mats[mats.mul(a, b)]));
    }
  CHECK(lib.one() == oracle::m2_f2_library_index({1, 0, 0, 1}));
}

TEST_CASE("D4 matches the symmetry group of the square") {
  const auto perms = oracle::dihedral_by_permutations();
  REQUIRE(perms.elems.size() == 8);
  const FiniteGroup d4 = builtin_group("D4");

  // Element order histogram.
  std::map<std::size_t, int> lib_hist, perm_hist;
  for (Elem g = 0; g < 8; ++g) ++lib_hist[element_order(d4, g)];
  for (const auto& p : perms.elems) {
    std::size_t k = 1;
    for (auto q = p; q != oracle::Perm{0, 1, 2, 3}; q = oracle::compose(q, p)) ++k;
    ++perm_hist[k];
  }
  CHECK(lib_hist == perm_hist);

  // (r, s) in the permutation model is r², a rotation by a half turn.
  const auto& r = perms.rotation;
  const auto& s = perms.reflection;
  const auto comm = oracle::compose(
      oracle::compose(oracle::compose(oracle::perm_inverse(r), oracle::perm_inverse(s)), r), s);
  CHECK(comm == oracle::compose(r, r));
}

TEST_CASE("named commutators and conjugates") {
  const FiniteGroup d4 = builtin_group("D4");
  const Elem r = 1, s = 4;
  CHECK(group_commutator(d4, r, s) == 2);
  CHECK(group_commutator(d4, r, s) == oracle::commutator(d4, r, s));
  CHECK(conjugate(d4, r, s) == 3);
  CHECK(d4.mul(s, r) == 7);
  CHECK(d4.mul(r, s) == 5);

  const FiniteGroup q8 = builtin_group("Q8");
  CHECK(group_commutator(q8, 2, 4) == 1);  // (i, j) = -1

  for (const auto& g : catalog_groups()) {
    CAPTURE(g.name());
    for (Elem x = 0; x < g.order(); ++x) {
      CHECK(conjugate(g, x, g.identity()) == x);
      for (Elem y = 0; y < g.order(); ++y) CHECK(group_commutator(g, x, y) == oracle::commutator(g, x, y));
    }
    if (is_abelian(g))
      for (Elem x = 0; x < g.order(); ++x)
        for (Elem y = 0; y < g.order(); ++y) CHECK(group_commutator(g, x, y) == g.identity());
  }
}

TEST_CASE("commutator expansion identities hold on every catalog group") {
  for (const auto& g : catalog_groups()) {
    if (g.order() > 32) continue;
    CAPTURE(g.name());
    std::size_t failures = 0;
    for (Elem x = 0; x < g.order(); ++x)
      for (Elem y = 0; y < g.order(); ++y)
        for (Elem z = 0; z < g.order(); ++z) {
          // (xy, z) = (x, z)^y (y, z) and (x, yz) = (x, z)(x, y)^z
          const Elem lhs1 = group_commutator(g, g.mul(x, y), z);
          const Elem rhs1 = g.mul(conjugate(g, group_commutator(g, x, z), y), group_commutator(g, y, z));
          const Elem lhs2 = group_commutator(g, x, g.mul(y, z));
          const Elem rhs2 = g.mul(group_commutator(g, x, z), conjugate(g, group_commutator(g, x, y), z));
          failures += (lhs1 != rhs1) + (lhs2 != rhs2);
        }
    CHECK(failures == 0);
  }
}

TEST_CASE("derived subgroup and center agree with direct closure") {
  for (const auto& g : catalog_groups()) {
    CAPTURE(g.name());
    CHECK(derived_subgroup(g).members() == oracle::derived(g));
    CHECK(center(g).members() == oracle::center(g));
    CHECK(is_normal(derived_subgroup(g)));
    CHECK(is_normal(center(g)));
  }
  const FiniteGroup d4 = builtin_group("D4");
  CHECK(derived_subgroup(d4).members() == std::vector<Elem>{0, 2});
  CHECK(center(d4).members() == std::vector<Elem>{0, 2});
  const FiniteGroup s3 = builtin_group("S3");
  CHECK(derived_subgroup(s3).order() == 3);
  CHECK(center(s3).order() == 1);
  CHECK(center(builtin_group("C8")).order() == 8);
  CHECK(derived_subgroup(builtin_group("C2xC2")).order() == 1);
}

TEST_CASE("isomorphism tags") {
  const auto whole = [](const FiniteGroup& g) {
    std::vector<Elem> all(g.order());
    for (Elem x = 0; x < g.order(); ++x) all[x] = x;
    return Subgroup(g, all);
  };
  const FiniteGroup c1 = builtin_group("C1"), c2 = builtin_group("C2"), c4 = builtin_group("C4"),
                    v4 = builtin_group("C2xC2"), c8 = builtin_group("C8"), q8 = builtin_group("Q8"),
                    d4 = builtin_group("D4"), d4d4 = builtin_group("D4xD4"), s3 = builtin_group("S3");
  CHECK(iso_class(whole(c1)).tag == IsoClass::Tag::Trivial);
  CHECK(iso_class(whole(c2)).tag == IsoClass::Tag::C2);
  CHECK(iso_class(whole(c4)).tag == IsoClass::Tag::C4);
  CHECK(iso_class(whole(v4)).tag == IsoClass::Tag::C2xC2);
  CHECK(iso_class(whole(c8)) == IsoClass{IsoClass::Tag::Cyclic, 8});
  CHECK(iso_class(whole(q8)).tag == IsoClass::Tag::Other);
  CHECK(iso_class(derived_subgroup(d4)).tag == IsoClass::Tag::C2);
  CHECK(iso_class(derived_subgroup(q8)).tag == IsoClass::Tag::C2);
  CHECK(iso_class(derived_subgroup(d4d4)).tag == IsoClass::Tag::C2xC2);
  CHECK(iso_class(derived_subgroup(s3)) == IsoClass{IsoClass::Tag::Cyclic, 3});
  CHECK(is_cyclic(derived_subgroup(s3)));
  CHECK_FALSE(is_cyclic(derived_subgroup(d4d4)));
  CHECK(exponent(whole(q8)) == 4);
  CHECK(exponent(derived_subgroup(d4d4)) == 2);
}

TEST_CASE("squares_central and the cyclic-commutator hypothesis") {
  CHECK(squares_central(builtin_group("D4")));
  CHECK(squares_central(builtin_group("Q8")));
  CHECK(squares_central(builtin_group("C8")));
  CHECK_FALSE(squares_central(builtin_group("S3")));
  CHECK(commutators_in_cyclic_span(builtin_group("D4")));
  CHECK(commutators_in_cyclic_span(builtin_group("C4")));
  CHECK_FALSE(commutators_in_cyclic_span(builtin_group("D4xD4")));
}

TEST_CASE("characteristic and commutativity of the built-in rings") {
  const std::map<std::string, std::size_t> expected{{"Z2", 2},     {"Z4", 4},     {"Z8", 8},   {"Z16", 16}, {"M2(F2)", 2},
                                                    {"T2(F2)", 2}, {"T2(Z4)", 4}, {"H16", 2},  {"H32", 4}};
  for (const auto& r : catalog_rings()) {
    CAPTURE(r.name());
    CHECK(characteristic(r) == expected.at(r.name()));
    CHECK(characteristic(r) == oracle::characteristic(r));
    CHECK(is_commutative(r) == (r.name()[0] == 'Z'));
  }
}

TEST_CASE("additive generating sets are greedy and spanning") {
  CHECK(additive_generating_set(builtin_ring("Z4")) == std::vector<Elem>{1});
  CHECK(additive_generating_set(builtin_ring("M2(F2)")) == std::vector<Elem>{1, 2, 4, 8});
  CHECK(additive_generating_set(builtin_ring("T2(Z4)")) == std::vector<Elem>{1, 4, 16});
  CHECK(additive_generating_set(builtin_ring("H32")) == std::vector<Elem>{1, 4, 8, 16});
  for (const auto& r : catalog_rings()) {
    CAPTURE(r.name());
    const auto gens = additive_generating_set(r);
    CHECK(additive_span(r, gens).size() == r.order());
    // Greedy: each generator is the least element outside the span of its predecessors.
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto prefix = additive_span(r, std::span<const Elem>(gens.data(), i));
      Elem least = 0;
      while (std::binary_search(prefix.begin(), prefix.end(), least)) ++least;
      CHECK(gens[i] == least);
    }
  }
}

TEST_CASE("direct products and unknown names") {
  const FiniteGroup d4d4 = builtin_group("D4xD4");
  CHECK(d4d4.order() == 64);
  CHECK(d4d4.name() == "D4xD4");
  const FiniteGroup d4 = builtin_group("D4");
  for (Elem a = 0; a < 8; ++a)
    for (Elem b = 0; b < 8; ++b) CHECK(d4d4.mul(a * 8 + b, b * 8 + a) == d4.mul(a, b) * 8 + d4.mul(b, a));
  expect_error(ErrorKind::UnknownName, [] { builtin_group("A5"); });
  expect_error(ErrorKind::UnknownName, [] { builtin_group("C0"); });
  expect_error(ErrorKind::UnknownName, [] { builtin_ring("Z1"); });
  expect_error(ErrorKind::UnknownName, [] { builtin_ring("Z257"); });
  expect_error(ErrorKind::UnknownName, [] { builtin_ring("M3(F2)"); });
}
