#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jrl/error.hpp"

namespace jrl {

/// Dense index of a ring or group element. Tables are addressed by these.
using Elem = std::uint32_t;

/// Row-major square table: entry (a, b) lives at a * order + b.
using Table = std::vector<Elem>;

/**
 * A finite associative ring with identity, presented by its addition and
 * multiplication tables. Instances only come out of validate_ring(), so every
 * ring axiom has been checked exhaustively and the object is immutable.
 */
class FiniteRing {
 public:
  std::size_t order() const noexcept { return order_; }
  Elem zero() const noexcept { return zero_; }
  Elem one() const noexcept { return one_; }
  const std::string& name() const noexcept { return name_; }

  Elem add(Elem a, Elem b) const noexcept { return add_[a * order_ + b]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * order_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  /// a∘b = ab + ba
  Elem circle(Elem a, Elem b) const noexcept { return add(mul(a, b), mul(b, a)); }
  /// k·a for k >= 0
  Elem times(std::size_t k, Elem a) const noexcept;

  const Table& add_table() const noexcept { return add_; }
  const Table& mul_table() const noexcept { return mul_; }
  const std::vector<Elem>& neg_table() const noexcept { return neg_; }

  friend bool operator==(const FiniteRing&, const FiniteRing&) = default;

 private:
  friend FiniteRing validate_ring(std::size_t, Table, Table, Elem, Elem, std::string);
  FiniteRing() = default;

  std::size_t order_ = 0;
  Table add_;
  Table mul_;
  std::vector<Elem> neg_;
  Elem zero_ = 0;
  Elem one_ = 0;
  std::string name_;
};

/// A finite group given by its Cayley table. Immutable after validate_group().
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return order_; }
  Elem identity() const noexcept { return identity_; }
  const std::string& name() const noexcept { return name_; }

  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inv_[a]; }

  const Table& mul_table() const noexcept { return mul_; }
  const std::vector<Elem>& inv_table() const noexcept { return inv_; }

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  friend FiniteGroup validate_group(std::size_t, Table, Elem, std::string);
  FiniteGroup() = default;

  std::size_t order_ = 0;
  Table mul_;
  std::vector<Elem> inv_;
  Elem identity_ = 0;
  std::string name_;
};

/// Checks shape, the abelian additive group, associativity, the two-sided
/// identity and both distributive laws. Throws Error naming the first
/// violating tuple. The zero ring (1 = 0) is rejected with NoIdentity.
FiniteRing validate_ring(std::size_t order, Table add_table, Table mul_table, Elem zero, Elem one,
                         std::string name = {});

/// Checks shape, associativity, the identity and two-sided inverses.
FiniteGroup validate_group(std::size_t order, Table mul_table, Elem identity, std::string name = {});

/// Additive order of the identity.
std::size_t characteristic(const FiniteRing& ring);

/// Greedy additive generating set: repeatedly adopt the lowest-index element
/// outside the current additive span. Deterministic.
std::vector<Elem> additive_generating_set(const FiniteRing& ring);

/// Closure of `generators` under addition (the additive subgroup they span).
std::vector<Elem> additive_span(const FiniteRing& ring, std::span<const Elem> generators);

bool is_commutative(const FiniteRing& ring);
bool is_abelian(const FiniteGroup& group);

/// (x, y) = x⁻¹y⁻¹xy
Elem group_commutator(const FiniteGroup& group, Elem x, Elem y);
/// x^y = y⁻¹xy
Elem conjugate(const FiniteGroup& group, Elem x, Elem y);
std::size_t element_order(const FiniteGroup& group, Elem x);

/// A subgroup stored as a sorted member list. Holds a non-owning pointer to
/// its parent, which must outlive it.
class Subgroup {
 public:
  Subgroup(const FiniteGroup& parent, std::vector<Elem> members);

  const FiniteGroup& parent() const noexcept { return *parent_; }
  const std::vector<Elem>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Elem x) const noexcept;

 private:
  const FiniteGroup* parent_;
  std::vector<Elem> members_;
};

/// Smallest subgroup containing `generators`.
Subgroup generated_subgroup(const FiniteGroup& group, std::span<const Elem> generators);
Subgroup derived_subgroup(const FiniteGroup& group);
Subgroup center(const FiniteGroup& group);

bool is_subset(const Subgroup& h, const Subgroup& k);
bool is_normal(const Subgroup& h);
bool is_cyclic(const Subgroup& h);
/// Least common multiple of the element orders.
std::size_t exponent(const Subgroup& h);

/// True iff g² is central for every g.
bool squares_central(const FiniteGroup& group);

/// Whenever (x, y) ≠ 1, every (y, z) lies in the cyclic subgroup ⟨(x, y)⟩.
bool commutators_in_cyclic_span(const FiniteGroup& group);

/// The isomorphism classes the classification needs; everything else is Other.
struct IsoClass {
  enum class Tag { Trivial, C2, C4, C2xC2, Cyclic, Other };
  Tag tag = Tag::Other;
  std::size_t order = 0;

  friend bool operator==(const IsoClass&, const IsoClass&) = default;
};

IsoClass iso_class(const Subgroup& h);
std::string to_string(const IsoClass& c);

/// Direct product; element (a, b) has index a * |H| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace jrl
