#include "jrl/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace jrl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::NotAbelianGroup: return "NotAbelianGroup";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::EmptySequence: return "EmptySequence";
    case ErrorKind::InvalidExponent: return "InvalidExponent";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

namespace {

std::string tuple_text(std::initializer_list<Elem> elems) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (Elem e : elems) {
    if (!first) out << ", ";
    out << e;
    first = false;
  }
  out << ')';
  return out.str();
}

void check_shape(std::size_t order, const Table& table, const char* what) {
  if (order == 0) throw Error(ErrorKind::InvalidTable, "order must be positive");
  if (table.size() != order * order) {
    throw Error(ErrorKind::InvalidTable, std::string(what) + " table has " + std::to_string(table.size()) +
                                             " entries, expected " + std::to_string(order * order));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= order) {
      throw Error(ErrorKind::InvalidTable, std::string(what) + " entry at (" + std::to_string(i / order) + ", " +
                                               std::to_string(i % order) + ") out of range");
    }
  }
}

void check_index(std::size_t order, Elem e, const char* what) {
  if (e >= order) throw Error(ErrorKind::InvalidTable, std::string(what) + " index out of range");
}

}  // namespace

FiniteRing validate_ring(std::size_t order, Table add_table, Table mul_table, Elem zero, Elem one, std::string name) {
  check_shape(order, add_table, "add");
  check_shape(order, mul_table, "mul");
  check_index(order, zero, "zero");
  check_index(order, one, "one");

  const auto add = [&](Elem a, Elem b) { return add_table[a * order + b]; };
  const auto mul = [&](Elem a, Elem b) { return mul_table[a * order + b]; };
  const auto n = static_cast<Elem>(order);

  for (Elem a = 0; a < n; ++a) {
    if (add(zero, a) != a || add(a, zero) != a) {
      throw Error(ErrorKind::NotAbelianGroup, "zero is not additively neutral at " + tuple_text({a}));
    }
    for (Elem b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) {
        throw Error(ErrorKind::NotAbelianGroup, "addition not commutative at " + tuple_text({a, b}));
      }
    }
  }
  std::vector<Elem> neg(order);
  for (Elem a = 0; a < n; ++a) {
    Elem b = 0;
    while (b < n && add(a, b) != zero) ++b;
    if (b == n) throw Error(ErrorKind::NotAbelianGroup, "no additive inverse for " + tuple_text({a}));
    neg[a] = b;
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (add(add(a, b), c) != add(a, add(b, c))) {
          throw Error(ErrorKind::NotAbelianGroup, "addition not associative at " + tuple_text({a, b, c}));
        }

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw Error(ErrorKind::NotAssociative, "multiplication not associative at " + tuple_text({a, b, c}));
        }

  if (one == zero) throw Error(ErrorKind::NoIdentity, "one equals zero");
  for (Elem a = 0; a < n; ++a) {
    if (mul(one, a) != a || mul(a, one) != a) {
      throw Error(ErrorKind::NoIdentity, tuple_text({one}) + " is not a two-sided identity at " + tuple_text({a}));
    }
  }

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
          throw Error(ErrorKind::NotDistributive, "left distributivity fails at " + tuple_text({a, b, c}));
        }
        if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) {
          throw Error(ErrorKind::NotDistributive, "right distributivity fails at " + tuple_text({a, b, c}));
        }
      }
  for (Elem a = 0; a < n; ++a) {
    if (mul(zero, a) != zero || mul(a, zero) != zero) {
      throw Error(ErrorKind::NotDistributive, "zero does not annihilate " + tuple_text({a}));
    }
  }

  FiniteRing ring;
  ring.order_ = order;
  ring.add_ = std::move(add_table);
  ring.mul_ = std::move(mul_table);
  ring.neg_ = std::move(neg);
  ring.zero_ = zero;
  ring.one_ = one;
  ring.name_ = std::move(name);
  return ring;
}

FiniteGroup validate_group(std::size_t order, Table mul_table, Elem identity, std::string name) {
  check_shape(order, mul_table, "mul");
  check_index(order, identity, "identity");

  const auto mul = [&](Elem a, Elem b) { return mul_table[a * order + b]; };
  const auto n = static_cast<Elem>(order);

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw Error(ErrorKind::NotAssociative, "multiplication not associative at " + tuple_text({a, b, c}));
        }
  for (Elem a = 0; a < n; ++a) {
    if (mul(identity, a) != a || mul(a, identity) != a) {
      throw Error(ErrorKind::NoIdentity, tuple_text({identity}) + " is not a two-sided identity at " + tuple_text({a}));
    }
  }
  std::vector<Elem> inv(order);
  for (Elem a = 0; a < n; ++a) {
    Elem b = 0;
    while (b < n && !(mul(a, b) == identity && mul(b, a) == identity)) ++b;
    if (b == n) throw Error(ErrorKind::NoInverse, "no two-sided inverse for " + tuple_text({a}));
    inv[a] = b;
  }

  FiniteGroup group;
  group.order_ = order;
  group.mul_ = std::move(mul_table);
  group.inv_ = std::move(inv);
  group.identity_ = identity;
  group.name_ = std::move(name);
  return group;
}

Elem FiniteRing::times(std::size_t k, Elem a) const noexcept {
  Elem acc = zero_;
  for (std::size_t i = 0; i < k; ++i) acc = add(acc, a);
  return acc;
}

std::size_t characteristic(const FiniteRing& ring) {
  std::size_t k = 1;
  for (Elem acc = ring.one(); acc != ring.zero(); acc = ring.add(acc, ring.one())) ++k;
  return k;
}

std::vector<Elem> additive_span(const FiniteRing& ring, std::span<const Elem> generators) {
  std::vector<bool> in_span(ring.order(), false);
  std::vector<Elem> members{ring.zero()};
  in_span[ring.zero()] = true;
  // Finite additive groups: closure under addition by generators is the span.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem g : generators) {
      const Elem s = ring.add(members[i], g);
      if (!in_span[s]) {
        in_span[s] = true;
        members.push_back(s);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Elem> additive_generating_set(const FiniteRing& ring) {
  std::vector<Elem> generators;
  std::vector<bool> in_span(ring.order(), false);
  in_span[ring.zero()] = true;
  for (Elem candidate = 0; candidate < ring.order(); ++candidate) {
    if (in_span[candidate]) continue;
    generators.push_back(candidate);
    for (Elem s : additive_span(ring, generators)) in_span[s] = true;
  }
  return generators;
}

bool is_commutative(const FiniteRing& ring) {
  const auto n = static_cast<Elem>(ring.order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (ring.mul(a, b) != ring.mul(b, a)) return false;
  return true;
}

bool is_abelian(const FiniteGroup& group) {
  const auto n = static_cast<Elem>(group.order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (group.mul(a, b) != group.mul(b, a)) return false;
  return true;
}

Elem group_commutator(const FiniteGroup& group, Elem x, Elem y) {
  return group.mul(group.mul(group.inv(x), group.inv(y)), group.mul(x, y));
}

Elem conjugate(const FiniteGroup& group, Elem x, Elem y) {
  return group.mul(group.mul(group.inv(y), x), y);
}

std::size_t element_order(const FiniteGroup& group, Elem x) {
  std::size_t k = 1;
  for (Elem p = x; p != group.identity(); p = group.mul(p, x)) ++k;
  return k;
}

Subgroup::Subgroup(const FiniteGroup& parent, std::vector<Elem> members)
    : parent_(&parent), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Subgroup::contains(Elem x) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), x);
}

Subgroup generated_subgroup(const FiniteGroup& group, std::span<const Elem> generators) {
  std::vector<bool> seen(group.order(), false);
  std::vector<Elem> members{group.identity()};
  seen[group.identity()] = true;
  // In a finite group, closure under right multiplication by the generators
  // already contains all inverses.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Elem g : generators) {
      const Elem p = group.mul(members[i], g);
      if (!seen[p]) {
        seen[p] = true;
        members.push_back(p);
      }
    }
  }
  return Subgroup(group, std::move(members));
}

Subgroup derived_subgroup(const FiniteGroup& group) {
  const auto n = static_cast<Elem>(group.order());
  std::vector<bool> seen(n, false);
  std::vector<Elem> commutators;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem c = group_commutator(group, x, y);
      if (!seen[c]) {
        seen[c] = true;
        commutators.push_back(c);
      }
    }
  return generated_subgroup(group, commutators);
}

Subgroup center(const FiniteGroup& group) {
  const auto n = static_cast<Elem>(group.order());
  std::vector<Elem> members;
  for (Elem z = 0; z < n; ++z) {
    bool central = true;
    for (Elem g = 0; g < n && central; ++g) central = group.mul(z, g) == group.mul(g, z);
    if (central) members.push_back(z);
  }
  return Subgroup(group, std::move(members));
}

bool is_subset(const Subgroup& h, const Subgroup& k) {
  return std::includes(k.members().begin(), k.members().end(), h.members().begin(), h.members().end());
}

bool is_normal(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  for (Elem x : h.members())
    for (Elem y = 0; y < g.order(); ++y)
      if (!h.contains(conjugate(g, x, y))) return false;
  return true;
}

bool is_cyclic(const Subgroup& h) {
  return std::any_of(h.members().begin(), h.members().end(),
                     [&](Elem x) { return element_order(h.parent(), x) == h.order(); });
}

std::size_t exponent(const Subgroup& h) {
  std::size_t e = 1;
  for (Elem x : h.members()) e = std::lcm(e, element_order(h.parent(), x));
  return e;
}

bool squares_central(const FiniteGroup& group) {
  const auto n = static_cast<Elem>(group.order());
  for (Elem g = 0; g < n; ++g) {
    const Elem sq = group.mul(g, g);
    for (Elem h = 0; h < n; ++h)
      if (group.mul(sq, h) != group.mul(h, sq)) return false;
  }
  return true;
}

bool commutators_in_cyclic_span(const FiniteGroup& group) {
  const auto n = static_cast<Elem>(group.order());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem s = group_commutator(group, x, y);
      if (s == group.identity()) continue;
      const Elem gens[] = {s};
      const Subgroup cyclic = generated_subgroup(group, gens);
      for (Elem z = 0; z < n; ++z)
        if (!cyclic.contains(group_commutator(group, y, z))) return false;
    }
  return true;
}

IsoClass iso_class(const Subgroup& h) {
  const std::size_t order = h.order();
  if (order == 1) return {IsoClass::Tag::Trivial, 1};
  if (order == 2) return {IsoClass::Tag::C2, 2};
  if (order == 4) return exponent(h) == 2 ? IsoClass{IsoClass::Tag::C2xC2, 4} : IsoClass{IsoClass::Tag::C4, 4};
  if (is_cyclic(h)) return {IsoClass::Tag::Cyclic, order};
  return {IsoClass::Tag::Other, order};
}

std::string to_string(const IsoClass& c) {
  switch (c.tag) {
    case IsoClass::Tag::Trivial: return "1";
    case IsoClass::Tag::C2: return "C2";
    case IsoClass::Tag::C4: return "C4";
    case IsoClass::Tag::C2xC2: return "C2xC2";
    case IsoClass::Tag::Cyclic: return "C" + std::to_string(c.order);
    case IsoClass::Tag::Other: return "other of order " + std::to_string(c.order);
  }
  return "?";
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = g.order();
  const std::size_t k = h.order();
  const std::size_t n = m * k;
  Table table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Elem left = g.mul(static_cast<Elem>(a / k), static_cast<Elem>(b / k));
      const Elem right = h.mul(static_cast<Elem>(a % k), static_cast<Elem>(b % k));
      table[a * n + b] = static_cast<Elem>(left * k + right);
    }
  const auto identity = static_cast<Elem>(g.identity() * k + h.identity());
  return validate_group(n, std::move(table), identity, g.name() + "x" + h.name());
}

}  // namespace jrl
