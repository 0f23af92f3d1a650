#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jrl/group_ring.hpp"

namespace jrl {

/// A monomial coeff·g of RG.
struct Monomial {
  Elem coeff;
  Elem group;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/**
 * Monomials r·g with r from additive_generating_set(R) and g over G, ordered
 * ring-generator major. Every element of RG is a sum of these, so by
 * multilinearity of the left-normed products it suffices to test them.
 */
class SpanningSet {
 public:
  explicit SpanningSet(GroupRingPtr context);

  const GroupRingPtr& context() const noexcept { return context_; }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  GroupRingElement element(std::size_t i) const;

 private:
  GroupRingPtr context_;
  std::vector<Monomial> monomials_;
};

SpanningSet spanning_set(const GroupRingPtr& context);
/// The ring alone, viewed as R[C1].
SpanningSet spanning_set(const FiniteRing& ring);
GroupRingPtr ring_as_context(const FiniteRing& ring);

/// The lexicographically first spanning tuple with nonzero product.
struct Counterexample {
  std::vector<std::size_t> tuple;  // indices into SpanningSet::monomials()
  GroupRingElement product;
};

struct VanishingResult {
  std::optional<Counterexample> counterexample;
  bool vanishes() const noexcept { return !counterexample; }
};

struct SearchOptions {
  unsigned jobs = 1;
};

/// Every degree-n left-normed Jordan product over spanning tuples is zero.
/// Requires n >= 2. Results do not depend on options.jobs.
VanishingResult vanishes_left_normed(const SpanningSet& s, int n, const SearchOptions& options = {});
/// Same search with Lie brackets.
VanishingResult lie_vanishes_left_normed(const SpanningSet& s, int n, const SearchOptions& options = {});

/// Least n in [2, max_n] for which vanishes_left_normed holds; nullopt when
/// none does (not within bound).
std::optional<int> minimal_jordan_index(const SpanningSet& s, int max_n, const SearchOptions& options = {});

inline constexpr int default_max_index = 6;

/// Brute-force decision over every element of RG, without the spanning
/// reduction. Limited to contexts of at most exhaustive_limit elements.
bool exhaustive_check(const GroupRingPtr& context, int n);
bool exhaustive_check(const FiniteRing& ring, int n);
inline constexpr std::size_t exhaustive_limit = 4096;

/// Number of elements |R|^|G|, saturating at SIZE_MAX.
std::size_t context_size(const GroupRing& context);

struct RingConditions {
  bool two_circle_zero = false;     // 2(R∘R) = 0
  bool circle_circle_zero = false;  // (R∘R)∘R = 0
  bool circle_square_zero = false;  // (R∘R)(R∘R) = 0
  std::optional<int> jordan_index_upper;
};

/// Rings of order at most 32 are checked over all element tuples, larger
/// ones over additive generators in each slot.
RingConditions ring_conditions(const FiniteRing& ring, int bound = default_max_index);

}  // namespace jrl
