#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jrl/group_ring.hpp"

namespace jrl {

struct IdentityCheck {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  bool exhaustive = false;  // true when some tuple domain was enumerated completely
};

struct IdentityOptions {
  std::size_t random_samples = 10000;
  std::uint64_t seed = 0x5eed;
};

/// Contexts with |R| <= 16 and |G| <= 8 get exhaustive enumeration.
bool identity_suite_is_exhaustive(const GroupRing& context);

/**
 * Evaluates the group commutator identities, the monomial circle identities,
 * circle commutativity, the Jordan identity, Lie antisymmetry and Jacobi,
 * and the two circle expansion identities on `context`.
 *
 * Small contexts enumerate: group tuples completely; ring tuples completely;
 * bilinear and trilinear identities over all spanning-monomial tuples (which
 * by multilinearity covers all of RG); the Jordan identity over all monomial
 * pairs, or all element pairs when |RG| <= 256. Every context additionally
 * gets options.random_samples random tuples of general elements.
 */
std::vector<IdentityCheck> run_identity_suite(const GroupRingPtr& context, const IdentityOptions& options = {});

}  // namespace jrl
