#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jrl/algebra.hpp"

namespace jrl {

/**
 * Built-in groups. Besides the fixed names, `C<n>` builds any cyclic group
 * and `AxB` builds the direct product of two built-ins (left factor major).
 *
 * Element indexing conventions:
 *  - C<n>: index k is the generator to the k-th power.
 *  - D4:   index i + 4j is r^i s^j, with r⁴ = s² = 1 and srs = r⁻¹.
 *  - Q8:   1, -1, i, -i, j, -j, k, -k in that order.
 *  - S3:   the six permutations of {0,1,2} in lexicographic order of their
 *          images; composition (pq)(x) = q(p(x)) (apply p first).
 */
FiniteGroup builtin_group(std::string_view name);

/**
 * Built-in rings and their element encodings:
 *  - Z<n>:    residues 0..n-1.
 *  - M2(F2):  bits a11 + 2a12 + 4a21 + 8a22.
 *  - T2(F2):  upper triangular, a11 + 2a12 + 4a22.
 *  - T2(Z4):  upper triangular over Z/4, a11 + 4a12 + 16a22.
 *  - H16:     a·1 + bE12 + cE13 + dE23 over F2, index a + 2b + 4c + 8d.
 *  - H32:     a·1 + bE12 + cE13 + dE23 with a in Z/4 and b, c, d in F2,
 *             index a + 4(b + 2c + 4d).
 */
FiniteRing builtin_ring(std::string_view name);

const std::vector<std::string>& builtin_group_names();
const std::vector<std::string>& builtin_ring_names();

}  // namespace jrl
