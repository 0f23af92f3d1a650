#include "jrl/builtins.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <optional>

namespace jrl {
namespace {

FiniteGroup cyclic_group(std::size_t n) {
  Table table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>((a + b) % n);
  return validate_group(n, std::move(table), 0, "C" + std::to_string(n));
}

FiniteGroup dihedral_8() {
  // r^i s^j · r^k s^l = r^(i + (-1)^j k) s^(j + l)
  Table table(64);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 2; ++l) {
          const int rot = ((i + (j == 0 ? k : -k)) % 4 + 4) % 4;
          const int ref = (j + l) % 2;
          table[(i + 4 * j) * 8 + (k + 4 * l)] = static_cast<Elem>(rot + 4 * ref);
        }
  return validate_group(8, std::move(table), 0, "D4");
}

FiniteGroup quaternion_8() {
  // Unit u ∈ {1, i, j, k} with sign; index = 2·unit + (negative ? 1 : 0).
  // Products of units: sign and unit from the quaternion rules.
  constexpr std::array<std::array<int, 4>, 4> unit_product = {{
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  }};
  constexpr std::array<std::array<int, 4>, 4> unit_sign = {{
      {1, 1, 1, 1},
      {1, -1, 1, -1},
      {1, -1, -1, 1},
      {1, 1, -1, -1},
  }};
  Table table(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, ub = b / 2;
      int sign = unit_sign[ua][ub] * (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1);
      table[a * 8 + b] = static_cast<Elem>(2 * unit_product[ua][ub] + (sign < 0 ? 1 : 0));
    }
  return validate_group(8, std::move(table), 0, "Q8");
}

FiniteGroup symmetric_3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const auto index_of = [&](const std::array<int, 3>& q) {
    return static_cast<Elem>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  Table table(36);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> composed{};
      for (int x = 0; x < 3; ++x) composed[x] = perms[b][perms[a][x]];
      table[a * 6 + b] = index_of(composed);
    }
  return validate_group(6, std::move(table), 0, "S3");
}

std::optional<std::size_t> parse_positive(std::string_view text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) return std::nullopt;
  return value;
}

/// Ring whose elements are encoded as mixed-radix digit vectors.
FiniteRing ring_from_model(std::string name, std::size_t order, Elem zero, Elem one,
                           const std::function<Elem(Elem, Elem)>& add,
                           const std::function<Elem(Elem, Elem)>& mul) {
  Table add_table(order * order), mul_table(order * order);
  for (Elem a = 0; a < order; ++a)
    for (Elem b = 0; b < order; ++b) {
      add_table[a * order + b] = add(a, b);
      mul_table[a * order + b] = mul(a, b);
    }
  return validate_ring(order, std::move(add_table), std::move(mul_table), zero, one, std::move(name));
}

FiniteRing integers_mod(std::size_t n) {
  return ring_from_model(
      "Z" + std::to_string(n), n, 0, n > 1 ? 1 : 0,
      [n](Elem a, Elem b) { return static_cast<Elem>((a + b) % n); },
      [n](Elem a, Elem b) { return static_cast<Elem>((std::size_t{a} * b) % n); });
}

using Mat2 = std::array<std::array<unsigned, 2>, 2>;

Mat2 mat2_mul(const Mat2& x, const Mat2& y, unsigned modulus) {
  Mat2 z{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) z[i][j] = (x[i][0] * y[0][j] + x[i][1] * y[1][j]) % modulus;
  return z;
}

FiniteRing full_matrix_ring_f2() {
  const auto decode = [](Elem e) { return Mat2{{{e & 1u, (e >> 1) & 1u}, {(e >> 2) & 1u, (e >> 3) & 1u}}}; };
  const auto encode = [](const Mat2& m) { return static_cast<Elem>(m[0][0] | m[0][1] << 1 | m[1][0] << 2 | m[1][1] << 3); };
  return ring_from_model(
      "M2(F2)", 16, 0, encode({{{1, 0}, {0, 1}}}), [](Elem a, Elem b) { return a ^ b; },
      [&](Elem a, Elem b) { return encode(mat2_mul(decode(a), decode(b), 2)); });
}

/// Upper-triangular 2×2 matrices over Z/q, index a11 + q·a12 + q²·a22.
FiniteRing upper_triangular_ring(unsigned q, std::string name) {
  const auto decode = [q](Elem e) { return Mat2{{{e % q, (e / q) % q}, {0, (e / (q * q)) % q}}}; };
  const auto encode = [q](const Mat2& m) { return static_cast<Elem>(m[0][0] + q * m[0][1] + q * q * m[1][1]); };
  return ring_from_model(
      std::move(name), q * q * q, 0, encode({{{1, 0}, {0, 1}}}),
      [&](Elem a, Elem b) {
        const Mat2 x = decode(a), y = decode(b);
        Mat2 z{};
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) z[i][j] = (x[i][j] + y[i][j]) % q;
        return encode(z);
      },
      [&](Elem a, Elem b) { return encode(mat2_mul(decode(a), decode(b), q)); });
}

/// Scalar part in Z/q plus a strictly upper-triangular 3×3 part over F2,
/// where the scalars act on the nilpotent part through reduction mod 2.
/// q = 2 gives the 16-element ring, q = 4 the 32-element one.
FiniteRing scalar_plus_strict_upper(unsigned q, std::string name) {
  struct Parts {
    unsigned scalar;
    unsigned e12, e13, e23;
  };
  const auto decode = [q](Elem e) {
    const unsigned u = e / q;
    return Parts{e % q, u & 1u, (u >> 1) & 1u, (u >> 2) & 1u};
  };
  const auto encode = [q](const Parts& p) { return static_cast<Elem>(p.scalar + q * (p.e12 | p.e13 << 1 | p.e23 << 2)); };
  return ring_from_model(
      std::move(name), q * 8, 0, 1,
      [&](Elem a, Elem b) {
        const Parts x = decode(a), y = decode(b);
        return encode({(x.scalar + y.scalar) % q, x.e12 ^ y.e12, x.e13 ^ y.e13, x.e23 ^ y.e23});
      },
      [&](Elem a, Elem b) {
        const Parts x = decode(a), y = decode(b);
        const unsigned sx = x.scalar & 1u, sy = y.scalar & 1u;
        // (s + u)(t + v) = st + s·v + t·u + uv, with E12·E23 = E13 the only
        // nonzero product of strict upper units.
        return encode({(x.scalar * y.scalar) % q,
                       (sx & y.e12) ^ (sy & x.e12),
                       (sx & y.e13) ^ (sy & x.e13) ^ (x.e12 & y.e23),
                       (sx & y.e23) ^ (sy & x.e23)});
      });
}

}  // namespace

FiniteGroup builtin_group(std::string_view name) {
  if (const auto x = name.find('x'); x != std::string_view::npos) {
    return direct_product(builtin_group(name.substr(0, x)), builtin_group(name.substr(x + 1)));
  }
  if (name == "D4") return dihedral_8();
  if (name == "Q8") return quaternion_8();
  if (name == "S3") return symmetric_3();
  if (name.size() > 1 && name[0] == 'C') {
    if (const auto n = parse_positive(name.substr(1)); n && *n <= 4096) return cyclic_group(*n);
  }
  throw Error(ErrorKind::UnknownName, "no built-in group named '" + std::string(name) + "'");
}

FiniteRing builtin_ring(std::string_view name) {
  if (name == "M2(F2)") return full_matrix_ring_f2();
  if (name == "T2(F2)") return upper_triangular_ring(2, "T2(F2)");
  if (name == "T2(Z4)") return upper_triangular_ring(4, "T2(Z4)");
  if (name == "H16") return scalar_plus_strict_upper(2, "H16");
  if (name == "H32") return scalar_plus_strict_upper(4, "H32");
  if (name.size() > 1 && name[0] == 'Z') {
    if (const auto n = parse_positive(name.substr(1)); n && *n >= 2 && *n <= 256) return integers_mod(*n);
  }
  throw Error(ErrorKind::UnknownName, "no built-in ring named '" + std::string(name) + "'");
}

const std::vector<std::string>& builtin_group_names() {
  static const std::vector<std::string> names{"C1", "C2", "C4", "C8", "C2xC2", "D4", "Q8", "S3", "D4xD4"};
  return names;
}

const std::vector<std::string>& builtin_ring_names() {
  static const std::vector<std::string> names{"Z2", "Z4", "Z8", "Z16", "M2(F2)", "T2(F2)", "T2(Z4)", "H16", "H32"};
  return names;
}

}  // namespace jrl
