#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "jrl/algebra.hpp"

namespace jrl {

class GroupRingElement;

/**
 * The group ring RG. Owns validated copies of R and G plus the division
 * tables used by the monomial kernels (h·g⁻¹ and g⁻¹·h). Shared immutably
 * between elements and worker threads through GroupRingPtr.
 */
class GroupRing : public std::enable_shared_from_this<GroupRing> {
 public:
  static std::shared_ptr<const GroupRing> make(FiniteRing ring, FiniteGroup group);

  const FiniteRing& ring() const noexcept { return ring_; }
  const FiniteGroup& group() const noexcept { return group_; }
  /// Number of coefficients of an element, |G|.
  std::size_t degree() const noexcept { return group_.order(); }

  GroupRingElement zero() const;
  GroupRingElement one() const;

  // Raw kernels on coefficient spans of length degree(). The nilpotency
  // search drives these directly; GroupRingElement wraps them with checks.

  void add_into(std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out) const;
  void convolve(std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out) const;
  /// out = a ∘ (coeff·g)
  void circle_monomial(std::span<const Elem> a, Elem coeff, Elem g, std::span<Elem> out) const;
  /// out = [a, coeff·g]
  void bracket_monomial(std::span<const Elem> a, Elem coeff, Elem g, std::span<Elem> out) const;
  /// a ∘ (coeff·g) == 0, stopping at the first nonzero coefficient.
  bool circle_monomial_vanishes(std::span<const Elem> a, Elem coeff, Elem g) const;
  bool bracket_monomial_vanishes(std::span<const Elem> a, Elem coeff, Elem g) const;
  bool is_zero(std::span<const Elem> a) const;

 private:
  GroupRing(FiniteRing ring, FiniteGroup group);

  Elem right_div(Elem g, Elem h) const noexcept { return right_div_[g * group_.order() + h]; }
  Elem left_div(Elem g, Elem h) const noexcept { return left_div_[g * group_.order() + h]; }

  FiniteRing ring_;
  FiniteGroup group_;
  Table right_div_;  // (g, h) ↦ h·g⁻¹
  Table left_div_;   // (g, h) ↦ g⁻¹·h
};

using GroupRingPtr = std::shared_ptr<const GroupRing>;

/// An element of RG: one ring coefficient per group element. Arithmetic
/// across different GroupRing handles throws ContextMismatch.
class GroupRingElement {
 public:
  GroupRingElement(GroupRingPtr context, std::vector<Elem> coeffs);

  const GroupRingPtr& context() const noexcept { return context_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
  Elem coeff(Elem g) const { return coeffs_.at(g); }
  bool is_zero() const;

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.context_ == b.context_ && a.coeffs_ == b.coeffs_;
  }

 private:
  GroupRingPtr context_;
  std::vector<Elem> coeffs_;
};

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator-(const GroupRingElement& a);
GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);

/// The monomial coeff·g.
GroupRingElement embed(const GroupRingPtr& context, Elem coeff, Elem g);

GroupRingElement circle(const GroupRingElement& a, const GroupRingElement& b);
GroupRingElement lie_bracket(const GroupRingElement& a, const GroupRingElement& b);
/// a^{∘n} with a^{∘1} = a and a^{∘n} = a^{∘(n-1)} ∘ a. Throws InvalidExponent for n < 1.
GroupRingElement jordan_power(const GroupRingElement& a, int n);
/// (...((a1 ∘ a2) ∘ a3) ...) ∘ an
GroupRingElement left_normed_jordan(std::span<const GroupRingElement> elements);
GroupRingElement left_normed_lie(std::span<const GroupRingElement> elements);

/// Renders as `c@g + c@g` with zero terms omitted, or `0`.
std::string to_string(const GroupRingElement& a);

/// αβ∘γ = α(β∘γ) + (γ∘α)β − 2αγβ, evaluated in R.
bool product_circle_expansion_holds(const FiniteRing& ring, Elem alpha, Elem beta, Elem gamma);

/// αx ∘ βy = (α∘β)yx + αβ·yx((x,y) − 1), evaluated in RG.
bool monomial_circle_expansion_holds(const GroupRingPtr& context, Elem alpha, Elem beta, Elem x, Elem y);

}  // namespace jrl
