#include "jrl/group_ring.hpp"

#include <algorithm>
#include <sstream>

namespace jrl {

GroupRing::GroupRing(FiniteRing ring, FiniteGroup group) : ring_(std::move(ring)), group_(std::move(group)) {
  const std::size_t n = group_.order();
  right_div_.resize(n * n);
  left_div_.resize(n * n);
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h) {
      right_div_[g * n + h] = group_.mul(h, group_.inv(g));
      left_div_[g * n + h] = group_.mul(group_.inv(g), h);
    }
}

std::shared_ptr<const GroupRing> GroupRing::make(FiniteRing ring, FiniteGroup group) {
  return std::shared_ptr<const GroupRing>(new GroupRing(std::move(ring), std::move(group)));
}

GroupRingElement GroupRing::zero() const {
  return GroupRingElement(shared_from_this(), std::vector<Elem>(degree(), ring_.zero()));
}

GroupRingElement GroupRing::one() const { return embed(shared_from_this(), ring_.one(), group_.identity()); }

void GroupRing::add_into(std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out) const {
  for (std::size_t h = 0; h < out.size(); ++h) out[h] = ring_.add(a[h], b[h]);
}

void GroupRing::convolve(std::span<const Elem> a, std::span<const Elem> b, std::span<Elem> out) const {
  const Elem zero = ring_.zero();
  std::fill(out.begin(), out.end(), zero);
  const auto n = static_cast<Elem>(degree());
  const std::size_t r = ring_.order();
  const Elem* add = ring_.add_table().data();
  for (Elem g1 = 0; g1 < n; ++g1) {
    if (a[g1] == zero) continue;
    const Elem* group_row = group_.mul_table().data() + std::size_t{g1} * n;
    const Elem* ring_row = ring_.mul_table().data() + std::size_t{a[g1]} * r;
    for (Elem g2 = 0; g2 < n; ++g2) {
      Elem& slot = out[group_row[g2]];
      slot = add[slot * r + ring_row[b[g2]]];
    }
  }
}

void GroupRing::circle_monomial(std::span<const Elem> a, Elem coeff, Elem g, std::span<Elem> out) const {
  const auto n = static_cast<Elem>(degree());
  for (Elem h = 0; h < n; ++h) {
    out[h] = ring_.add(ring_.mul(a[right_div(g, h)], coeff), ring_.mul(coeff, a[left_div(g, h)]));
  }
}

void GroupRing::bracket_monomial(std::span<const Elem> a, Elem coeff, Elem g, std::span<Elem> out) const {
  const auto n = static_cast<Elem>(degree());
  for (Elem h = 0; h < n; ++h) {
    out[h] = ring_.sub(ring_.mul(a[right_div(g, h)], coeff), ring_.mul(coeff, a[left_div(g, h)]));
  }
}

bool GroupRing::circle_monomial_vanishes(std::span<const Elem> a, Elem coeff, Elem g) const {
  const auto n = static_cast<Elem>(degree());
  const Elem zero = ring_.zero();
  for (Elem h = 0; h < n; ++h) {
    if (ring_.add(ring_.mul(a[right_div(g, h)], coeff), ring_.mul(coeff, a[left_div(g, h)])) != zero) return false;
  }
  return true;
}

bool GroupRing::bracket_monomial_vanishes(std::span<const Elem> a, Elem coeff, Elem g) const {
  const auto n = static_cast<Elem>(degree());
  const Elem zero = ring_.zero();
  for (Elem h = 0; h < n; ++h) {
    if (ring_.sub(ring_.mul(a[right_div(g, h)], coeff), ring_.mul(coeff, a[left_div(g, h)])) != zero) return false;
  }
  return true;
}

bool GroupRing::is_zero(std::span<const Elem> a) const {
  return std::all_of(a.begin(), a.end(), [z = ring_.zero()](Elem c) { return c == z; });
}

GroupRingElement::GroupRingElement(GroupRingPtr context, std::vector<Elem> coeffs)
    : context_(std::move(context)), coeffs_(std::move(coeffs)) {
  if (!context_) throw Error(ErrorKind::ContextMismatch, "element without a group ring");
  if (coeffs_.size() != context_->degree()) {
    throw Error(ErrorKind::InvalidTable, "expected " + std::to_string(context_->degree()) + " coefficients, got " +
                                             std::to_string(coeffs_.size()));
  }
  for (Elem c : coeffs_) {
    if (c >= context_->ring().order()) throw Error(ErrorKind::InvalidTable, "coefficient out of range");
  }
}

bool GroupRingElement::is_zero() const { return context_->is_zero(coeffs_); }

namespace {

const GroupRing& shared_context(const GroupRingElement& a, const GroupRingElement& b) {
  if (a.context() != b.context()) throw Error(ErrorKind::ContextMismatch, "operands belong to different group rings");
  return *a.context();
}

}  // namespace

GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
  const GroupRing& ctx = shared_context(a, b);
  std::vector<Elem> out(ctx.degree());
  ctx.add_into(a.coeffs(), b.coeffs(), out);
  return {a.context(), std::move(out)};
}

GroupRingElement operator-(const GroupRingElement& a) {
  std::vector<Elem> out(a.coeffs());
  for (Elem& c : out) c = a.context()->ring().neg(c);
  return {a.context(), std::move(out)};
}

GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) { return a + (-b); }

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  const GroupRing& ctx = shared_context(a, b);
  std::vector<Elem> out(ctx.degree());
  ctx.convolve(a.coeffs(), b.coeffs(), out);
  return {a.context(), std::move(out)};
}

GroupRingElement embed(const GroupRingPtr& context, Elem coeff, Elem g) {
  if (g >= context->degree()) throw Error(ErrorKind::InvalidTable, "group index out of range");
  std::vector<Elem> out(context->degree(), context->ring().zero());
  out[g] = coeff;
  return {context, std::move(out)};
}

GroupRingElement circle(const GroupRingElement& a, const GroupRingElement& b) { return a * b + b * a; }

GroupRingElement lie_bracket(const GroupRingElement& a, const GroupRingElement& b) { return a * b - b * a; }

GroupRingElement jordan_power(const GroupRingElement& a, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidExponent, "Jordan power needs n >= 1, got " + std::to_string(n));
  GroupRingElement acc = a;
  for (int k = 2; k <= n; ++k) acc = circle(acc, a);
  return acc;
}

namespace {

template <typename Op>
GroupRingElement left_fold(std::span<const GroupRingElement> elements, Op op) {
  if (elements.empty()) throw Error(ErrorKind::EmptySequence, "left-normed product of an empty sequence");
  GroupRingElement acc = elements.front();
  for (const auto& e : elements.subspan(1)) acc = op(acc, e);
  return acc;
}

}  // namespace

GroupRingElement left_normed_jordan(std::span<const GroupRingElement> elements) {
  return left_fold(elements, [](const auto& a, const auto& b) { return circle(a, b); });
}

GroupRingElement left_normed_lie(std::span<const GroupRingElement> elements) {
  return left_fold(elements, [](const auto& a, const auto& b) { return lie_bracket(a, b); });
}

std::string to_string(const GroupRingElement& a) {
  std::ostringstream out;
  const Elem zero = a.context()->ring().zero();
  bool first = true;
  for (std::size_t g = 0; g < a.coeffs().size(); ++g) {
    if (a.coeffs()[g] == zero) continue;
    if (!first) out << " + ";
    out << a.coeffs()[g] << '@' << g;
    first = false;
  }
  return first ? "0" : out.str();
}

bool product_circle_expansion_holds(const FiniteRing& r, Elem alpha, Elem beta, Elem gamma) {
  const Elem lhs = r.circle(r.mul(alpha, beta), gamma);
  const Elem twice = r.times(2, r.mul(r.mul(alpha, gamma), beta));
  const Elem rhs = r.sub(r.add(r.mul(alpha, r.circle(beta, gamma)), r.mul(r.circle(gamma, alpha), beta)), twice);
  return lhs == rhs;
}

bool monomial_circle_expansion_holds(const GroupRingPtr& context, Elem alpha, Elem beta, Elem x, Elem y) {
  const FiniteRing& r = context->ring();
  const FiniteGroup& g = context->group();
  const Elem yx = g.mul(y, x);
  const Elem yxs = g.mul(yx, group_commutator(g, x, y));
  const GroupRingElement lhs = circle(embed(context, alpha, x), embed(context, beta, y));
  const Elem ab = r.mul(alpha, beta);
  const GroupRingElement rhs =
      embed(context, r.circle(alpha, beta), yx) + (embed(context, ab, yxs) - embed(context, ab, yx));
  return lhs == rhs;
}

}  // namespace jrl
