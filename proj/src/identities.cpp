#include "jrl/identities.hpp"

#include <deque>
#include <random>

#include "jrl/nilpotency.hpp"

namespace jrl {

bool identity_suite_is_exhaustive(const GroupRing& context) {
  return context.ring().order() <= 16 && context.degree() <= 8;
}

namespace {

class Suite {
 public:
  Suite(const GroupRingPtr& ctx, const IdentityOptions& options)
      : ctx_(ctx), ring_(ctx->ring()), group_(ctx->group()), options_(options), rng_(options.seed),
        exhaustive_(identity_suite_is_exhaustive(*ctx)) {}

  std::vector<IdentityCheck> run() {
    group_identities();
    monomial_circle_identities();
    element_identities();
    expansion_identities();
    return {results_.begin(), results_.end()};
  }

 private:
  using Elements = std::vector<GroupRingElement>;

  IdentityCheck& start(std::string name) {
    results_.push_back({std::move(name), 0, 0, false});
    return results_.back();
  }

  static void record(IdentityCheck& check, bool ok) {
    ++check.checked;
    if (!ok) ++check.failures;
  }

  Elem random_ring() { return std::uniform_int_distribution<Elem>(0, static_cast<Elem>(ring_.order() - 1))(rng_); }
  Elem random_group() { return std::uniform_int_distribution<Elem>(0, static_cast<Elem>(group_.order() - 1))(rng_); }

  GroupRingElement random_element() {
    std::vector<Elem> coeffs(ctx_->degree());
    for (Elem& c : coeffs) c = random_ring();
    return {ctx_, std::move(coeffs)};
  }

  GroupRingElement unit(Elem g) const { return embed(ctx_, ring_.one(), g); }

  Elements all_monomials() const {
    Elements out;
    for (Elem r = 0; r < ring_.order(); ++r)
      for (Elem g = 0; g < group_.order(); ++g) out.push_back(embed(ctx_, r, g));
    return out;
  }

  Elements spanning_monomials() const {
    const SpanningSet s(ctx_);
    Elements out;
    for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s.element(i));
    return out;
  }

  Elements all_elements() const {
    const std::size_t total = context_size(*ctx_);
    Elements out;
    out.reserve(total);
    for (std::size_t k = 0; k < total; ++k) {
      std::vector<Elem> coeffs(ctx_->degree());
      std::size_t code = k;
      for (Elem& c : coeffs) {
        c = static_cast<Elem>(code % ring_.order());
        code /= ring_.order();
      }
      out.emplace_back(ctx_, std::move(coeffs));
    }
    return out;
  }

  void group_identities() {
    auto& left = start("(xy,z) = (x,z)^y (y,z)");
    auto& right = start("(x,yz) = (x,z) (x,y)^z");
    const auto n = static_cast<Elem>(group_.order());
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z) {
          record(left, group_commutator(group_, group_.mul(x, y), z) ==
                           group_.mul(conjugate(group_, group_commutator(group_, x, z), y), group_commutator(group_, y, z)));
          record(right, group_commutator(group_, x, group_.mul(y, z)) ==
                            group_.mul(group_commutator(group_, x, z), conjugate(group_, group_commutator(group_, x, y), z)));
        }
    left.exhaustive = right.exhaustive = true;
  }

  void monomial_circle_identities() {
    auto& plain = start("x∘y = yx((x,y) + 1)");
    auto& inverse = start("x⁻¹y⁻¹∘x = ((x,y) + 1)y⁻¹");
    auto& shifted = start("y⁻¹x∘y = x((x,y) + 1)");
    const auto n = static_cast<Elem>(group_.order());
    const GroupRingElement one = ctx_->one();
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        const GroupRingElement s_plus_1 = unit(group_commutator(group_, x, y)) + one;
        const Elem xi = group_.inv(x), yi = group_.inv(y);
        record(plain, circle(unit(x), unit(y)) == unit(group_.mul(y, x)) * s_plus_1);
        record(inverse, circle(unit(group_.mul(xi, yi)), unit(x)) == s_plus_1 * unit(yi));
        record(shifted, circle(unit(group_.mul(yi, x)), unit(y)) == unit(x) * s_plus_1);
      }
    plain.exhaustive = inverse.exhaustive = shifted.exhaustive = true;
  }

  void element_identities() {
    auto& commutes = start("a∘b = b∘a");
    auto& jordan = start("((a∘a)∘b)∘a = (a∘a)∘(b∘a)");
    auto& antisym = start("[a,a] = 0");
    auto& jacobi = start("[[a,b],c] + [[b,c],a] + [[c,a],b] = 0");

    const auto check_commutes = [&](const auto& a, const auto& b) { record(commutes, circle(a, b) == circle(b, a)); };
    const auto check_jordan = [&](const auto& a, const auto& b) {
      const GroupRingElement sq = circle(a, a);
      record(jordan, circle(circle(sq, b), a) == circle(sq, circle(b, a)));
    };
    const auto check_antisym = [&](const auto& a) { record(antisym, lie_bracket(a, a).is_zero()); };
    const auto check_jacobi = [&](const auto& a, const auto& b, const auto& c) {
      record(jacobi, (lie_bracket(lie_bracket(a, b), c) + lie_bracket(lie_bracket(b, c), a) +
                      lie_bracket(lie_bracket(c, a), b))
                         .is_zero());
    };

    if (exhaustive_) {
      const Elements monomials = all_monomials();
      const Elements spanning = spanning_monomials();
      const std::size_t size = context_size(*ctx_);
      for (const auto& a : monomials)
        for (const auto& b : monomials) check_commutes(a, b);
      const Elements jordan_domain = size <= 256 ? all_elements() : monomials;
      for (const auto& a : jordan_domain)
        for (const auto& b : jordan_domain) check_jordan(a, b);
      const Elements antisym_domain = size <= 65536 ? all_elements() : monomials;
      for (const auto& a : antisym_domain) check_antisym(a);
      for (const auto& a : spanning)
        for (const auto& b : spanning)
          for (const auto& c : spanning) check_jacobi(a, b, c);
      commutes.exhaustive = jordan.exhaustive = antisym.exhaustive = jacobi.exhaustive = true;
    }
    for (std::size_t i = 0; i < options_.random_samples; ++i) {
      const GroupRingElement a = random_element(), b = random_element(), c = random_element();
      check_commutes(a, b);
      check_jordan(a, b);
      check_antisym(a);
      check_jacobi(a, b, c);
    }
  }

  void expansion_identities() {
    auto& product = start("αβ∘γ = α(β∘γ) + (γ∘α)β − 2αγβ");
    const auto r = static_cast<Elem>(ring_.order());
    if (std::size_t{r} * r * r <= 1'000'000) {
      for (Elem a = 0; a < r; ++a)
        for (Elem b = 0; b < r; ++b)
          for (Elem c = 0; c < r; ++c) record(product, product_circle_expansion_holds(ring_, a, b, c));
      product.exhaustive = true;
    } else {
      for (std::size_t i = 0; i < options_.random_samples; ++i) {
        record(product, product_circle_expansion_holds(ring_, random_ring(), random_ring(), random_ring()));
      }
    }

    auto& monomial = start("αx∘βy = (α∘β)yx + αβ·yx((x,y) − 1)");
    const auto n = static_cast<Elem>(group_.order());
    if (exhaustive_) {
      for (Elem a = 0; a < r; ++a)
        for (Elem b = 0; b < r; ++b)
          for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y) record(monomial, monomial_circle_expansion_holds(ctx_, a, b, x, y));
      monomial.exhaustive = true;
    } else {
      for (std::size_t i = 0; i < options_.random_samples; ++i) {
        record(monomial, monomial_circle_expansion_holds(ctx_, random_ring(), random_ring(), random_group(), random_group()));
      }
    }
  }

  GroupRingPtr ctx_;
  const FiniteRing& ring_;
  const FiniteGroup& group_;
  IdentityOptions options_;
  std::mt19937_64 rng_;
  bool exhaustive_;
  std::deque<IdentityCheck> results_;  // stable references for start()
};

}  // namespace

std::vector<IdentityCheck> run_identity_suite(const GroupRingPtr& context, const IdentityOptions& options) {
  return Suite(context, options).run();
}

}  // namespace jrl
