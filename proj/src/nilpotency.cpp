#include "jrl/nilpotency.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "jrl/builtins.hpp"

namespace jrl {

SpanningSet::SpanningSet(GroupRingPtr context) : context_(std::move(context)) {
  const FiniteRing& ring = context_->ring();
  const std::vector<Elem> generators = additive_generating_set(ring);
  // RG is the direct sum of the R·g, so spanning R is spanning RG.
  if (additive_span(ring, generators).size() != ring.order()) {
    throw Error(ErrorKind::InvalidTable, "additive generators do not span " + ring.name());
  }
  monomials_.reserve(generators.size() * context_->degree());
  for (Elem r : generators)
    for (Elem g = 0; g < context_->degree(); ++g) monomials_.push_back({r, g});
}

GroupRingElement SpanningSet::element(std::size_t i) const {
  const Monomial& m = monomials_.at(i);
  return embed(context_, m.coeff, m.group);
}

SpanningSet spanning_set(const GroupRingPtr& context) { return SpanningSet(context); }

GroupRingPtr ring_as_context(const FiniteRing& ring) { return GroupRing::make(ring, builtin_group("C1")); }

SpanningSet spanning_set(const FiniteRing& ring) { return SpanningSet(ring_as_context(ring)); }

namespace {

enum class Product { Jordan, Lie };

/// Distinct nonzero left-normed products of one degree over spanning tuples,
/// stored in order of their lexicographically first witness tuple.
struct Level {
  std::size_t width = 0;
  std::vector<Elem> coeffs;           // values back to back, `width` each
  std::vector<std::uint32_t> parent;  // index of the prefix value one degree down
  std::vector<std::uint32_t> last;    // spanning index of the final slot

  std::size_t size() const noexcept { return parent.size(); }
  std::span<const Elem> value(std::size_t i) const { return {coeffs.data() + i * width, width}; }
};

/// Hash set of value indices into a Level, used to keep first occurrences.
class Dedup {
 public:
  explicit Dedup(const Level& level)
      : set_(64, Hash{&level}, Equal{&level}) {}

  /// Call right after appending a value to the level; returns false (and the
  /// caller pops it) when an equal value is already present.
  bool insert_last(const Level& level) { return set_.insert(static_cast<std::uint32_t>(level.size() - 1)).second; }

 private:
  struct Hash {
    const Level* level;
    std::size_t operator()(std::uint32_t i) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (Elem c : level->value(i)) h = (h ^ c) * 1099511628211ull;
      return h;
    }
  };
  struct Equal {
    const Level* level;
    bool operator()(std::uint32_t a, std::uint32_t b) const noexcept {
      const auto x = level->value(a), y = level->value(b);
      return std::equal(x.begin(), x.end(), y.begin());
    }
  };
  std::unordered_set<std::uint32_t, Hash, Equal> set_;
};

void append_unique(Level& level, Dedup& seen, std::span<const Elem> value, std::uint32_t parent, std::uint32_t last) {
  level.coeffs.insert(level.coeffs.end(), value.begin(), value.end());
  level.parent.push_back(parent);
  level.last.push_back(last);
  if (!seen.insert_last(level)) {
    level.coeffs.resize(level.coeffs.size() - level.width);
    level.parent.pop_back();
    level.last.pop_back();
  }
}

/// Runs body(chunk) for chunk = 0..count-1 on `jobs` threads. Chunks are
/// claimed in increasing order; a claim stops once it exceeds stop_after().
template <typename Body, typename Stop>
void for_each_chunk(std::size_t count, unsigned jobs, Body body, Stop stop_after) {
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= count || c > stop_after()) return;
      body(c);
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::size_t>(count, 1024))));
  if (jobs == 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(jobs);
  for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
}

/**
 * Degree-by-degree enumeration of left-normed products over spanning tuples.
 * Only distinct nonzero partial products proceed (a zero prefix makes every
 * extension zero; equal prefixes have equal extensions). Work is split into
 * fixed-size chunks of prefixes and merged in chunk order, so every result,
 * including the reported counterexample, is independent of the worker count.
 */
class LevelSearch {
 public:
  LevelSearch(const SpanningSet& s, Product op, unsigned jobs)
      : span_(s), ctx_(*s.context()), op_(op), jobs_(jobs) {
    Level first;
    first.width = ctx_.degree();
    Dedup seen(first);
    std::vector<Elem> value(first.width);
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::fill(value.begin(), value.end(), ctx_.ring().zero());
      value[s.monomials()[i].group] = s.monomials()[i].coeff;
      if (!ctx_.is_zero(value)) append_unique(first, seen, value, 0, static_cast<std::uint32_t>(i));
    }
    levels_.push_back(std::move(first));
  }

  /// Highest degree enumerated so far.
  int degree() const noexcept { return static_cast<int>(levels_.size()); }
  bool top_is_empty() const noexcept { return levels_.back().size() == 0; }

  void extend() {
    const Level& prev = levels_.back();
    const std::size_t chunks = (prev.size() + chunk_size - 1) / chunk_size;
    std::vector<Level> partial(chunks);
    for_each_chunk(
        chunks, jobs_,
        [&](std::size_t c) {
          Level& local = partial[c];
          local.width = prev.width;
          Dedup seen(local);
          std::vector<Elem> out(prev.width);
          const std::size_t end = std::min(prev.size(), (c + 1) * chunk_size);
          for (std::size_t p = c * chunk_size; p < end; ++p) {
            for (std::size_t j = 0; j < span_.size(); ++j) {
              apply(prev.value(p), span_.monomials()[j], out);
              if (ctx_.is_zero(out)) continue;
              append_unique(local, seen, out, static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(j));
            }
          }
        },
        [] { return std::numeric_limits<std::size_t>::max(); });

    Level next;
    next.width = prev.width;
    Dedup seen(next);
    for (const Level& local : partial)
      for (std::size_t i = 0; i < local.size(); ++i) append_unique(next, seen, local.value(i), local.parent[i], local.last[i]);
    levels_.push_back(std::move(next));
  }

  /// Lexicographically first tuple of degree() + 1 with nonzero product.
  std::optional<std::vector<std::size_t>> first_nonzero_extension() const {
    const Level& prev = levels_.back();
    const std::size_t chunks = (prev.size() + chunk_size - 1) / chunk_size;
    std::atomic<std::size_t> best_chunk{chunks};
    std::mutex best_mutex;
    std::optional<std::pair<std::size_t, std::size_t>> best;  // (prefix value, spanning index)
    for_each_chunk(
        chunks, jobs_,
        [&](std::size_t c) {
          const std::size_t end = std::min(prev.size(), (c + 1) * chunk_size);
          for (std::size_t p = c * chunk_size; p < end; ++p) {
            for (std::size_t j = 0; j < span_.size(); ++j) {
              if (vanishes(prev.value(p), span_.monomials()[j])) continue;
              std::lock_guard lock(best_mutex);
              if (c < best_chunk.load()) {
                best_chunk.store(c);
                best = {p, j};
              }
              return;
            }
          }
        },
        [&] { return best_chunk.load(); });
    if (!best) return std::nullopt;
    std::vector<std::size_t> tuple = witness(levels_.size() - 1, best->first);
    tuple.push_back(best->second);
    return tuple;
  }

 private:
  static constexpr std::size_t chunk_size = 64;

  void apply(std::span<const Elem> a, const Monomial& m, std::span<Elem> out) const {
    if (op_ == Product::Jordan) {
      ctx_.circle_monomial(a, m.coeff, m.group, out);
    } else {
      ctx_.bracket_monomial(a, m.coeff, m.group, out);
    }
  }

  bool vanishes(std::span<const Elem> a, const Monomial& m) const {
    return op_ == Product::Jordan ? ctx_.circle_monomial_vanishes(a, m.coeff, m.group)
                                  : ctx_.bracket_monomial_vanishes(a, m.coeff, m.group);
  }

  std::vector<std::size_t> witness(std::size_t level, std::size_t index) const {
    std::vector<std::size_t> tuple(level + 1);
    for (std::size_t k = level + 1; k-- > 0;) {
      tuple[k] = levels_[k].last[index];
      index = levels_[k].parent[index];
    }
    return tuple;
  }

  const SpanningSet& span_;
  const GroupRing& ctx_;
  Product op_;
  unsigned jobs_;
  std::vector<Level> levels_;  // levels_[k] holds degree k + 1
};

Counterexample make_counterexample(const SpanningSet& s, std::vector<std::size_t> tuple, Product op) {
  std::vector<GroupRingElement> factors;
  for (std::size_t i : tuple) factors.push_back(s.element(i));
  GroupRingElement product = op == Product::Jordan ? left_normed_jordan(factors) : left_normed_lie(factors);
  return {std::move(tuple), std::move(product)};
}

VanishingResult search(const SpanningSet& s, int n, Product op, const SearchOptions& options) {
  if (n < 2) throw Error(ErrorKind::InvalidExponent, "nilpotency index must be at least 2");
  LevelSearch levels(s, op, options.jobs);
  while (levels.degree() < n - 1 && !levels.top_is_empty()) levels.extend();
  VanishingResult result;
  if (auto tuple = levels.first_nonzero_extension()) result.counterexample = make_counterexample(s, std::move(*tuple), op);
  return result;
}

}  // namespace

VanishingResult vanishes_left_normed(const SpanningSet& s, int n, const SearchOptions& options) {
  return search(s, n, Product::Jordan, options);
}

VanishingResult lie_vanishes_left_normed(const SpanningSet& s, int n, const SearchOptions& options) {
  return search(s, n, Product::Lie, options);
}

std::optional<int> minimal_jordan_index(const SpanningSet& s, int max_n, const SearchOptions& options) {
  if (max_n < 2) return std::nullopt;
  LevelSearch levels(s, Product::Jordan, options.jobs);
  // After extend(), degree() = n and an empty top level means degree n vanishes.
  for (int n = 2; n < max_n; ++n) {
    levels.extend();
    if (levels.top_is_empty()) return n;
  }
  if (!levels.first_nonzero_extension()) return max_n;
  return std::nullopt;
}

std::size_t context_size(const GroupRing& context) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < context.degree(); ++i) {
    if (size > std::numeric_limits<std::size_t>::max() / context.ring().order()) {
      return std::numeric_limits<std::size_t>::max();
    }
    size *= context.ring().order();
  }
  return size;
}

bool exhaustive_check(const GroupRingPtr& context, int n) {
  if (n < 2) throw Error(ErrorKind::InvalidExponent, "nilpotency index must be at least 2");
  const std::size_t total = context_size(*context);
  if (total > exhaustive_limit) {
    throw Error(ErrorKind::TooLarge, "group ring has more than " + std::to_string(exhaustive_limit) + " elements");
  }
  const std::size_t radix = context->ring().order();
  const std::size_t degree = context->degree();

  // Element k has coefficient digits of k in base |R|.
  std::vector<std::vector<Elem>> elements(total, std::vector<Elem>(degree));
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t code = k;
    for (std::size_t g = 0; g < degree; ++g) {
      elements[k][g] = static_cast<Elem>(code % radix);
      code /= radix;
    }
  }
  const auto encode = [&](std::span<const Elem> coeffs) {
    std::size_t code = 0;
    for (std::size_t g = degree; g-- > 0;) code = code * radix + coeffs[g];
    return code;
  };

  // The set of values taken by degree-k left-normed products over all
  // k-tuples of elements is {p ∘ a : p a degree-(k-1) value, a any element}.
  // All n-tuples vanish iff that set is {0} at k = n.
  std::vector<std::size_t> values(total);
  for (std::size_t k = 0; k < total; ++k) values[k] = k;
  std::vector<Elem> left(degree), right(degree), sum(degree);
  for (int level = 2; level <= n; ++level) {
    std::vector<bool> seen(total, false);
    std::vector<std::size_t> next;
    for (std::size_t p : values) {
      for (std::size_t a = 0; a < total; ++a) {
        context->convolve(elements[p], elements[a], left);
        context->convolve(elements[a], elements[p], right);
        context->add_into(left, right, sum);
        const std::size_t code = encode(sum);
        if (!seen[code]) {
          seen[code] = true;
          next.push_back(code);
        }
      }
    }
    values = std::move(next);
  }
  const std::size_t zero_code = encode(std::vector<Elem>(degree, context->ring().zero()));
  return values.size() == 1 && values.front() == zero_code;
}

bool exhaustive_check(const FiniteRing& ring, int n) { return exhaustive_check(ring_as_context(ring), n); }

RingConditions ring_conditions(const FiniteRing& ring, int bound) {
  std::vector<Elem> slot;
  if (ring.order() <= 32) {
    for (Elem a = 0; a < ring.order(); ++a) slot.push_back(a);
  } else {
    slot = additive_generating_set(ring);
  }
  const Elem zero = ring.zero();

  std::vector<Elem> circles;  // a∘b for all slot pairs
  circles.reserve(slot.size() * slot.size());
  for (Elem a : slot)
    for (Elem b : slot) circles.push_back(ring.circle(a, b));

  RingConditions result;
  result.two_circle_zero = std::all_of(circles.begin(), circles.end(), [&](Elem c) { return ring.add(c, c) == zero; });
  result.circle_circle_zero = std::all_of(circles.begin(), circles.end(), [&](Elem c) {
    return std::all_of(slot.begin(), slot.end(), [&](Elem d) { return ring.circle(c, d) == zero; });
  });
  result.circle_square_zero = std::all_of(circles.begin(), circles.end(), [&](Elem c) {
    return std::all_of(circles.begin(), circles.end(), [&](Elem d) { return ring.mul(c, d) == zero; });
  });
  result.jordan_index_upper = minimal_jordan_index(spanning_set(ring), bound);
  return result;
}

}  // namespace jrl
