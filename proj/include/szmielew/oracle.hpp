#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "szmielew/invariants.hpp"

namespace szmielew::oracle {

inline constexpr std::uint64_t kDefaultOrderCap = 65536;

/// A finite abelian group as a direct sum of cyclic groups of prime-power
/// order. Construction throws std::invalid_argument if an order is not a
/// prime power > 1 or the group order exceeds `cap`.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<std::uint64_t> cyclic_orders,
                              std::uint64_t cap = kDefaultOrderCap);

  const std::vector<std::uint64_t>& cyclic_orders() const { return orders_; }
  std::uint64_t order() const { return order_; }
  std::uint64_t cap() const { return cap_; }

  /// Direct sum; the cap is the larger of the two.
  FiniteAbelianGroup operator+(const FiniteAbelianGroup& other) const;

 private:
  std::vector<std::uint64_t> orders_;
  std::uint64_t order_ = 1;
  std::uint64_t cap_;
};

/// Decides the atom on G by listing every element: builds p^n G, G[p] and
/// their intersections as explicit element sets and reads dimensions off
/// their sizes as exact base-p logarithms. Independent of the structure
/// formulas used by the evaluator. Throws std::invalid_argument if |G|
/// exceeds the group's cap.
bool brute_invariant(const InvariantAtom& atom, const FiniteAbelianGroup& g);

/// Cardinality of p^n G, by enumeration.
std::uint64_t brute_multiple_size(const FiniteAbelianGroup& g, Prime p, Level n);

/// kappa_{p,m-1} = multiplicity of p^m among the cyclic orders.
SzmielewDescriptor descriptor_of(const FiniteAbelianGroup& g);

/// Every finite abelian group of order <= max_order whose cyclic factors are
/// powers of the given primes, one per isomorphism class.
std::vector<FiniteAbelianGroup> groups_up_to(const std::vector<Prime>& primes,
                                             std::uint64_t max_order);

struct EnumerationParams {
  std::vector<Prime> primes;
  Level max_level = 0;
  std::vector<ExtCard> values;
  std::vector<ExtCard> tails;
};

/// Streams every descriptor with support within `primes`, kappa at levels
/// 0..max_level from `values`, kappa_tail from `tails`, lambda, mu and nu
/// from `values`. Count:
///
///   |values| * prod_{p in primes} |values|^(max_level + 3) * |tails|
///
/// Order is deterministic (an odometer over nu, then per prime in order:
/// kappa levels, tail, lambda, mu).
class DescriptorStream {
 public:
  explicit DescriptorStream(EnumerationParams params);

  std::optional<SzmielewDescriptor> next();
  std::uint64_t count() const;

 private:
  EnumerationParams params_;
  std::vector<std::size_t> digits_;
  std::vector<std::size_t> radix_;
  bool done_ = false;
};

DescriptorStream enumerate_descriptors(const std::vector<Prime>& primes, Level max_level,
                                       const std::vector<ExtCard>& values,
                                       const std::vector<ExtCard>& tails);

}  // namespace szmielew::oracle
