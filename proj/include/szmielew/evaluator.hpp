#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "szmielew/invariants.hpp"

namespace szmielew {

/// lambda_p + sum_{m>=n} kappa_{p,m}  (the value read by Theta(p,n)).
ExtCard theta_value(const SzmielewDescriptor& a, Prime p, Level n);

/// mu_p + sum_{m>=n} kappa_{p,m}  (the value read by Gamma(p,n)).
ExtCard gamma_value(const SzmielewDescriptor& a, Prime p, Level n);

/// |p^n A| in factored form. Infinite, or the prime-power factorization
/// (increasing primes, positive exponents) of the finite order.
struct DeltaMagnitude {
  bool infinite = false;
  std::vector<std::pair<Prime, std::uint64_t>> factors;

  friend bool operator==(const DeltaMagnitude&, const DeltaMagnitude&) = default;
};

/// Multiplication by p is bijective on q-components (q != p), on Q and on
/// Z(p^inf), and p^n Z(p^{m+1}) = Z(p^{m+1-n}) for m >= n, 0 otherwise. So
/// |p^n A| is finite iff nu = 0, every lambda and mu vanishes, no q-component
/// (q != p) has an infinite kappa or a non-zero tail, and at p every level
/// >= n is finite with zero tail. The finite order is
///
///   prod_{m>=n} p^{(m+1-n) kappa_{p,m}} * prod_{q != p} prod_m q^{(m+1) kappa_{q,m}}
DeltaMagnitude delta_magnitude(const SzmielewDescriptor& a, Prime p, Level n);

/// |p^n A| as a cardinal. Throws std::overflow_error when the finite order
/// does not fit in 64 bits; use delta_magnitude() to compare such values.
ExtCard delta_value(const SzmielewDescriptor& a, Prime p, Level n);

bool eval_atom(const InvariantAtom& atom, const SzmielewDescriptor& a);
bool eval_sentence(const Sentence& s, const SzmielewDescriptor& a);

}  // namespace szmielew
